//! Permutation groups given by generators: full element enumeration,
//! conjugacy classes, element orders and class power maps.
//!
//! Groups here are small enough (order < 10^5) that listing every element
//! is the simplest reliable approach, and it makes class identification a
//! hash lookup. Composition convention is left-to-right: `(a * b)` means
//! "apply `a`, then `b`".

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::path::Path;

use serde::Deserialize;

use crate::numtheory::lcm;

#[derive(Debug, thiserror::Error)]
pub enum PermError {
    #[error("image list is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("generator degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("no generators given")]
    NoGenerators,
    #[error("group exceeds the element limit of {0}")]
    TooLarge(usize),
    #[error("failed to read group file: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse group file: {0}")]
    Parse(#[from] serde_json::Error),
}

/// A permutation of {0, ..., deg-1}, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(deg: usize) -> Self {
        Perm { img: (0..deg as u32).collect() }
    }

    pub fn from_images(img: Vec<u32>) -> Result<Self, PermError> {
        let deg = img.len();
        let mut seen = vec![false; deg];
        for &x in &img {
            if (x as usize) >= deg || seen[x as usize] {
                return Err(PermError::NotAPermutation(deg));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.img[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Perm { img }
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// Order = lcm of cycle lengths.
    pub fn order(&self) -> u32 {
        let mut seen = vec![false; self.img.len()];
        let mut ord = 1u64;
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                x = self.img[x as usize];
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord as u32
    }

    /// Nontrivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cyc.push(x);
                x = self.img[x as usize];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }
}

impl Mul for &Perm {
    type Output = Perm;
    /// (a * b)(x) = b(a(x)): apply the left factor first.
    fn mul(self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm { img: self.img.iter().map(|&x| rhs.img[x as usize]).collect() }
    }
}

// cycle notation for debugging: "(0 1 2)(3 4)" or "()" for the identity
impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

const ELEMENT_LIMIT: usize = 1 << 21;

/// A conjugacy class: representative (as element index), size, element order.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: u32,
    pub size: u64,
    pub element_order: u32,
}

/// A fully enumerated permutation group.
pub struct Group {
    deg: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl Group {
    pub fn from_generators(gens: &[Perm]) -> Result<Group, PermError> {
        let deg = gens.first().ok_or(PermError::NoGenerators)?.degree();
        for g in gens {
            if g.degree() != deg {
                return Err(PermError::DegreeMismatch(deg, g.degree()));
            }
        }
        // breadth-first closure under right multiplication by generators
        let mut elements = vec![Perm::identity(deg)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0u32);
        let mut queue = VecDeque::from([0u32]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let f = &elements[i as usize] * g;
                if !index.contains_key(&f) {
                    if elements.len() >= ELEMENT_LIMIT {
                        return Err(PermError::TooLarge(ELEMENT_LIMIT));
                    }
                    let id = elements.len() as u32;
                    index.insert(f.clone(), id);
                    elements.push(f);
                    queue.push_back(id);
                }
            }
        }

        // conjugacy classes: orbits of the generator-conjugation action
        let n = elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let inv_gens: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            class_of[start as usize] = cid;
            let mut size = 1u64;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for (g, gi) in gens.iter().zip(&inv_gens) {
                    let conj = &(gi * &elements[i as usize]) * g;
                    let j = index[&conj];
                    if class_of[j as usize] == u32::MAX {
                        class_of[j as usize] = cid;
                        size += 1;
                        queue.push_back(j);
                    }
                }
            }
            classes.push(ConjClass {
                rep: start,
                size,
                element_order: elements[start as usize].order(),
            });
        }

        Ok(Group { deg, elements, index, classes, class_of })
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1, |e, c| lcm(e, c.element_order as u64))
    }

    /// The set of element orders.
    pub fn spectrum(&self) -> BTreeSet<u32> {
        self.classes.iter().map(|c| c.element_order).collect()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn element(&self, idx: u32) -> &Perm {
        &self.elements[idx as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    /// Class index of an element of this group.
    pub fn class_of(&self, p: &Perm) -> Option<usize> {
        self.index_of(p).map(|i| self.class_of[i as usize] as usize)
    }

    /// Class of rep^k for the representative of the given class.
    pub fn power_class(&self, class: usize, k: i64) -> usize {
        let rep = self.element(self.classes[class].rep);
        self.class_of(&rep.pow(k)).expect("powers stay in the group")
    }
}

#[derive(Deserialize)]
struct GroupFile {
    name: String,
    degree: usize,
    generators: Vec<Vec<u32>>,
}

/// Load a group fixture: `{"name": ..., "degree": d, "generators": [[images]...]}`.
pub fn load_group(path: &Path) -> Result<(String, Group), PermError> {
    let text = std::fs::read_to_string(path)?;
    let file: GroupFile = serde_json::from_str(&text)?;
    let gens = file
        .generators
        .into_iter()
        .map(|img| {
            if img.len() != file.degree {
                return Err(PermError::DegreeMismatch(file.degree, img.len()));
            }
            Perm::from_images(img)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((file.name, Group::from_generators(&gens)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(img: &[u32]) -> Perm {
        Perm::from_images(img.to_vec()).unwrap()
    }

    #[test]
    fn perm_basics() {
        let a = p(&[1, 2, 3, 0]); // 4-cycle
        assert_eq!(a.order(), 4);
        assert_eq!((&a * &a.inverse()), Perm::identity(4));
        assert_eq!(a.pow(2), &a * &a);
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(0), Perm::identity(4));
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        // left-to-right composition
        let b = p(&[1, 0, 2, 3]);
        let ab = &a * &b;
        assert_eq!(ab.apply(0), b.apply(a.apply(0)));
        assert_eq!(format!("{:?}", a), "(0 1 2 3)");
    }

    #[test]
    fn s4_structure() {
        let g = Group::from_generators(&[p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])]).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.classes().len(), 5);
        let mut sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(g.exponent(), 12);
        assert_eq!(g.spectrum().into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn a5_structure_and_power_map() {
        let g = Group::from_generators(&[p(&[1, 2, 3, 4, 0]), p(&[0, 1, 3, 4, 2])]).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.classes().len(), 5);
        let mut sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        // the two classes of order 5 are swapped by squaring
        let fives: Vec<usize> = (0..5).filter(|&i| g.classes()[i].element_order == 5).collect();
        assert_eq!(fives.len(), 2);
        assert_eq!(g.power_class(fives[0], 2), fives[1]);
        assert_eq!(g.power_class(fives[1], 2), fives[0]);
        assert_eq!(g.power_class(fives[0], 4), fives[0]);
        // identity class is its own power
        let e = g.class_of(&Perm::identity(5)).unwrap();
        assert_eq!(g.power_class(e, 7), e);
    }

    #[test]
    fn class_sizes_divide_order() {
        let g = Group::from_generators(&[p(&[1, 2, 0, 4, 3]), p(&[0, 2, 1, 3, 4])]).unwrap();
        let total: u64 = g.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
        for c in g.classes() {
            assert_eq!(g.order() % c.size, 0);
        }
    }
}
