//! Character tables (ordinary and p-modular), their JSON fixture format,
//! canonical ordering, and exact validation against the underlying group.
//!
//! A table fixture carries, per conjugacy class, an explicit representative
//! permutation; classes are matched to the group's own class enumeration
//! through those representatives, never by position or name. After loading,
//! classes are sorted by (element order, size, name) — so the identity
//! class is always index 0 — and characters by (degree, name).
//!
//! Validation is exact arithmetic throughout: both orthogonality relations,
//! algebraic integrality of central characters, Galois equivariance
//! `chi(g^k) = sigma_k(chi(g))` for k coprime to the element order (which
//! pins conductors and power maps at once), and — given a modular table —
//! the decomposition test that every ordinary character restricted to
//! p-regular classes is a nonnegative integer combination of the Brauer
//! characters.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{rat, Cyclotomic, Rat};
use crate::linalg::solve_rational_system;
use crate::numtheory::{gcd, lcm};
use crate::perm::{Group, Perm};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableKind {
    Ordinary,
    Brauer(u64),
}

impl std::fmt::Display for TableKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableKind::Ordinary => write!(f, "ordinary"),
            TableKind::Brauer(p) => write!(f, "{p}-Brauer"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("failed to read table file: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse table file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("group order is {got}, table says {stated}")]
    GroupOrder { stated: u64, got: u64 },
    #[error("duplicate {what} name `{name}`")]
    DuplicateName { what: &'static str, name: String },
    #[error("class `{0}`: {1}")]
    BadClass(String, String),
    #[error("table has {classes} classes but {chars} irreducibles")]
    SquareShape { classes: usize, chars: usize },
    #[error("character `{0}`: {1}")]
    BadCharacter(String, String),
    #[error("class set does not match the group's {0} classes: {1}")]
    ClassSet(&'static str, String),
    #[error("orthogonality fails for `{0}` and `{1}`")]
    Orthogonality(String, String),
    #[error("column orthogonality fails for classes `{0}` and `{1}`")]
    ColumnOrthogonality(String, String),
    #[error("central character of `{chi}` at class `{class}` is not an algebraic integer")]
    CentralCharacter { chi: String, class: String },
    #[error("`{chi}` is not Galois-equivariant at class `{class}`, power {k}")]
    GaloisEquivariance { chi: String, class: String, k: u64 },
    #[error("ordinary `{chi}` does not decompose into Brauer characters mod {p}: {reason}")]
    Decomposition { chi: String, p: u64, reason: String },
}

#[derive(Clone)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    pub element_order: u32,
    pub rep: Perm,
}

#[derive(Clone)]
pub struct Character {
    pub name: String,
    pub degree: u64,
    /// Values aligned with the table's class order.
    pub values: Vec<Cyclotomic>,
}

pub struct CharacterTable {
    pub group_name: String,
    pub kind: TableKind,
    pub group_order: u64,
    pub classes: Vec<ClassInfo>,
    pub chars: Vec<Character>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum KindIn {
    Plain(String),
    Brauer { brauer: u64 },
}

#[derive(Deserialize)]
struct ClassIn {
    name: String,
    size: u64,
    element_order: u32,
    rep: Vec<u32>,
}

#[derive(Deserialize)]
struct CharIn {
    name: String,
    degree: u64,
    values: Vec<Cyclotomic>,
}

#[derive(Deserialize)]
struct TableFile {
    group: String,
    kind: KindIn,
    order: u64,
    classes: Vec<ClassIn>,
    irreducibles: Vec<CharIn>,
}

impl CharacterTable {
    pub fn load(path: &Path) -> Result<CharacterTable, TableError> {
        let text = std::fs::read_to_string(path)?;
        let file: TableFile = serde_json::from_str(&text)?;
        let kind = match file.kind {
            KindIn::Plain(s) if s == "ordinary" => TableKind::Ordinary,
            KindIn::Plain(s) => {
                return Err(TableError::Parse(serde_json::Error::io(std::io::Error::other(
                    format!("unknown table kind `{s}`"),
                ))))
            }
            KindIn::Brauer { brauer } => TableKind::Brauer(brauer),
        };
        let mut classes = Vec::with_capacity(file.classes.len());
        for c in file.classes {
            let rep = Perm::from_images(c.rep)
                .map_err(|e| TableError::BadClass(c.name.clone(), e.to_string()))?;
            classes.push(ClassInfo { name: c.name, size: c.size, element_order: c.element_order, rep });
        }
        let chars = file
            .irreducibles
            .into_iter()
            .map(|x| Character { name: x.name, degree: x.degree, values: x.values })
            .collect();
        let mut table = CharacterTable {
            group_name: file.group,
            kind,
            group_order: file.order,
            classes,
            chars,
        };
        table.sort_canonically();
        Ok(table)
    }

    /// Sort classes by (element order, size, name) and characters by
    /// (degree, name), keeping values aligned.
    pub fn sort_canonically(&mut self) {
        let mut order: Vec<usize> = (0..self.classes.len()).collect();
        order.sort_by(|&a, &b| {
            let ca = &self.classes[a];
            let cb = &self.classes[b];
            (ca.element_order, ca.size, &ca.name).cmp(&(cb.element_order, cb.size, &cb.name))
        });
        self.classes = order.iter().map(|&i| self.classes[i].clone()).collect();
        for chi in &mut self.chars {
            chi.values = order.iter().map(|&i| chi.values[i].clone()).collect();
        }
        self.chars.sort_by(|a, b| (a.degree, &a.name).cmp(&(b.degree, &b.name)));
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn char_index(&self, name: &str) -> Option<usize> {
        self.chars.iter().position(|c| c.name == name)
    }

    /// Exact validation against the group (see module docs for the list).
    pub fn validate(&self, group: &Group) -> Result<(), TableError> {
        if group.order() != self.group_order {
            return Err(TableError::GroupOrder { stated: self.group_order, got: group.order() });
        }
        let mut names = std::collections::HashSet::new();
        for c in &self.classes {
            if !names.insert(&c.name) {
                return Err(TableError::DuplicateName { what: "class", name: c.name.clone() });
            }
        }
        names.clear();
        for x in &self.chars {
            if !names.insert(&x.name) {
                return Err(TableError::DuplicateName { what: "character", name: x.name.clone() });
            }
        }

        // classes match the group's own enumeration through representatives
        let mut group_class_of: Vec<usize> = Vec::with_capacity(self.classes.len());
        let mut seen_group_class: HashMap<usize, &str> = HashMap::new();
        for c in &self.classes {
            let gc = group
                .class_of(&c.rep)
                .ok_or_else(|| TableError::BadClass(c.name.clone(), "representative not in group".into()))?;
            let data = &group.classes()[gc];
            if data.size != c.size {
                return Err(TableError::BadClass(
                    c.name.clone(),
                    format!("size {} but the group class has {}", c.size, data.size),
                ));
            }
            if data.element_order != c.element_order {
                return Err(TableError::BadClass(
                    c.name.clone(),
                    format!("element order {} but the group says {}", c.element_order, data.element_order),
                ));
            }
            if let Some(prev) = seen_group_class.insert(gc, &c.name) {
                return Err(TableError::BadClass(
                    c.name.clone(),
                    format!("conjugate to class `{prev}`"),
                ));
            }
            group_class_of.push(gc);
        }
        match self.kind {
            TableKind::Ordinary => {
                if self.classes.len() != group.classes().len() {
                    return Err(TableError::ClassSet(
                        "conjugacy",
                        format!("{} of {} present", self.classes.len(), group.classes().len()),
                    ));
                }
            }
            TableKind::Brauer(p) => {
                let regular = group
                    .classes()
                    .iter()
                    .filter(|c| c.element_order as u64 % p != 0)
                    .count();
                if self.classes.len() != regular
                    || self.classes.iter().any(|c| c.element_order as u64 % p == 0)
                {
                    return Err(TableError::ClassSet(
                        "p-regular",
                        format!("{} classes given, {} p-regular classes exist", self.classes.len(), regular),
                    ));
                }
            }
        }

        if self.chars.len() != self.classes.len() {
            return Err(TableError::SquareShape { classes: self.classes.len(), chars: self.chars.len() });
        }
        for x in &self.chars {
            if x.values.len() != self.classes.len() {
                return Err(TableError::BadCharacter(
                    x.name.clone(),
                    format!("{} values for {} classes", x.values.len(), self.classes.len()),
                ));
            }
            if x.degree == 0 {
                return Err(TableError::BadCharacter(x.name.clone(), "degree 0".into()));
            }
            if x.values[0].as_rational() != Some(rat(x.degree as i64)) {
                return Err(TableError::BadCharacter(
                    x.name.clone(),
                    "value at the identity differs from the degree".into(),
                ));
            }
            for (c, v) in self.classes.iter().zip(&x.values) {
                if c.element_order as u64 % v.conductor() != 0 {
                    return Err(TableError::BadCharacter(
                        x.name.clone(),
                        format!("value at `{}` has conductor {}", c.name, v.conductor()),
                    ));
                }
            }
        }

        // Galois equivariance pins power maps and value fields:
        // chi(g^k) = sigma_k(chi(g)) for gcd(k, |g|) = 1
        let table_index_of_group_class: HashMap<usize, usize> =
            group_class_of.iter().enumerate().map(|(t, &g)| (g, t)).collect();
        for (i, c) in self.classes.iter().enumerate() {
            let m = c.element_order as u64;
            for k in 2..m {
                if gcd(k, m) != 1 {
                    continue;
                }
                let target_group_class = group.power_class(group_class_of[i], k as i64);
                let j = *table_index_of_group_class.get(&target_group_class).ok_or_else(|| {
                    TableError::ClassSet("power-closed", format!("power of `{}` leaves the table", c.name))
                })?;
                for x in &self.chars {
                    let expected = x.values[i]
                        .galois(k)
                        .map_err(|e| TableError::BadCharacter(x.name.clone(), e.to_string()))?;
                    if x.values[j] != expected {
                        return Err(TableError::GaloisEquivariance {
                            chi: x.name.clone(),
                            class: c.name.clone(),
                            k,
                        });
                    }
                }
            }
        }

        if let TableKind::Ordinary = self.kind {
            self.validate_orthogonality()?;
            // central characters |C| chi(C) / chi(1) are algebraic integers
            for x in &self.chars {
                for (c, v) in self.classes.iter().zip(&x.values) {
                    let w = v.scale(&Rat::new(c.size.into(), x.degree.into()));
                    if !w.is_algebraic_integer() {
                        return Err(TableError::CentralCharacter {
                            chi: x.name.clone(),
                            class: c.name.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_orthogonality(&self) -> Result<(), TableError> {
        let g = rat(self.group_order as i64);
        // rows: sum_C |C| chi(C) conj(psi(C)) = delta |G|
        let conj: Vec<Vec<Cyclotomic>> = self
            .chars
            .iter()
            .map(|x| x.values.iter().map(Cyclotomic::conj).collect())
            .collect();
        for (i, x) in self.chars.iter().enumerate() {
            for (j, y) in self.chars.iter().enumerate().skip(i) {
                let mut acc = Cyclotomic::zero();
                for (c, (vx, vyc)) in self.classes.iter().zip(x.values.iter().zip(&conj[j])) {
                    acc = acc + (vx * vyc).scale(&rat(c.size as i64));
                }
                let expected = if i == j { g.clone() } else { Rat::zero() };
                if acc.as_rational() != Some(expected) {
                    return Err(TableError::Orthogonality(x.name.clone(), y.name.clone()));
                }
            }
        }
        // columns: sum_chi chi(C) conj(chi(D)) = delta |G| / |C|
        for (i, c) in self.classes.iter().enumerate() {
            for (j, d) in self.classes.iter().enumerate().skip(i) {
                let mut acc = Cyclotomic::zero();
                for (x, xc) in self.chars.iter().zip(&conj) {
                    acc = acc + &x.values[i] * &xc[j];
                }
                let expected = if i == j {
                    Rat::new(self.group_order.into(), c.size.into())
                } else {
                    Rat::zero()
                };
                if acc.as_rational() != Some(expected) {
                    return Err(TableError::ColumnOrthogonality(c.name.clone(), d.name.clone()));
                }
            }
        }
        Ok(())
    }
}

/// Check that every ordinary irreducible, restricted to p-regular classes,
/// is a nonnegative integer combination of the Brauer characters.
pub fn check_decomposition(
    ordinary: &CharacterTable,
    brauer: &CharacterTable,
    group: &Group,
) -> Result<(), TableError> {
    let p = match brauer.kind {
        TableKind::Brauer(p) => p,
        TableKind::Ordinary => unreachable!("second table must be modular"),
    };
    // match brauer classes to ordinary ones through the group
    let mut ord_of_group: HashMap<usize, usize> = HashMap::new();
    for (i, c) in ordinary.classes.iter().enumerate() {
        ord_of_group.insert(group.class_of(&c.rep).expect("validated"), i);
    }
    let reg_in_ord: Vec<usize> = brauer
        .classes
        .iter()
        .map(|c| ord_of_group[&group.class_of(&c.rep).expect("validated")])
        .collect();

    let nb = brauer.chars.len();
    for chi in &ordinary.chars {
        // rational linear system: per class and basis exponent, one equation
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (bi, &oi) in reg_in_ord.iter().enumerate() {
            let m = brauer.classes[bi].element_order as u64;
            let mut per_exp: BTreeMap<u64, (Vec<Rat>, Rat)> = BTreeMap::new();
            for (k, phi) in brauer.chars.iter().enumerate() {
                for (e, c) in phi.values[bi].coords_at_level(m).expect("conductor divides order") {
                    per_exp.entry(e).or_insert_with(|| (vec![Rat::zero(); nb], Rat::zero())).0[k] = c;
                }
            }
            for (e, c) in chi.values[oi].coords_at_level(m).expect("conductor divides order") {
                per_exp.entry(e).or_insert_with(|| (vec![Rat::zero(); nb], Rat::zero())).1 = c;
            }
            for (_, (row, b)) in per_exp {
                rows.push(row);
                rhs.push(b);
            }
        }
        let sol = solve_rational_system(&rows, &rhs, nb).ok_or_else(|| TableError::Decomposition {
            chi: chi.name.clone(),
            p,
            reason: "no rational solution".into(),
        })?;
        for (d, phi) in sol.iter().zip(&brauer.chars) {
            if !d.is_integer() || d.is_negative() {
                return Err(TableError::Decomposition {
                    chi: chi.name.clone(),
                    p,
                    reason: format!("coefficient of `{}` is {}", phi.name, d),
                });
            }
        }
        // the solver fills free variables with zero; re-verify in the field
        for (bi, &oi) in reg_in_ord.iter().enumerate() {
            let mut acc = Cyclotomic::zero();
            for (d, phi) in sol.iter().zip(&brauer.chars) {
                acc = acc + phi.values[bi].scale(d);
            }
            if acc != chi.values[oi] {
                return Err(TableError::Decomposition {
                    chi: chi.name.clone(),
                    p,
                    reason: format!("mismatch at class `{}`", brauer.classes[bi].name),
                });
            }
        }
    }
    Ok(())
}

/// True iff the two tables are the same up to renaming: some bijection of
/// classes (preserving element order and size) and of characters
/// (preserving degree) makes all values equal. Used to compare an
/// independently constructed table against a fixture.
pub fn tables_equivalent(a: &CharacterTable, b: &CharacterTable) -> bool {
    if a.group_order != b.group_order
        || a.classes.len() != b.classes.len()
        || a.chars.len() != b.chars.len()
    {
        return false;
    }
    // group candidate class images by (order, size)
    let candidates: Vec<Vec<usize>> = a
        .classes
        .iter()
        .map(|ca| {
            (0..b.classes.len())
                .filter(|&j| {
                    b.classes[j].element_order == ca.element_order && b.classes[j].size == ca.size
                })
                .collect()
        })
        .collect();
    let mut class_map = vec![usize::MAX; a.classes.len()];
    let mut used = vec![false; b.classes.len()];
    search_class_map(a, b, &candidates, &mut class_map, &mut used, 0)
}

fn search_class_map(
    a: &CharacterTable,
    b: &CharacterTable,
    candidates: &[Vec<usize>],
    class_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    i: usize,
) -> bool {
    if i == class_map.len() {
        return chars_match(a, b, class_map);
    }
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        class_map[i] = j;
        used[j] = true;
        if search_class_map(a, b, candidates, class_map, used, i + 1) {
            return true;
        }
        used[j] = false;
    }
    class_map[i] = usize::MAX;
    false
}

fn chars_match(a: &CharacterTable, b: &CharacterTable, class_map: &[usize]) -> bool {
    // greedy matching is enough: permuted value vectors must agree exactly,
    // so the bipartite matching is a set equality of full rows
    let mut remaining: Vec<usize> = (0..b.chars.len()).collect();
    for xa in &a.chars {
        let Some(pos) = remaining.iter().position(|&j| {
            b.chars[j].degree == xa.degree
                && class_map.iter().enumerate().all(|(ci, &cj)| xa.values[ci] == b.chars[j].values[cj])
        }) else {
            return false;
        };
        remaining.swap_remove(pos);
    }
    true
}

/// One group with all of its loaded tables; class indices everywhere else
/// in the crate refer to `ordinary.classes` order.
pub struct GroupBundle {
    pub name: String,
    pub group: Group,
    pub ordinary: CharacterTable,
    /// ordinary class index -> group class index
    pub ord_to_group: Vec<usize>,
    /// group class index -> ordinary class index
    pub group_to_ord: Vec<usize>,
    /// p -> (table, group class index -> table class index)
    pub brauer: BTreeMap<u64, BrauerData>,
}

pub struct BrauerData {
    pub table: CharacterTable,
    pub group_to_idx: Vec<Option<usize>>,
}

impl GroupBundle {
    /// Load `groups/<name>.json` and `tables/<name>.json` plus any
    /// `tables/<name>mod<p>.json` under the fixture root, and validate.
    pub fn load(root: &Path, name: &str) -> Result<GroupBundle, TableError> {
        let (gname, group) = crate::perm::load_group(&root.join("groups").join(format!("{name}.json")))
            .map_err(|e| TableError::Parse(serde_json::Error::io(std::io::Error::other(e.to_string()))))?;
        let ordinary = CharacterTable::load(&root.join("tables").join(format!("{name}.json")))?;
        let mut bundle = GroupBundle::assemble(gname, group, ordinary)?;
        let dir = root.join("tables");
        let mut mod_paths = Vec::new();
        for entry in std::fs::read_dir(&dir)? {
            let path = entry?.path();
            let fname = path.file_name().and_then(|s| s.to_str()).unwrap_or_default();
            if let Some(rest) = fname.strip_prefix(&format!("{name}mod")) {
                if let Some(p) = rest.strip_suffix(".json").and_then(|s| s.parse::<u64>().ok()) {
                    mod_paths.push((p, path.clone()));
                }
            }
        }
        mod_paths.sort();
        for (p, path) in mod_paths {
            let table = CharacterTable::load(&path)?;
            if table.kind != TableKind::Brauer(p) {
                return Err(TableError::ClassSet(
                    "p-regular",
                    format!("file {} is not a {p}-modular table", path.display()),
                ));
            }
            bundle.add_brauer(table)?;
        }
        Ok(bundle)
    }

    /// Wire up a group with its ordinary table, validating both.
    pub fn assemble(name: String, group: Group, ordinary: CharacterTable) -> Result<GroupBundle, TableError> {
        ordinary.validate(&group)?;
        let ord_to_group: Vec<usize> = ordinary
            .classes
            .iter()
            .map(|c| group.class_of(&c.rep).expect("validated"))
            .collect();
        let mut group_to_ord = vec![usize::MAX; group.classes().len()];
        for (o, &g) in ord_to_group.iter().enumerate() {
            group_to_ord[g] = o;
        }
        Ok(GroupBundle {
            name,
            group,
            ordinary,
            ord_to_group,
            group_to_ord,
            brauer: BTreeMap::new(),
        })
    }

    pub fn add_brauer(&mut self, table: CharacterTable) -> Result<(), TableError> {
        table.validate(&self.group)?;
        check_decomposition(&self.ordinary, &table, &self.group)?;
        let p = match table.kind {
            TableKind::Brauer(p) => p,
            TableKind::Ordinary => unreachable!("checked by caller"),
        };
        let mut group_to_idx = vec![None; self.group.classes().len()];
        for (i, c) in table.classes.iter().enumerate() {
            group_to_idx[self.group.class_of(&c.rep).expect("validated")] = Some(i);
        }
        self.brauer.insert(p, BrauerData { table, group_to_idx });
        Ok(())
    }

    /// Class of rep^k, as an ordinary-table class index.
    pub fn power_class(&self, ord_idx: usize, k: i64) -> usize {
        self.group_to_ord[self.group.power_class(self.ord_to_group[ord_idx], k)]
    }

    /// Value of a Brauer character on an ordinary class (None if p-singular).
    pub fn brauer_value<'a>(&'a self, p: u64, chi: usize, ord_idx: usize) -> Option<&'a Cyclotomic> {
        let data = &self.brauer[&p];
        let bi = data.group_to_idx[self.ord_to_group[ord_idx]]?;
        Some(&data.table.chars[chi].values[bi])
    }

    /// Exponent of the group.
    pub fn exponent(&self) -> u64 {
        self.ordinary
            .classes
            .iter()
            .fold(1, |e, c| lcm(e, c.element_order as u64))
    }
}

#[derive(Serialize)]
struct ClassOut<'a> {
    name: &'a str,
    size: u64,
    element_order: u32,
    rep: Vec<u32>,
}

#[derive(Serialize)]
struct CharOut<'a> {
    name: &'a str,
    degree: u64,
    values: &'a [Cyclotomic],
}

/// Serialize a table in the fixture format (used by the generic-table
/// construction to emit comparable artifacts, and by tests).
pub fn table_to_json(table: &CharacterTable) -> serde_json::Value {
    let kind = match table.kind {
        TableKind::Ordinary => serde_json::json!("ordinary"),
        TableKind::Brauer(p) => serde_json::json!({ "brauer": p }),
    };
    serde_json::json!({
        "group": table.group_name,
        "kind": kind,
        "order": table.group_order,
        "classes": table
            .classes
            .iter()
            .map(|c| serde_json::to_value(ClassOut {
                name: &c.name,
                size: c.size,
                element_order: c.element_order,
                rep: (0..c.rep.degree() as u32).map(|x| c.rep.apply(x)).collect(),
            }).expect("serializable"))
            .collect::<Vec<_>>(),
        "irreducibles": table
            .chars
            .iter()
            .map(|x| serde_json::to_value(CharOut { name: &x.name, degree: x.degree, values: &x.values }).expect("serializable"))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        let a = Perm::from_images(vec![1, 2, 0]).unwrap();
        let b = Perm::from_images(vec![1, 0, 2]).unwrap();
        Group::from_generators(&[a, b]).unwrap()
    }

    fn s3_table_json() -> String {
        r#"{
            "group": "S3", "kind": "ordinary", "order": 6,
            "classes": [
                {"name": "1a", "size": 1, "element_order": 1, "rep": [0,1,2]},
                {"name": "2a", "size": 3, "element_order": 2, "rep": [1,0,2]},
                {"name": "3a", "size": 2, "element_order": 3, "rep": [1,2,0]}
            ],
            "irreducibles": [
                {"name": "X1", "degree": 1, "values": [
                    {"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,1]]}]},
                {"name": "X2", "degree": 1, "values": [
                    {"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,-1]]}, {"n":1,"terms":[[0,1]]}]},
                {"name": "X3", "degree": 2, "values": [
                    {"n":1,"terms":[[0,2]]}, {"n":1,"terms":[]}, {"n":1,"terms":[[0,-1]]}]}
            ]
        }"#
        .to_string()
    }

    fn load_table(json: &str) -> CharacterTable {
        use std::sync::atomic::{AtomicUsize, Ordering};
        static COUNTER: AtomicUsize = AtomicUsize::new(0);
        let dir = std::env::temp_dir().join(format!("pqcheck-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("t{}.json", COUNTER.fetch_add(1, Ordering::Relaxed)));
        std::fs::write(&path, json).unwrap();
        CharacterTable::load(&path).unwrap()
    }

    #[test]
    fn s3_table_validates() {
        let table = load_table(&s3_table_json());
        table.validate(&s3()).unwrap();
        assert_eq!(table.classes[0].name, "1a");
        assert_eq!(table.chars[2].degree, 2);
    }

    #[test]
    fn broken_tables_rejected() {
        let group = s3();
        // wrong value: flip the sign character's value on 3a
        let bad = s3_table_json().replace(
            r#"{"name": "X2", "degree": 1, "values": [
                    {"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,-1]]}, {"n":1,"terms":[[0,1]]}]}"#,
            r#"{"name": "X2", "degree": 1, "values": [
                    {"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,-1]]}, {"n":1,"terms":[[0,-1]]}]}"#,
        );
        assert!(matches!(load_table(&bad).validate(&group), Err(TableError::Orthogonality(..))));
        // wrong class size
        let bad = s3_table_json().replace(r#""size": 3"#, r#""size": 2"#);
        assert!(matches!(load_table(&bad).validate(&group), Err(TableError::BadClass(..))));
        // non-integral central character: make X3's 3a value -1/2
        let bad = s3_table_json().replace(
            r#"{"n":1,"terms":[[0,-1]]}"#,
            r#"{"n":1,"terms":[[0,"-1/2"]]}"#,
        );
        let t = load_table(&bad);
        let err = t.validate(&group).unwrap_err();
        assert!(
            matches!(err, TableError::Orthogonality(..) | TableError::CentralCharacter { .. }),
            "got {err}"
        );
    }

    #[test]
    fn s3_brauer_decomposition() {
        let group = s3();
        let ordinary = load_table(&s3_table_json());
        // mod 3: p-regular classes 1a, 2a; Brauer characters 1 and sign
        let brauer = load_table(
            r#"{
            "group": "S3", "kind": {"brauer": 3}, "order": 6,
            "classes": [
                {"name": "1a", "size": 1, "element_order": 1, "rep": [0,1,2]},
                {"name": "2a", "size": 3, "element_order": 2, "rep": [1,0,2]}
            ],
            "irreducibles": [
                {"name": "F1", "degree": 1, "values": [{"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,1]]}]},
                {"name": "F2", "degree": 1, "values": [{"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,-1]]}]}
            ]
        }"#,
        );
        brauer.validate(&group).unwrap();
        check_decomposition(&ordinary, &brauer, &group).unwrap();
        // mod 2: p-regular classes 1a, 3a; the 2-dim character stays irreducible
        let brauer2 = load_table(
            r#"{
            "group": "S3", "kind": {"brauer": 2}, "order": 6,
            "classes": [
                {"name": "1a", "size": 1, "element_order": 1, "rep": [0,1,2]},
                {"name": "3a", "size": 2, "element_order": 3, "rep": [1,2,0]}
            ],
            "irreducibles": [
                {"name": "F1", "degree": 1, "values": [{"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,1]]}]},
                {"name": "F2", "degree": 2, "values": [{"n":1,"terms":[[0,2]]}, {"n":1,"terms":[[0,-1]]}]}
            ]
        }"#,
        );
        brauer2.validate(&group).unwrap();
        check_decomposition(&ordinary, &brauer2, &group).unwrap();
        // a wrong Brauer table fails the decomposition test
        let broken = load_table(
            r#"{
            "group": "S3", "kind": {"brauer": 2}, "order": 6,
            "classes": [
                {"name": "1a", "size": 1, "element_order": 1, "rep": [0,1,2]},
                {"name": "3a", "size": 2, "element_order": 3, "rep": [1,2,0]}
            ],
            "irreducibles": [
                {"name": "F1", "degree": 1, "values": [{"n":1,"terms":[[0,1]]}, {"n":1,"terms":[[0,1]]}]},
                {"name": "F2", "degree": 3, "values": [{"n":1,"terms":[[0,3]]}, {"n":1,"terms":[[0,1]]}]}
            ]
        }"#,
        );
        assert!(check_decomposition(&ordinary, &broken, &group).is_err());
    }

    #[test]
    fn bundle_power_map() {
        let group = s3();
        let ordinary = load_table(&s3_table_json());
        let bundle = GroupBundle::assemble("S3".into(), group, ordinary).unwrap();
        let i3a = bundle.ordinary.class_index("3a").unwrap();
        assert_eq!(bundle.power_class(i3a, 2), i3a); // inverse is conjugate
        assert_eq!(bundle.power_class(i3a, 3), 0); // cubes to identity
        assert_eq!(bundle.exponent(), 6);
    }

    #[test]
    fn equivalence_up_to_renaming() {
        let a = load_table(&s3_table_json());
        let renamed = s3_table_json()
            .replace("\"X1\"", "\"Y9\"")
            .replace("\"3a\"", "\"3z\"");
        let b = load_table(&renamed);
        assert!(tables_equivalent(&a, &b));
        let broken = s3_table_json().replace(
            r#"{"n":1,"terms":[[0,-1]]}"#,
            r#"{"n":1,"terms":[[0,1]]}"#,
        );
        let c = load_table(&broken);
        assert!(!tables_equivalent(&a, &c));
    }
}
