//! Exact enumeration of integer points satisfying a system of linear
//! forms with divisibility conditions, two-sided value ranges, and a
//! bounding box per variable.
//!
//! Systems here are tiny (a handful of variables, a few hundred forms),
//! so the solver is a depth-first scan over the box with interval
//! pruning: before descending it checks that every unfinished form can
//! still reach its admissible range given the best/worst contributions
//! of the unassigned variables, and it checks divisibility and range
//! exactly the moment a form's last variable is assigned. A fixpoint
//! bound-tightening pass shrinks the box first.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("arithmetic overflow while building the system")]
    Overflow,
    #[error("search abandoned after {0} nodes")]
    NodeLimit(u64),
    #[error("form has {got} coefficients, system has {want} variables")]
    Shape { got: usize, want: usize },
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
}

/// One linear form `v = sum(coeffs . x) + constant` together with the
/// conditions `v == 0 (mod modulus)` and `range.0 <= v <= range.1`.
#[derive(Debug, Clone, Serialize)]
pub struct IntForm {
    pub coeffs: Vec<i64>,
    pub constant: i64,
    pub modulus: i64,
    pub range: Option<(i64, i64)>,
    pub label: String,
}

impl IntForm {
    pub fn new(coeffs: Vec<i64>, constant: i64, label: impl Into<String>) -> Self {
        IntForm { coeffs, constant, modulus: 1, range: None, label: label.into() }
    }

    pub fn with_modulus(mut self, m: i64) -> Self {
        self.modulus = m;
        self
    }

    pub fn with_range(mut self, lo: i64, hi: i64) -> Self {
        self.range = Some((lo, hi));
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct System {
    pub nvars: usize,
    /// Inclusive per-variable bounds.
    pub bounds: Vec<(i64, i64)>,
    pub forms: Vec<IntForm>,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub solutions: Vec<Vec<i64>>,
    pub nodes: u64,
}

impl System {
    pub fn new(bounds: Vec<(i64, i64)>) -> Self {
        System { nvars: bounds.len(), bounds, forms: Vec::new() }
    }

    pub fn push(&mut self, form: IntForm) -> Result<(), SolverError> {
        if form.coeffs.len() != self.nvars {
            return Err(SolverError::Shape { got: form.coeffs.len(), want: self.nvars });
        }
        if form.modulus <= 0 {
            return Err(SolverError::BadModulus(form.modulus));
        }
        self.forms.push(form);
        Ok(())
    }

    /// Shrink variable bounds to a fixpoint using the ranged forms.
    /// Returns false when some variable's interval became empty, i.e.
    /// the system has no solutions at all.
    pub fn tighten(&mut self) -> Result<bool, SolverError> {
        if self.bounds.iter().any(|&(lo, hi)| lo > hi) {
            return Ok(false);
        }
        propagate(&self.forms, &mut self.bounds, 0)
    }

    /// All integer points in the box satisfying every form, in
    /// lexicographic order of the variable values.
    pub fn enumerate(&self, node_cap: u64) -> Result<Enumeration, SolverError> {
        // forms with no variables at all are checked once up front
        for f in &self.forms {
            if f.coeffs.iter().all(|&a| a == 0) && !value_ok(f, f.constant) {
                return Ok(Enumeration { solutions: Vec::new(), nodes: 0 });
            }
        }
        for &(lo, hi) in &self.bounds {
            if lo > hi {
                return Ok(Enumeration { solutions: Vec::new(), nodes: 0 });
            }
        }
        // depth at which each form becomes fully determined
        let last_depth: Vec<Option<usize>> = self
            .forms
            .iter()
            .map(|f| f.coeffs.iter().rposition(|&a| a != 0))
            .collect();
        // stack[d] holds the variable intervals in force at depth d;
        // assigned variables are collapsed to singletons
        let mut stack = vec![self.bounds.clone(); self.nvars + 1];
        let mut out = Enumeration { solutions: Vec::new(), nodes: 0 };
        if !propagate(&self.forms, &mut stack[0], 0)? {
            return Ok(out);
        }
        let mut partial: Vec<i64> = self.forms.iter().map(|f| f.constant).collect();
        let mut point = vec![0i64; self.nvars];
        self.dfs(0, &mut stack, &mut partial, &mut point, &last_depth, node_cap, &mut out)?;
        Ok(out)
    }

    fn dfs(
        &self,
        depth: usize,
        stack: &mut [Vec<(i64, i64)>],
        partial: &mut [i64],
        point: &mut [i64],
        last_depth: &[Option<usize>],
        node_cap: u64,
        out: &mut Enumeration,
    ) -> Result<(), SolverError> {
        if depth == self.nvars {
            out.solutions.push(point.to_vec());
            return Ok(());
        }
        let (lo, hi) = stack[depth][depth];
        'values: for x in lo..=hi {
            out.nodes += 1;
            if out.nodes > node_cap {
                return Err(SolverError::NodeLimit(out.nodes));
            }
            // exact divisibility + range check once a form is fully assigned
            for (fi, f) in self.forms.iter().enumerate() {
                if last_depth[fi] == Some(depth) && !value_ok(f, partial[fi] + f.coeffs[depth] * x)
                {
                    continue 'values;
                }
            }
            // fix this variable and re-narrow every later interval
            {
                let (head, tail) = stack.split_at_mut(depth + 1);
                let child = &mut tail[0];
                child.copy_from_slice(&head[depth]);
                child[depth] = (x, x);
                if !propagate(&self.forms, child, depth + 1)? {
                    continue 'values;
                }
            }
            for (fi, f) in self.forms.iter().enumerate() {
                partial[fi] += f.coeffs[depth] * x;
            }
            point[depth] = x;
            let r = self.dfs(depth + 1, stack, partial, point, last_depth, node_cap, out);
            for (fi, f) in self.forms.iter().enumerate() {
                partial[fi] -= f.coeffs[depth] * x;
            }
            r?;
        }
        Ok(())
    }
}

fn value_ok(f: &IntForm, v: i64) -> bool {
    v.rem_euclid(f.modulus) == 0 && f.range.is_none_or(|(lo, hi)| lo <= v && v <= hi)
}

/// Interval propagation over the ranged forms: variables with index >= `start`
/// are narrowed until a fixpoint; earlier variables are read as-is (the DFS
/// keeps them collapsed to their assigned values). Returns false when some
/// form or interval becomes unsatisfiable.
fn propagate(
    forms: &[IntForm],
    bounds: &mut [(i64, i64)],
    start: usize,
) -> Result<bool, SolverError> {
    loop {
        let mut changed = false;
        for f in forms {
            let Some((lo, hi)) = f.range else { continue };
            let mut total_min = f.constant;
            let mut total_max = f.constant;
            for (v, &a) in f.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let (bl, bh) = bounds[v];
                if bl > bh {
                    return Ok(false);
                }
                let (x, y) = (mul(a, bl)?, mul(a, bh)?);
                total_min = total_min.checked_add(x.min(y)).ok_or(SolverError::Overflow)?;
                total_max = total_max.checked_add(x.max(y)).ok_or(SolverError::Overflow)?;
            }
            if total_min > hi || total_max < lo {
                return Ok(false);
            }
            for (v, &a) in f.coeffs.iter().enumerate().skip(start) {
                if a == 0 {
                    continue;
                }
                // a*x must fit in [lo - (total_max - own_max), hi - (total_min - own_min)]
                let (bl, bh) = bounds[v];
                let (p, q) = (mul(a, bl)?, mul(a, bh)?);
                let (own_min, own_max) = (p.min(q), p.max(q));
                let slack_hi = hi - (total_min - own_min);
                let slack_lo = lo - (total_max - own_max);
                let (mut xl, mut xh) = if a > 0 {
                    (div_ceil(slack_lo, a), div_floor(slack_hi, a))
                } else {
                    (div_ceil(slack_hi, a), div_floor(slack_lo, a))
                };
                xl = xl.max(bl);
                xh = xh.min(bh);
                if (xl, xh) != (bl, bh) {
                    bounds[v] = (xl, xh);
                    changed = true;
                    if xl > xh {
                        return Ok(false);
                    }
                }
            }
        }
        if !changed {
            return Ok(true);
        }
    }
}

fn mul(a: i64, b: i64) -> Result<i64, SolverError> {
    a.checked_mul(b).ok_or(SolverError::Overflow)
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(sys: &System) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut point = vec![0i64; sys.nvars];
        fn rec(sys: &System, d: usize, point: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if d == sys.nvars {
                let ok = sys.forms.iter().all(|f| {
                    let v = f.constant
                        + f.coeffs.iter().zip(point.iter()).map(|(a, x)| a * x).sum::<i64>();
                    value_ok(f, v)
                });
                if ok {
                    out.push(point.clone());
                }
                return;
            }
            for x in sys.bounds[d].0..=sys.bounds[d].1 {
                point[d] = x;
                rec(sys, d + 1, point, out);
            }
        }
        rec(sys, 0, &mut point, &mut out);
        out
    }

    #[test]
    fn matches_brute_force_on_pseudorandom_systems() {
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let nvars = 1 + (next() % 4) as usize;
            let mut bounds = Vec::new();
            for _ in 0..nvars {
                let lo = (next() % 9) as i64 - 4;
                bounds.push((lo, lo + (next() % 6) as i64));
            }
            let mut sys = System::new(bounds);
            for j in 0..(1 + next() % 5) {
                let coeffs: Vec<i64> = (0..nvars).map(|_| (next() % 7) as i64 - 3).collect();
                let constant = (next() % 11) as i64 - 5;
                let mut f = IntForm::new(coeffs, constant, format!("f{j}"));
                if next() % 2 == 0 {
                    f = f.with_modulus(1 + (next() % 4) as i64);
                }
                if next() % 2 == 0 {
                    let lo = (next() % 10) as i64 - 6;
                    f = f.with_range(lo, lo + (next() % 12) as i64);
                }
                sys.push(f).unwrap();
            }
            let want = brute_force(&sys);
            let got = sys.enumerate(1 << 24).unwrap().solutions;
            assert_eq!(got, want);
            let mut tight = sys.clone();
            if tight.tighten().unwrap() {
                assert_eq!(tight.enumerate(1 << 24).unwrap().solutions, want);
            } else {
                assert!(want.is_empty());
            }
        }
    }

    #[test]
    fn equality_and_divisibility() {
        // x + y + z = 1, 2x + 3y divisible by 6 and in [0, 12]
        let mut sys = System::new(vec![(-3, 3), (-3, 3), (-3, 3)]);
        sys.push(IntForm::new(vec![1, 1, 1], -1, "aug").with_range(0, 0)).unwrap();
        sys.push(IntForm::new(vec![2, 3, 0], 0, "m").with_modulus(6).with_range(0, 12)).unwrap();
        let sols = sys.enumerate(1 << 20).unwrap().solutions;
        assert_eq!(brute_force(&sys), sols);
        assert!(sols.contains(&vec![0, 0, 1]));
        assert!(sols.contains(&vec![3, 0, -2]));
        for s in &sols {
            assert_eq!(s.iter().sum::<i64>(), 1);
            assert_eq!((2 * s[0] + 3 * s[1]).rem_euclid(6), 0);
        }
    }

    #[test]
    fn tighten_detects_empty_and_shrinks() {
        let mut sys = System::new(vec![(-100, 100), (-100, 100)]);
        sys.push(IntForm::new(vec![1, 0], 0, "a").with_range(3, 5)).unwrap();
        sys.push(IntForm::new(vec![1, 1], 0, "b").with_range(0, 2)).unwrap();
        assert!(sys.tighten().unwrap());
        assert_eq!(sys.bounds[0], (3, 5));
        assert_eq!(sys.bounds[1], (-5, -1));
        let mut empty = System::new(vec![(0, 10)]);
        empty.push(IntForm::new(vec![2], 0, "even").with_range(3, 3)).unwrap();
        // range [3,3] unreachable by even numbers is caught by enumerate,
        // while an interval-empty system is caught by tighten
        assert!(empty.enumerate(100).unwrap().solutions.is_empty());
        let mut empty2 = System::new(vec![(0, 10)]);
        empty2.push(IntForm::new(vec![1], 0, "lo").with_range(3, 10)).unwrap();
        empty2.push(IntForm::new(vec![1], 0, "hi").with_range(0, 2)).unwrap();
        assert!(!empty2.tighten().unwrap());
    }

    #[test]
    fn node_cap_is_enforced() {
        let mut sys = System::new(vec![(-50, 50), (-50, 50), (-50, 50)]);
        sys.push(IntForm::new(vec![1, 1, 1], 0, "s").with_modulus(1)).unwrap();
        match sys.enumerate(10) {
            Err(SolverError::NodeLimit(_)) => {}
            other => panic!("expected node limit, got {other:?}"),
        }
    }
}
