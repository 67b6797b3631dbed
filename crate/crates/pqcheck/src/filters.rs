//! Elimination devices beyond the per-order constraint systems: a
//! constant-character method for units whose order is a product of two
//! primes, and an exhaustive sweep that tests a top-level system against
//! every combination of admissible lower-order solutions.

use std::collections::BTreeMap;
use std::fmt;

use num::integer::Roots;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chartab::{Character, GroupBundle};
use crate::cyclotomic::{rat, CycloError, Cyclotomic};
use crate::help::{integer_form, support_classes, HelpContext, HelpError};
use crate::numtheory::divisors;
use crate::solver::{IntForm, SolverError, System};

#[derive(Debug, Error)]
pub enum FilterError {
    #[error("the group has elements of order {0}, the method does not apply")]
    OrderPresent(u64),
    #[error("the group has no elements of order {0}")]
    NoElementsOfOrder(u64),
    #[error("no {p}-modular character data for {group}")]
    MissingBrauer { p: u64, group: String },
    #[error("{p}-modular characters are undefined on classes of order divisible by {p}")]
    SingularPrime { p: u64 },
    #[error("character value is not a rational integer where one was required")]
    IrrationalValue,
    #[error(transparent)]
    Help(#[from] HelpError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Cyclotomic(#[from] CycloError),
}

/// Which character table a filter draws its rows from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableChoice {
    Ordinary,
    Brauer(u64),
}

impl fmt::Display for TableChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableChoice::Ordinary => write!(f, "ordinary"),
            TableChoice::Brauer(p) => write!(f, "{p}-Brauer"),
        }
    }
}

/// A character (a sum of irreducibles from one table) taking one
/// constant rational value on every class of order p and another on
/// every class of order q. For a unit u of order pq in a group without
/// elements of order pq, such a character sees only the aggregate
/// t = sum of eps_C(u) over the order-p classes: since the partial
/// augmentations of u^q sum to 1 over the order-p classes alone,
/// xi(u^q) = on_p exactly, xi(u^p) = on_q, and xi(u) = on_p t +
/// on_q (1 - t). Eigenvalue multiplicities then constrain the single
/// integer t.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantCharacter {
    pub table: TableChoice,
    /// Names of the irreducible constituents, in table order.
    pub parts: Vec<String>,
    pub degree: u64,
    pub on_p: i64,
    pub on_q: i64,
}

impl fmt::Display for ConstantCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.parts.join("+"), self.table)
    }
}

fn table_of<'a>(
    bundle: &'a GroupBundle,
    choice: TableChoice,
) -> Result<(&'a [crate::chartab::ClassInfo], &'a [Character]), FilterError> {
    match choice {
        TableChoice::Ordinary => Ok((&bundle.ordinary.classes, &bundle.ordinary.chars)),
        TableChoice::Brauer(r) => {
            let data = bundle
                .brauer
                .get(&r)
                .ok_or_else(|| FilterError::MissingBrauer { p: r, group: bundle.name.clone() })?;
            Ok((&data.table.classes, &data.table.chars))
        }
    }
}

fn rational_int(v: &Cyclotomic) -> Option<i64> {
    let r = v.as_rational()?;
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.to_integer()).ok()
}

/// All sums of up to `max_parts` distinct irreducibles from the chosen
/// table that are constant on the order-p classes and constant (with a
/// different value) on the order-q classes. Deterministic order: by
/// number of constituents, then by constituent indices.
pub fn find_pq_constant(
    bundle: &GroupBundle,
    p: u64,
    q: u64,
    choice: TableChoice,
    max_parts: usize,
) -> Result<Vec<ConstantCharacter>, FilterError> {
    if let TableChoice::Brauer(r) = choice {
        if p == r || q == r {
            return Err(FilterError::SingularPrime { p: r });
        }
    }
    let (classes, chars) = table_of(bundle, choice)?;
    let on_order = |m: u64| -> Vec<usize> {
        (0..classes.len()).filter(|&c| classes[c].element_order as u64 == m).collect()
    };
    let idx_p = on_order(p);
    let idx_q = on_order(q);
    if idx_p.is_empty() {
        return Err(FilterError::NoElementsOfOrder(p));
    }
    if idx_q.is_empty() {
        return Err(FilterError::NoElementsOfOrder(q));
    }

    // constant rational value of a subset-sum across the given classes
    let constant_on = |subset: &[usize], idxs: &[usize]| -> Option<i64> {
        let mut first: Option<i64> = None;
        for &c in idxs {
            let mut acc = Cyclotomic::zero();
            for &k in subset {
                acc = &acc + &chars[k].values[c];
            }
            let v = rational_int(&acc)?;
            match first {
                None => first = Some(v),
                Some(w) if w != v => return None,
                _ => {}
            }
        }
        first
    };

    let mut found = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    fn walk(
        start: usize,
        left: usize,
        k: usize,
        subset: &mut Vec<usize>,
        sink: &mut impl FnMut(&[usize]),
    ) {
        if left == 0 {
            sink(subset);
            return;
        }
        for i in start..k {
            subset.push(i);
            walk(i + 1, left - 1, k, subset, sink);
            subset.pop();
        }
    }
    for size in 1..=max_parts {
        let mut sink = |subset: &[usize]| {
            let (Some(a), Some(b)) = (constant_on(subset, &idx_p), constant_on(subset, &idx_q))
            else {
                return;
            };
            if a == b {
                return; // no leverage on the p/q split
            }
            found.push(ConstantCharacter {
                table: choice,
                parts: subset.iter().map(|&k| chars[k].name.clone()).collect(),
                degree: subset.iter().map(|&k| chars[k].degree).sum(),
                on_p: a,
                on_q: b,
            });
        };
        walk(0, size, chars.len(), &mut subset, &mut sink);
    }
    Ok(found)
}

/// Result of testing whether a unit of order pq can exist, using one
/// constant character.
#[derive(Debug, Clone, Serialize)]
pub struct PqOutcome {
    pub p: u64,
    pub q: u64,
    pub xi: ConstantCharacter,
    /// Values of t (aggregate augmentation on the order-p classes)
    /// surviving every eigenvalue-multiplicity condition.
    pub survivors: Vec<i64>,
    pub eliminated: bool,
}

/// Eigenvalue-multiplicity feasibility for a unit of order n = pq in a
/// group without elements of order n. For each residue l mod n,
///
///   n mu_l = Tr(xi(u) z_n^-l) + Tr(xi(u^p) z_q^-l) + Tr(xi(u^q) z_p^-l) + xi(1)
///
/// must be divisible by n and land in [0, n xi(1)]; every xi(u^d) here
/// is rational, so the whole system is affine in the single unknown t.
pub fn eliminate_order_pq(
    bundle: &GroupBundle,
    p: u64,
    q: u64,
    xi: &ConstantCharacter,
) -> Result<PqOutcome, FilterError> {
    let n = p * q;
    if bundle.ordinary.classes.iter().any(|c| c.element_order as u64 == n) {
        return Err(FilterError::OrderPresent(n));
    }
    let bound: i64 = bundle
        .ordinary
        .classes
        .iter()
        .filter(|c| c.element_order as u64 == p)
        .map(|c| c.size.sqrt() as i64)
        .sum();
    if bound == 0 {
        return Err(FilterError::NoElementsOfOrder(p));
    }
    if !bundle.ordinary.classes.iter().any(|c| c.element_order as u64 == q) {
        return Err(FilterError::NoElementsOfOrder(q));
    }

    let one = Cyclotomic::from_int(1);
    let a = rat(xi.on_p);
    let b = rat(xi.on_q);
    let deg = rat(xi.degree as i64);
    let mut sys = System::new(vec![(-bound, bound)]);
    for l in 0..n {
        let tr_n = one.trace_of_times_root(n, -(l as i64))?;
        let tr_q = one.trace_of_times_root(q, -(l as i64))?;
        let tr_p = one.trace_of_times_root(p, -(l as i64))?;
        // xi(u) = (a - b) t + b
        let coeff = (a.clone() - b.clone()) * tr_n.clone();
        let constant = b.clone() * tr_n + b.clone() * tr_q + a.clone() * tr_p + deg.clone();
        let form = integer_form(&[coeff], &constant, format!("mu({xi}, l={l})"))?
            .with_modulus(n as i64)
            .with_range(0, (n * xi.degree) as i64);
        sys.push(form)?;
    }
    let survivors = if sys.tighten()? {
        sys.enumerate(1 << 24)?.solutions.into_iter().map(|s| s[0]).collect()
    } else {
        Vec::new()
    };
    Ok(PqOutcome { p, q, xi: xi.clone(), eliminated: survivors.is_empty(), survivors })
}

/// Convenience: try every constant character from the chosen table (up
/// to 3 constituents) until one eliminates order pq.
pub fn pq_constant_eliminates(
    bundle: &GroupBundle,
    p: u64,
    q: u64,
    choice: TableChoice,
) -> Result<Option<PqOutcome>, FilterError> {
    for xi in find_pq_constant(bundle, p, q, choice, 3)? {
        let out = eliminate_order_pq(bundle, p, q, &xi)?;
        if out.eliminated {
            return Ok(Some(out));
        }
    }
    Ok(None)
}

/// Result of a case sweep for units of order n.
#[derive(Debug, Clone, Serialize)]
pub struct SweepOutcome {
    pub n: u64,
    /// Number of admissible solution towers for each proper divisor > 1.
    pub per_order: BTreeMap<u64, usize>,
    /// Product of the per-order counts: one case per combination.
    pub cases: u64,
    /// Indices (mixed-radix over ascending divisors) of feasible cases.
    pub feasible: Vec<u64>,
    pub nodes: u64,
}

impl SweepOutcome {
    pub fn eliminated(&self) -> bool {
        self.feasible.is_empty()
    }
}

/// Test the order-n constraint system against every combination of
/// admissible lower-order towers, chosen independently per divisor.
///
/// A genuine unit u of order n induces one compatible tower for every
/// proper divisor, and that combination appears among the cases; so if
/// every case is infeasible, no unit of order n exists. Combinations
/// are not required to agree on shared sub-levels, which makes the case
/// count the plain product of the per-order solution counts (and some
/// cases may be feasible yet not globally consistent, so a feasible
/// case alone proves nothing). Wagner congruences are not imposed here.
pub fn case_sweep(ctx: &HelpContext<'_>, n: u64) -> Result<SweepOutcome, FilterError> {
    let bundle = ctx.bundle;
    let support = support_classes(bundle, n);
    let k = support.len();

    let proper: Vec<u64> = divisors(n).into_iter().filter(|&d| d > 1 && d < n).collect();
    let mut towers = Vec::with_capacity(proper.len());
    let mut per_order = BTreeMap::new();
    for &m in &proper {
        let sols = ctx.solutions(m)?;
        per_order.insert(m, sols.len());
        towers.push(sols);
    }
    let cases: u64 = towers.iter().map(|t| t.len() as u64).product();
    if cases == 0 {
        return Ok(SweepOutcome { n, per_order, cases, feasible: Vec::new(), nodes: 0 });
    }

    let rows = ctx.rows(n)?;

    // template system: per-class box, augmentation, and for every
    // character row and residue l the form n*mu_l with the tail
    // contributions left out (they differ per case)
    let bounds: Vec<(i64, i64)> = support
        .iter()
        .map(|&c| {
            let b = bundle.ordinary.classes[c].size.sqrt() as i64;
            (-b, b)
        })
        .collect();
    let mut template = System::new(bounds);
    template.push(IntForm::new(vec![1; k], -1, "augmentation").with_range(0, 0))?;
    for row in &rows {
        for l in 0..n {
            let mut coeffs = Vec::with_capacity(k);
            for &c in &support {
                let v = row.values[c].as_ref().expect("support class is regular");
                coeffs.push(v.trace_of_times_root(n, -(l as i64))?);
            }
            // the d = n term contributes chi(1) for every l
            let form =
                integer_form(&coeffs, &rat(row.degree as i64), format!("mu({}, l={l})", row.label))?
                    .with_modulus(n as i64)
                    .with_range(0, (n * row.degree) as i64);
            template.push(form)?;
        }
    }

    // tail contribution of divisor m's tower ti to the form of (row, l):
    // Tr(chi(u^{n/m}) z_m^-l) where chi(u^{n/m}) comes from the tower top
    let mut tails: Vec<Vec<Vec<i64>>> = Vec::with_capacity(proper.len());
    for (di, &m) in proper.iter().enumerate() {
        let sub = support_classes(bundle, m);
        let mut per_tower = Vec::with_capacity(towers[di].len());
        for tower in towers[di].iter() {
            let top = tower.top();
            let mut per_row = Vec::with_capacity(rows.len() * n as usize);
            for row in &rows {
                let mut val = Cyclotomic::zero();
                for (i, &c) in sub.iter().enumerate() {
                    if top[i] != 0 {
                        let v = row.values[c].as_ref().expect("support class is regular");
                        val = &val + &v.scale(&rat(top[i]));
                    }
                }
                for l in 0..n {
                    let t = val.trace_of_times_root(m, -(l as i64))?;
                    if !t.is_integer() {
                        return Err(FilterError::IrrationalValue);
                    }
                    let t = i64::try_from(t.to_integer()).map_err(|_| HelpError::CoefficientRange)?;
                    per_row.push(t);
                }
            }
            per_tower.push(per_row);
        }
        tails.push(per_tower);
    }

    let radices: Vec<u64> = towers.iter().map(|t| t.len() as u64).collect();
    let nforms = rows.len() * n as usize;
    let node_cap = ctx.config.node_cap;

    let results: Result<Vec<(Option<u64>, u64)>, FilterError> = (0..cases)
        .into_par_iter()
        .map(|case| {
            let mut sys = template.clone();
            let mut rest = case;
            for (di, &r) in radices.iter().enumerate() {
                let ti = (rest % r) as usize;
                rest /= r;
                let tail = &tails[di][ti];
                for fi in 0..nforms {
                    sys.forms[fi + 1].constant += tail[fi];
                }
            }
            if !sys.tighten()? {
                return Ok((None, 0));
            }
            let run = sys.enumerate(node_cap)?;
            Ok((if run.solutions.is_empty() { None } else { Some(case) }, run.nodes))
        })
        .collect();
    let results = results?;
    let nodes = results.iter().map(|r| r.1).sum();
    let feasible = results.into_iter().filter_map(|r| r.0).collect();
    Ok(SweepOutcome { n, per_order, cases, feasible, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::GroupBundle;
    use crate::help::HelpConfig;
    use std::path::PathBuf;

    fn fixtures() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
    }

    fn bundle(name: &str) -> GroupBundle {
        GroupBundle::load(&fixtures(), name).unwrap()
    }

    #[test]
    fn u33_constant_characters_eliminate_mixed_orders() {
        let b = bundle("U3(3)");
        // order 14 falls to the 3-modular table; among the witnesses is
        // the classical one: a sum of three Brauer characters of degrees
        // 1 + 7 + 27 that is 3 on the involution class and 0 on both
        // classes of order 7
        let out = pq_constant_eliminates(&b, 2, 7, TableChoice::Brauer(3)).unwrap().unwrap();
        assert!(out.eliminated);
        let witness = find_pq_constant(&b, 2, 7, TableChoice::Brauer(3), 3)
            .unwrap()
            .into_iter()
            .find(|xi| (xi.on_p, xi.on_q) == (3, 0) && xi.degree == 35)
            .expect("the 1+7+27 witness");
        assert!(eliminate_order_pq(&b, 2, 7, &witness).unwrap().eliminated);
        // order 21: a single ordinary character of degree 27 works,
        // constant 0 on order-3 classes and -1 on order-7 classes
        let out = pq_constant_eliminates(&b, 3, 7, TableChoice::Ordinary).unwrap().unwrap();
        assert!(out.eliminated);
        assert_eq!((out.xi.on_p, out.xi.on_q, out.xi.degree), (0, -1, 27));
        assert_eq!(out.xi.parts.len(), 1);
    }

    #[test]
    fn constant_character_guards() {
        let b = bundle("U3(3)");
        // 3-Brauer values are undefined on order-3 classes
        assert!(matches!(
            find_pq_constant(&b, 3, 7, TableChoice::Brauer(3), 2),
            Err(FilterError::SingularPrime { p: 3 })
        ));
        // the group has elements of order 12, so the method refuses (3,4)
        let xi = ConstantCharacter {
            table: TableChoice::Ordinary,
            parts: vec!["X1".into()],
            degree: 1,
            on_p: 1,
            on_q: 1,
        };
        assert!(matches!(
            eliminate_order_pq(&b, 3, 4, &xi),
            Err(FilterError::OrderPresent(12))
        ));
    }

    #[test]
    fn sweep_collapses_when_a_divisor_has_no_towers() {
        // A5 has no units of order 6, 10, or 15, so every sweep above
        // them has zero cases
        let b = bundle("A5");
        let ctx = HelpContext::new(&b, HelpConfig::default());
        let out = case_sweep(&ctx, 30).unwrap();
        assert_eq!(out.cases, 0);
        assert!(out.eliminated());
    }

    #[test]
    fn sweep_feasibility_tracks_the_character_set() {
        let b = bundle("PSL(2,7)");
        // ordinary characters alone leave order 6 open
        let ctx = HelpContext::new(&b, HelpConfig::default());
        let out = case_sweep(&ctx, 6).unwrap();
        assert_eq!(out.cases, 1); // one tower each for orders 2 and 3
        assert_eq!(out.feasible.len(), 1);
        // the 7-modular table closes it
        let config = HelpConfig { brauer_primes: vec![7], ..HelpConfig::default() };
        let ctx = HelpContext::new(&b, config);
        let out = case_sweep(&ctx, 6).unwrap();
        assert_eq!(out.cases, 1);
        assert!(out.eliminated());
    }
}
