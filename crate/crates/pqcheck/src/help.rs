//! The Luthar–Passi / Hertweck constraint method for torsion units of
//! augmentation one in an integral group ring.
//!
//! For a unit u of order n the unknowns are the partial augmentations
//! eps_C(u^d) for every divisor d < n, supported on classes whose
//! element order divides n/d (Hertweck: eps_C(u) = 0 unless o(C)
//! divides o(u); Berman–Higman: eps_1(u) = 0 for u != 1). For every
//! ordinary character chi and every residue l mod n,
//!
//!   mu_l(u, chi) = (1/n) sum_{d | n} Tr_{Q(z_{n/d})/Q}(chi(u^d) z_{n/d}^{-l})
//!
//! is the multiplicity of the eigenvalue z_n^l in a representation
//! affording chi, hence an integer in [0, chi(1)]. The same holds for
//! Brauer characters modulo p when p does not divide n. Solutions are
//! "towers": compatible families (eps(u^d))_{d | n} admissible at every
//! level simultaneously.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;

use num::integer::Roots;
use serde::Serialize;
use thiserror::Error;

use crate::chartab::GroupBundle;
use crate::cyclotomic::{rat, CycloError, Cyclotomic, Rat};
use crate::numtheory::{divisors, prime_divisors};
use crate::solver::{IntForm, SolverError, System};

#[derive(Debug, Error)]
pub enum HelpError {
    #[error("order {0} is divisible by a prime not dividing the group order")]
    ForeignPrime(u64),
    #[error("no {p}-modular character data for {group}")]
    MissingBrauer { p: u64, group: String },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Cyclotomic(#[from] CycloError),
    #[error("coefficient does not fit in 64 bits")]
    CoefficientRange,
}

/// Which constraints to impose when solving for each unit order.
#[derive(Debug, Clone, Serialize)]
pub struct HelpConfig {
    /// Use the p-modular tables for these primes (skipped automatically
    /// for orders divisible by p, where Brauer values are undefined).
    pub brauer_primes: Vec<u64>,
    /// Impose Wagner's congruences eps_D(u^{p^j}) = sum of eps_C(u)
    /// over classes C with C^{p^j} = D, taken mod p.
    pub wagner: bool,
    /// Search-node budget per level solve.
    pub node_cap: u64,
}

impl Default for HelpConfig {
    fn default() -> Self {
        HelpConfig { brauer_primes: Vec::new(), wagner: false, node_cap: 1 << 32 }
    }
}

/// A compatible family of partial augmentations for u and all its
/// proper powers: `levels[&d]` is the vector for u^d, indexed by
/// `support_classes(bundle, n/d)`. The entry for d = n (the identity)
/// is omitted, as is anything for n = 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Tower {
    pub n: u64,
    pub levels: BTreeMap<u64, Vec<i64>>,
}

impl Tower {
    pub fn top(&self) -> &[i64] {
        &self.levels[&1]
    }
}

/// Ordinary-class indices that may carry a nonzero partial augmentation
/// for a unit of order n: element order > 1 and dividing n.
pub fn support_classes(bundle: &GroupBundle, n: u64) -> Vec<usize> {
    (0..bundle.ordinary.classes.len())
        .filter(|&c| {
            let o = bundle.ordinary.classes[c].element_order as u64;
            o > 1 && n % o == 0
        })
        .collect()
}

/// True when the tower is the augmentation pattern of a group element:
/// a single class C of order n with eps(u^d) = e_{C^d} at every level.
pub fn is_trivial(bundle: &GroupBundle, tower: &Tower) -> bool {
    let support = support_classes(bundle, tower.n);
    let top = tower.top();
    let Some(pos) = top.iter().position(|&x| x == 1) else { return false };
    if top.iter().enumerate().any(|(i, &x)| i != pos && x != 0) {
        return false;
    }
    let class = support[pos];
    if bundle.ordinary.classes[class].element_order as u64 != tower.n {
        return false;
    }
    for (&d, eps) in &tower.levels {
        if d == 1 {
            continue;
        }
        let target = bundle.power_class(class, d as i64);
        let sub = support_classes(bundle, tower.n / d);
        for (i, &c) in sub.iter().enumerate() {
            let want = if c == target { 1 } else { 0 };
            if eps[i] != want {
                return false;
            }
        }
    }
    true
}

/// One character row usable as a constraint source: values are indexed
/// by ordinary class, None where the (Brauer) value is undefined.
pub(crate) struct CharRow {
    pub(crate) label: String,
    pub(crate) degree: u64,
    pub(crate) values: Vec<Option<Cyclotomic>>,
}

pub struct HelpContext<'a> {
    pub bundle: &'a GroupBundle,
    pub config: HelpConfig,
    cache: RefCell<BTreeMap<u64, Rc<Vec<Tower>>>>,
}

impl<'a> HelpContext<'a> {
    pub fn new(bundle: &'a GroupBundle, config: HelpConfig) -> Self {
        HelpContext { bundle, config, cache: RefCell::new(BTreeMap::new()) }
    }

    /// All admissible towers for units of order n, sorted canonically.
    /// An empty result proves there is no unit of order n.
    pub fn solutions(&self, n: u64) -> Result<Rc<Vec<Tower>>, HelpError> {
        if let Some(hit) = self.cache.borrow().get(&n) {
            return Ok(hit.clone());
        }
        if n == 1 {
            // u = 1 itself: no unknowns (eps_1 = 1 is implicit, all
            // support vectors here exclude the identity class)
            let rc = Rc::new(vec![Tower { n: 1, levels: BTreeMap::new() }]);
            self.cache.borrow_mut().insert(1, rc.clone());
            return Ok(rc);
        }
        for p in prime_divisors(n) {
            if self.bundle.group.order() % p != 0 {
                return Err(HelpError::ForeignPrime(n));
            }
        }
        let mut towers = Vec::new();
        for tail in self.tails(n)? {
            for top in self.solve_level(n, &tail)? {
                let mut levels = tail.clone();
                levels.insert(1, top);
                towers.push(Tower { n, levels });
            }
        }
        towers.sort();
        let rc = Rc::new(towers);
        self.cache.borrow_mut().insert(n, rc.clone());
        Ok(rc)
    }

    /// Candidate assignments for all proper powers u^d (d > 1), glued
    /// from the solution sets of u^r over the primes r | n.
    fn tails(&self, n: u64) -> Result<Vec<BTreeMap<u64, Vec<i64>>>, HelpError> {
        let primes = prime_divisors(n);
        if primes.is_empty() {
            return Ok(vec![BTreeMap::new()]); // n = 1
        }
        let mut partial: Vec<BTreeMap<u64, Vec<i64>>> = vec![BTreeMap::new()];
        for &r in &primes {
            let sub = self.solutions(n / r)?;
            let mut next = Vec::new();
            for tail in &partial {
                'cand: for cand in sub.iter() {
                    // cand describes v = u^r: its level e speaks about u^{re}
                    let mut merged = tail.clone();
                    for e in divisors(n / r) {
                        if e == n / r {
                            continue;
                        }
                        let eps: &[i64] = if e == 1 { cand.top() } else { &cand.levels[&e] };
                        match merged.get(&(r * e)) {
                            Some(prev) if prev.as_slice() != eps => continue 'cand,
                            Some(_) => {}
                            None => {
                                merged.insert(r * e, eps.to_vec());
                            }
                        }
                    }
                    next.push(merged);
                }
            }
            partial = next;
        }
        Ok(partial)
    }

    /// Character rows active for a unit of order n.
    pub(crate) fn rows(&self, n: u64) -> Result<Vec<CharRow>, HelpError> {
        let mut rows = Vec::new();
        for chi in &self.bundle.ordinary.chars {
            rows.push(CharRow {
                label: chi.name.clone(),
                degree: chi.degree,
                values: chi.values.iter().cloned().map(Some).collect(),
            });
        }
        for &p in &self.config.brauer_primes {
            if n % p == 0 {
                continue;
            }
            if !self.bundle.brauer.contains_key(&p) {
                return Err(HelpError::MissingBrauer { p, group: self.bundle.name.clone() });
            }
            let nchars = self.bundle.brauer[&p].table.chars.len();
            for chi in 0..nchars {
                let table = &self.bundle.brauer[&p].table;
                rows.push(CharRow {
                    label: format!("{} mod {p}", table.chars[chi].name),
                    degree: table.chars[chi].degree,
                    values: (0..self.bundle.ordinary.classes.len())
                        .map(|c| self.bundle.brauer_value(p, chi, c).cloned())
                        .collect(),
                });
            }
        }
        Ok(rows)
    }

    /// Towers for units of order n where every proper power has already
    /// been settled with the full filter set, but the order-n system
    /// itself skips the congruence test. This is the natural "before the
    /// congruence test" count for order n in a run that works upward
    /// through the divisors: the smaller orders are finished business by
    /// the time order n is attacked.
    pub fn presifted_solutions(&self, n: u64) -> Result<Vec<Tower>, HelpError> {
        let mut towers = Vec::new();
        for tail in self.tails(n)? {
            for top in self.solve_level_with(n, &tail, false)? {
                let mut levels = tail.clone();
                levels.insert(1, top);
                towers.push(Tower { n, levels });
            }
        }
        towers.sort();
        Ok(towers)
    }

    /// Solve for eps(u) given fixed assignments for all proper powers.
    fn solve_level(
        &self,
        n: u64,
        tail: &BTreeMap<u64, Vec<i64>>,
    ) -> Result<Vec<Vec<i64>>, HelpError> {
        self.solve_level_with(n, tail, self.config.wagner)
    }

    fn solve_level_with(
        &self,
        n: u64,
        tail: &BTreeMap<u64, Vec<i64>>,
        congruences: bool,
    ) -> Result<Vec<Vec<i64>>, HelpError> {
        let bundle = self.bundle;
        let support = support_classes(bundle, n);
        let k = support.len();
        let bounds: Vec<(i64, i64)> = support
            .iter()
            .map(|&c| {
                let b = bundle.ordinary.classes[c].size.sqrt() as i64;
                (-b, b)
            })
            .collect();
        let mut sys = System::new(bounds);
        sys.push(IntForm::new(vec![1; k], -1, "augmentation").with_range(0, 0))?;

        // chi(u^d) for each proper divisor d > 1, as exact values
        let value_at_power = |row: &CharRow, d: u64| -> Cyclotomic {
            if d == n {
                return Cyclotomic::from_int(row.degree as i64);
            }
            let sub = support_classes(bundle, n / d);
            let eps = &tail[&d];
            let mut acc = Cyclotomic::zero();
            for (i, &c) in sub.iter().enumerate() {
                if eps[i] != 0 {
                    let v = row.values[c].as_ref().expect("support class is regular");
                    acc = &acc + &v.scale(&rat(eps[i]));
                }
            }
            acc
        };

        for row in self.rows(n)? {
            let tail_values: Vec<(u64, Cyclotomic)> = divisors(n)
                .into_iter()
                .filter(|&d| d > 1)
                .map(|d| (d, value_at_power(&row, d)))
                .collect();
            for l in 0..n {
                let mut coeffs = Vec::with_capacity(k);
                for &c in &support {
                    let v = row.values[c].as_ref().expect("support class is regular");
                    coeffs.push(v.trace_of_times_root(n, -(l as i64))?);
                }
                let mut constant = Rat::from_integer(0.into());
                for (d, val) in &tail_values {
                    constant += val.trace_of_times_root(n / d, -(l as i64))?;
                }
                // the built form equals n * mu_l(u, chi)
                let form = integer_form(
                    &coeffs,
                    &constant,
                    format!("mu({}, l={l})", row.label),
                )?
                .with_modulus(n as i64)
                .with_range(0, (n * row.degree) as i64);
                sys.push(form)?;
            }
        }

        if congruences {
            for form in self.wagner_forms(n, tail, &support)? {
                sys.push(form)?;
            }
        }

        if !sys.tighten()? {
            return Ok(Vec::new());
        }
        Ok(sys.enumerate(self.config.node_cap)?.solutions)
    }

    /// Wagner's congruences for each prime power p^j dividing n.
    fn wagner_forms(
        &self,
        n: u64,
        tail: &BTreeMap<u64, Vec<i64>>,
        support: &[usize],
    ) -> Result<Vec<IntForm>, HelpError> {
        let bundle = self.bundle;
        let mut forms = Vec::new();
        for p in prime_divisors(n) {
            let mut pj = p;
            while n % pj == 0 {
                // eps_D(u^{p^j}): zero unless D is in the support below
                let mut rhs: BTreeMap<usize, i64> = BTreeMap::new();
                if pj == n {
                    // u^{p^j} = 1; handled via the identity class below
                } else {
                    let sub = support_classes(bundle, n / pj);
                    for (i, &c) in sub.iter().enumerate() {
                        rhs.insert(c, tail[&pj][i]);
                    }
                }
                let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (i, &c) in support.iter().enumerate() {
                    by_target.entry(bundle.power_class(c, pj as i64)).or_default().push(i);
                }
                let mut targets: Vec<usize> = by_target.keys().copied().collect();
                targets.extend(rhs.keys().copied());
                targets.sort_unstable();
                targets.dedup();
                for target in targets {
                    let mut coeffs = vec![0i64; support.len()];
                    for &i in by_target.get(&target).map(Vec::as_slice).unwrap_or(&[]) {
                        coeffs[i] = 1;
                    }
                    let identity = bundle.ordinary.classes[target].element_order == 1;
                    let fixed = if pj == n && identity {
                        1
                    } else {
                        rhs.get(&target).copied().unwrap_or(0)
                    };
                    let name = &bundle.ordinary.classes[target].name;
                    forms.push(
                        IntForm::new(coeffs, -fixed, format!("wagner(p^j={pj}, {name})"))
                            .with_modulus(p as i64),
                    );
                }
                pj *= p;
            }
        }
        Ok(forms)
    }
}

/// Clear denominators of an exact linear form, producing an IntForm
/// whose value is (common denominator) times the rational form.
pub fn integer_form(coeffs: &[Rat], constant: &Rat, label: String) -> Result<IntForm, HelpError> {
    let mut denom: num::BigInt = 1.into();
    for c in coeffs.iter().chain(std::iter::once(constant)) {
        denom = num::integer::lcm(denom, c.denom().clone());
    }
    let cast = |r: &Rat| -> Result<i64, HelpError> {
        let scaled = r * Rat::from_integer(denom.clone());
        debug_assert!(scaled.is_integer());
        i64::try_from(scaled.to_integer()).map_err(|_| HelpError::CoefficientRange)
    };
    let coeffs = coeffs.iter().map(cast).collect::<Result<Vec<_>, _>>()?;
    Ok(IntForm::new(coeffs, cast(constant)?, label))
}

/// Summary of one unit order: every admissible tower plus the split
/// into trivial (group-element pattern) and nontrivial ones.
#[derive(Debug, Serialize)]
pub struct OrderAnalysis {
    pub n: u64,
    pub towers: Vec<Tower>,
    pub trivial: usize,
    pub nontrivial: usize,
}

pub fn analyze_order(ctx: &HelpContext, n: u64) -> Result<OrderAnalysis, HelpError> {
    let towers = ctx.solutions(n)?;
    let trivial = towers.iter().filter(|t| is_trivial(ctx.bundle, t)).count();
    Ok(OrderAnalysis {
        n,
        trivial,
        nontrivial: towers.len() - trivial,
        towers: towers.as_ref().clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    fn load(name: &str) -> GroupBundle {
        GroupBundle::load(
            Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")),
            name,
        )
        .unwrap()
    }

    #[test]
    fn a5_spectrum_orders_are_trivial_only() {
        let bundle = load("A5");
        let ctx = HelpContext::new(&bundle, HelpConfig::default());
        for (n, classes_of_order_n) in [(2u64, 1usize), (3, 1), (5, 2)] {
            let a = analyze_order(&ctx, n).unwrap();
            assert_eq!(a.nontrivial, 0, "order {n}");
            assert_eq!(a.trivial, classes_of_order_n, "order {n}");
        }
    }

    #[test]
    fn a5_mixed_orders_are_eliminated() {
        let bundle = load("A5");
        let ctx = HelpContext::new(&bundle, HelpConfig::default());
        for n in [6u64, 10, 15] {
            assert!(ctx.solutions(n).unwrap().is_empty(), "order {n}");
        }
    }

    #[test]
    fn trivial_towers_match_group_classes() {
        let bundle = load("PSL(2,7)");
        let ctx = HelpContext::new(&bundle, HelpConfig::default());
        for &n in &[2u64, 3, 4, 7] {
            let sols = ctx.solutions(n).unwrap();
            let trivial = sols.iter().filter(|t| is_trivial(&bundle, t)).count();
            let classes = bundle
                .ordinary
                .classes
                .iter()
                .filter(|c| c.element_order as u64 == n)
                .count();
            assert_eq!(trivial, classes, "order {n}");
        }
    }

    #[test]
    fn psl27_order_six_needs_the_modular_table() {
        let bundle = load("PSL(2,7)");
        let plain = HelpContext::new(&bundle, HelpConfig::default());
        let survivors = plain.solutions(6).unwrap();
        assert!(!survivors.is_empty(), "ordinary constraints alone must not finish order 6");
        assert!(survivors.iter().all(|t| !is_trivial(&bundle, t)));

        let config = HelpConfig { brauer_primes: vec![7], ..Default::default() };
        let modular = HelpContext::new(&bundle, config);
        assert!(modular.solutions(6).unwrap().is_empty());
    }

    #[test]
    fn psl27_order_21_eliminated_by_ordinary_characters() {
        let bundle = load("PSL(2,7)");
        let ctx = HelpContext::new(&bundle, HelpConfig::default());
        assert!(ctx.solutions(21).unwrap().is_empty());
        assert!(ctx.solutions(14).unwrap().is_empty());
    }

    #[test]
    fn foreign_prime_is_rejected() {
        let bundle = load("A5");
        let ctx = HelpContext::new(&bundle, HelpConfig::default());
        match ctx.solutions(7) {
            Err(HelpError::ForeignPrime(7)) => {}
            other => panic!("expected foreign prime error, got {other:?}"),
        }
    }
}
