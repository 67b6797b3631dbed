use pqcheck::chartab::GroupBundle;
use pqcheck::help::{HelpConfig, HelpContext};
use std::collections::BTreeSet;
use std::path::PathBuf;

// order-24 assembly for U3(3).2: coherent pairs of (order-12 tower for u^2,
// order-8 tower for u^3), agreeing on eps(u^6) and eps(u^12); report
// distinct per-slot vectors among coherent pairs.
fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut config = HelpConfig::default();
    for a in &args {
        if a == "wagner" {
            config.wagner = true;
        } else if let Some(list) = a.strip_prefix("brauer:") {
            config.brauer_primes = list.split(',').map(|s| s.parse().unwrap()).collect();
        }
    }
    let b = GroupBundle::load(&fixtures, "U3(3).2").unwrap();
    let ctx = HelpContext::new(&b, config);
    let t12 = ctx.solutions(12).unwrap();
    let t8 = ctx.solutions(8).unwrap();
    println!("free: towers12 {}, towers8 {}", t12.len(), t8.len());

    // slots keyed by order of u^d: 12: t12 top, 8: t8 top, 6: t12[2],
    // 4: t12[3] == t8[2], 3: t12[4], 2: t12[6] == t8[4]
    let mut pairs = 0u64;
    let mut s12 = BTreeSet::new();
    let mut s8 = BTreeSet::new();
    let mut s6 = BTreeSet::new();
    let mut s4 = BTreeSet::new();
    let mut s3 = BTreeSet::new();
    let mut s2 = BTreeSet::new();
    for a in t12.iter() {
        for c in t8.iter() {
            if a.levels[&3] != c.levels[&2] || a.levels[&6] != c.levels[&4] {
                continue;
            }
            pairs += 1;
            s12.insert(a.top().to_vec());
            s8.insert(c.top().to_vec());
            s6.insert(a.levels[&2].clone());
            s4.insert(a.levels[&3].clone());
            s3.insert(a.levels[&4].clone());
            s2.insert(a.levels[&6].clone());
        }
    }
    println!(
        "coherent pairs {pairs}; per-slot distinct: o2 {}, o3 {}, o4 {}, o6 {}, o8 {}, o12 {}; product {}",
        s2.len(),
        s3.len(),
        s4.len(),
        s6.len(),
        s8.len(),
        s12.len(),
        s2.len() * s3.len() * s4.len() * s6.len() * s8.len() * s12.len()
    );
}
