use pqcheck::chartab::GroupBundle;
use pqcheck::help::{HelpConfig, HelpContext};
use std::collections::BTreeSet;
use std::path::PathBuf;

// Count towers/tops after forcing the components at given element orders
// to be standard basis vectors (rational conjugacy known for that order).
// usage: dbg_trivtail <group> <order> <trivial-orders csv> [wagner] [brauer:..]
fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let args: Vec<String> = std::env::args().skip(1).collect();
    let b = GroupBundle::load(&fixtures, &args[0]).unwrap();
    let n: u64 = args[1].parse().unwrap();
    let trivial: Vec<u64> = args[2].split(',').filter_map(|s| s.parse().ok()).collect();
    let mut config = HelpConfig::default();
    for a in &args[3..] {
        if a == "wagner" {
            config.wagner = true;
        } else if let Some(list) = a.strip_prefix("brauer:") {
            config.brauer_primes = list.split(',').map(|s| s.parse().unwrap()).collect();
        }
    }
    let ctx = HelpContext::new(&b, config);
    let sols = ctx.solutions(n).unwrap();
    let kept: Vec<_> = sols
        .iter()
        .filter(|s| {
            s.levels.iter().all(|(&d, eps)| {
                d == 1
                    || !trivial.contains(&(n / d))
                    || (eps.iter().all(|&x| x == 0 || x == 1) && eps.iter().sum::<i64>() == 1)
            })
        })
        .collect();
    let tops: BTreeSet<&[i64]> = kept.iter().map(|s| s.top()).collect();
    println!(
        "order {n}: towers {} -> {}, tops {}",
        sols.len(),
        kept.len(),
        tops.len()
    );
    for t in tops {
        println!("  {t:?}");
    }
}
