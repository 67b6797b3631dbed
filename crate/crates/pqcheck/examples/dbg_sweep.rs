use pqcheck::chartab::GroupBundle;
use pqcheck::help::{HelpConfig, HelpContext};
use std::path::PathBuf;

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let args: Vec<String> = std::env::args().skip(1).collect();
    // usage: dbg_sweep <order> [wagner] [brauer:3,7]
    let which: u64 = args[0].parse().unwrap();
    let mut config = HelpConfig::default();
    for a in &args[1..] {
        if a == "wagner" {
            config.wagner = true;
        } else if let Some(list) = a.strip_prefix("brauer:") {
            config.brauer_primes = list.split(',').map(|s| s.parse().unwrap()).collect();
        }
    }
    let b = GroupBundle::load(&fixtures, "U3(3).2").unwrap();
    let ctx = HelpContext::new(&b, config);
    let t = std::time::Instant::now();
    let sols = ctx.solutions(which).unwrap();
    eprintln!("order {which}: {} towers in {:?}", sols.len(), t.elapsed());
}
