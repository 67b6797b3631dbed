use pqcheck::chartab::GroupBundle;
use pqcheck::help::{HelpConfig, HelpContext};
use std::collections::BTreeSet;
use std::path::PathBuf;

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let args: Vec<String> = std::env::args().skip(1).collect();
    let group = &args[0];
    let b = GroupBundle::load(&fixtures, group).unwrap();
    let orders: Vec<u64> = args[1].split(',').map(|s| s.parse().unwrap()).collect();
    let mut config = HelpConfig::default();
    let mut dump = false;
    let mut presifted = false;
    for a in &args[2..] {
        if a == "wagner" {
            config.wagner = true;
        } else if a == "dump" {
            dump = true;
        } else if a == "presifted" {
            config.wagner = true;
            presifted = true;
        } else if let Some(list) = a.strip_prefix("brauer:") {
            config.brauer_primes = list.split(',').map(|s| s.parse().unwrap()).collect();
        }
    }
    let ctx = HelpContext::new(&b, config);
    for &m in &orders {
        let t = std::time::Instant::now();
        let sols = if presifted {
            std::rc::Rc::new(ctx.presifted_solutions(m).unwrap())
        } else {
            ctx.solutions(m).unwrap()
        };
        // distinct projections onto the first k divisors (1 = top only)
        let mut divs: Vec<u64> = sols
            .first()
            .map(|s| s.levels.keys().copied().collect())
            .unwrap_or_default();
        divs.sort_unstable();
        let mut line = format!("order {m}: towers {}", sols.len());
        for k in 1..=divs.len() {
            let set: BTreeSet<Vec<Vec<i64>>> = sols
                .iter()
                .map(|s| divs[..k].iter().map(|d| s.levels[d].clone()).collect())
                .collect();
            line += &format!(", d{:?}: {}", &divs[..k], set.len());
        }
        println!("{line} ({:?})", t.elapsed());
        if dump {
            let tops: BTreeSet<&[i64]> = sols.iter().map(|s| s.top()).collect();
            for t in tops {
                println!("  {t:?}");
            }
        }
    }
}
