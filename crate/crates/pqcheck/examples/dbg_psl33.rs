use pqcheck::chartab::GroupBundle;
use pqcheck::help::{HelpConfig, HelpContext};
use std::path::PathBuf;

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let b = GroupBundle::load(&fixtures, "PSL(3,3)").unwrap();
    for wagner in [false, true] {
        let ctx = HelpContext::new(&b, HelpConfig { wagner, ..HelpConfig::default() });
        let mut line = format!("wagner={wagner}:");
        for m in [2u64, 3, 4, 6, 8, 12] {
            let sols = ctx.solutions(m).unwrap();
            line.push_str(&format!("  {m}->{}", sols.len()));
        }
        println!("{line}");
    }
}
