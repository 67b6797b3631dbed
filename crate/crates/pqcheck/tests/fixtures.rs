//! Every shipped fixture must load and survive full validation: class
//! data against the generated permutation group, exact row and column
//! orthogonality, Galois equivariance of values under power maps,
//! integrality of central characters, and (where modular tables exist)
//! nonnegative integral decomposition of the ordinary table into Brauer
//! characters on p-regular classes.

use std::path::Path;

use pqcheck::chartab::GroupBundle;

fn fixtures() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

macro_rules! bundle_tests {
    ($($fname:ident => $gname:literal),* $(,)?) => {
        $(
            #[test]
            fn $fname() {
                let bundle = GroupBundle::load(fixtures(), $gname)
                    .unwrap_or_else(|e| panic!("{}: {e}", $gname));
                let k = bundle.ordinary.classes.len();
                assert_eq!(bundle.ordinary.chars.len(), k);
                assert_eq!(bundle.group.order(), bundle.ordinary.group_order);
                let sq: u64 = bundle
                    .ordinary
                    .chars
                    .iter()
                    .map(|c| c.degree * c.degree)
                    .sum();
                assert_eq!(sq, bundle.group.order());
            }
        )*
    };
}

bundle_tests! {
    a5 => "A5",
    s5 => "S5",
    a6 => "A6",
    s6 => "S6",
    psl27 => "PSL(2,7)",
    pgl27 => "PGL(2,7)",
    psl28 => "PSL(2,8)",
    pgammal28 => "PGammaL(2,8)",
    psl217 => "PSL(2,17)",
    pgl217 => "PGL(2,17)",
    pgl29 => "PGL(2,9)",
    m10 => "M10",
    pgammal29 => "PGammaL(2,9)",
    psl33 => "PSL(3,3)",
    psl33_2 => "PSL(3,3).2",
    u33 => "U3(3)",
    u33_2 => "U3(3).2",
    u42 => "U4(2)",
    u42_2 => "U4(2).2",
}
