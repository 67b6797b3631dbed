//! Verification of the prime-graph question for integral group rings.
//!
//! Given a finite group G with known (ordinary and, optionally, modular)
//! character tables, the library decides for each candidate order n whether
//! a torsion unit of order n can exist in the normalized units of ZG, by
//! enumerating the admissible partial-augmentation vectors: the
//! eigenvalue-multiplicity constraints of Luthar–Passi/Hertweck, a
//! congruence filter on partial augmentations, and a `(p,q)`
//! constant-character argument that rules out mixed orders wholesale.
//! On top of the per-group verdicts, a small inference engine propagates
//! results to larger groups along quotient and direct-product reductions.

pub mod chartab;
pub mod cyclotomic;
pub mod filters;
pub mod linalg;
pub mod numtheory;
pub mod help;
pub mod perm;
pub mod solver;

pub use cyclotomic::{rat, Cyclotomic, Rat};
