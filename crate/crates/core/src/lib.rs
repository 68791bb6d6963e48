//! Exact computation with finitely generated abelian groups: integer normal
//! forms, presented groups and homomorphisms, and machine-checked diagram
//! lemmas (snake lemma with its generalized connecting map, the
//! kernel-cokernel ring of a composite, Bass's exact ring, and the 4-lemma).
//!
//! All arithmetic is arbitrary-precision and exact; every value is immutable
//! after construction and safe to share across threads.

pub mod abgroup;
pub mod four;
pub mod linalg;
pub mod oracle;
pub mod snake;

pub use abgroup::{
    induced_hom, quotient, AbError, Element, FpAbGroup, Hom, QuotObject, Side, SubObject, Subgroup,
};
pub use linalg::{kernel_lattice, snf, solve, IntMatrix, Lattice, SnfResult};
