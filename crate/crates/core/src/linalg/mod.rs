//! Exact integer matrix algebra: normal forms, diophantine solving, and
//! lattice arithmetic. Everything here is total on zero-dimension inputs.

mod lattice;
mod matrix;
mod snf;
mod solve;

pub use lattice::{kernel_lattice, Lattice};
pub use matrix::IntMatrix;
pub use snf::{snf, SnfResult};
pub use solve::{solve, ModSolver, Solver};
