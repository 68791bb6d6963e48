//! Integer linear system solving: `m * x == b` over Z, via Smith normal form.
//!
//! Solutions are generally not unique; the free coordinates of the
//! transformed system parameterize the solution lattice. `solve` picks the
//! canonical witness (free coordinates zero), `solve_with` lets the caller
//! supply free coordinates, which is how the diagram-chase witness
//! randomization is implemented.

use super::lattice::Lattice;
use super::matrix::IntMatrix;
use super::snf::{snf, SnfResult};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Precomputed SNF of a coefficient matrix, reusable across many right-hand
/// sides.
pub struct Solver {
    s: SnfResult,
    rows: usize,
    cols: usize,
}

impl Solver {
    pub fn new(m: &IntMatrix) -> Self {
        Solver {
            s: snf(m),
            rows: m.rows(),
            cols: m.cols(),
        }
    }

    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        self.solve_with(b, &mut || BigInt::zero())
    }

    /// Any witness of `m * x == b`; `free` supplies the unconstrained
    /// coordinates of the transformed system.
    pub fn solve_with(&self, b: &[BigInt], free: &mut dyn FnMut() -> BigInt) -> Option<Vec<BigInt>> {
        assert_eq!(
            b.len(),
            self.rows,
            "solve: right-hand side length {} does not match {} rows",
            b.len(),
            self.rows
        );
        let w = self.s.u.mul_vec(b);
        let diag = self.s.diagonal();
        let mut y = Vec::with_capacity(self.cols);
        for i in 0..self.cols {
            if i < diag.len() && !diag[i].is_zero() {
                let (q, r) = w[i].div_rem(&diag[i]);
                if !r.is_zero() {
                    return None;
                }
                y.push(q);
            } else {
                y.push(free());
            }
        }
        for (i, wi) in w.iter().enumerate() {
            let unconstrained = i >= diag.len() || diag[i].is_zero();
            if unconstrained && !wi.is_zero() {
                return None;
            }
        }
        Some(self.s.v.mul_vec(&y))
    }
}

/// One-shot convenience wrapper.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    Solver::new(m).solve(b)
}

/// Solves `a * x ≡ b (mod lattice)`, i.e. `a*x + basis*t == b` for some `t`,
/// returning only the `x` block.
pub struct ModSolver {
    solver: Solver,
    x_len: usize,
}

impl ModSolver {
    pub fn new(a: &IntMatrix, modulus: &Lattice) -> Self {
        assert_eq!(
            a.rows(),
            modulus.ambient_dim(),
            "mod solver: matrix rows must match the modulus ambient dimension"
        );
        ModSolver {
            solver: Solver::new(&a.hstack(modulus.basis())),
            x_len: a.cols(),
        }
    }

    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        self.solver.solve(b).map(|xt| xt[..self.x_len].to_vec())
    }

    pub fn solve_with(&self, b: &[BigInt], free: &mut dyn FnMut() -> BigInt) -> Option<Vec<BigInt>> {
        self.solver
            .solve_with(b, free)
            .map(|xt| xt[..self.x_len].to_vec())
    }
}
