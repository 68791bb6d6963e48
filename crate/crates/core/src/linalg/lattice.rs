//! Integer lattices (subgroups of Z^n) with a canonical column Hermite
//! normal form basis.
//!
//! The HNF convention is fixed once for the whole crate: column style, pivot
//! rows strictly increasing, pivots positive, and in every pivot row the
//! entries in columns left of the pivot reduced into `[0, pivot)`. Two
//! lattices are equal iff their canonical bases are entrywise equal, so
//! lattice equality, and everything built on it, is plain `==`.

use super::matrix::{div_round, IntMatrix};
use super::solve::Solver;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Result of column reduction: `input * transform == reduced`, where the
/// first `rank` columns of `reduced` are the canonical basis and the rest
/// are zero.
pub(crate) struct ColumnEchelon {
    pub reduced: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
}

pub(crate) fn column_echelon(m: &IntMatrix) -> ColumnEchelon {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut v = IntMatrix::identity(cols);
    let mut c = 0;
    for r in 0..rows {
        if c == cols {
            break;
        }
        if (c..cols).all(|j| h.at(r, j).is_zero()) {
            continue;
        }
        loop {
            let jmin = (c..cols)
                .filter(|&j| !h.at(r, j).is_zero())
                .min_by_key(|&j| h.at(r, j).abs())
                .expect("row has a nonzero entry");
            h.swap_cols(c, jmin);
            v.swap_cols(c, jmin);
            let mut clean = true;
            for j in c + 1..cols {
                if h.at(r, j).is_zero() {
                    continue;
                }
                let q = div_round(h.at(r, j), h.at(r, c));
                if !q.is_zero() {
                    let nq = -q;
                    h.add_mul_col(j, c, &nq);
                    v.add_mul_col(j, c, &nq);
                }
                if !h.at(r, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.at(r, c).is_negative() {
            h.negate_col(c);
            v.negate_col(c);
        }
        // reduce the pivot row entries left of the pivot into [0, pivot)
        for j in 0..c {
            let q = h.at(r, j).div_floor(h.at(r, c));
            if !q.is_zero() {
                let nq = -q;
                h.add_mul_col(j, c, &nq);
                v.add_mul_col(j, c, &nq);
            }
        }
        c += 1;
    }
    ColumnEchelon {
        reduced: h,
        transform: v,
        rank: c,
    }
}

/// A sublattice of Z^n, canonically presented. The basis matrix is
/// `ambient_dim x rank` in column HNF, so equality of lattices is structural
/// equality of this type.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// Lattice spanned by the columns of `gens` (ambient dimension is the
    /// row count). Dependent and zero generators are fine.
    pub fn from_generators(gens: &IntMatrix) -> Self {
        let ech = column_echelon(gens);
        Lattice {
            ambient_dim: gens.rows(),
            basis: ech.reduced.col_range(0, ech.rank),
        }
    }

    pub fn from_columns(ambient_dim: usize, cols: &[Vec<BigInt>]) -> Self {
        Lattice::from_generators(&IntMatrix::from_columns(ambient_dim, cols))
    }

    /// The zero lattice in Z^dim.
    pub fn zero(dim: usize) -> Self {
        Lattice {
            ambient_dim: dim,
            basis: IntMatrix::zero(dim, 0),
        }
    }

    /// All of Z^dim.
    pub fn full(dim: usize) -> Self {
        Lattice {
            ambient_dim: dim,
            basis: IntMatrix::identity(dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.basis == IntMatrix::identity(self.ambient_dim)
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "lattice sum: ambient dimension mismatch"
        );
        Lattice::from_generators(&self.basis.hstack(&other.basis))
    }

    /// Intersection via the kernel of `[basis_a | -basis_b]` projected onto
    /// the `a` coordinates.
    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "lattice intersect: ambient dimension mismatch"
        );
        let block = self.basis.hstack(&other.basis.neg());
        let ker = kernel_lattice(&block);
        let a_part = ker.basis().row_range(0, self.basis.cols());
        Lattice::from_generators(&self.basis.mul(&a_part))
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(
            v.len(),
            self.ambient_dim,
            "lattice contains: vector length mismatch"
        );
        Solver::new(&self.basis).solve(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let solver = Solver::new(&self.basis);
        other.basis.columns().all(|c| solver.solve(&c).is_some())
    }
}

/// Canonical basis of `{x : m*x == 0}`.
pub fn kernel_lattice(m: &IntMatrix) -> Lattice {
    let ech = column_echelon(m);
    let ker_gens = ech.transform.col_range(ech.rank, m.cols());
    Lattice::from_generators(&ker_gens)
}
