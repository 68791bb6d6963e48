//! Finitely presented abelian groups Z^n / column-span(R) and their
//! homomorphisms, with the kernel / image / cokernel / quotient calculus on
//! top of canonical lattices.

mod hom;
mod induced;
mod sub;

pub use hom::Hom;
pub use induced::{induced_hom, Side};
pub use sub::{quotient, QuotObject, SubObject, Subgroup};

use crate::linalg::{snf, IntMatrix, Lattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AbError {
    #[error("matrix shape {got_rows}x{got_cols} does not match expected {want_rows}x{want_cols}")]
    ShapeMismatch {
        want_rows: usize,
        want_cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("ill-defined homomorphism: relation column {column} maps outside the target relations")]
    IllDefined { column: usize },
    #[error("map does not induce a homomorphism on the chosen presentations: {reason}")]
    NotInduced { reason: String },
    #[error("homomorphisms are not composable")]
    NotComposable,
    #[error("homomorphism is not invertible")]
    NotInvertible,
}

/// A finitely presented abelian group Z^n / L, where L is the canonical
/// relation lattice. Invariant factors are computed at construction (no lazy
/// interior mutation), `1` factors dropped, one `0` per free rank, so two
/// groups are isomorphic iff their factor lists are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpAbGroup {
    n_gens: usize,
    relations: Lattice,
    invariant_factors: Vec<BigInt>,
}

impl FpAbGroup {
    /// Builds the group from relation columns given as a matrix (one
    /// relation per column, rows = generators).
    pub fn new(n_gens: usize, relations: &IntMatrix) -> Result<Self, AbError> {
        if relations.rows() != n_gens {
            return Err(AbError::ShapeMismatch {
                want_rows: n_gens,
                want_cols: relations.cols(),
                got_rows: relations.rows(),
                got_cols: relations.cols(),
            });
        }
        Ok(FpAbGroup::from_relation_lattice(Lattice::from_generators(
            relations,
        )))
    }

    pub fn from_relation_columns(n_gens: usize, cols: &[Vec<BigInt>]) -> Result<Self, AbError> {
        if let Some(bad) = cols.iter().find(|c| c.len() != n_gens) {
            return Err(AbError::ShapeMismatch {
                want_rows: n_gens,
                want_cols: cols.len(),
                got_rows: bad.len(),
                got_cols: cols.len(),
            });
        }
        Ok(FpAbGroup::from_relation_lattice(Lattice::from_columns(
            n_gens, cols,
        )))
    }

    pub fn from_relation_lattice(relations: Lattice) -> Self {
        let n_gens = relations.ambient_dim();
        let diag = snf(relations.basis()).diagonal();
        let mut invariant_factors: Vec<BigInt> =
            diag.into_iter().filter(|d| !d.is_one()).collect();
        for _ in relations.rank()..n_gens {
            invariant_factors.push(BigInt::zero());
        }
        FpAbGroup {
            n_gens,
            relations,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        FpAbGroup::from_relation_lattice(Lattice::zero(0))
    }

    pub fn free(n: usize) -> Self {
        FpAbGroup::from_relation_lattice(Lattice::zero(n))
    }

    pub fn cyclic(order: u64) -> Self {
        FpAbGroup::from_relation_lattice(Lattice::from_columns(1, &[vec![BigInt::from(order)]]))
    }

    pub fn direct_sum(&self, other: &FpAbGroup) -> FpAbGroup {
        let n = self.n_gens + other.n_gens;
        let a = self.relations.basis();
        let b = other.relations.basis();
        let gens = IntMatrix::from_fn(n, a.cols() + b.cols(), |i, j| {
            if i < self.n_gens && j < a.cols() {
                a.at(i, j).clone()
            } else if i >= self.n_gens && j >= a.cols() {
                b.at(i - self.n_gens, j - a.cols()).clone()
            } else {
                BigInt::zero()
            }
        });
        FpAbGroup::from_relation_lattice(Lattice::from_generators(&gens))
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn relations(&self) -> &Lattice {
        &self.relations
    }

    /// Nontrivial invariant factors followed by one `0` per free Z factor.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        let mut acc = BigInt::one();
        for d in &self.invariant_factors {
            if d.is_zero() {
                return None;
            }
            acc *= d;
        }
        Some(acc)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Isomorphism test by the fundamental theorem.
    pub fn is_isomorphic(&self, other: &FpAbGroup) -> bool {
        self.invariant_factors == other.invariant_factors
    }

    /// Canonical coset representative: each pivot coordinate of the relation
    /// basis is reduced into `[0, pivot)`.
    pub fn reduce(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.n_gens, "reduce: coordinate length mismatch");
        let basis = self.relations.basis();
        let mut x = coords.to_vec();
        for j in 0..basis.cols() {
            let pivot_row = (0..self.n_gens)
                .find(|&i| !basis.at(i, j).is_zero())
                .expect("relation basis columns are nonzero");
            let q = x[pivot_row].div_floor(basis.at(pivot_row, j));
            if !q.is_zero() {
                for (i, xi) in x.iter_mut().enumerate() {
                    let t = &q * basis.at(i, j);
                    *xi -= t;
                }
            }
        }
        x
    }

    pub fn elements_equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        assert_eq!(a.len(), self.n_gens);
        assert_eq!(b.len(), self.n_gens);
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.relations.contains(&diff)
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Element {
        assert_eq!(coords.len(), self.n_gens);
        Element {
            group: self.clone(),
            coords,
        }
    }
}

/// An element of a presented group, carried as a generator-coordinate vector.
#[derive(Clone, Debug)]
pub struct Element {
    pub group: FpAbGroup,
    pub coords: Vec<BigInt>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.group.elements_equal(&self.coords, &other.coords)
    }
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.group.relations().contains(&self.coords)
    }

    pub fn canonical(&self) -> Vec<BigInt> {
        self.group.reduce(&self.coords)
    }
}
