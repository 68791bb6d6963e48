//! Subgroups, quotients, and chosen presentations of both.
//!
//! A subgroup of Z^n / R is stored as its full preimage sublattice of Z^n
//! (always containing R), which makes sum, intersection, membership, and
//! equality canonical and decidable by HNF.

use super::hom::Hom;
use super::FpAbGroup;
use crate::linalg::{IntMatrix, Lattice, Solver};
use num_bigint::BigInt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    ambient: FpAbGroup,
    lattice: Lattice,
}

impl Subgroup {
    /// The stored lattice is the given one summed with the ambient
    /// relations, so the subgroup is well defined in the quotient.
    pub fn new(ambient: FpAbGroup, lattice: Lattice) -> Self {
        assert_eq!(
            lattice.ambient_dim(),
            ambient.n_gens(),
            "subgroup: lattice ambient dimension must match the group rank"
        );
        let lattice = lattice.sum(ambient.relations());
        Subgroup { ambient, lattice }
    }

    /// The zero subgroup (just the relations).
    pub fn zero(ambient: &FpAbGroup) -> Self {
        Subgroup::new(ambient.clone(), Lattice::zero(ambient.n_gens()))
    }

    pub fn whole(ambient: &FpAbGroup) -> Self {
        Subgroup::new(ambient.clone(), Lattice::full(ambient.n_gens()))
    }

    pub fn ambient(&self) -> &FpAbGroup {
        &self.ambient
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn sum(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(self.ambient, other.ambient, "subgroup sum: ambient mismatch");
        Subgroup {
            ambient: self.ambient.clone(),
            lattice: self.lattice.sum(&other.lattice),
        }
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(
            self.ambient, other.ambient,
            "subgroup intersect: ambient mismatch"
        );
        Subgroup {
            ambient: self.ambient.clone(),
            lattice: self.lattice.intersect(&other.lattice),
        }
    }

    pub fn contains_element(&self, coords: &[BigInt]) -> bool {
        self.lattice.contains(coords)
    }

    pub fn contains(&self, other: &Subgroup) -> bool {
        assert_eq!(self.ambient, other.ambient);
        self.lattice.contains_lattice(&other.lattice)
    }

    /// Presents the subgroup as a standalone group: one generator per
    /// lattice basis column, relations obtained by expressing each ambient
    /// relation in the basis. The inclusion hom maps presentation
    /// generators to their lattice columns.
    pub fn presented(&self) -> SubObject {
        let basis = self.lattice.basis().clone();
        let solver = Solver::new(&basis);
        let rel_cols: Vec<Vec<BigInt>> = self
            .ambient
            .relations()
            .basis()
            .columns()
            .map(|r| {
                solver
                    .solve(&r)
                    .expect("internal: ambient relations lie inside the subgroup lattice")
            })
            .collect();
        let group =
            FpAbGroup::from_relation_lattice(Lattice::from_columns(basis.cols(), &rel_cols));
        let inclusion = Hom::new(group.clone(), self.ambient.clone(), basis)
            .expect("internal: subgroup basis maps presentation relations into ambient relations");
        SubObject {
            subgroup: self.clone(),
            group,
            inclusion,
        }
    }
}

/// A subgroup together with a chosen presentation and its embedding.
#[derive(Clone, Debug)]
pub struct SubObject {
    pub subgroup: Subgroup,
    pub group: FpAbGroup,
    /// `group -> ambient`
    pub inclusion: Hom,
}

/// A quotient group together with its projection.
#[derive(Clone, Debug)]
pub struct QuotObject {
    pub group: FpAbGroup,
    /// `ambient -> group`
    pub projection: Hom,
}

/// Quotient of a group by a subgroup: same generators, relations extended by
/// the subgroup lattice. The projection is the identity on generators; its
/// kernel is exactly `s`.
pub fn quotient(g: &FpAbGroup, s: &Subgroup) -> QuotObject {
    assert_eq!(s.ambient(), g, "quotient: subgroup ambient mismatch");
    let group = FpAbGroup::from_relation_lattice(s.lattice().clone());
    let projection = Hom::new(g.clone(), group.clone(), IntMatrix::identity(g.n_gens()))
        .expect("internal: ambient relations are contained in the quotient relations");
    QuotObject { group, projection }
}
