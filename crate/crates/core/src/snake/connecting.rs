//! Construction of the connecting homomorphism
//! `δ : ker γ ∩ im g -> A' / (im α + ker f')` by lift, push, lift.

use super::ValidatedSnake;
use crate::abgroup::{quotient, Hom, QuotObject, SubObject};
use crate::linalg::{IntMatrix, ModSolver};
use num_bigint::BigInt;
use num_traits::Zero;

/// The connecting map with explicit presentations on both ends: the domain
/// is a presented subgroup of C with its inclusion, the codomain a quotient
/// of A' with its projection, so callers can relate δ to ambient
/// coordinates.
#[derive(Clone, Debug)]
pub struct ConnectingHom {
    pub hom: Hom,
    pub domain: SubObject,
    pub codomain: QuotObject,
}

/// Canonical-witness connecting map (all free lift coordinates zero).
pub fn connecting_hom(d: &ValidatedSnake) -> ConnectingHom {
    connecting_hom_with(d, &mut || BigInt::zero())
}

/// Connecting map with caller-chosen free coordinates in the two lifting
/// steps. The result is independent of those choices; that invariance is the
/// well-definedness content of the construction and is hard-asserted here.
pub fn connecting_hom_with(v: &ValidatedSnake, free: &mut dyn FnMut() -> BigInt) -> ConnectingHom {
    let d = v.diagram();
    let domain = d
        .gamma
        .kernel_subgroup()
        .intersect(&d.g.image())
        .presented();
    let codomain_sub = d.alpha.image().sum(&d.f1.kernel_subgroup());
    let codomain = quotient(&d.a1, &codomain_sub);

    let lift_g = ModSolver::new(d.g.matrix(), d.c.relations());
    let lift_f1 = ModSolver::new(d.f1.matrix(), d.b1.relations());
    let ker_g1 = d.g1.kernel_subgroup();

    let mut cols = Vec::with_capacity(domain.group.n_gens());
    for j in 0..domain.group.n_gens() {
        let c = domain.inclusion.matrix().col(j);
        // (i) lift through g; solvable because c lies in the image lattice
        let b = lift_g
            .solve_with(&c, free)
            .expect("internal: a domain generator of δ must lift through g");
        // (ii) push down the middle vertical
        let b1 = d.beta.apply(&b);
        assert!(
            ker_g1.contains_element(&b1),
            "internal: β of a g-lift of ker γ ∩ im g must lie in ker g'"
        );
        // (iii) lift through f'; solvable by exactness of the bottom row
        let a1 = lift_f1
            .solve_with(&b1, free)
            .expect("internal: a ker g' element must lift through f'");
        cols.push(a1);
    }
    let matrix = IntMatrix::from_columns(d.a1.n_gens(), &cols);
    let hom = Hom::new(domain.group.clone(), codomain.group.clone(), matrix)
        .expect("internal: the connecting map must be well defined on validated diagrams");
    ConnectingHom {
        hom,
        domain,
        codomain,
    }
}
