//! The snake lemma in its generalized form: a commutative diagram with exact
//! rows (no injectivity or surjectivity assumed at the row ends) yields a
//! ten-term exact sequence
//!
//! ```text
//! 0 → ker f → ker(f'∘α) → ker β → ker γ ∩ im g
//!   →δ→ A'/(im α + ker f') → coker β → coker(γ∘g) → coker g' → 0
//! ```
//!
//! together with the classical specialization, the kernel-cokernel sequence
//! of a composite, and Bass's exact ring.

mod classical;
mod connecting;
mod ring;
mod sequence;

pub use classical::{classical_specialization, SpecializationReport, CLASSICAL_TERM_NAMES};
pub use connecting::{connecting_hom, connecting_hom_with, ConnectingHom};
pub use ring::{exact_ring, ring_lemma, ExactRing, RING_TERM_NAMES};
pub use sequence::ExactSequence;

use crate::abgroup::{induced_hom, FpAbGroup, Hom, QuotObject, Side, SubObject};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Names the failing constraint for reporting.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("diagram shape error: {0}")]
    Shape(String),
    #[error("square {square} does not commute")]
    NotCommutative { square: usize },
    #[error("the {row} row is not exact")]
    RowNotExact { row: &'static str },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(&'static str),
    #[error("homomorphisms are not composable")]
    NotComposable,
}

/// A commutative ladder
///
/// ```text
/// a --f--> b --g--> c
/// |alpha   |beta    |gamma
/// v        v        v
/// a1 -f1-> b1 -g1-> c1
/// ```
///
/// with both rows exact at their middle terms.
#[derive(Clone, Debug)]
pub struct SnakeDiagram {
    pub a: FpAbGroup,
    pub b: FpAbGroup,
    pub c: FpAbGroup,
    pub a1: FpAbGroup,
    pub b1: FpAbGroup,
    pub c1: FpAbGroup,
    pub f: Hom,
    pub g: Hom,
    pub f1: Hom,
    pub g1: Hom,
    pub alpha: Hom,
    pub beta: Hom,
    pub gamma: Hom,
}

/// Witness that `validate` accepted the diagram.
#[derive(Clone, Debug)]
pub struct ValidatedSnake(SnakeDiagram);

impl ValidatedSnake {
    pub fn diagram(&self) -> &SnakeDiagram {
        &self.0
    }
}

fn expect_endpoints(
    h: &Hom,
    name: &str,
    src: &FpAbGroup,
    tgt: &FpAbGroup,
) -> Result<(), DiagramError> {
    if h.source() != src || h.target() != tgt {
        return Err(DiagramError::Shape(format!(
            "map {name} does not connect the declared groups"
        )));
    }
    Ok(())
}

/// Checks shape, commutativity of both squares, and exactness of both rows
/// at the middle term.
pub fn validate(d: SnakeDiagram) -> Result<ValidatedSnake, DiagramError> {
    expect_endpoints(&d.f, "f", &d.a, &d.b)?;
    expect_endpoints(&d.g, "g", &d.b, &d.c)?;
    expect_endpoints(&d.f1, "f1", &d.a1, &d.b1)?;
    expect_endpoints(&d.g1, "g1", &d.b1, &d.c1)?;
    expect_endpoints(&d.alpha, "alpha", &d.a, &d.a1)?;
    expect_endpoints(&d.beta, "beta", &d.b, &d.b1)?;
    expect_endpoints(&d.gamma, "gamma", &d.c, &d.c1)?;
    if d.f1.compose(&d.alpha) != d.beta.compose(&d.f) {
        return Err(DiagramError::NotCommutative { square: 1 });
    }
    if d.g1.compose(&d.beta) != d.gamma.compose(&d.g) {
        return Err(DiagramError::NotCommutative { square: 2 });
    }
    if d.f.image() != d.g.kernel_subgroup() {
        return Err(DiagramError::RowNotExact { row: "top" });
    }
    if d.f1.image() != d.g1.kernel_subgroup() {
        return Err(DiagramError::RowNotExact { row: "bottom" });
    }
    Ok(ValidatedSnake(d))
}

/// Fixed reporting names for the ten terms of the generalized sequence.
pub const SNAKE_TERM_NAMES: [&str; 10] = [
    "zero",
    "ker_f",
    "ker_f1_alpha",
    "ker_beta",
    "ker_gamma_meet_im_g",
    "a1_mod_im_alpha_plus_ker_f1",
    "coker_beta",
    "coker_gamma_g",
    "coker_g1",
    "zero",
];

/// The ten-term sequence along with the connecting map and the presented
/// objects of each nontrivial term.
#[derive(Clone, Debug)]
pub struct SnakeSequence {
    pub sequence: ExactSequence,
    pub delta: ConnectingHom,
    pub ker_f: SubObject,
    pub ker_f1_alpha: SubObject,
    pub ker_beta: SubObject,
    pub coker_beta: QuotObject,
    pub coker_gamma_g: QuotObject,
    pub coker_g1: QuotObject,
}

/// Builds the ten-term sequence. The maps are the subgroup inclusion
/// `ker f ⊆ ker(f'∘α)` (valid since f'α = βf), the maps induced by f and g
/// on kernels, δ, the maps induced by f' and g' on quotients, and the
/// quotient collapse `coker(γ∘g) ↠ coker g'` (valid since im(γ∘g) ⊆ im g').
pub fn snake_sequence(v: &ValidatedSnake) -> SnakeSequence {
    let d = v.diagram();
    let trivial = FpAbGroup::trivial();

    let ker_f = d.f.kernel();
    let ker_f1_alpha = d.f1.compose(&d.alpha).kernel();
    let ker_beta = d.beta.kernel();
    let delta = connecting_hom_with(v, &mut || BigInt::zero());
    let coker_beta = d.beta.cokernel();
    let coker_gamma_g = d.gamma.compose(&d.g).cokernel();
    let coker_g1 = d.g1.cokernel();

    let msg = "internal: snake sequence maps are induced on validated diagrams";
    let id_a = Hom::identity(&d.a);
    let id_c1 = Hom::identity(&d.c1);
    let m1 = induced_hom(&id_a, Side::Sub(&ker_f), Side::Sub(&ker_f1_alpha)).expect(msg);
    let m2 = induced_hom(&d.f, Side::Sub(&ker_f1_alpha), Side::Sub(&ker_beta)).expect(msg);
    let m3 = induced_hom(&d.g, Side::Sub(&ker_beta), Side::Sub(&delta.domain)).expect(msg);
    let m5 = induced_hom(&d.f1, Side::Quot(&delta.codomain), Side::Quot(&coker_beta)).expect(msg);
    let m6 = induced_hom(&d.g1, Side::Quot(&coker_beta), Side::Quot(&coker_gamma_g)).expect(msg);
    let m7 = induced_hom(&id_c1, Side::Quot(&coker_gamma_g), Side::Quot(&coker_g1)).expect(msg);

    let terms = vec![
        trivial.clone(),
        ker_f.group.clone(),
        ker_f1_alpha.group.clone(),
        ker_beta.group.clone(),
        delta.domain.group.clone(),
        delta.codomain.group.clone(),
        coker_beta.group.clone(),
        coker_gamma_g.group.clone(),
        coker_g1.group.clone(),
        trivial.clone(),
    ];
    let maps = vec![
        Hom::zero(trivial.clone(), ker_f.group.clone()),
        m1,
        m2,
        m3,
        delta.hom.clone(),
        m5,
        m6,
        m7,
        Hom::zero(coker_g1.group.clone(), trivial),
    ];
    SnakeSequence {
        sequence: ExactSequence::new(terms, maps),
        delta,
        ker_f,
        ker_f1_alpha,
        ker_beta,
        coker_beta,
        coker_gamma_g,
        coker_g1,
    }
}
