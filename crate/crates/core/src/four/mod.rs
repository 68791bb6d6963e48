//! The 4-lemma: for a commutative ladder with exact rows
//!
//! ```text
//! a --f--> b --g--> c --h--> d
//! |alpha   |beta    |gamma   |delta
//! v        v        v        v
//! a1 -f1-> b1 -g1-> c1 -h1-> d1
//! ```
//!
//! with `alpha` surjective and `delta` injective, the short sequences
//!
//! ```text
//! (1) 0 → ker β ∩ ker g → ker β →g*→ ker γ → 0
//! (2) 0 → coker β →g'*→ coker γ → C'/(im γ + im g') → 0
//! (3) 0 → ker g →ι→ ker(g'∘β) →ĝ→ ker γ → 0
//! ```
//!
//! are exact, and `ker γ = g(ker β)`, `im β = g'⁻¹(im γ)`. Sequence (3)
//! comes from the snake construction on the last two squares; (1) comes from
//! the kernel-cokernel ring of `(ι, β̂)`; (2) is computed directly.

use crate::abgroup::{induced_hom, quotient, FpAbGroup, Hom, Side, SubObject, Subgroup};
use crate::linalg::Lattice;
use crate::snake::{
    ring_lemma, snake_sequence, validate, DiagramError, ExactSequence, SnakeDiagram,
};

#[derive(Clone, Debug)]
pub struct FourDiagram {
    pub a: FpAbGroup,
    pub b: FpAbGroup,
    pub c: FpAbGroup,
    pub d: FpAbGroup,
    pub a1: FpAbGroup,
    pub b1: FpAbGroup,
    pub c1: FpAbGroup,
    pub d1: FpAbGroup,
    pub f: Hom,
    pub g: Hom,
    pub h: Hom,
    pub f1: Hom,
    pub g1: Hom,
    pub h1: Hom,
    pub alpha: Hom,
    pub beta: Hom,
    pub gamma: Hom,
    pub delta: Hom,
}

#[derive(Clone, Debug)]
pub struct ValidatedFour(FourDiagram);

impl ValidatedFour {
    pub fn diagram(&self) -> &FourDiagram {
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

/// Checks shape, the three squares, exactness of both rows at their two
/// interior positions, and the two hypotheses.
pub fn validate_four(d: FourDiagram) -> Result<ValidatedFour, DiagramError> {
    expect_endpoints(&d.f, "f", &d.a, &d.b)?;
    expect_endpoints(&d.g, "g", &d.b, &d.c)?;
    expect_endpoints(&d.h, "h", &d.c, &d.d)?;
    expect_endpoints(&d.f1, "f1", &d.a1, &d.b1)?;
    expect_endpoints(&d.g1, "g1", &d.b1, &d.c1)?;
    expect_endpoints(&d.h1, "h1", &d.c1, &d.d1)?;
    expect_endpoints(&d.alpha, "alpha", &d.a, &d.a1)?;
    expect_endpoints(&d.beta, "beta", &d.b, &d.b1)?;
    expect_endpoints(&d.gamma, "gamma", &d.c, &d.c1)?;
    expect_endpoints(&d.delta, "delta", &d.d, &d.d1)?;
    if d.f1.compose(&d.alpha) != d.beta.compose(&d.f) {
        return Err(DiagramError::NotCommutative { square: 1 });
    }
    if d.g1.compose(&d.beta) != d.gamma.compose(&d.g) {
        return Err(DiagramError::NotCommutative { square: 2 });
    }
    if d.h1.compose(&d.gamma) != d.delta.compose(&d.h) {
        return Err(DiagramError::NotCommutative { square: 3 });
    }
    if d.f.image() != d.g.kernel_subgroup() || d.g.image() != d.h.kernel_subgroup() {
        return Err(DiagramError::RowNotExact { row: "top" });
    }
    if d.f1.image() != d.g1.kernel_subgroup() || d.g1.image() != d.h1.kernel_subgroup() {
        return Err(DiagramError::RowNotExact { row: "bottom" });
    }
    if !d.alpha.is_surjective() {
        return Err(DiagramError::HypothesisFailed("alpha-not-surjective"));
    }
    if !d.delta.is_injective() {
        return Err(DiagramError::HypothesisFailed("delta-not-injective"));
    }
    Ok(ValidatedFour(d))
}

/// The proof-side maps and the identities the proof relies on.
#[derive(Clone, Debug)]
pub struct ProofTrace {
    /// `ι: ker g → ker(g'∘β)`, the subgroup inclusion.
    pub iota: Hom,
    /// `ĝ: ker(g'∘β) → ker γ`, induced by g.
    pub g_hat: Hom,
    /// `β̂: ker(g'∘β) → ker g'`, induced by β.
    pub beta_hat: Hom,
    /// The kernel-cokernel ring of `(ι, β̂)`.
    pub ring: ExactSequence,
    /// `β(ker g) == ker g'` as subgroups of B' (uses surjectivity of α).
    pub beta_ker_g_equals_ker_g1: bool,
    /// `ker ι` is trivial.
    pub ker_iota_trivial: bool,
    /// `coker(β̂∘ι)` is trivial.
    pub coker_beta_hat_iota_trivial: bool,
    /// `ĝ ∘ ι` is the zero hom.
    pub g_hat_iota_zero: bool,
    /// `β̂` is the restriction of β: the inclusions intertwine β̂ with β.
    pub beta_hat_is_restriction: bool,
}

#[derive(Clone, Debug)]
pub struct FourLemmaResult {
    /// `0 → ker β ∩ ker g → ker β → ker γ → 0`
    pub es1: ExactSequence,
    /// `0 → coker β → coker γ → C'/(im γ + im g') → 0`
    pub es2: ExactSequence,
    /// `0 → ker g → ker(g'∘β) → ker γ → 0`
    pub esr: ExactSequence,
    pub proof_trace: ProofTrace,
    /// `g(ker β) == ker γ` as canonical lattices.
    pub ker_gamma_is_g_of_ker_beta: bool,
    /// `g'⁻¹(im γ) == im β` as canonical lattices.
    pub im_beta_is_preimage_of_im_gamma: bool,
    /// es1's maps agree with the maps directly induced on kernels.
    pub es1_maps_match_induced: bool,
}

pub const ES1_TERM_NAMES: [&str; 5] = [
    "zero",
    "ker_beta_meet_ker_g",
    "ker_beta",
    "ker_gamma",
    "zero",
];
pub const ES2_TERM_NAMES: [&str; 5] = [
    "zero",
    "coker_beta",
    "coker_gamma",
    "c1_mod_im_gamma_plus_im_g1",
    "zero",
];
pub const ESR_TERM_NAMES: [&str; 5] = ["zero", "ker_g", "ker_g1_beta", "ker_gamma", "zero"];

/// Rebases a presented subgroup of a presented subgroup to the outer ambient
/// group by composing the inclusions.
fn rebase(inner: &SubObject, outer_inclusion: &Hom) -> SubObject {
    let inclusion = outer_inclusion.compose(&inner.inclusion);
    let ambient = outer_inclusion.target().clone();
    let subgroup = Subgroup::new(
        ambient,
        Lattice::from_generators(inclusion.matrix()),
    );
    SubObject {
        subgroup,
        group: inner.group.clone(),
        inclusion,
    }
}

pub fn four_lemma(v: &ValidatedFour) -> FourLemmaResult {
    let d = v.diagram();
    let trivial = FpAbGroup::trivial();

    // Sequence (3): snake construction on squares 2 and 3.
    let sub_snake = SnakeDiagram {
        a: d.b.clone(),
        b: d.c.clone(),
        c: d.d.clone(),
        a1: d.b1.clone(),
        b1: d.c1.clone(),
        c1: d.d1.clone(),
        f: d.g.clone(),
        g: d.h.clone(),
        f1: d.g1.clone(),
        g1: d.h1.clone(),
        alpha: d.beta.clone(),
        beta: d.gamma.clone(),
        gamma: d.delta.clone(),
    };
    let vsub = validate(sub_snake)
        .expect("internal: squares 2 and 3 of a validated 4-diagram form a valid ladder");
    let s = snake_sequence(&vsub);
    // With δ injective the fourth term ker δ ∩ im h vanishes, closing (3).
    assert!(
        s.sequence.terms()[4].is_trivial(),
        "internal: ker δ = 0 must close the kernel row"
    );
    let ker_g = s.ker_f.clone();
    let ker_g1_beta = s.ker_f1_alpha.clone();
    let ker_gamma = s.ker_beta.clone();
    let iota = s.sequence.maps()[1].clone();
    let g_hat = s.sequence.maps()[2].clone();
    let esr = ExactSequence::new(
        vec![
            trivial.clone(),
            ker_g.group.clone(),
            ker_g1_beta.group.clone(),
            ker_gamma.group.clone(),
            trivial.clone(),
        ],
        vec![
            Hom::zero(trivial.clone(), ker_g.group.clone()),
            iota.clone(),
            g_hat.clone(),
            Hom::zero(ker_gamma.group.clone(), trivial.clone()),
        ],
    );

    // β̂ and the proof identities.
    let ker_g1 = d.g1.kernel();
    let beta_hat = induced_hom(&d.beta, Side::Sub(&ker_g1_beta), Side::Sub(&ker_g1))
        .expect("internal: β maps ker(g'∘β) into ker g'");
    let beta_ker_g_equals_ker_g1 = d.beta.pushforward(&ker_g.subgroup) == ker_g1.subgroup;
    let beta_hat_is_restriction =
        ker_g1.inclusion.compose(&beta_hat) == d.beta.compose(&ker_g1_beta.inclusion);
    let g_hat_iota_zero = g_hat.compose(&iota).is_zero_hom();

    // The ring of (ι, β̂) collapses to (1) because ι is injective and β̂∘ι
    // is surjective.
    let beta_hat_iota = beta_hat.compose(&iota);
    let ring = ring_lemma(&iota, &beta_hat)
        .expect("internal: ι and β̂ are composable");
    let ker_iota_trivial = ring.terms()[1].is_trivial();
    let coker_beta_hat_iota_trivial = ring.terms()[5].is_trivial();

    // Comparison isomorphisms realizing the proof identifications.
    let ker_beta = d.beta.kernel();
    let p1 = d
        .beta
        .kernel_subgroup()
        .intersect(&d.g.kernel_subgroup())
        .presented();
    let k2 = rebase(&beta_hat_iota.kernel(), &ker_g.inclusion);
    let k3 = rebase(&beta_hat.kernel(), &ker_g1_beta.inclusion);
    let id_b = Hom::identity(&d.b);
    let msg = "internal: the proof identifications are isomorphisms on validated diagrams";
    let i1 = induced_hom(&id_b, Side::Sub(&p1), Side::Sub(&k2)).expect(msg);
    let i2 = induced_hom(&id_b, Side::Sub(&k3), Side::Sub(&ker_beta)).expect(msg);
    let coker_iota = iota.cokernel();
    let i3 = induced_hom(&g_hat, Side::Quot(&coker_iota), Side::Whole(&ker_gamma.group))
        .expect(msg);
    assert!(i1.is_injective() && i1.is_surjective(), "{msg}");
    assert!(i2.is_injective() && i2.is_surjective(), "{msg}");
    assert!(i3.is_injective() && i3.is_surjective(), "{msg}");

    let es1_m1 = i2.compose(&ring.maps()[2]).compose(&i1);
    let i2_inv = i2.inverse().expect(msg);
    let es1_m2 = i3.compose(&ring.maps()[3]).compose(&i2_inv);
    let es1 = ExactSequence::new(
        vec![
            trivial.clone(),
            p1.group.clone(),
            ker_beta.group.clone(),
            ker_gamma.group.clone(),
            trivial.clone(),
        ],
        vec![
            Hom::zero(trivial.clone(), p1.group.clone()),
            es1_m1.clone(),
            es1_m2.clone(),
            Hom::zero(ker_gamma.group.clone(), trivial.clone()),
        ],
    );
    let direct_m1 = induced_hom(&id_b, Side::Sub(&p1), Side::Sub(&ker_beta)).expect(msg);
    let direct_m2 = induced_hom(&d.g, Side::Sub(&ker_beta), Side::Sub(&ker_gamma)).expect(msg);
    let es1_maps_match_induced = es1_m1 == direct_m1 && es1_m2 == direct_m2;

    // Sequence (2), computed directly.
    let coker_beta = d.beta.cokernel();
    let coker_gamma = d.gamma.cokernel();
    let q2 = quotient(&d.c1, &d.gamma.image().sum(&d.g1.image()));
    let id_c1 = Hom::identity(&d.c1);
    let es2_m1 = induced_hom(&d.g1, Side::Quot(&coker_beta), Side::Quot(&coker_gamma))
        .expect("internal: g' respects im β ⊆ im γ");
    let es2_m2 = induced_hom(&id_c1, Side::Quot(&coker_gamma), Side::Quot(&q2))
        .expect("internal: im γ ⊆ im γ + im g'");
    let es2 = ExactSequence::new(
        vec![
            trivial.clone(),
            coker_beta.group.clone(),
            coker_gamma.group.clone(),
            q2.group.clone(),
            trivial.clone(),
        ],
        vec![
            Hom::zero(trivial.clone(), coker_beta.group.clone()),
            es2_m1,
            es2_m2,
            Hom::zero(q2.group.clone(), trivial.clone()),
        ],
    );

    // "In particular" facts at lattice level.
    let ker_gamma_is_g_of_ker_beta =
        d.g.pushforward(&ker_beta.subgroup) == d.gamma.kernel_subgroup();
    let im_beta_is_preimage_of_im_gamma = d.g1.preimage(&d.gamma.image()) == d.beta.image();

    FourLemmaResult {
        es1,
        es2,
        esr,
        proof_trace: ProofTrace {
            iota,
            g_hat,
            beta_hat,
            ring,
            beta_ker_g_equals_ker_g1,
            ker_iota_trivial,
            coker_beta_hat_iota_trivial,
            g_hat_iota_zero,
            beta_hat_is_restriction,
        },
        ker_gamma_is_g_of_ker_beta,
        im_beta_is_preimage_of_im_gamma,
        es1_maps_match_induced,
    }
}

impl FourLemmaResult {
    /// True when every sequence is exact and every proof identity holds.
    pub fn all_checks_pass(&self) -> bool {
        self.es1.is_exact()
            && self.es2.is_exact()
            && self.esr.is_exact()
            && self.proof_trace.ring.is_exact()
            && self.proof_trace.beta_ker_g_equals_ker_g1
            && self.proof_trace.ker_iota_trivial
            && self.proof_trace.coker_beta_hat_iota_trivial
            && self.proof_trace.g_hat_iota_zero
            && self.proof_trace.beta_hat_is_restriction
            && self.ker_gamma_is_g_of_ker_beta
            && self.im_beta_is_preimage_of_im_gamma
            && self.es1_maps_match_induced
    }
}
