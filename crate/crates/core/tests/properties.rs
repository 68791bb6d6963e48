//! Property tests for the algebraic laws the library is built on.

use chase_core::abgroup::{induced_hom, quotient, FpAbGroup, Hom, Side, Subgroup};
use chase_core::linalg::{kernel_lattice, snf, solve, IntMatrix, Lattice};
use chase_core::oracle::{gen_four, gen_hom_pair, gen_snake, GenConfig};
use chase_core::snake::{
    classical_specialization, connecting_hom, connecting_hom_with, exact_ring, ring_lemma,
    snake_sequence, validate,
};
use chase_core::four::{four_lemma, validate_four};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

fn arb_lattice(dim: usize, bound: i64) -> impl Strategy<Value = Lattice> {
    (0..=dim + 1).prop_flat_map(move |k| {
        proptest::collection::vec(-bound..=bound, dim * k).prop_map(move |v| {
            Lattice::from_generators(&IntMatrix::from_fn(dim, k, |i, j| BigInt::from(v[i * k + j])))
        })
    })
}

fn rank(m: &IntMatrix) -> usize {
    snf(m).rank()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_decomposition_is_sound(m in arb_matrix(6, 30)) {
        let s = snf(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.det().abs(), BigInt::one());
        prop_assert_eq!(s.v.det().abs(), BigInt::one());
        let diag = s.diagonal();
        for i in 0..diag.len() {
            prop_assert!(!diag[i].is_negative());
            if i + 1 < diag.len() {
                if diag[i].is_zero() {
                    prop_assert!(diag[i + 1].is_zero());
                } else {
                    prop_assert!(diag[i + 1].mod_floor(&diag[i]).is_zero());
                }
            }
        }
    }

    #[test]
    fn solve_round_trips_through_matrix_action(
        m in arb_matrix(5, 10),
        xs in proptest::collection::vec(-10i64..=10, 5),
    ) {
        let x: Vec<BigInt> = xs.iter().take(m.cols()).map(|&v| BigInt::from(v)).collect();
        if x.len() == m.cols() {
            let b = m.mul_vec(&x);
            let y = solve(&m, &b).expect("b is in the column span by construction");
            prop_assert_eq!(m.mul_vec(&y), b);
        }
    }

    #[test]
    fn kernel_lattice_annihilates_and_has_complementary_rank(m in arb_matrix(6, 20)) {
        let k = kernel_lattice(&m);
        for col in k.basis().columns() {
            prop_assert!(m.mul_vec(&col).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(k.rank() + rank(&m), m.cols());
    }

    /// Any generating set of the same span canonicalizes to the same basis.
    #[test]
    fn hnf_basis_is_canonical_per_span(
        l in arb_lattice(4, 12),
        coeffs in proptest::collection::vec(-5i64..=5, 24),
        seed in 0u64..1_000,
    ) {
        let basis = l.basis().clone();
        let k = basis.cols();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // shuffle the basis columns and append random combinations of them
        let mut order: Vec<usize> = (0..k).collect();
        for i in (1..k).rev() {
            let j = rng.random_range(0..=i);
            order.swap(i, j);
        }
        let mut gens: Vec<Vec<BigInt>> = order.iter().map(|&j| basis.col(j)).collect();
        for chunk in coeffs.chunks(k.max(1)).take(4) {
            let mut v = vec![BigInt::zero(); 4];
            for (j, &c) in chunk.iter().enumerate().take(k) {
                for (vi, b) in v.iter_mut().zip(basis.col(j)) {
                    *vi += BigInt::from(c) * b;
                }
            }
            gens.push(v);
        }
        let rebuilt = Lattice::from_columns(4, &gens);
        prop_assert_eq!(rebuilt, l);
    }

    /// Canonical coset representatives are idempotent and respect equality.
    #[test]
    fn reduce_is_idempotent_and_sound(seed in 0u64..10_000) {
        let (h, _) = gen_hom_pair(&GenConfig::new(seed)).unwrap();
        let g = h.source().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51_7e_ed);
        let x: Vec<BigInt> = (0..g.n_gens())
            .map(|_| BigInt::from(rng.random_range(-40i64..=40)))
            .collect();
        let r = g.reduce(&x);
        prop_assert_eq!(g.reduce(&r), r.clone());
        prop_assert!(g.elements_equal(&x, &r));
        // adding any relation vector does not change the representative
        if g.relations().rank() > 0 {
            let rel = g.relations().basis().col(0);
            let shifted: Vec<BigInt> = x.iter().zip(&rel).map(|(a, b)| a + b).collect();
            prop_assert_eq!(g.reduce(&shifted), r);
        }
    }

    #[test]
    fn lattice_algebra_laws(
        a in arb_lattice(4, 12),
        b in arb_lattice(4, 12),
        c in arb_lattice(4, 12),
    ) {
        // commutativity and idempotence as canonical values
        prop_assert_eq!(a.sum(&b), b.sum(&a));
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        prop_assert_eq!(a.sum(&a), a.clone());
        prop_assert_eq!(a.intersect(&a), a.clone());
        // associativity
        prop_assert_eq!(a.sum(&b).sum(&c), a.sum(&b.sum(&c)));
        prop_assert_eq!(a.intersect(&b).intersect(&c), a.intersect(&b.intersect(&c)));
        // containments
        let meet = a.intersect(&b);
        prop_assert!(a.contains_lattice(&meet));
        prop_assert!(b.contains_lattice(&meet));
        prop_assert!(a.sum(&b).contains_lattice(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// h ∘ ker-inclusion == 0, coker-projection ∘ h == 0, and
    /// image(h) == kernel(cokernel-projection) as subgroups.
    #[test]
    fn kernel_image_cokernel_triangle(seed in 0u64..10_000) {
        let (alpha, _) = gen_hom_pair(&GenConfig::new(seed)).unwrap();
        let k = alpha.kernel();
        prop_assert!(alpha.compose(&k.inclusion).is_zero_hom());
        let c = alpha.cokernel();
        prop_assert!(c.projection.compose(&alpha).is_zero_hom());
        prop_assert_eq!(alpha.image(), c.projection.kernel_subgroup());
    }

    /// source/kernel ≅ image, by invariant factors.
    #[test]
    fn first_isomorphism_theorem(seed in 0u64..10_000) {
        let (alpha, _) = gen_hom_pair(&GenConfig::new(seed)).unwrap();
        let q = quotient(alpha.source(), &alpha.kernel_subgroup());
        let im = alpha.image().presented();
        prop_assert_eq!(q.group.invariant_factors(), im.group.invariant_factors());
    }

    /// |source| == |kernel| * |image| for finite groups.
    #[test]
    fn order_bookkeeping(seed in 0u64..10_000) {
        let (alpha, _) = gen_hom_pair(&GenConfig::new(seed)).unwrap();
        let src_order = alpha.source().order();
        let ker_order = alpha.kernel().group.order();
        let im_order = alpha.image().presented().group.order();
        if let (Some(s), Some(k), Some(i)) = (src_order, ker_order, im_order) {
            prop_assert_eq!(s, k * i);
        }
    }

    /// Inducing the identity gives the identity; inducing a composite gives
    /// the composite of the induced maps, on subgroup and quotient chains.
    #[test]
    fn induced_hom_is_functorial(seed in 0u64..10_000) {
        let (f, g) = gen_hom_pair(&GenConfig::new(seed)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
        let k = rng.random_range(0..=2usize);
        let cols: Vec<Vec<BigInt>> = (0..k)
            .map(|_| {
                (0..f.source().n_gens())
                    .map(|_| BigInt::from(rng.random_range(-4i64..=4)))
                    .collect()
            })
            .collect();
        let s_a = Subgroup::new(
            f.source().clone(),
            Lattice::from_columns(f.source().n_gens(), &cols),
        );
        let s_b = f.pushforward(&s_a);
        let s_c = g.pushforward(&s_b);
        let pa = s_a.presented();
        let pb = s_b.presented();
        let pc = s_c.presented();

        // identity induces identity
        let ida = induced_hom(&Hom::identity(f.source()), Side::Sub(&pa), Side::Sub(&pa)).unwrap();
        prop_assert!(ida == Hom::identity(&pa.group));

        // composite on subgroup presentations
        let fi = induced_hom(&f, Side::Sub(&pa), Side::Sub(&pb)).unwrap();
        let gi = induced_hom(&g, Side::Sub(&pb), Side::Sub(&pc)).unwrap();
        let gf = g.compose(&f);
        let gfi = induced_hom(&gf, Side::Sub(&pa), Side::Sub(&pc)).unwrap();
        prop_assert!(gi.compose(&fi) == gfi);

        // composite on quotient presentations
        let qa = quotient(f.source(), &s_a);
        let qb = quotient(f.target(), &s_b);
        let qc = quotient(g.target(), &s_c);
        let fq = induced_hom(&f, Side::Quot(&qa), Side::Quot(&qb)).unwrap();
        let gq = induced_hom(&g, Side::Quot(&qb), Side::Quot(&qc)).unwrap();
        let gfq = induced_hom(&gf, Side::Quot(&qa), Side::Quot(&qc)).unwrap();
        prop_assert!(gq.compose(&fq) == gfq);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Machine-checked statement of the generalized lemma on random inputs.
    #[test]
    fn snake_sequence_is_exact_on_generated_diagrams(seed in 0u64..100_000) {
        let d = gen_snake(&GenConfig::new(seed)).unwrap();
        let v = validate(d).unwrap();
        let s = snake_sequence(&v);
        prop_assert!(s.sequence.is_exact(), "certificate: {:?}", s.sequence.certificate());
    }

    /// δ does not depend on the solver witnesses used in its two lifts.
    #[test]
    fn delta_is_lift_independent(seed in 0u64..100_000) {
        let d = gen_snake(&GenConfig::new(seed)).unwrap();
        let v = validate(d).unwrap();
        let base = connecting_hom(&v);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31));
        for _ in 0..3 {
            let alt = connecting_hom_with(&v, &mut || BigInt::from(rng.random_range(-7i64..=7)));
            prop_assert!(alt.hom == base.hom);
        }
    }

    /// The specialization identifications hold whenever the hypotheses do.
    #[test]
    fn classical_specialization_identifications(seed in 0u64..100_000) {
        let d = gen_snake(&GenConfig::new(seed)).unwrap();
        let v = validate(d).unwrap();
        let rep = classical_specialization(&v);
        for flag in [
            rep.ker_collapse,
            rep.coker_alpha_identification,
            rep.coker_collapse,
            rep.delta_domain_is_ker_gamma,
        ]
        .into_iter()
        .flatten()
        {
            prop_assert!(flag);
        }
        if let Some(classical) = &rep.classical {
            prop_assert!(classical.is_exact());
        }
    }

    /// Exactness of the ring plus the alternating order identity
    /// |ker βα| · |coker α| · |coker β| == |ker α| · |ker β| · |coker βα|.
    #[test]
    fn ring_lemma_exactness_and_order_identity(seed in 0u64..100_000) {
        let (alpha, beta) = gen_hom_pair(&GenConfig::new(seed)).unwrap();
        let seq = ring_lemma(&alpha, &beta).unwrap();
        prop_assert!(seq.is_exact());
        let orders: Option<Vec<BigInt>> =
            seq.terms()[1..7].iter().map(FpAbGroup::order).collect();
        if let Some(o) = orders {
            prop_assert_eq!(&o[1] * &o[3] * &o[5], &o[0] * &o[2] * &o[4]);
        }
        let ring = exact_ring(&alpha, &beta).unwrap();
        prop_assert!(ring.all_checks_pass());
    }

    /// All three 4-lemma sequences and the proof-trace identities; in the
    /// finite case exactness of (1) forces |ker β| = |ker β ∩ ker g|·|ker γ|.
    #[test]
    fn four_lemma_sequences_are_exact(seed in 0u64..100_000) {
        let d = gen_four(&GenConfig::new(seed)).unwrap();
        let v = validate_four(d).unwrap();
        let r = four_lemma(&v);
        prop_assert!(r.all_checks_pass());
        let orders: Option<Vec<BigInt>> = r.es1.terms()[1..4].iter().map(FpAbGroup::order).collect();
        if let Some(o) = orders {
            prop_assert_eq!(&o[0] * &o[2], o[1].clone());
        }
    }
}

/// Conjugating a diagram by generator permutations conjugates δ by the
/// induced isomorphisms on its domain and codomain presentations.
#[test]
fn delta_commutes_with_generator_permutation() {
    for seed in [3u64, 17, 99, 2024] {
        let d = gen_snake(&GenConfig::new(seed)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcdef);
        let perm_hom = |g: &FpAbGroup, rng: &mut ChaCha8Rng| -> (FpAbGroup, IntMatrix) {
            let n = g.n_gens();
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.random_range(0..=i);
                p.swap(i, j);
            }
            let pm = IntMatrix::from_fn(n, n, |i, j| BigInt::from(u8::from(p[j] == i)));
            let relabeled =
                FpAbGroup::from_relation_lattice(Lattice::from_generators(&pm.mul(g.relations().basis())));
            (relabeled, pm)
        };
        let (a2, pa) = perm_hom(&d.a, &mut rng);
        let (b2, pb) = perm_hom(&d.b, &mut rng);
        let (c2, pc) = perm_hom(&d.c, &mut rng);
        let (a12, pa1) = perm_hom(&d.a1, &mut rng);
        let (b12, pb1) = perm_hom(&d.b1, &mut rng);
        let (c12, pc1) = perm_hom(&d.c1, &mut rng);
        let conj = |m: &IntMatrix, left: &IntMatrix, right: &IntMatrix| {
            left.mul(m).mul(&right.transpose())
        };
        let d2 = chase_core::snake::SnakeDiagram {
            f: Hom::new(a2.clone(), b2.clone(), conj(d.f.matrix(), &pb, &pa)).unwrap(),
            g: Hom::new(b2.clone(), c2.clone(), conj(d.g.matrix(), &pc, &pb)).unwrap(),
            f1: Hom::new(a12.clone(), b12.clone(), conj(d.f1.matrix(), &pb1, &pa1)).unwrap(),
            g1: Hom::new(b12.clone(), c12.clone(), conj(d.g1.matrix(), &pc1, &pb1)).unwrap(),
            alpha: Hom::new(a2.clone(), a12.clone(), conj(d.alpha.matrix(), &pa1, &pa)).unwrap(),
            beta: Hom::new(b2.clone(), b12.clone(), conj(d.beta.matrix(), &pb1, &pb)).unwrap(),
            gamma: Hom::new(c2.clone(), c12.clone(), conj(d.gamma.matrix(), &pc1, &pc)).unwrap(),
            a: a2.clone(),
            b: b2,
            c: c2.clone(),
            a1: a12.clone(),
            b1: b12,
            c1: c12,
        };
        let v1 = validate(d.clone()).unwrap();
        let v2 = validate(d2).unwrap();
        let delta1 = connecting_hom(&v1);
        let delta2 = connecting_hom(&v2);
        // comparison isomorphisms induced by the relabelings
        let pc_hom = Hom::new(d.c.clone(), c2, pc).unwrap();
        let pa1_hom = Hom::new(d.a1.clone(), a12, pa1).unwrap();
        let dom_cmp =
            induced_hom(&pc_hom, Side::Sub(&delta1.domain), Side::Sub(&delta2.domain)).unwrap();
        let cod_cmp = induced_hom(
            &pa1_hom,
            Side::Quot(&delta1.codomain),
            Side::Quot(&delta2.codomain),
        )
        .unwrap();
        assert!(dom_cmp.is_injective() && dom_cmp.is_surjective());
        assert!(cod_cmp.is_injective() && cod_cmp.is_surjective());
        assert!(delta2.hom.compose(&dom_cmp) == cod_cmp.compose(&delta1.hom), "seed {seed}");
    }
}
