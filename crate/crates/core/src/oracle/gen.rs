//! Seeded random generation of valid diagrams.
//!
//! Exact rows are produced constructively (cokernel plus padding) because
//! exactness is measure-zero under naive sampling. Verticals are sampled
//! from the integer solution lattice of the full commuting-and-well-defined
//! system, so every draw yields a valid diagram; the 4-lemma hypotheses are
//! obtained by resampling solution-lattice members, with a quotient-ladder
//! construction as an always-valid variant. Everything is deterministic per
//! seed.

use super::OracleError;
use crate::abgroup::{quotient, FpAbGroup, Hom, Subgroup};
use crate::four::{validate_four, FourDiagram};
use crate::linalg::{kernel_lattice, IntMatrix, Lattice};
use crate::snake::{validate, SnakeDiagram};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub seed: u64,
    pub max_gens: usize,
    pub entry_bound: i64,
    pub relation_bound: usize,
    pub resample_limit: usize,
}

impl GenConfig {
    pub fn new(seed: u64) -> Self {
        GenConfig {
            seed,
            max_gens: 4,
            entry_bound: 5,
            relation_bound: 6,
            resample_limit: 100,
        }
    }
}

fn rand_entry(rng: &mut ChaCha8Rng, bound: i64) -> BigInt {
    BigInt::from(rng.random_range(-bound..=bound))
}

fn random_group_sized(
    rng: &mut ChaCha8Rng,
    cfg: &GenConfig,
    gens_hi: usize,
    force_finite: bool,
) -> FpAbGroup {
    let n = if gens_hi == 0 {
        0
    } else {
        rng.random_range(0..=gens_hi)
    };
    let n_rel = rng.random_range(0..=cfg.relation_bound);
    let mut cols: Vec<Vec<BigInt>> = (0..n_rel)
        .map(|_| (0..n).map(|_| rand_entry(rng, cfg.entry_bound)).collect())
        .collect();
    if force_finite {
        // a full-rank diagonal block guarantees a finite group
        for i in 0..n {
            let d = rng.random_range(1..=cfg.entry_bound.max(2));
            let mut col = vec![BigInt::zero(); n];
            col[i] = BigInt::from(d);
            cols.push(col);
        }
    }
    FpAbGroup::from_relation_columns(n, &cols).expect("generated columns have the right length")
}

fn random_nontrivial_group(
    rng: &mut ChaCha8Rng,
    cfg: &GenConfig,
    gens_hi: usize,
    force_finite: bool,
) -> FpAbGroup {
    for _ in 0..20 {
        let g = random_group_sized(rng, cfg, gens_hi.max(1), force_finite);
        if !g.is_trivial() {
            return g;
        }
    }
    FpAbGroup::cyclic(2)
}

fn scaled(m: &IntMatrix, c: &BigInt) -> IntMatrix {
    IntMatrix::from_fn(m.rows(), m.cols(), |i, j| m.at(i, j) * c)
}

fn devec(t: usize, s: usize, v: &[BigInt]) -> IntMatrix {
    IntMatrix::from_fn(t, s, |i, j| v[j * t + i].clone())
}

/// Basis of the lattice of all well-defined hom matrices `src -> tgt`,
/// obtained from the kernel of the linearized constraint
/// `X * R_src ⊆ R_tgt` with one slack block per source relation.
fn hom_matrix_space(src: &FpAbGroup, tgt: &FpAbGroup) -> Vec<IntMatrix> {
    let s = src.n_gens();
    let t = tgt.n_gens();
    let rs = src.relations().basis();
    let rt = tgt.relations().basis();
    let r = rs.cols();
    let w = rt.cols();
    let total = t * s + w * r;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(t * r);
    for j in 0..r {
        for ti in 0..t {
            let mut row = vec![BigInt::zero(); total];
            for sc in 0..s {
                row[sc * t + ti] = rs.at(sc, j).clone();
            }
            for u in 0..w {
                row[t * s + j * w + u] = -rt.at(ti, u);
            }
            rows.push(row);
        }
    }
    let cons = if rows.is_empty() {
        IntMatrix::zero(0, total)
    } else {
        IntMatrix::from_rows(rows)
    };
    let ker = kernel_lattice(&cons);
    let proj = ker.basis().row_range(0, t * s);
    Lattice::from_generators(&proj)
        .basis()
        .columns()
        .map(|c| devec(t, s, &c))
        .collect()
}

fn random_hom(rng: &mut ChaCha8Rng, src: &FpAbGroup, tgt: &FpAbGroup) -> Hom {
    let basis = hom_matrix_space(src, tgt);
    let mut m = IntMatrix::zero(tgt.n_gens(), src.n_gens());
    for b in &basis {
        let c = rng.random_range(-2i64..=2);
        if c != 0 {
            m = m.add(&scaled(b, &BigInt::from(c)));
        }
    }
    Hom::new(src.clone(), tgt.clone(), m).expect("solution-lattice members are well defined")
}

/// Target `coker(f) ⊕ padding` with the map `inclusion ∘ projection`; the
/// row `src --f--> tgt --g--> coker⊕pad` is exact at `tgt` by construction,
/// and `g` is surjective exactly when the padding is trivial.
fn coker_plus_padding(
    rng: &mut ChaCha8Rng,
    cfg: &GenConfig,
    f: &Hom,
    force_finite: bool,
    p_trivial_pad: f64,
) -> (FpAbGroup, Hom) {
    let coker = f.cokernel();
    let pad = if cfg.max_gens == 0 || rng.random_bool(p_trivial_pad) {
        FpAbGroup::trivial()
    } else {
        random_nontrivial_group(rng, cfg, cfg.max_gens.min(2), force_finite)
    };
    let c = coker.group.direct_sum(&pad);
    let bg = f.target().n_gens();
    let m = IntMatrix::identity(bg).vstack(&IntMatrix::zero(pad.n_gens(), bg));
    let g = Hom::new(f.target().clone(), c.clone(), m)
        .expect("the quotient relations absorb the image");
    (c, g)
}

/// Basis of the joint solution lattice for vertical tuples `X_i: top[i] ->
/// bot[i]` that are well defined and make every square commute modulo the
/// bottom relations.
fn vertical_space(
    top: &[&FpAbGroup],
    bot: &[&FpAbGroup],
    top_maps: &[&Hom],
    bot_maps: &[&Hom],
) -> Vec<Vec<IntMatrix>> {
    let n = top.len();
    assert_eq!(bot.len(), n);
    assert_eq!(top_maps.len(), n - 1);
    assert_eq!(bot_maps.len(), n - 1);

    let a: Vec<usize> = top.iter().map(|g| g.n_gens()).collect();
    let b: Vec<usize> = bot.iter().map(|g| g.n_gens()).collect();
    let r: Vec<usize> = top.iter().map(|g| g.relations().basis().cols()).collect();
    let w: Vec<usize> = bot.iter().map(|g| g.relations().basis().cols()).collect();

    let mut x_off = vec![0usize; n];
    let mut off = 0;
    for i in 0..n {
        x_off[i] = off;
        off += b[i] * a[i];
    }
    let mut wd_off = vec![0usize; n];
    for i in 0..n {
        wd_off[i] = off;
        off += w[i] * r[i];
    }
    let mut sq_off = vec![0usize; n - 1];
    for q in 0..n - 1 {
        sq_off[q] = off;
        off += w[q + 1] * a[q];
    }
    let total = off;

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    // well-definedness: X_i * R_top_i ≡ 0 (mod R_bot_i)
    for i in 0..n {
        let rs = top[i].relations().basis();
        let rt = bot[i].relations().basis();
        for j in 0..r[i] {
            for ti in 0..b[i] {
                let mut row = vec![BigInt::zero(); total];
                for sc in 0..a[i] {
                    row[x_off[i] + sc * b[i] + ti] = rs.at(sc, j).clone();
                }
                for u in 0..w[i] {
                    row[wd_off[i] + j * w[i] + u] = -rt.at(ti, u);
                }
                rows.push(row);
            }
        }
    }
    // squares: bot_maps[q] ∘ X_q ≡ X_{q+1} ∘ top_maps[q] (mod R_bot_{q+1})
    for q in 0..n - 1 {
        let bm = bot_maps[q].matrix();
        let tm = top_maps[q].matrix();
        let rt = bot[q + 1].relations().basis();
        for s in 0..a[q] {
            for ti in 0..b[q + 1] {
                let mut row = vec![BigInt::zero(); total];
                for u in 0..b[q] {
                    row[x_off[q] + s * b[q] + u] = bm.at(ti, u).clone();
                }
                for u in 0..a[q + 1] {
                    let cur = &row[x_off[q + 1] + u * b[q + 1] + ti] - tm.at(u, s);
                    row[x_off[q + 1] + u * b[q + 1] + ti] = cur;
                }
                for u in 0..w[q + 1] {
                    row[sq_off[q] + s * w[q + 1] + u] = -rt.at(ti, u);
                }
                rows.push(row);
            }
        }
    }
    let cons = if rows.is_empty() {
        IntMatrix::zero(0, total)
    } else {
        IntMatrix::from_rows(rows)
    };
    let ker = kernel_lattice(&cons);
    ker.basis()
        .columns()
        .map(|col| {
            (0..n)
                .map(|i| devec(b[i], a[i], &col[x_off[i]..x_off[i] + b[i] * a[i]]))
                .collect()
        })
        .collect()
}

fn sample_vertical_tuple(
    rng: &mut ChaCha8Rng,
    basis: &[Vec<IntMatrix>],
    shapes: &[(usize, usize)],
) -> Vec<IntMatrix> {
    let mut acc: Vec<IntMatrix> = shapes.iter().map(|&(t, s)| IntMatrix::zero(t, s)).collect();
    for bvec in basis {
        let c = rng.random_range(-2i64..=2);
        if c == 0 {
            continue;
        }
        let cb = BigInt::from(c);
        for (i, m) in bvec.iter().enumerate() {
            acc[i] = acc[i].add(&scaled(m, &cb));
        }
    }
    acc
}

/// Deterministic per seed; the emitted diagram always passes `validate`.
/// Non-injective f' and non-surjective g configurations each occur in a
/// guaranteed-by-construction share of draws.
pub fn gen_snake(cfg: &GenConfig) -> Result<SnakeDiagram, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let finite = rng.random_bool(0.5);

    let a = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
    let b = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
    let f = random_hom(&mut rng, &a, &b);
    let (c, g) = coker_plus_padding(&mut rng, cfg, &f, finite, 0.5);

    let roll: f64 = rng.random();
    let (a1, b1, f1) = if cfg.max_gens == 0 || roll >= 0.75 {
        let a1 = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
        let b1 = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
        let f1 = random_hom(&mut rng, &a1, &b1);
        (a1, b1, f1)
    } else if roll < 0.4 {
        // injective by construction: a1 ↪ a1 ⊕ pad
        let a1 = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
        let pad = random_group_sized(&mut rng, cfg, cfg.max_gens.min(2), finite);
        let b1 = a1.direct_sum(&pad);
        let m = IntMatrix::identity(a1.n_gens()).vstack(&IntMatrix::zero(pad.n_gens(), a1.n_gens()));
        let f1 = Hom::new(a1.clone(), b1.clone(), m).expect("summand inclusion is well defined");
        (a1, b1, f1)
    } else {
        // non-injective by construction: a torsion summand is killed
        let core = random_group_sized(&mut rng, cfg, cfg.max_gens.saturating_sub(1), finite);
        let torsion = FpAbGroup::cyclic(rng.random_range(2..=5) as u64);
        let a1 = core.direct_sum(&torsion);
        let b1 = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
        let mcore = random_hom(&mut rng, &core, &b1);
        let m = mcore.matrix().hstack(&IntMatrix::zero(b1.n_gens(), 1));
        let f1 = Hom::new(a1.clone(), b1.clone(), m).expect("killed torsion maps to zero");
        (a1, b1, f1)
    };
    let (c1, g1) = coker_plus_padding(&mut rng, cfg, &f1, finite, 0.5);

    let basis = vertical_space(&[&a, &b, &c], &[&a1, &b1, &c1], &[&f, &g], &[&f1, &g1]);
    let shapes = [
        (a1.n_gens(), a.n_gens()),
        (b1.n_gens(), b.n_gens()),
        (c1.n_gens(), c.n_gens()),
    ];
    let mut vs = sample_vertical_tuple(&mut rng, &basis, &shapes);
    let gamma_m = vs.pop().expect("three verticals");
    let beta_m = vs.pop().expect("three verticals");
    let alpha_m = vs.pop().expect("three verticals");
    let d = SnakeDiagram {
        alpha: Hom::new(a.clone(), a1.clone(), alpha_m).expect("lattice member"),
        beta: Hom::new(b.clone(), b1.clone(), beta_m).expect("lattice member"),
        gamma: Hom::new(c.clone(), c1.clone(), gamma_m).expect("lattice member"),
        a,
        b,
        c,
        a1,
        b1,
        c1,
        f,
        g,
        f1,
        g1,
    };
    validate(d.clone()).expect("internal: generated snake diagrams validate by construction");
    Ok(d)
}

/// Random composable pair `(alpha: A -> B, beta: B -> C)` for ring fuzzing.
pub fn gen_hom_pair(cfg: &GenConfig) -> Result<(Hom, Hom), OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let finite = rng.random_bool(0.5);
    let a = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
    let b = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
    let c = random_group_sized(&mut rng, cfg, cfg.max_gens, finite);
    let alpha = random_hom(&mut rng, &a, &b);
    let beta = random_hom(&mut rng, &b, &c);
    Ok((alpha, beta))
}

fn random_subgroup(rng: &mut ChaCha8Rng, cfg: &GenConfig, g: &FpAbGroup) -> Subgroup {
    let k = rng.random_range(0..=cfg.relation_bound.min(3));
    let cols: Vec<Vec<BigInt>> = (0..k)
        .map(|_| {
            (0..g.n_gens())
                .map(|_| rand_entry(rng, cfg.entry_bound))
                .collect()
        })
        .collect();
    Subgroup::new(g.clone(), Lattice::from_columns(g.n_gens(), &cols))
}

/// Quotient-ladder construction: both hypotheses hold by construction, so
/// this variant never fails.
fn build_four_quotient(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> FourDiagram {
    let finite = rng.random_bool(0.5);
    let a = random_group_sized(&mut *rng, cfg, cfg.max_gens, finite);
    let b = random_group_sized(&mut *rng, cfg, cfg.max_gens, finite);
    let f = random_hom(rng, &a, &b);
    let (c, g) = coker_plus_padding(rng, cfg, &f, finite, 0.5);
    let (dd, h) = coker_plus_padding(rng, cfg, &g, finite, 0.5);

    // quotient the top row by a compatible subgroup chain; pushing the
    // chain forward keeps the quotient row exact and δ the identity
    let s_a = random_subgroup(rng, cfg, &a);
    let s_b = f.pushforward(&s_a).sum(&random_subgroup(rng, cfg, &b));
    let s_c = g.pushforward(&s_b);
    let qa = quotient(&a, &s_a);
    let qb = quotient(&b, &s_b);
    let qc = quotient(&c, &s_c);
    let f1 = Hom::new(qa.group.clone(), qb.group.clone(), f.matrix().clone())
        .expect("f carries the chain forward");
    let g1 = Hom::new(qb.group.clone(), qc.group.clone(), g.matrix().clone())
        .expect("g carries the chain forward");
    let h1 = Hom::new(qc.group.clone(), dd.clone(), h.matrix().clone())
        .expect("the chain lies in ker h");
    FourDiagram {
        alpha: qa.projection,
        beta: qb.projection,
        gamma: qc.projection,
        delta: Hom::identity(&dd),
        a1: qa.group,
        b1: qb.group,
        c1: qc.group,
        d1: dd.clone(),
        a,
        b,
        c,
        d: dd,
        f,
        g,
        h,
        f1,
        g1,
        h1,
    }
}

/// One attempt at a jointly-sampled 4-diagram; fails when no sampled
/// vertical tuple satisfies the two hypotheses.
fn try_build_four(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Option<FourDiagram> {
    let finite = rng.random_bool(0.5);
    let a = random_group_sized(&mut *rng, cfg, cfg.max_gens, finite);
    let b = random_group_sized(&mut *rng, cfg, cfg.max_gens, finite);
    let f = random_hom(rng, &a, &b);
    let (c, g) = coker_plus_padding(rng, cfg, &f, finite, 0.6);
    let (dd, h) = coker_plus_padding(rng, cfg, &g, finite, 0.7);

    let a1 = random_group_sized(&mut *rng, cfg, cfg.max_gens.min(2), finite);
    let b1 = random_group_sized(&mut *rng, cfg, cfg.max_gens, finite);
    let f1 = random_hom(rng, &a1, &b1);
    let (c1, g1) = coker_plus_padding(rng, cfg, &f1, finite, 0.6);
    let (d1, h1) = coker_plus_padding(rng, cfg, &g1, finite, 0.7);

    let basis = vertical_space(
        &[&a, &b, &c, &dd],
        &[&a1, &b1, &c1, &d1],
        &[&f, &g, &h],
        &[&f1, &g1, &h1],
    );
    let shapes = [
        (a1.n_gens(), a.n_gens()),
        (b1.n_gens(), b.n_gens()),
        (c1.n_gens(), c.n_gens()),
        (d1.n_gens(), dd.n_gens()),
    ];
    for _ in 0..40 {
        let vs = sample_vertical_tuple(rng, &basis, &shapes);
        let alpha = Hom::new(a.clone(), a1.clone(), vs[0].clone()).expect("lattice member");
        if !alpha.is_surjective() {
            continue;
        }
        let delta = Hom::new(dd.clone(), d1.clone(), vs[3].clone()).expect("lattice member");
        if !delta.is_injective() {
            continue;
        }
        let beta = Hom::new(b.clone(), b1.clone(), vs[1].clone()).expect("lattice member");
        let gamma = Hom::new(c.clone(), c1.clone(), vs[2].clone()).expect("lattice member");
        return Some(FourDiagram {
            a,
            b,
            c,
            d: dd,
            a1,
            b1,
            c1,
            d1,
            f,
            g,
            h,
            f1,
            g1,
            h1,
            alpha,
            beta,
            gamma,
            delta,
        });
    }
    None
}

/// Deterministic per seed; the emitted diagram passes `validate_four`
/// (α surjective and δ injective included). Roughly half the draws come
/// from the joint sampler, the rest from the quotient ladder; the joint
/// sampler resamples up to the configured limit before reporting
/// exhaustion.
pub fn gen_four(cfg: &GenConfig) -> Result<FourDiagram, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let use_quotient = rng.random_bool(0.5);
    let d = if use_quotient {
        build_four_quotient(&mut rng, cfg)
    } else {
        let mut found = None;
        for _ in 0..cfg.resample_limit.max(1) {
            if let Some(d) = try_build_four(&mut rng, cfg) {
                found = Some(d);
                break;
            }
        }
        match found {
            Some(d) => d,
            None => return Err(OracleError::GenerationExhausted),
        }
    };
    validate_four(d.clone()).expect("internal: generated 4-diagrams validate by construction");
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn same_snake(x: &SnakeDiagram, y: &SnakeDiagram) -> bool {
        x.a == y.a
            && x.b == y.b
            && x.c == y.c
            && x.a1 == y.a1
            && x.b1 == y.b1
            && x.c1 == y.c1
            && x.f.matrix() == y.f.matrix()
            && x.g.matrix() == y.g.matrix()
            && x.f1.matrix() == y.f1.matrix()
            && x.g1.matrix() == y.g1.matrix()
            && x.alpha.matrix() == y.alpha.matrix()
            && x.beta.matrix() == y.beta.matrix()
            && x.gamma.matrix() == y.gamma.matrix()
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let cfg = GenConfig::new(12345);
        let d1 = gen_snake(&cfg).unwrap();
        let d2 = gen_snake(&cfg).unwrap();
        assert!(same_snake(&d1, &d2));
        let other = gen_snake(&GenConfig::new(54321)).unwrap();
        assert!(!same_snake(&d1, &other) || d1.a.n_gens() == 0);
    }

    #[test]
    fn generated_snakes_validate() {
        for seed in 0..30 {
            let d = gen_snake(&GenConfig::new(seed)).unwrap();
            assert!(validate(d).is_ok(), "seed {seed}");
        }
    }

    #[test]
    fn generated_fours_validate_with_hypotheses() {
        for seed in 0..15 {
            let d = gen_four(&GenConfig::new(seed)).unwrap();
            let v = validate_four(d).expect("generator output must validate");
            assert!(v.diagram().alpha.is_surjective());
            assert!(v.diagram().delta.is_injective());
        }
    }

    #[test]
    fn max_gens_zero_gives_all_trivial() {
        let cfg = GenConfig {
            max_gens: 0,
            ..GenConfig::new(9)
        };
        let d = gen_snake(&cfg).unwrap();
        assert!(d.a.is_trivial() && d.b.is_trivial() && d.c.is_trivial());
        assert!(d.a1.is_trivial() && d.b1.is_trivial() && d.c1.is_trivial());
    }

    #[test]
    fn hom_pairs_are_composable() {
        for seed in 0..10 {
            let (alpha, beta) = gen_hom_pair(&GenConfig::new(seed)).unwrap();
            assert_eq!(alpha.target(), beta.source());
        }
    }

    #[test]
    fn generator_mixes_hypothesis_configurations() {
        let mut noninj_f1 = 0;
        let mut nonsurj_g = 0;
        let mut inj_f1 = 0;
        let mut surj_g = 0;
        let n = 60;
        for seed in 0..n {
            let d = gen_snake(&GenConfig::new(seed)).unwrap();
            if d.f1.is_injective() {
                inj_f1 += 1;
            } else {
                noninj_f1 += 1;
            }
            if d.g.is_surjective() {
                surj_g += 1;
            } else {
                nonsurj_g += 1;
            }
        }
        assert!(noninj_f1 * 100 >= 30 * n, "non-injective f' in {noninj_f1}/{n}");
        assert!(nonsurj_g * 100 >= 30 * n, "non-surjective g in {nonsurj_g}/{n}");
        assert!(inj_f1 > 0 && surj_g > 0);
    }
}
