//! Command implementations: each produces a `Report`.

use crate::doc::{four_to_doc, ring_to_doc, snake_to_doc, DiagramDoc, ResolvedDiagram};
use crate::report::{
    delta_report, sequence_report, Report, STATUS_COUNTEREXAMPLE, STATUS_INVALID_INPUT,
};
use chase_core::four::{
    four_lemma, validate_four, FourDiagram, ES1_TERM_NAMES, ES2_TERM_NAMES, ESR_TERM_NAMES,
};
use chase_core::oracle::{
    enum_check_exact, enum_connecting, gen_four, gen_hom_pair, gen_snake, GenConfig, OracleError,
};
use chase_core::snake::{
    classical_specialization, connecting_hom, connecting_hom_with, exact_ring, ring_lemma,
    snake_sequence, validate, SnakeDiagram, CLASSICAL_TERM_NAMES, RING_TERM_NAMES,
    SNAKE_TERM_NAMES,
};
use chase_core::FpAbGroup;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PROOF_RING_NAMES: [&str; 8] = [
    "zero",
    "ker_iota",
    "ker_beta_hat_iota",
    "ker_beta_hat",
    "coker_iota",
    "coker_beta_hat_iota",
    "coker_beta_hat",
    "zero",
];

fn snake_validation_checks(r: &mut Report, d: &SnakeDiagram) -> bool {
    let checks = [
        (
            "square_1_commutes",
            d.f1.compose(&d.alpha) == d.beta.compose(&d.f),
        ),
        (
            "square_2_commutes",
            d.g1.compose(&d.beta) == d.gamma.compose(&d.g),
        ),
        ("top_row_exact", d.f.image() == d.g.kernel_subgroup()),
        ("bottom_row_exact", d.f1.image() == d.g1.kernel_subgroup()),
    ];
    let mut ok = true;
    for (name, passed) in checks {
        r.check(name, passed);
        if !passed {
            r.diagnostic("validate", format!("{name} failed"));
            ok = false;
        }
    }
    ok
}

fn four_validation_checks(r: &mut Report, d: &FourDiagram) -> bool {
    let checks = [
        (
            "square_1_commutes",
            d.f1.compose(&d.alpha) == d.beta.compose(&d.f),
        ),
        (
            "square_2_commutes",
            d.g1.compose(&d.beta) == d.gamma.compose(&d.g),
        ),
        (
            "square_3_commutes",
            d.h1.compose(&d.gamma) == d.delta.compose(&d.h),
        ),
        (
            "top_row_exact",
            d.f.image() == d.g.kernel_subgroup() && d.g.image() == d.h.kernel_subgroup(),
        ),
        (
            "bottom_row_exact",
            d.f1.image() == d.g1.kernel_subgroup() && d.g1.image() == d.h1.kernel_subgroup(),
        ),
        ("alpha_surjective", d.alpha.is_surjective()),
        ("delta_injective", d.delta.is_injective()),
    ];
    let mut ok = true;
    for (name, passed) in checks {
        r.check(name, passed);
        if !passed {
            r.diagnostic("validate", format!("{name} failed"));
            ok = false;
        }
    }
    ok
}

pub fn cmd_check(doc: &DiagramDoc) -> Report {
    let mut r = Report::new("check");
    match doc.resolve() {
        Ok(ResolvedDiagram::Snake(d)) => {
            if !snake_validation_checks(&mut r, &d) {
                r.status = STATUS_INVALID_INPUT.into();
            }
        }
        Ok(ResolvedDiagram::Four(d)) => {
            if !four_validation_checks(&mut r, &d) {
                r.status = STATUS_INVALID_INPUT.into();
            }
        }
        Ok(ResolvedDiagram::Ring { .. }) => {
            r.check("composable", true);
        }
        Err(e) => return Report::invalid_input("check", "resolve", e),
    }
    r
}

pub fn cmd_snake(doc: &DiagramDoc) -> Report {
    let mut r = Report::new("snake");
    let d = match doc.resolve() {
        Ok(ResolvedDiagram::Snake(d)) => *d,
        Ok(_) => {
            return Report::invalid_input("snake", "resolve", "diagram kind must be \"snake\"".into())
        }
        Err(e) => return Report::invalid_input("snake", "resolve", e),
    };
    if !snake_validation_checks(&mut r, &d) {
        r.status = STATUS_INVALID_INPUT.into();
        return r;
    }
    let v = validate(d).expect("validation checks already passed");
    let s = snake_sequence(&v);
    r.check("snake_sequence_exact", s.sequence.is_exact());
    r.sequences
        .push(sequence_report("snake", &SNAKE_TERM_NAMES, &s.sequence));
    r.delta = Some(delta_report(&s.delta));

    let rep = classical_specialization(&v);
    r.note("f1_injective", rep.f1_injective);
    r.note("g_surjective", rep.g_surjective);
    if let Some(ok) = rep.ker_collapse {
        r.check("classical_ker_collapse", ok);
    }
    if let Some(ok) = rep.coker_alpha_identification {
        r.check("classical_coker_alpha_identification", ok);
    }
    if let Some(ok) = rep.coker_collapse {
        r.check("classical_coker_collapse", ok);
    }
    if let Some(ok) = rep.delta_domain_is_ker_gamma {
        r.check("classical_delta_domain_is_ker_gamma", ok);
    }
    if let Some(classical) = &rep.classical {
        r.check("classical_sequence_exact", classical.is_exact());
        r.sequences
            .push(sequence_report("classical", &CLASSICAL_TERM_NAMES, classical));
    }
    r.finalize_file_command();
    r
}

pub fn cmd_ring(doc: &DiagramDoc) -> Report {
    let mut r = Report::new("ring");
    let (alpha, beta) = match doc.resolve() {
        Ok(ResolvedDiagram::Ring { alpha, beta }) => (*alpha, *beta),
        Ok(_) => {
            return Report::invalid_input("ring", "resolve", "diagram kind must be \"ring\"".into())
        }
        Err(e) => return Report::invalid_input("ring", "resolve", e),
    };
    let seq = ring_lemma(&alpha, &beta).expect("composability checked at resolve");
    r.check("ring_sequence_exact", seq.is_exact());
    r.sequences
        .push(sequence_report("ring", &RING_TERM_NAMES, &seq));
    let ring = exact_ring(&alpha, &beta).expect("composability checked at resolve");
    for (name, ok) in &ring.factorizations {
        r.check(&format!("factorization_{name}"), *ok);
    }
    r.check("ring_matches_ring_lemma", ring.matches_ring_lemma);
    r.finalize_file_command();
    r
}

pub fn cmd_four(doc: &DiagramDoc) -> Report {
    let mut r = Report::new("four");
    let d = match doc.resolve() {
        Ok(ResolvedDiagram::Four(d)) => *d,
        Ok(_) => {
            return Report::invalid_input("four", "resolve", "diagram kind must be \"four\"".into())
        }
        Err(e) => return Report::invalid_input("four", "resolve", e),
    };
    if !four_validation_checks(&mut r, &d) {
        r.status = STATUS_INVALID_INPUT.into();
        return r;
    }
    let v = validate_four(d).expect("validation checks already passed");
    let res = four_lemma(&v);
    r.sequences
        .push(sequence_report("es1", &ES1_TERM_NAMES, &res.es1));
    r.sequences
        .push(sequence_report("es2", &ES2_TERM_NAMES, &res.es2));
    r.sequences
        .push(sequence_report("esr", &ESR_TERM_NAMES, &res.esr));
    r.sequences.push(sequence_report(
        "proof_ring",
        &PROOF_RING_NAMES,
        &res.proof_trace.ring,
    ));
    r.check("ker_gamma_is_g_of_ker_beta", res.ker_gamma_is_g_of_ker_beta);
    r.check(
        "im_beta_is_preimage_of_im_gamma",
        res.im_beta_is_preimage_of_im_gamma,
    );
    let t = &res.proof_trace;
    r.check("beta_ker_g_equals_ker_g1", t.beta_ker_g_equals_ker_g1);
    r.check("ker_iota_trivial", t.ker_iota_trivial);
    r.check(
        "coker_beta_hat_iota_trivial",
        t.coker_beta_hat_iota_trivial,
    );
    r.check("g_hat_iota_zero", t.g_hat_iota_zero);
    r.check("beta_hat_is_restriction", t.beta_hat_is_restriction);
    r.check("es1_maps_match_induced", res.es1_maps_match_induced);
    r.finalize_file_command();
    r
}

fn finite_under_cap(groups: &[&FpAbGroup], cap: u64) -> bool {
    groups
        .iter()
        .all(|g| g.order().is_some_and(|o| o <= BigInt::from(cap)))
}

/// First failing check of the full invariant suite for one snake case.
fn snake_case_failure(cfg: &GenConfig, cap: u64) -> Result<Option<(String, DiagramDoc)>, OracleError> {
    let d = gen_snake(cfg)?;
    let doc = snake_to_doc(&d);
    let finite = finite_under_cap(&[&d.a, &d.b, &d.c, &d.a1, &d.b1, &d.c1], cap);
    let v = match validate(d) {
        Ok(v) => v,
        Err(e) => return Ok(Some((format!("validate: {e}"), doc))),
    };
    let s = snake_sequence(&v);
    if !s.sequence.is_exact() {
        return Ok(Some(("snake_sequence_exact".into(), doc)));
    }
    let base = connecting_hom(&v);
    let mut wrng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9));
    for _ in 0..3 {
        let alt = connecting_hom_with(&v, &mut || BigInt::from(wrng.random_range(-7i64..=7)));
        if alt.hom != base.hom {
            return Ok(Some(("delta_witness_independence".into(), doc)));
        }
    }
    let rep = classical_specialization(&v);
    for (name, flag) in [
        ("classical_ker_collapse", rep.ker_collapse),
        (
            "classical_coker_alpha_identification",
            rep.coker_alpha_identification,
        ),
        ("classical_coker_collapse", rep.coker_collapse),
        (
            "classical_delta_domain_is_ker_gamma",
            rep.delta_domain_is_ker_gamma,
        ),
    ] {
        if flag == Some(false) {
            return Ok(Some((name.into(), doc)));
        }
    }
    if let Some(classical) = &rep.classical {
        if !classical.is_exact() {
            return Ok(Some(("classical_sequence_exact".into(), doc)));
        }
    }
    if finite {
        match enum_check_exact(&s.sequence, cap) {
            Ok(enum_exact) => {
                if enum_exact != s.sequence.is_exact() {
                    return Ok(Some(("oracle_exactness_agreement".into(), doc)));
                }
            }
            Err(OracleError::CapExceeded(_)) => {}
            Err(e) => return Err(e),
        }
        match enum_connecting(&v, cap) {
            Ok(table) => {
                if !table.independent {
                    return Ok(Some(("oracle_delta_independence".into(), doc)));
                }
                if !table.matches_lattice_delta {
                    return Ok(Some(("oracle_delta_agreement".into(), doc)));
                }
            }
            Err(OracleError::CapExceeded(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

fn ring_case_failure(cfg: &GenConfig) -> Result<Option<(String, DiagramDoc)>, OracleError> {
    let (alpha, beta) = gen_hom_pair(cfg)?;
    let doc = ring_to_doc(&alpha, &beta);
    let seq = ring_lemma(&alpha, &beta).expect("generated pairs are composable");
    if !seq.is_exact() {
        return Ok(Some(("ring_sequence_exact".into(), doc)));
    }
    let orders: Option<Vec<BigInt>> = seq.terms()[1..7].iter().map(FpAbGroup::order).collect();
    if let Some(o) = orders {
        if &o[1] * &o[3] * &o[5] != &o[0] * &o[2] * &o[4] {
            return Ok(Some(("ring_order_identity".into(), doc)));
        }
    }
    let ring = exact_ring(&alpha, &beta).expect("generated pairs are composable");
    if !ring.all_checks_pass() {
        return Ok(Some(("exact_ring_checks".into(), doc)));
    }
    Ok(None)
}

fn four_case_failure(cfg: &GenConfig, cap: u64) -> Result<Option<(String, DiagramDoc)>, OracleError> {
    let d = gen_four(cfg)?;
    let doc = four_to_doc(&d);
    let finite = finite_under_cap(
        &[&d.a, &d.b, &d.c, &d.d, &d.a1, &d.b1, &d.c1, &d.d1],
        cap,
    );
    let v = match validate_four(d) {
        Ok(v) => v,
        Err(e) => return Ok(Some((format!("validate: {e}"), doc))),
    };
    let res = four_lemma(&v);
    if !res.all_checks_pass() {
        return Ok(Some(("four_lemma_checks".into(), doc)));
    }
    if finite {
        for (name, es) in [("es1", &res.es1), ("es2", &res.es2), ("esr", &res.esr)] {
            match enum_check_exact(es, cap) {
                Ok(enum_exact) => {
                    if enum_exact != es.is_exact() {
                        return Ok(Some((format!("oracle_{name}_agreement"), doc)));
                    }
                }
                Err(OracleError::CapExceeded(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

pub struct FuzzParams {
    pub kind: String,
    pub count: u64,
    pub seed: u64,
    pub cap: u64,
    pub max_gens: usize,
    pub entry_bound: i64,
    pub relation_bound: usize,
    pub resample_limit: usize,
}

pub fn cmd_fuzz(p: &FuzzParams) -> Report {
    let mut r = Report::new("fuzz");
    let mut cases_run = 0u64;
    let mut failure = None;
    'cases: for i in 0..p.count {
        let case_seed = p.seed.wrapping_add(i);
        let mut produced = false;
        // a handful of reseeds absorbs generator exhaustion
        for attempt in 0..5u64 {
            let cfg = GenConfig {
                seed: case_seed.wrapping_add(attempt.wrapping_mul(0x100_0000_01b3)),
                max_gens: p.max_gens,
                entry_bound: p.entry_bound,
                relation_bound: p.relation_bound,
                resample_limit: p.resample_limit,
            };
            let outcome = match p.kind.as_str() {
                "snake" => snake_case_failure(&cfg, p.cap),
                "ring" => ring_case_failure(&cfg),
                "four" => four_case_failure(&cfg, p.cap),
                other => {
                    return Report::invalid_input(
                        "fuzz",
                        "args",
                        format!("unknown kind {other:?}; expected snake, four, or ring"),
                    )
                }
            };
            match outcome {
                Ok(None) => {
                    produced = true;
                    cases_run += 1;
                    break;
                }
                Ok(Some((check, diagram))) => {
                    cases_run += 1;
                    failure = Some(crate::report::FuzzFailure {
                        case_index: i,
                        case_seed: cfg.seed,
                        check,
                        diagram: Some(diagram),
                    });
                    break 'cases;
                }
                Err(_) => continue,
            }
        }
        if !produced {
            failure = Some(crate::report::FuzzFailure {
                case_index: i,
                case_seed,
                check: "generation_exhausted".into(),
                diagram: None,
            });
            break;
        }
    }
    let failures = u64::from(failure.is_some());
    if failure.is_some() {
        r.status = STATUS_COUNTEREXAMPLE.into();
        r.diagnostic(
            "counterexample",
            "an invariant failed; the offending diagram is serialized in the report".into(),
        );
    }
    r.fuzz = Some(crate::report::FuzzReport {
        kind: p.kind.clone(),
        count: p.count,
        seed: p.seed,
        cap: p.cap,
        cases_run,
        failures,
        first_failure: failure,
    });
    r
}
