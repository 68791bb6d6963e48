//! The machine-readable report: stable field names, enough data
//! (presentations and matrices) to re-verify every claim independently.

use crate::doc::{matrix_json, DiagramDoc, JsonInt};
use chase_core::snake::{ConnectingHom, ExactSequence};
use chase_core::FpAbGroup;
use serde::Serialize;

pub const STATUS_OK: &str = "ok";
pub const STATUS_INVALID_INPUT: &str = "invalid-input";
pub const STATUS_COUNTEREXAMPLE: &str = "counterexample";
pub const STATUS_INTERNAL_ERROR: &str = "internal-error";

#[derive(Serialize)]
pub struct Report {
    pub status: String,
    pub command: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Note>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sequences: Vec<SequenceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<DeltaReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fuzz: Option<FuzzReport>,
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

/// Informational flag; never affects the status.
#[derive(Serialize)]
pub struct Note {
    pub name: String,
    pub value: bool,
}

#[derive(Serialize)]
pub struct Diagnostic {
    pub kind: String,
    pub detail: String,
}

#[derive(Serialize)]
pub struct TermReport {
    pub name: String,
    pub gens: usize,
    pub relations: Vec<Vec<JsonInt>>,
    pub invariant_factors: Vec<JsonInt>,
}

#[derive(Serialize)]
pub struct MapReport {
    pub name: String,
    pub matrix: Vec<Vec<JsonInt>>,
}

#[derive(Serialize)]
pub struct SequenceReport {
    pub name: String,
    pub exact: bool,
    pub certificate: Vec<bool>,
    pub terms: Vec<TermReport>,
    pub maps: Vec<MapReport>,
}

#[derive(Serialize)]
pub struct DeltaReport {
    pub domain: TermReport,
    /// Embedding of the domain presentation into C.
    pub domain_inclusion_into_c: Vec<Vec<JsonInt>>,
    pub codomain: TermReport,
    /// Projection of A' onto the codomain presentation.
    pub codomain_projection_from_a1: Vec<Vec<JsonInt>>,
    pub matrix: Vec<Vec<JsonInt>>,
}

#[derive(Serialize)]
pub struct FuzzReport {
    pub kind: String,
    pub count: u64,
    pub seed: u64,
    pub cap: u64,
    pub cases_run: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FuzzFailure>,
}

#[derive(Serialize)]
pub struct FuzzFailure {
    pub case_index: u64,
    pub case_seed: u64,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramDoc>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            status: STATUS_OK.into(),
            command: command.into(),
            checks: Vec::new(),
            notes: Vec::new(),
            sequences: Vec::new(),
            delta: None,
            diagnostics: Vec::new(),
            fuzz: None,
        }
    }

    pub fn check(&mut self, name: &str, ok: bool) {
        self.checks.push(Check {
            name: name.into(),
            ok,
        });
    }

    pub fn note(&mut self, name: &str, value: bool) {
        self.notes.push(Note {
            name: name.into(),
            value,
        });
    }

    pub fn diagnostic(&mut self, kind: &str, detail: String) {
        self.diagnostics.push(Diagnostic {
            kind: kind.into(),
            detail,
        });
    }

    pub fn invalid_input(command: &str, kind: &str, detail: String) -> Report {
        let mut r = Report::new(command);
        r.status = STATUS_INVALID_INPUT.into();
        r.diagnostic(kind, detail);
        r
    }

    /// Downgrades ok to internal-error when a theorem-guaranteed check
    /// failed; user-input problems never take this path.
    pub fn finalize_file_command(&mut self) {
        let all_ok = self.checks.iter().all(|c| c.ok) && self.sequences.iter().all(|s| s.exact);
        if self.status == STATUS_OK && !all_ok {
            self.status = STATUS_INTERNAL_ERROR.into();
            self.diagnostic(
                "internal",
                "a theorem-guaranteed check failed on validated input".into(),
            );
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status.as_str() {
            STATUS_OK => 0,
            STATUS_INVALID_INPUT => 2,
            STATUS_COUNTEREXAMPLE => 3,
            _ => 4,
        }
    }
}

pub fn term_report(name: &str, g: &FpAbGroup) -> TermReport {
    TermReport {
        name: name.into(),
        gens: g.n_gens(),
        relations: g
            .relations()
            .basis()
            .columns()
            .map(|c| c.into_iter().map(JsonInt).collect())
            .collect(),
        invariant_factors: g
            .invariant_factors()
            .iter()
            .cloned()
            .map(JsonInt)
            .collect(),
    }
}

pub fn sequence_report(name: &str, term_names: &[&str], seq: &ExactSequence) -> SequenceReport {
    let terms = seq
        .terms()
        .iter()
        .enumerate()
        .map(|(i, t)| term_report(term_names.get(i).copied().unwrap_or("term"), t))
        .collect();
    let maps = seq
        .maps()
        .iter()
        .enumerate()
        .map(|(i, m)| MapReport {
            name: format!(
                "{} -> {}",
                term_names.get(i).copied().unwrap_or("term"),
                term_names.get(i + 1).copied().unwrap_or("term")
            ),
            matrix: matrix_json(m.matrix()),
        })
        .collect();
    SequenceReport {
        name: name.into(),
        exact: seq.is_exact(),
        certificate: seq.certificate().to_vec(),
        terms,
        maps,
    }
}

pub fn delta_report(delta: &ConnectingHom) -> DeltaReport {
    DeltaReport {
        domain: term_report("ker_gamma_meet_im_g", &delta.domain.group),
        domain_inclusion_into_c: matrix_json(delta.domain.inclusion.matrix()),
        codomain: term_report("a1_mod_im_alpha_plus_ker_f1", &delta.codomain.group),
        codomain_projection_from_a1: matrix_json(delta.codomain.projection.matrix()),
        matrix: matrix_json(delta.hom.matrix()),
    }
}

/// Plain-text rendering for humans; the JSON form is the stable contract.
pub fn render_text(r: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "status: {}", r.status);
    for c in &r.checks {
        let _ = writeln!(out, "check {}: {}", c.name, if c.ok { "ok" } else { "FAILED" });
    }
    for n in &r.notes {
        let _ = writeln!(out, "note {}: {}", n.name, n.value);
    }
    for s in &r.sequences {
        let _ = writeln!(
            out,
            "sequence {}: {}",
            s.name,
            if s.exact { "exact" } else { "NOT EXACT" }
        );
        for t in &s.terms {
            let factors: Vec<String> = t
                .invariant_factors
                .iter()
                .map(|x| x.0.to_string())
                .collect();
            let _ = writeln!(out, "  {}: factors [{}]", t.name, factors.join(", "));
        }
    }
    if let Some(d) = &r.delta {
        let rows: Vec<String> = d
            .matrix
            .iter()
            .map(|row| {
                let entries: Vec<String> = row.iter().map(|x| x.0.to_string()).collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        let _ = writeln!(out, "delta matrix: [{}]", rows.join(", "));
    }
    if let Some(f) = &r.fuzz {
        let _ = writeln!(
            out,
            "fuzz {}: {} cases, {} failures",
            f.kind, f.cases_run, f.failures
        );
        if let Some(ff) = &f.first_failure {
            let _ = writeln!(
                out,
                "first failure: case {} (seed {}) check {}",
                ff.case_index, ff.case_seed, ff.check
            );
        }
    }
    out
}
