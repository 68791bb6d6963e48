//! Command-line front end: parse diagram files, run the constructions, and
//! emit human- or machine-readable reports.
//!
//! Exit codes: 0 ok, 2 invalid input, 3 counterexample found by fuzzing,
//! 4 internal assertion failure.

use chase_cli::doc::DiagramDoc;
use chase_cli::report::{render_text, Report, STATUS_INTERNAL_ERROR};
use chase_cli::run::{self, FuzzParams};
use clap::{Parser, Subcommand};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "chase",
    about = "Exact diagram-lemma checking over finitely generated abelian groups",
    version
)]
struct Cli {
    /// Emit the machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a diagram file: commutativity, row exactness, hypotheses.
    Check { file: PathBuf },
    /// Validate and run the generalized snake construction, with the
    /// connecting map and the classical specialization.
    Snake { file: PathBuf },
    /// Kernel-cokernel sequence and ring verification for two composable maps.
    Ring { file: PathBuf },
    /// The 4-lemma sequences (1), (2), (3) and their verdicts.
    Four { file: PathBuf },
    /// Generate random diagrams and run the full invariant suite on each.
    Fuzz {
        /// Diagram kind: snake, four, or ring.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Order cap for the exhaustive oracle.
        #[arg(long, default_value_t = 512)]
        cap: u64,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        #[arg(long, default_value_t = 5)]
        entry_bound: i64,
        #[arg(long, default_value_t = 6)]
        relation_bound: usize,
        #[arg(long, default_value_t = 100)]
        resample_limit: usize,
    },
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Check { .. } => "check",
        Cmd::Snake { .. } => "snake",
        Cmd::Ring { .. } => "ring",
        Cmd::Four { .. } => "four",
        Cmd::Fuzz { .. } => "fuzz",
    }
}

fn load_doc(command: &str, file: &PathBuf) -> Result<DiagramDoc, Box<Report>> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        Report::invalid_input(command, "io", format!("cannot read {}: {e}", file.display()))
    })?;
    serde_json::from_str(&text).map_err(|e| {
        Box::new(Report::invalid_input(
            command,
            "parse",
            format!("{e} (line {}, column {})", e.line(), e.column()),
        ))
    })
}

fn dispatch(cmd: &Cmd) -> Report {
    match cmd {
        Cmd::Check { file } => match load_doc("check", file) {
            Ok(doc) => run::cmd_check(&doc),
            Err(r) => *r,
        },
        Cmd::Snake { file } => match load_doc("snake", file) {
            Ok(doc) => run::cmd_snake(&doc),
            Err(r) => *r,
        },
        Cmd::Ring { file } => match load_doc("ring", file) {
            Ok(doc) => run::cmd_ring(&doc),
            Err(r) => *r,
        },
        Cmd::Four { file } => match load_doc("four", file) {
            Ok(doc) => run::cmd_four(&doc),
            Err(r) => *r,
        },
        Cmd::Fuzz {
            kind,
            count,
            seed,
            cap,
            max_gens,
            entry_bound,
            relation_bound,
            resample_limit,
        } => run::cmd_fuzz(&FuzzParams {
            kind: kind.clone(),
            count: *count,
            seed: *seed,
            cap: *cap,
            max_gens: *max_gens,
            entry_bound: *entry_bound,
            relation_bound: *relation_bound,
            resample_limit: *resample_limit,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.cmd);
    let report = match catch_unwind(AssertUnwindSafe(|| dispatch(&cli.cmd))) {
        Ok(r) => r,
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| (*s).to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            let mut r = Report::new(name);
            r.status = STATUS_INTERNAL_ERROR.into();
            r.diagnostic("internal", detail);
            r
        }
    };
    for d in &report.diagnostics {
        eprintln!("{}: {}", d.kind, d.detail);
    }
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("reports serialize")
        );
    } else {
        print!("{}", render_text(&report));
    }
    ExitCode::from(report.exit_code())
}
