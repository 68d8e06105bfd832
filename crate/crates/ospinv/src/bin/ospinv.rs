//! Command-line verification harness.
//!
//! `ospinv omega` prints the super Pfaffian with metadata; `ospinv verify`
//! runs a named check suite; `ospinv decompose` and `ospinv tensor` are
//! shorthands for the corresponding suites.  Reports are deterministic:
//! identical flags produce byte-identical output for any `--threads`.
//!
//! Exit status: 0 when every check passes, 1 when any check fails,
//! 2 on usage errors (bad flags, unknown suite, size caps exceeded).

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ospinv::error::Error;
use ospinv::pfaffian::localization::try_omega;
use ospinv::report::{ReportFormat, SuiteReport};
use ospinv::ring::poly::SuperPolynomial;
use ospinv::ring::serial::{poly_to_records, TermRecord};
use ospinv::ring::signature::AlgebraSignature;
use ospinv::suites::{run_suite, SuiteParams, SUITE_NAMES};

#[derive(Parser)]
#[command(
    name = "ospinv",
    version,
    about = "Exact construction and verification of orthosymplectic super Pfaffians"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the super Pfaffian Ω for (m, n) with metadata.
    Omega(OmegaArgs),
    /// Run a named verification suite and report per-check results.
    Verify(VerifyArgs),
    /// Compare graded decomposition dimensions degree by degree.
    Decompose(DecomposeArgs),
    /// Compare tensor-power invariant spaces against pairing counts.
    Tensor(TensorArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Text => ReportFormat::Text,
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker thread count (default: the OSPINV_THREADS environment
    /// variable, else one per core).  Output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct OmegaArgs {
    /// Number of even dimensions (must be ≥ 1).
    #[arg(long)]
    m: usize,
    /// Half the number of odd dimensions.
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: identities, invariance, pseudo, regular-singular,
    /// osp22, decomposition, tensor, generation, or structure.
    #[arg(long)]
    suite: String,
    /// Even dimension count (suite-specific default).
    #[arg(long)]
    m: Option<usize>,
    /// Half the odd dimension count (suite-specific default).
    #[arg(long)]
    n: Option<usize>,
    /// Copy count N (suite-specific default).
    #[arg(long)]
    bign: Option<usize>,
    /// Tensor power (tensor suite).
    #[arg(long)]
    power: Option<usize>,
    /// Maximum degree to sweep (decomposition/generation suites).
    #[arg(long)]
    degree: Option<usize>,
    /// Largest determinant size k to exercise (identities suite).
    #[arg(long)]
    max_k: Option<usize>,
    /// Largest determinant power ℓ to exercise (identities suite).
    #[arg(long)]
    max_ell: Option<usize>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Number of even dimensions.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Half the number of odd dimensions.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Copy count N.
    #[arg(long, default_value_t = 2)]
    bign: usize,
    /// Largest degree to check.
    #[arg(long, default_value_t = 6)]
    degree: usize,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct TensorArgs {
    /// Number of even dimensions.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Half the number of odd dimensions.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Tensor power N.
    #[arg(long, default_value_t = 4)]
    power: usize,
    #[command(flatten)]
    common: CommonOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Omega(args) => cmd_omega(args),
        Cmd::Verify(args) => {
            let params = SuiteParams {
                m: args.m,
                n: args.n,
                bign: args.bign,
                power: args.power,
                degree: args.degree,
                max_k: args.max_k,
                max_ell: args.max_ell,
            };
            run_and_emit(&args.suite, &params, &args.common)
        }
        Cmd::Decompose(args) => {
            let params = SuiteParams {
                m: Some(args.m),
                n: Some(args.n),
                bign: Some(args.bign),
                degree: Some(args.degree),
                ..Default::default()
            };
            run_and_emit("decomposition", &params, &args.common)
        }
        Cmd::Tensor(args) => {
            let params = SuiteParams {
                m: Some(args.m),
                n: Some(args.n),
                power: Some(args.power),
                ..Default::default()
            };
            run_and_emit("tensor", &params, &args.common)
        }
    }
}

fn init_threads(threads: Option<usize>) {
    let count = threads.or_else(|| {
        std::env::var("OSPINV_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(count) = count.filter(|&c| c > 0) {
        // Ignore failure: the global pool may already be initialized.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build_global();
    }
}

fn emit(common: &CommonOpts, rendered: &str) -> Result<(), String> {
    match &common.out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(rendered.as_bytes())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

fn run_and_emit(suite: &str, params: &SuiteParams, common: &CommonOpts) -> Result<bool, String> {
    init_threads(common.threads);
    let report: SuiteReport = run_suite(suite, params).map_err(|e| usage_message(&e))?;
    emit(common, &report.render(common.format.into()))?;
    Ok(report.all_pass())
}

fn usage_message(e: &Error) -> String {
    match e {
        Error::UnknownSuite(name) => format!(
            "unknown suite `{name}`; valid suites: {}",
            SUITE_NAMES.join(", ")
        ),
        other => other.to_string(),
    }
}

/// Serialized form of `ospinv omega`.
#[derive(Serialize)]
struct OmegaDocument {
    schema: u32,
    m: usize,
    n: usize,
    degree: usize,
    term_count: usize,
    leading_term: String,
    polynomial: Vec<TermRecord>,
}

fn cmd_omega(args: OmegaArgs) -> Result<bool, String> {
    if args.m == 0 {
        return Err("--m must be at least 1 (no even dimensions, nothing to build)".into());
    }
    init_threads(args.common.threads);
    let sig = AlgebraSignature::try_new(args.m, args.n, args.m).map_err(|e| e.to_string())?;
    let om = try_omega(sig).map_err(|e| e.to_string())?;
    let document = omega_document(args.m, args.n, &om);
    let rendered = match args.common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&document)
                .map_err(|e| format!("serialization failed: {e}"))?;
            s.push('\n');
            s
        }
        Format::Text => omega_text(&document, &om),
    };
    emit(&args.common, &rendered)?;
    Ok(true)
}

fn omega_document(m: usize, n: usize, om: &SuperPolynomial) -> OmegaDocument {
    let (mono, coeff) = om.max_term().expect("the super Pfaffian is nonzero");
    let leading =
        SuperPolynomial::from_term(om.signature(), mono.clone(), coeff.clone()).to_string();
    OmegaDocument {
        schema: 1,
        m,
        n,
        degree: om.total_degree().unwrap_or(0),
        term_count: om.terms().count(),
        leading_term: leading,
        polynomial: poly_to_records(om),
    }
}

fn omega_text(doc: &OmegaDocument, om: &SuperPolynomial) -> String {
    let mut s = String::new();
    s.push_str(&format!("super Pfaffian (m={}, n={})\n", doc.m, doc.n));
    s.push_str(&format!("degree: {}\n", doc.degree));
    s.push_str(&format!("term_count: {}\n", doc.term_count));
    s.push_str(&format!("leading_term: {}\n", doc.leading_term));
    s.push_str(&format!("{om}\n"));
    s
}
