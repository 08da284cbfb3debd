//! `pck`: batch analysis of graded Poisson color algebra files.
//!
//! Exit codes: 0 analysis complete, 1 invalid input (syntax, structure,
//! bi-character or axiom failure), 2 preconditions unmet (for example a
//! non-symmetric support where connection classes are required).

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pck_core::connections::{check_symmetric_support, compute_supports};
use pck_core::corpus;
use pck_core::format::{parse_algebra, serialize_algebra, FormatError};
use pck_core::report::{
    analyze, analyze_validation, emit_report, witness_summary, AnalysisOptions, AnalysisReport,
    ReportFormat,
};
use pck_core::PoissonColorAlgebra;

#[derive(Parser)]
#[command(
    name = "pck",
    about = "Validate, decompose and test graded Poisson color algebras given by structure constants",
    version
)]
struct Cli {
    /// Worker threads (accepted for compatibility; output is identical for
    /// every value).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for the sampling fallback of the simplicity oracle.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> ReportFormat {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Json => ReportFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and run every axiom check.
    Validate { file: String },
    /// Print the supports of both gradings.
    Support { file: String },
    /// Print the connection classes of the second grading's support.
    Classes {
        file: String,
        /// Print a witness chain between two support degrees, written in
        /// the report syntax (for example `z` or `z1*z2^-1`).
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        witness: Option<Vec<String>>,
    },
    /// Compute the ideal decomposition and verify its claims.
    Decompose { file: String },
    /// Run the two-route graded-simplicity analysis.
    Simplicity { file: String },
    /// Compute the centre.
    Center { file: String },
    /// List the built-in examples or emit one as an algebra file.
    Corpus {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
    },
}

fn load(path: &str) -> Result<PoissonColorAlgebra, ExitCode> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {path}: {e}");
            return Err(ExitCode::from(1));
        }
    };
    match parse_algebra(&text) {
        Ok(a) => Ok(a),
        Err(e) => {
            eprintln!("error: {e}");
            if let FormatError::Axioms { report, .. } = &e {
                for check in &report.checks {
                    for ce in &check.counterexamples {
                        eprintln!(
                            "  {} fails at ({})",
                            check.axiom,
                            ce.basis_names.join(", ")
                        );
                    }
                }
            }
            Err(ExitCode::from(1))
        }
    }
}

/// Write to stdout, treating a closed pipe (e.g. `pck ... | head`) as a
/// normal early exit instead of a panic.
fn write_out(text: &str) {
    if std::io::stdout().write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

fn write_out_line(text: &str) {
    write_out(text);
    write_out("\n");
}

fn print_report(report: &AnalysisReport, format: Format) {
    write_out(&emit_report(report, format.into()));
}

fn require_symmetric(algebra: &PoissonColorAlgebra) -> Result<(), ExitCode> {
    let supports = compute_supports(algebra);
    if !check_symmetric_support(&supports) {
        eprintln!("error: the support is not symmetric; this analysis requires symmetry");
        return Err(ExitCode::from(2));
    }
    Ok(())
}

fn run() -> Result<(), ExitCode> {
    let cli = Cli::parse();
    let options = AnalysisOptions {
        seed: cli.seed,
        threads: cli.threads,
    };
    match &cli.command {
        Command::Validate { file } => {
            let algebra = load(file)?;
            let report = analyze_validation(&algebra);
            print_report(&report, cli.format);
        }
        Command::Support { file } => {
            let algebra = load(file)?;
            let report = analyze_validation(&algebra);
            match cli.format {
                Format::Json => {
                    write_out_line(&serde_json_support(&report));
                }
                Format::Text => {
                    write_out_line(&format!(
                        "support: sigma_lambda = {{{}}}, sigma_g = {{{}}}, symmetric = {}",
                        report.support.sigma_lambda.join(", "),
                        report.support.sigma_g.join(", "),
                        report.support.symmetric
                    ));
                }
            }
        }
        Command::Classes { file, witness } => {
            let algebra = load(file)?;
            require_symmetric(&algebra)?;
            let mut report = analyze(&algebra, &options);
            if let Some(pair) = witness {
                let spec = algebra.lambda_spec();
                let supports = compute_supports(&algebra);
                let parse_endpoint = |text: &str| {
                    spec.parse_multiplicative(text).map_err(|e| {
                        eprintln!("error: {e}");
                        ExitCode::from(1)
                    })
                };
                let from = parse_endpoint(&pair[0])?;
                let to = parse_endpoint(&pair[1])?;
                match witness_summary(&algebra, &supports, &from, &to) {
                    Ok(w) => report.witness = Some(w),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return Err(ExitCode::from(2));
                    }
                }
            }
            print_report(&report, cli.format);
        }
        Command::Decompose { file } => {
            let algebra = load(file)?;
            require_symmetric(&algebra)?;
            let report = analyze(&algebra, &options);
            print_report(&report, cli.format);
        }
        Command::Simplicity { file } => {
            let algebra = load(file)?;
            let report = analyze(&algebra, &options);
            print_report(&report, cli.format);
        }
        Command::Center { file } => {
            let algebra = load(file)?;
            let center = pck_core::decomposition::compute_center(&algebra);
            match cli.format {
                Format::Json => {
                    let basis: Vec<String> = center
                        .spanning_vectors()
                        .iter()
                        .map(|v| algebra.format_vector(v))
                        .collect();
                    write_out_line(&format!(
                        "{{\n  \"center_dimension\": {},\n  \"center_basis\": {}\n}}",
                        center.dim(),
                        serde_basis(&basis)
                    ));
                }
                Format::Text => {
                    write_out_line(&format!("center dimension: {}", center.dim()));
                    for v in center.spanning_vectors() {
                        write_out_line(&format!("  {}", algebra.format_vector(&v)));
                    }
                }
            }
        }
        Command::Corpus { list, emit } => match (list, emit) {
            (_, Some(name)) => match corpus::corpus_member(name) {
                Some(a) => write_out(&serialize_algebra(&a)),
                None => {
                    eprintln!("error: no corpus member named {name:?}");
                    return Err(ExitCode::from(1));
                }
            },
            _ => {
                for a in corpus::builtin_corpus() {
                    write_out_line(a.name());
                }
            }
        },
    }
    Ok(())
}

fn serde_basis(items: &[String]) -> String {
    if items.is_empty() {
        return "[]".to_string();
    }
    let quoted: Vec<String> = items.iter().map(|s| format!("\"{s}\"")).collect();
    format!("[{}]", quoted.join(", "))
}

fn serde_json_support(report: &AnalysisReport) -> String {
    format!(
        "{{\n  \"sigma_lambda\": {},\n  \"sigma_g\": {},\n  \"symmetric\": {}\n}}",
        serde_basis(&report.support.sigma_lambda),
        serde_basis(&report.support.sigma_g),
        report.support.symmetric
    )
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
