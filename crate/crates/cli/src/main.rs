//! `isoform`: analyze symmetric pairs, fold Dynkin diagrams, run the
//! verification suite and the Weyl-order oracle.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a verification failure.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use isoform_core::catalog::{parse_params, Catalog};
use isoform_core::diagram::fold;
use isoform_core::formality::check_formality;
use isoform_core::rootsys::{CartanType, Series};
use isoform_core::{Error, InvolutionName};

use render::{OracleRow, SuiteRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Dot,
}

#[derive(Parser, Debug)]
#[command(
    name = "isoform",
    version,
    about = "Equivariant formality of isotropy actions on symmetric spaces"
)]
struct Cli {
    /// Catalog JSON file replacing the embedded one.
    #[arg(long, env = "ISOFORM_CATALOG", global = true)]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify one symmetric pair from the catalog.
    Analyze {
        #[arg(long)]
        pair: String,
        /// Parameter as k=v; repeat for several.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Restrict a root system along a diagram involution.
    Fold {
        #[arg(long = "type")]
        series: String,
        #[arg(long)]
        rank: usize,
        /// identity, flip, fork-swap
        #[arg(long)]
        involution: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Check every pair of the built-in verification suite.
    VerifyAll {
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Compare brute-force Weyl group orders with the closed-form table.
    Oracle {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
}

/// A failed run: exit code and message for stderr.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() || matches!(e, Error::NotDiagramAutomorphism(_) | Error::NotInvolutive(_)) {
            1
        } else {
            2
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(1, msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            eprintln!("isoform: {msg}");
            ExitCode::from(code)
        }
    }
}

fn load_catalog(path: Option<&PathBuf>) -> Result<Catalog, Failure> {
    match path {
        Some(p) => Catalog::load(p).map_err(|e| usage(e.to_string())),
        None => Ok(Catalog::embedded()),
    }
}

fn no_dot(format: Format, cmd: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(usage(format!("--format dot is only available for fold, not {cmd}")))
    } else {
        Ok(())
    }
}

/// Output text, or a failure carrying the already-rendered output.
fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Analyze { pair, params, format } => {
            no_dot(format, "analyze")?;
            let catalog = load_catalog(cli.catalog.as_ref())?;
            let params = parse_params(&params).map_err(|e| usage(e.to_string()))?;
            let entry = catalog.instantiate(&pair, &params).map_err(|e| match e {
                Error::UnknownLabel(_) => usage(format!("{e}; known labels: {}", catalog.labels().join(", "))),
                other => Failure::from(other),
            })?;
            let report = check_formality(&entry)?;
            let out = match format {
                Format::Json => render::json(&report),
                _ => render::report_markdown(&report),
            };
            if report.formal {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure(
                    2,
                    format!(
                        "{}: dim H*(M^T) = {} differs from dim H*(M) = {}",
                        entry.display_name(),
                        report.dim_fixed_set,
                        report.entry.dim_m
                    ),
                ))
            }
        }
        Command::Fold {
            series,
            rank,
            involution,
            format,
        } => {
            let series: Series = series.parse().map_err(|e: Error| usage(e.to_string()))?;
            let name: InvolutionName = involution.parse().map_err(|e: Error| usage(e.to_string()))?;
            if name == InvolutionName::FactorSwap {
                return Err(usage("fold works on a single simple type; factor-swap needs two"));
            }
            let result = fold(&[CartanType::new(series, rank)], name)?;
            Ok(match format {
                Format::Json => render::json(&result),
                Format::Markdown => render::fold_markdown(&result),
                Format::Dot => result.to_dot(),
            })
        }
        Command::VerifyAll { format } => {
            no_dot(format, "verify-all")?;
            let catalog = load_catalog(cli.catalog.as_ref())?;
            let rows = render::suite_rows(&catalog);
            let out = match format {
                Format::Json => render::json(&render::SuiteOutput::new(&rows)),
                _ => render::suite_markdown(&rows),
            };
            let failed = rows.iter().filter(|r| !SuiteRow::ok(r)).count();
            if failed == 0 {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure(2, format!("{failed} of {} suite entries failed", rows.len())))
            }
        }
        Command::Oracle { max_rank, format } => {
            no_dot(format, "oracle")?;
            if !(1..=6).contains(&max_rank) {
                return Err(usage(format!("--max-rank must be between 1 and 6, got {max_rank}")));
            }
            let catalog = load_catalog(cli.catalog.as_ref())?;
            let rows = render::oracle_rows(max_rank, &catalog);
            let out = match format {
                Format::Json => render::json(&render::OracleOutput::new(&rows)),
                _ => render::oracle_markdown(&rows),
            };
            let mismatches = rows.iter().filter(|r| OracleRow::is_mismatch(r)).count();
            if mismatches == 0 {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure(2, format!("{mismatches} oracle mismatches")))
            }
        }
    }
}
