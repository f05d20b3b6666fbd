//! Command-line driver for the multiplicity verifications.
//!
//! Three subcommands:
//! - `verify`: run the registered checks for one or more primes at a fixed
//!   level r and emit the full report (JSON or text);
//! - `table`: sweep all odd primes up to a bound with the closed formulas
//!   only (no group enumeration) and emit one row per prime;
//! - `classnum`: cross-check h(-p) between the reduced-forms count, the
//!   Dirichlet sum, and the Gauss-sum decomposition.
//!
//! Exit codes: 0 when every non-skipped check passes, 1 when any check
//! fails, 2 on invalid input (composite p, p ≡ 1 (mod 4) for `classnum`,
//! r < 2, bad flags).

use clap::{Parser, Subcommand, ValueEnum};
use sl2char::checks::{run_verification, CheckRegistry, VerifyParams};
use sl2char::report::{
    classnum_record, classnum_to_json, classnum_to_text, table_rows, table_to_csv, table_to_json,
    table_to_text, ReportDocument,
};
use sl2char::Error;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sl2char",
    version,
    about = "Exact verification of invariant-character multiplicities on sl2(F_p)",
    long_about = "Computes, in exact arithmetic, the multiplicities of the two invariant\n\
                  characters of sl2(F_p) in the character of the sum space attached to\n\
                  SL2(Z/p^r), and verifies that their difference equals p^(2r-3)·h(-p)\n\
                  for p ≡ 3 (mod 4), vanishes for p ≡ 1 (mod 4), and equals 3^(2r-4)\n\
                  for p = 3."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run every registered check for the given primes at level r.
    Verify {
        /// Odd prime to verify; repeat the flag for a batch.
        #[arg(long = "p", required = true)]
        p: Vec<u64>,
        /// Level r >= 2 of the congruence quotient SL2(Z/p^r).
        #[arg(long = "r")]
        r: u32,
        /// Output format (csv is not available for verify reports).
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Raise the work budgets to the hard guards, running the
        /// group-enumeration and table checks at larger sizes.
        #[arg(long)]
        deep: bool,
        /// Quadratic nonresidue to use instead of the smallest one; every
        /// verdict must be invariant under this choice.
        #[arg(long)]
        nonresidue: Option<u64>,
        /// Stamp the report with the generation time (output is otherwise
        /// byte-deterministic).
        #[arg(long)]
        timestamp: bool,
    },
    /// Closed-formula sweep over all odd primes p <= pmax at level r.
    Table {
        /// Upper bound of the prime sweep (>= 3).
        #[arg(long)]
        pmax: u64,
        /// Level r >= 2.
        #[arg(long = "r")]
        r: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Quadratic nonresidue override; must be a nonresidue modulo every
        /// prime in the sweep.
        #[arg(long)]
        nonresidue: Option<u64>,
    },
    /// Cross-check the class number h(-p) for a prime p ≡ 3 (mod 4).
    Classnum {
        /// Prime p ≡ 3 (mod 4).
        #[arg(long = "p")]
        p: u64,
        /// Output format (csv is not available here).
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Quadratic nonresidue override for the Gauss-sum route.
        #[arg(long)]
        nonresidue: Option<u64>,
    },
}

fn emit(rendered: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify {
            p,
            r,
            format,
            out,
            deep,
            nonresidue,
            timestamp,
        } => {
            if format == Format::Csv {
                return Err(Error::InvalidInput(
                    "csv is not available for verify reports; use json or text".into(),
                ));
            }
            let registry = CheckRegistry::standard();
            let mut reports = Vec::with_capacity(p.len());
            for &prime in &p {
                let params = VerifyParams {
                    p: prime,
                    r,
                    nonresidue,
                    deep,
                };
                reports.push(run_verification(&params, &registry)?);
            }
            let mut doc = ReportDocument::from_reports(&reports);
            if timestamp {
                doc = doc.with_timestamp(
                    chrono::Utc::now()
                        .format("%Y-%m-%dT%H:%M:%SZ")
                        .to_string(),
                );
            }
            let rendered = match format {
                Format::Json => doc.to_json(),
                Format::Text => doc.to_text(),
                Format::Csv => unreachable!("rejected above"),
            };
            emit(&rendered, out.as_deref())?;
            Ok(if doc.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Table {
            pmax,
            r,
            format,
            out,
            nonresidue,
        } => {
            let rows = table_rows(pmax, r, nonresidue)?;
            let rendered = match format {
                Format::Json => table_to_json(&rows),
                Format::Csv => table_to_csv(&rows),
                Format::Text => table_to_text(&rows),
            };
            emit(&rendered, out.as_deref())?;
            Ok(if rows.iter().all(|row| row.parity_ok) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Classnum {
            p,
            format,
            nonresidue,
        } => {
            let record = classnum_record(p, nonresidue)?;
            let rendered = match format {
                Format::Json => classnum_to_json(&record),
                Format::Text => classnum_to_text(&record),
                Format::Csv => {
                    return Err(Error::InvalidInput(
                        "csv is not available for classnum; use json or text".into(),
                    ))
                }
            };
            emit(&rendered, None)?;
            let disagrees =
                record.dirichlet_agrees == "false" || record.gross_agrees == "false";
            Ok(if disagrees {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
