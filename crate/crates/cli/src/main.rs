use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arrowdpr_cli::bench::{self, BenchConfig};
use arrowdpr_cli::compute::{compute, Operation};
use arrowdpr_cli::format::AnyMatrix;
use arrowdpr_cli::verify::{self, FieldSpec, VerifyConfig};
use arrowdpr_cli::CliError;
use clap::{Parser, Subcommand};

/// O(n) matvec, determinant and inverse for arrowhead and DPR1 matrices.
#[derive(Parser)]
#[command(name = "arrowdpr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one operation on a matrix file and print JSON.
    Compute {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum)]
        op: Operation,
        /// Vector file for `matvec`.
        #[arg(long = "vec", value_name = "FILE")]
        vector: Option<PathBuf>,
        /// Diagonal entries with magnitude ≤ tol count as zero.
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
    /// Check the fast operations against dense oracles on random inputs.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', value_enum)]
        fields: Option<Vec<FieldSpec>>,
    },
    /// Time each operation over a range of orders and write CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', value_enum, default_value = "real")]
        fields: Vec<FieldSpec>,
        #[arg(long, value_delimiter = ',')]
        ops: Vec<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_name = "FILE.csv")]
        out: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes to stdout; a reader that went away early is not an error.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Write {
            path: PathBuf::from("<stdout>"),
            source: e,
        }),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute {
            input,
            op,
            vector,
            tol,
        } => {
            let matrix = AnyMatrix::parse(&read(&input)?)?;
            let vector = vector.as_deref().map(read).transpose()?;
            emit(&format!(
                "{}\n",
                compute(&matrix, op, vector.as_deref(), tol)?
            ))?;
        }
        Command::Verify {
            seed,
            trials,
            sizes,
            fields,
        } => {
            let defaults = VerifyConfig::default();
            let cfg = VerifyConfig {
                seed,
                trials,
                sizes: sizes.unwrap_or(defaults.sizes),
                fields: fields.unwrap_or(defaults.fields),
            };
            let summary = verify::run_verify(&cfg);
            emit(&summary.render())?;
            if summary.failures() > 0 {
                return Err(CliError::VerifyFailed(summary.failures()));
            }
        }
        Command::Bench {
            sizes,
            fields,
            ops,
            seed,
            out,
        } => {
            let cfg = BenchConfig {
                sizes,
                fields,
                seed,
                operations: ops,
            };
            let records = bench::run_bench(&cfg)?;
            bench::write_csv_file(&out, &records)?;
            emit(&bench::slope_report(&records))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
