//! Command-line front end: compute skew information from matrix files, scan the
//! figure families into CSV, and run local-uncertainty-relation witnesses.
//!
//! Exit codes are part of the scripting contract: 0 success, 2 parse/validation
//! failure, 3 dimension mismatch, 4 unwritable output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use skewinfo::bounds::{evaluate_all, ObservableSet};
use skewinfo::catalog::{figure_family, FigureFamily};
use skewinfo::entanglement::{lur_witness, optimal_constant};
use skewinfo::hermitian::{DensityMatrix, HermitianOperator};
use skewinfo::skew::skew_information;
use skewinfo::{matrixfile, Error};

const EXIT_PARSE: u8 = 2;
const EXIT_DIMENSION: u8 = 3;
const EXIT_IO: u8 = 4;

/// Multi-start count used when witness constants are computed on the fly.
const WITNESS_TRIALS: usize = 64;

#[derive(Parser)]
#[command(
    name = "skewinfo",
    version,
    about = "Skew information, uncertainty bounds, and entanglement witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print I_rho(H) for a state file and an observable file.
    Skew {
        /// Density-matrix JSON file.
        #[arg(long)]
        state: PathBuf,
        /// Observable JSON file.
        #[arg(long)]
        obs: PathBuf,
    },
    /// Scan a figure family over theta in [0, 2pi), writing CSV.
    Scan {
        /// Family name: fig1_bloch or fig2_spin1.
        #[arg(long)]
        family: String,
        /// Number of uniform grid points (at least 2).
        #[arg(long, default_value_t = 64)]
        points: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate the local-uncertainty-relation witness on a bipartite state.
    Witness {
        /// Density-matrix JSON file for the bipartite state.
        #[arg(long)]
        state: PathBuf,
        /// Observable files for Alice's set (repeatable).
        #[arg(long = "obs", required = true)]
        obs: Vec<PathBuf>,
        /// Observable files for Bob's set (repeatable; defaults to Alice's set).
        #[arg(long = "obs-b")]
        obs_b: Vec<PathBuf>,
        /// Uncertainty constant c_A; computed from Alice's set when omitted.
        #[arg(long)]
        ca: Option<f64>,
        /// Uncertainty constant c_B; computed from Bob's set when omitted.
        #[arg(long)]
        cb: Option<f64>,
        /// Seed for the multi-start constant optimizer.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::DimensionMismatch { .. }
        | Error::BadFactorization { .. }
        | Error::SetSizeMismatch { .. } => EXIT_DIMENSION,
        _ => EXIT_PARSE,
    }
}

fn classify(err: Error) -> Failure {
    Failure::new(exit_code_for(&err), err.to_string())
}

/// Shortest round-trip decimal capped at 12 significant digits, locale-independent.
fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    let mut text = format!("{rounded}");
    if !text.contains('.') && !text.contains('e') {
        text.push_str(".0");
    }
    text
}

fn read_matrix(path: &Path) -> Result<skewinfo::ComplexMatrix, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    matrixfile::parse(&text)
        .map_err(|e| Failure::new(exit_code_for(&e), format!("{}: {e}", path.display())))
}

fn read_state(path: &Path) -> Result<DensityMatrix, Failure> {
    DensityMatrix::new(read_matrix(path)?)
        .map_err(|e| Failure::new(exit_code_for(&e), format!("{}: {e}", path.display())))
}

fn read_observable(path: &Path) -> Result<HermitianOperator, Failure> {
    HermitianOperator::new(read_matrix(path)?)
        .map_err(|e| Failure::new(exit_code_for(&e), format!("{}: {e}", path.display())))
}

fn read_observable_set(paths: &[PathBuf]) -> Result<ObservableSet, Failure> {
    let ops = paths
        .iter()
        .map(|p| read_observable(p))
        .collect::<Result<Vec<_>, _>>()?;
    ObservableSet::new(ops).map_err(classify)
}

fn cmd_skew(state: &Path, obs: &Path) -> Result<(), Failure> {
    let rho = read_state(state)?;
    let h = read_observable(obs)?;
    let value = skew_information(&rho, &h).map_err(classify)?;
    println!("{}", format_value(value));
    Ok(())
}

const SCAN_COLUMNS: [&str; 4] = ["theorem1", "chen", "pairwise_sum", "pairwise_diff"];

fn cmd_scan(family: &str, points: usize, out: &Path) -> Result<(), Failure> {
    let family: FigureFamily = family.parse().map_err(classify)?;
    if points < 2 {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("points must be at least 2, got {points}"),
        ));
    }
    let mut csv = String::from("theta,sum_skew,theorem1,chen,pairwise_sum,pairwise_diff\n");
    for k in 0..points {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / points as f64;
        let (rho, set) = figure_family(family, theta).map_err(classify)?;
        let report = evaluate_all(&rho, &set, &[]).map_err(classify)?;
        if !report.all_satisfied() {
            return Err(Failure::new(
                1,
                format!("internal inequality audit failed at theta {theta}"),
            ));
        }
        write!(
            csv,
            "{},{}",
            format_value(theta),
            format_value(report.sum_skew)
        )
        .expect("writing to string cannot fail");
        for column in SCAN_COLUMNS {
            write!(csv, ",{}", format_value(report.bounds[column]))
                .expect("writing to string cannot fail");
        }
        csv.push('\n');
    }
    std::fs::write(out, csv)
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", out.display())))?;
    Ok(())
}

fn cmd_witness(
    state: &Path,
    obs: &[PathBuf],
    obs_b: &[PathBuf],
    ca: Option<f64>,
    cb: Option<f64>,
    seed: u64,
) -> Result<(), Failure> {
    let rho = read_state(state)?;
    let set_a = read_observable_set(obs)?;
    let set_b = if obs_b.is_empty() {
        set_a.clone()
    } else {
        read_observable_set(obs_b)?
    };
    let c_a = ca.unwrap_or_else(|| optimal_constant(&set_a, WITNESS_TRIALS, seed));
    let c_b = cb.unwrap_or_else(|| optimal_constant(&set_b, WITNESS_TRIALS, seed));
    let verdict = lur_witness(&rho, &set_a, &set_b, c_a, c_b).map_err(classify)?;
    println!("total {}", format_value(verdict.total));
    println!("threshold {}", format_value(verdict.threshold));
    if verdict.violated {
        println!("ENTANGLED (witness violated)");
    } else {
        println!("no violation");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Skew { state, obs } => cmd_skew(state, obs),
        Command::Scan {
            family,
            points,
            out,
        } => cmd_scan(family, *points, out),
        Command::Witness {
            state,
            obs,
            obs_b,
            ca,
            cb,
            seed,
        } => cmd_witness(state, obs, obs_b, *ca, *cb, *seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
