//! `coxpoly`: exact Coxeter polynomials, graph spectra, coefficient
//! reports, and the verification campaigns, from the command line.
//!
//! Exit codes: 0 on success, 1 on input parse failures and on verification
//! sweeps that find failures, 2 on violated preconditions (cyclic quiver,
//! non-bipartite input, out-of-bounds sweep, unknown campaign).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use coxpoly::campaigns::{run_campaign, Campaign, SweepOptions};
use coxpoly::formulas::verify_theorem1;
use coxpoly::{Graph, IntMatrix, Quiver};

#[derive(Parser)]
#[command(name = "coxpoly", version, about = "Exact Coxeter polynomials of quivers and spectra of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Coxeter polynomial of an acyclic quiver.
    Coxeter {
        /// Quiver file (`quiver n` text format, or JSON `{"n":..,"arrows":[[i,j],..]}`)
        #[arg(required_unless_present = "matrix")]
        input: Option<PathBuf>,
        /// Compute det(xC + C^T) of a raw integer matrix file instead
        #[arg(long, conflicts_with = "input")]
        matrix: Option<PathBuf>,
    },
    /// Print the characteristic polynomial of a graph's adjacency matrix.
    Charpoly {
        /// Graph file (`graph n` header, `i -- j` edge lines)
        #[arg(required_unless_present = "matrix")]
        input: Option<PathBuf>,
        /// Compute det(xI - M) of a raw integer matrix file instead
        #[arg(long, conflicts_with = "input")]
        matrix: Option<PathBuf>,
    },
    /// Emit the closed-form vs. determinant coefficient report for a
    /// bipartite quiver as JSON.
    Coefficients {
        /// Quiver file (text or JSON)
        input: PathBuf,
    },
    /// Reverse all arrows at a sink or source and print the result.
    Reflect {
        /// Vertex to reflect at (must be a sink or a source)
        #[arg(long)]
        at: usize,
        /// Quiver file (text or JSON)
        input: PathBuf,
    },
    /// Run a verification campaign and report a machine-readable summary.
    Verify {
        /// One of: acampo, theorem1, corollary-trees, reflections,
        /// newton-vs-det, n1n2, represent-roundtrip, congruence, walks
        campaign: String,
        /// Check a single instance size
        #[arg(long)]
        n: Option<usize>,
        /// Check every size up to this bound (enumerated campaigns)
        #[arg(long)]
        n_max: Option<usize>,
        /// RNG seed for randomized campaigns
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances (randomized campaigns)
        #[arg(long)]
        cases: Option<u64>,
        /// Worker threads; 1 forces the sequential path
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Failure categories mapped to exit codes.
enum CmdError {
    /// Unreadable or unparseable input (exit 1).
    Input(String),
    /// Violated precondition or out-of-bounds request (exit 2).
    Domain(String),
    /// A verification sweep found failures (exit 1).
    Verification,
}

impl CmdError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CmdError::Input(_) | CmdError::Verification => ExitCode::from(1),
            CmdError::Domain(_) => ExitCode::from(2),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CmdError::Input(msg) | CmdError::Domain(msg) => eprintln!("error: {msg}"),
                CmdError::Verification => {}
            }
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<(), CmdError> {
    match command {
        Command::Coxeter { input, matrix } => {
            let phi = match (input, matrix) {
                (Some(path), None) => {
                    let quiver = load_quiver(&path)?;
                    quiver.coxeter_poly().map_err(domain)?
                }
                (None, Some(path)) => load_matrix(&path)?.coxeter_poly(),
                _ => unreachable!("clap enforces exactly one input"),
            };
            println!("{phi}");
            Ok(())
        }
        Command::Charpoly { input, matrix } => {
            let p = match (input, matrix) {
                (Some(path), None) => load_graph(&path)?.adjacency().char_poly_newton(),
                (None, Some(path)) => load_matrix(&path)?.char_poly_newton(),
                _ => unreachable!("clap enforces exactly one input"),
            };
            println!("{p}");
            Ok(())
        }
        Command::Coefficients { input } => {
            let quiver = load_quiver(&input)?;
            let report = verify_theorem1(&quiver).map_err(domain)?;
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            if report.verdict {
                Ok(())
            } else {
                Err(CmdError::Verification)
            }
        }
        Command::Reflect { at, input } => {
            let quiver = load_quiver(&input)?;
            let reflected = quiver.reflect(at).map_err(domain)?;
            println!("{reflected}");
            Ok(())
        }
        Command::Verify {
            campaign,
            n,
            n_max,
            seed,
            cases,
            workers,
            format,
        } => {
            let campaign = Campaign::parse(&campaign).map_err(domain)?;
            let opts = SweepOptions {
                n,
                n_max,
                seed,
                cases,
                workers,
            };
            let summary = run_campaign(campaign, &opts).map_err(domain)?;
            match format {
                Format::Json => {
                    // One JSON line per failure, then the summary object.
                    for f in &summary.failures {
                        println!("{}", serde_json::to_string(f).expect("failure serializes"));
                    }
                    println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
                }
                Format::Text => {
                    for f in &summary.failures {
                        println!("FAIL instance:\n{}\nexpected: {}\nactual:   {}", f.instance, f.expected, f.actual);
                    }
                    println!(
                        "campaign {}: {} instances checked, {} failures, {:.2?}",
                        summary.campaign,
                        summary.instances_checked,
                        summary.failures.len(),
                        summary.elapsed
                    );
                }
            }
            if summary.passed() {
                Ok(())
            } else {
                Err(CmdError::Verification)
            }
        }
    }
}

fn domain(e: coxpoly::Error) -> CmdError {
    CmdError::Domain(e.to_string())
}

fn read(path: &Path) -> Result<String, CmdError> {
    fs::read_to_string(path)
        .map_err(|e| CmdError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_quiver(path: &Path) -> Result<Quiver, CmdError> {
    let text = read(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        Quiver::from_json(&text)
    } else {
        Quiver::from_str(&text)
    };
    parsed.map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CmdError> {
    let text = read(path)?;
    Graph::from_str(&text).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<IntMatrix, CmdError> {
    let text = read(path)?;
    IntMatrix::from_str(&text).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}
