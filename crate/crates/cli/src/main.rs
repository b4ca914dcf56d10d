use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wog_toric::cli::{
    classify_report, dot_report, generators_report, matrix_report, parse_graph, read_text, verify_report, zero_report,
    CliError, Report,
};
use wog_toric::graph::WeightedOrientedGraph;
use wog_toric::oracle::Budget;
use wog_toric::toric::ComputeOptions;

/// Toric ideals of vertex-weighted oriented graphs.
#[derive(Parser)]
#[command(name = "wogtoric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shape of the pruned graph and the balance of each cycle.
    Classify { graph: PathBuf },
    /// Whether the toric ideal is zero, and why.
    Zero { graph: PathBuf },
    /// Generators of the toric ideal, one binomial per line.
    Generators {
        graph: PathBuf,
        /// Compute through the saturation oracle even when a fast path applies.
        #[arg(long)]
        oracle: bool,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// The incidence matrix, one row per vertex.
    Matrix { graph: PathBuf },
    /// Check binomials (one per line of FILE) against the toric ideal.
    Verify {
        graph: PathBuf,
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// The graph in DOT format.
    Dot { graph: PathBuf },
}

#[derive(Args)]
struct BudgetArgs {
    /// Maximum number of S-pair reductions in the oracle.
    #[arg(long, value_name = "N", default_value_t = Budget::default().max_pairs)]
    bound: usize,
    /// Skip S-pairs whose lcm has a larger total degree.
    #[arg(long, value_name = "D", default_value_t = Budget::default().max_degree)]
    max_degree: u64,
}

impl BudgetArgs {
    fn options(&self, force_oracle: bool) -> ComputeOptions {
        ComputeOptions {
            force_oracle,
            budget: Budget {
                max_pairs: self.bound,
                max_degree: self.max_degree,
            },
        }
    }
}

fn load(path: &Path) -> Result<WeightedOrientedGraph, Report> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| {
            Report::from_error(&CliError::Io {
                path: "<stdin>".into(),
                message: e.to_string(),
            })
        })?;
        s
    } else {
        read_text(path).map_err(|e| Report::from_error(&e))?
    };
    parse_graph(&text).map_err(|e| located(path, &e))
}

/// The report for `e`, with parse positions prefixed by `path`.
fn located(path: &Path, e: &CliError) -> Report {
    let mut report = Report::from_error(e);
    if let CliError::Parse { .. } = e {
        report.stderr = format!("error: {}:{e}\n", path.display());
    }
    report
}

fn dispatch(command: &Command) -> Result<Report, Report> {
    let fail = |e: CliError| Report::from_error(&e);
    match command {
        Command::Classify { graph } => classify_report(&load(graph)?).map_err(fail),
        Command::Zero { graph } => Ok(zero_report(&load(graph)?)),
        Command::Generators {
            graph,
            oracle,
            json,
            budget,
        } => generators_report(&load(graph)?, &budget.options(*oracle), *json).map_err(fail),
        Command::Matrix { graph } => Ok(matrix_report(&load(graph)?)),
        Command::Verify { graph, file, budget } => {
            let g = load(graph)?;
            let claims = read_text(file).map_err(fail)?;
            verify_report(&g, &claims, &budget.options(false)).map_err(|e| located(file, &e))
        }
        Command::Dot { graph } => Ok(dot_report(&load(graph)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = dispatch(&cli.command).unwrap_or_else(|r| r);
    let _ = std::io::stdout().write_all(report.stdout.as_bytes());
    let _ = std::io::stderr().write_all(report.stderr.as_bytes());
    ExitCode::from(report.status.code() as u8)
}
