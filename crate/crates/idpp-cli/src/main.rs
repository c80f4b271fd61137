//! `idpp`: reduce, solve, verify, and bench induced-disjoint-paths instances.
//!
//! Exit codes: 0 success/feasible, 1 infeasible, 2 parse or parameter error,
//! 3 I/O error, 4 budget refusal. Stdout is deterministic for identical
//! inputs and seeds; timing goes to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

#[derive(Parser)]
#[command(
    name = "idpp",
    version,
    about = "Induced disjoint paths toolkit: reductions, solvers, verification, benches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    /// Independent set to induced disjoint paths (pendant-pair gadget)
    Is2idpp,
    /// Node-disjoint paths to induced disjoint paths (edge subdivision)
    Dpp2idpp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// Brute-force optimum
    Exact,
    /// Shortest-first greedy heuristic
    Greedy,
    /// Exact below the epsilon threshold, greedy above it
    Boosted,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Greedy => "greedy",
            Algo::Boosted => "boosted",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Erdős–Rényi graphs with a fixed edge probability
    Gnp,
    /// Growing graphs with edge count ~ nodes^alpha
    Sparse,
}

#[derive(Subcommand)]
enum Command {
    /// Transform an input file through a reduction; writes the reduced
    /// instance to --out and its map to `<out>.map`
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        /// Graph file for is2idpp, instance file for dpp2idpp
        input: PathBuf,
        /// Path for the reduced instance
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an instance and print a one-line run report
    Solve {
        #[arg(value_enum)]
        algo: Algo,
        instance: PathBuf,
        /// Ratio parameter for the boosted solver, in (0, 1)
        #[arg(long)]
        epsilon: Option<f64>,
        /// Largest graph the exact solver may attempt
        #[arg(long, default_value_t = 20)]
        budget_nodes: usize,
        /// Wall-clock limit in seconds for exact solving
        #[arg(long)]
        time_limit: Option<f64>,
        /// Write the solution file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file against an instance file; exit 0 iff feasible
    Verify {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Run seeded random trials and emit a CSV table
    Bench {
        #[arg(value_enum)]
        family: Family,
        /// Seed for the trial generator (there is no entropy default)
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// gnp: node count per trial; sparse: node count of trial 0
        #[arg(long, default_value_t = 6)]
        nodes: usize,
        /// Edge probability for the gnp family
        #[arg(long, default_value_t = 0.3)]
        prob: f64,
        /// Edge-growth exponent for the sparse family, in (0, 2)
        #[arg(long, default_value_t = 1.2)]
        alpha: f64,
        /// Largest reduced instance the exact column is computed for
        #[arg(long, default_value_t = 20)]
        budget_nodes: usize,
        /// Worker threads; the CSV is identical for any job count
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reduce { kind, input, out } => commands::reduce(kind, &input, &out),
        Command::Solve {
            algo,
            instance,
            epsilon,
            budget_nodes,
            time_limit,
            out,
        } => commands::solve(algo, &instance, epsilon, budget_nodes, time_limit, out.as_deref()),
        Command::Verify { instance, solution } => commands::verify(&instance, &solution),
        Command::Bench {
            family,
            seed,
            trials,
            nodes,
            prob,
            alpha,
            budget_nodes,
            jobs,
            out,
        } => commands::bench(&commands::BenchConfig {
            family,
            seed,
            trials,
            nodes,
            prob,
            alpha,
            budget_nodes,
            jobs,
            out,
        }),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
