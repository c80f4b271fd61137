//! Command implementations behind the CLI surface.

use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use idpp::generators::{gnm, gnp};
use idpp::io;
use idpp::reductions::{dpp_to_idpp, is_to_idpp};
use idpp::solvers::{
    boost_threshold, boosted_solve, exact_idpp, greedy_idpp, BoostDispatch, SolveBudget,
    SolveError,
};
use idpp::verify::verify_idpp_solution;

use crate::report::RunReport;
use crate::{Algo, Family, ReduceKind};

#[derive(Debug, Error)]
pub enum CmdError {
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: io::ParseError,
    },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Budget(SolveError),
}

impl CmdError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CmdError::Parse { .. } | CmdError::InvalidParams(_) => 2,
            CmdError::Io { .. } => 3,
            CmdError::Budget(_) => 4,
        }
    }
}

fn read(path: &FsPath) -> Result<String, CmdError> {
    std::fs::read_to_string(path).map_err(|source| CmdError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &FsPath, contents: &str) -> Result<(), CmdError> {
    std::fs::write(path, contents).map_err(|source| CmdError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_err(path: &FsPath) -> impl FnOnce(io::ParseError) -> CmdError + '_ {
    move |source| CmdError::Parse {
        path: path.to_path_buf(),
        source,
    }
}

pub fn reduce(kind: ReduceKind, input: &FsPath, out: &FsPath) -> Result<ExitCode, CmdError> {
    let text = read(input)?;
    let (instance, map_text) = match kind {
        ReduceKind::Is2idpp => {
            let g = io::parse_graph(&text).map_err(parse_err(input))?;
            let (inst, map) = is_to_idpp(&g);
            (inst, io::serialize_is_map(&map))
        }
        ReduceKind::Dpp2idpp => {
            let source = io::parse_instance(&text).map_err(parse_err(input))?;
            let (inst, map) = dpp_to_idpp(&source);
            (inst, io::serialize_dpp_map(&map))
        }
    };
    write(out, &io::serialize_instance(&instance))?;
    let map_path = PathBuf::from(format!("{}.map", out.display()));
    write(&map_path, &map_text)?;
    println!(
        "n={} m={} k={}",
        instance.graph().node_count(),
        instance.graph().edge_count(),
        instance.pair_count()
    );
    Ok(ExitCode::SUCCESS)
}

pub fn solve(
    algo: Algo,
    instance_path: &FsPath,
    epsilon: Option<f64>,
    budget_nodes: usize,
    time_limit: Option<f64>,
    out: Option<&FsPath>,
) -> Result<ExitCode, CmdError> {
    let text = read(instance_path)?;
    let inst = io::parse_instance(&text).map_err(parse_err(instance_path))?;
    let budget = SolveBudget {
        max_nodes_exact: budget_nodes,
        max_path_nodes: None,
        time_limit: time_limit.map(Duration::from_secs_f64),
    };

    let started = Instant::now();
    let (solution, optimal) = match algo {
        Algo::Exact => {
            let result = exact_idpp(&inst, &budget).map_err(CmdError::Budget)?;
            let optimal = result.is_optimal();
            (result.into_solution(), optimal)
        }
        Algo::Greedy => (greedy_idpp(&inst), false),
        Algo::Boosted => {
            let epsilon = epsilon.ok_or_else(|| {
                CmdError::InvalidParams("--epsilon is required for the boosted solver".into())
            })?;
            let params =
                boost_threshold(epsilon).map_err(|e| CmdError::InvalidParams(e.to_string()))?;
            let (solution, dispatch) =
                boosted_solve(&inst, &params, greedy_idpp, &budget).map_err(CmdError::Budget)?;
            (solution, dispatch == BoostDispatch::BruteForce)
        }
    };
    let wall = started.elapsed();

    let report = RunReport::new(algo.name(), &inst, &solution, optimal, wall);
    println!("{}", report.stdout_line());
    eprintln!("{}", report.stderr_line());
    if let Some(out) = out {
        write(out, &io::serialize_solution(&solution))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(instance_path: &FsPath, solution_path: &FsPath) -> Result<ExitCode, CmdError> {
    let inst = io::parse_instance(&read(instance_path)?).map_err(parse_err(instance_path))?;
    let sol = io::parse_solution(&read(solution_path)?).map_err(parse_err(solution_path))?;
    let verdict = verify_idpp_solution(&inst, &sol);
    print!("{}", io::serialize_verdict(&verdict));
    Ok(if verdict.feasible() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub struct BenchConfig {
    pub family: Family,
    pub seed: u64,
    pub trials: usize,
    pub nodes: usize,
    pub prob: f64,
    pub alpha: f64,
    pub budget_nodes: usize,
    pub jobs: usize,
    pub out: Option<PathBuf>,
}

pub const BENCH_CSV_HEADER: &str =
    "trial,n,m,k,exact,greedy,ratio,sqrt_m,ratio_le_sqrt_m,sqrt_m_lt_n";

pub fn bench(cfg: &BenchConfig) -> Result<ExitCode, CmdError> {
    if cfg.nodes < 1 {
        return Err(CmdError::InvalidParams("--nodes must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&cfg.prob) {
        return Err(CmdError::InvalidParams(format!(
            "--prob must be in [0, 1], got {}",
            cfg.prob
        )));
    }
    if !(cfg.alpha > 0.0 && cfg.alpha < 2.0) {
        return Err(CmdError::InvalidParams(format!(
            "--alpha must lie in (0, 2), got {}",
            cfg.alpha
        )));
    }
    if cfg.jobs < 1 {
        return Err(CmdError::InvalidParams("--jobs must be at least 1".into()));
    }

    let started = Instant::now();
    let rows = bench_rows(cfg);
    let mut csv = String::from(BENCH_CSV_HEADER);
    csv.push('\n');
    for row in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    match &cfg.out {
        Some(path) => write(path, &csv)?,
        None => print!("{csv}"),
    }
    eprintln!(
        "wall_time_ms={:.3}",
        started.elapsed().as_secs_f64() * 1e3
    );
    Ok(ExitCode::SUCCESS)
}

/// Rows in trial order. Each trial derives its own RNG from (seed, trial),
/// so the table does not depend on how trials are spread over workers.
fn bench_rows(cfg: &BenchConfig) -> Vec<String> {
    let mut rows = vec![String::new(); cfg.trials];
    if cfg.jobs <= 1 {
        for (trial, row) in rows.iter_mut().enumerate() {
            *row = bench_trial(cfg, trial);
        }
    } else {
        let (tx, rx) = mpsc::channel();
        std::thread::scope(|scope| {
            for worker in 0..cfg.jobs {
                let tx = tx.clone();
                scope.spawn(move || {
                    for trial in (worker..cfg.trials).step_by(cfg.jobs) {
                        let row = bench_trial(cfg, trial);
                        if tx.send((trial, row)).is_err() {
                            return;
                        }
                    }
                });
            }
            drop(tx);
            for (trial, row) in rx {
                rows[trial] = row;
            }
        });
    }
    rows
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

fn bench_trial(cfg: &BenchConfig, trial: usize) -> String {
    let mut rng =
        ChaCha8Rng::seed_from_u64(splitmix64(cfg.seed ^ splitmix64(trial as u64)));
    let source_graph = match cfg.family {
        Family::Gnp => gnp(cfg.nodes, cfg.prob, &mut rng),
        Family::Sparse => {
            let n = cfg.nodes + trial;
            let cap = n * (n - 1) / 2;
            let m = ((n as f64).powf(cfg.alpha).round() as usize).min(cap);
            gnm(n, m, &mut rng)
        }
    };
    let (inst, _) = is_to_idpp(&source_graph);
    let (n, m, k) = (
        inst.graph().node_count(),
        inst.graph().edge_count(),
        inst.pair_count(),
    );

    let greedy = greedy_idpp(&inst).size();
    let exact = (n <= cfg.budget_nodes).then(|| {
        exact_idpp(&inst, &SolveBudget::with_max_nodes(cfg.budget_nodes))
            .expect("within budget by construction")
            .into_solution()
            .size()
    });

    let sqrt_m = (m as f64).sqrt();
    let (exact_cell, ratio_cell, ratio_ok_cell) = match exact {
        Some(value) => {
            let ratio = value as f64 / greedy as f64;
            (
                value.to_string(),
                format!("{ratio:.6}"),
                u8::from(ratio <= sqrt_m).to_string(),
            )
        }
        None => (String::new(), String::new(), String::new()),
    };
    format!(
        "{trial},{n},{m},{k},{exact_cell},{greedy},{ratio_cell},{sqrt_m:.6},{ratio_ok_cell},{}",
        u8::from(sqrt_m < n as f64)
    )
}
