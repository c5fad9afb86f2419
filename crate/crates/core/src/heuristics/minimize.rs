use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coloring::{is_packing_coloring, Coloring};
use crate::error::HeuristicError;
use crate::graph::DistanceMatrix;
use crate::heuristics::{
    genetic_algorithm, greedy_random_orders, local_search, GaConfig, HeuristicOutcome, LsConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Greedy,
    Ls,
    Ga,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Algorithm::Greedy => "greedy",
            Algorithm::Ls => "ls",
            Algorithm::Ga => "ga",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(Algorithm::Greedy),
            "ls" => Ok(Algorithm::Ls),
            "ga" => Ok(Algorithm::Ga),
            other => Err(format!(
                "unknown algorithm `{other}` (expected greedy, ls or ga)"
            )),
        }
    }
}

/// Solver plus its parameters. The `k` inside the LS and GA configs is the
/// starting budget for [`solve_fixed_k`] and is overridden by
/// [`minimize_colors`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "algorithm", rename_all = "lowercase")]
pub enum SolverConfig {
    Greedy { orders: usize, seed: u64 },
    Ls(LsConfig),
    Ga(GaConfig),
}

impl SolverConfig {
    pub const DEFAULT_GREEDY_ORDERS: usize = 6;

    pub fn algorithm(&self) -> Algorithm {
        match self {
            SolverConfig::Greedy { .. } => Algorithm::Greedy,
            SolverConfig::Ls(_) => Algorithm::Ls,
            SolverConfig::Ga(_) => Algorithm::Ga,
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            SolverConfig::Greedy { seed, .. } => *seed,
            SolverConfig::Ls(c) => c.seed,
            SolverConfig::Ga(c) => c.seed,
        }
    }

    /// Default parameters for `algorithm` with budget `k`.
    pub fn default_for(algorithm: Algorithm, k: u32, seed: u64) -> Self {
        match algorithm {
            Algorithm::Greedy => SolverConfig::Greedy {
                orders: Self::DEFAULT_GREEDY_ORDERS,
                seed,
            },
            Algorithm::Ls => SolverConfig::Ls(LsConfig::new(k).with_seed(seed)),
            Algorithm::Ga => SolverConfig::Ga(GaConfig::new(k).with_seed(seed)),
        }
    }

    fn with_k(self, k: u32) -> Self {
        match self {
            SolverConfig::Ls(c) => SolverConfig::Ls(LsConfig { k, ..c }),
            SolverConfig::Ga(c) => SolverConfig::Ga(GaConfig { k, ..c }),
            greedy => greedy,
        }
    }
}

/// Result of one solver invocation, with its certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Color budget of the reported coloring; for a solved run this is the
    /// number of colors it uses.
    pub k: u32,
    pub colors_used: usize,
    pub solved: bool,
    pub violations: usize,
    pub coloring: Coloring,
    pub iterations: u64,
    pub wall_time_ms: f64,
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn run_at(d: &DistanceMatrix, config: &SolverConfig) -> Result<HeuristicOutcome, HeuristicError> {
    match config {
        SolverConfig::Ls(c) => local_search(d, c),
        SolverConfig::Ga(c) => genetic_algorithm(d, c),
        SolverConfig::Greedy { .. } => unreachable!("greedy has no fixed budget"),
    }
}

fn best_greedy(d: &DistanceMatrix, orders: usize, seed: u64) -> Coloring {
    greedy_random_orders(d, orders.max(1), seed)
        .into_iter()
        .min_by_key(Coloring::colors_used)
        .expect("at least one order")
        .compacted()
}

/// Runs the configured solver once at its own budget `k` (greedy ignores
/// budgets and reports its best order).
pub fn solve_fixed_k(
    d: &DistanceMatrix,
    config: &SolverConfig,
) -> Result<RunResult, HeuristicError> {
    let start = Instant::now();
    if let SolverConfig::Greedy { orders, seed } = *config {
        let best = best_greedy(d, orders, seed);
        return Ok(RunResult {
            algorithm: Algorithm::Greedy,
            seed,
            k: best.k(),
            colors_used: best.colors_used(),
            solved: true,
            violations: 0,
            coloring: best,
            iterations: orders as u64,
            wall_time_ms: elapsed_ms(start),
        });
    }
    let out = run_at(d, config)?;
    Ok(RunResult {
        algorithm: config.algorithm(),
        seed: config.seed(),
        k: out.best_coloring.k(),
        colors_used: out.colors_used,
        solved: out.solved,
        violations: out.best_violations,
        coloring: out.best_coloring,
        iterations: out.iterations_used,
        wall_time_ms: elapsed_ms(start),
    })
}

/// Smallest number of colors the solver reaches.
///
/// Greedy returns the best of its random orders. Local search and the GA
/// start at `upper_bound` (default `n`) and keep lowering `k` while they
/// succeed; each success is compacted onto `1..=m` for the `m` colors it
/// uses, so the next attempt is at `m - 1`. The last success is returned.
/// If the first attempt already fails, the result has `solved == false`.
pub fn minimize_colors(
    d: &DistanceMatrix,
    config: &SolverConfig,
    upper_bound: Option<u32>,
) -> Result<RunResult, HeuristicError> {
    if matches!(config, SolverConfig::Greedy { .. }) {
        return solve_fixed_k(d, config);
    }
    let start = Instant::now();
    let mut k = upper_bound.unwrap_or(d.n() as u32).clamp(1, d.n() as u32);
    let mut iterations = 0;
    let mut best: Option<Coloring> = None;
    let mut first_failure: Option<HeuristicOutcome> = None;
    loop {
        let out = run_at(d, &config.with_k(k))?;
        iterations += out.iterations_used;
        if !out.solved {
            if best.is_none() {
                first_failure = Some(out);
            }
            break;
        }
        let compact = out.best_coloring.compacted();
        debug_assert!(is_packing_coloring(d, &compact).unwrap_or(false));
        k = compact.k();
        best = Some(compact);
        if k == 1 {
            break;
        }
        k -= 1;
    }
    let (coloring, violations, solved) = match best {
        Some(c) => (c, 0, true),
        None => {
            let out = first_failure.expect("loop ran at least once");
            (out.best_coloring, out.best_violations, false)
        }
    };
    Ok(RunResult {
        algorithm: config.algorithm(),
        seed: config.seed(),
        k: coloring.k(),
        colors_used: coloring.colors_used(),
        solved,
        violations,
        coloring,
        iterations,
        wall_time_ms: elapsed_ms(start),
    })
}
