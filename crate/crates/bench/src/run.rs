use std::time::{Duration, Instant};

use packing_core::exact::exact_packing_chromatic_from_distances;
use packing_core::heuristics::{minimize_colors, GaConfig, LsConfig, RunResult, SolverConfig};
use packing_core::{
    all_pairs_distances, independence_number_exact, is_packing_coloring, DistanceMatrix,
    ExactError, Graph, SearchBudget,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::case::{BenchCase, Expectation, Method, SolverParams};
use crate::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    /// Packing coloring found and re-validated.
    Ok,
    /// The solver ended without a packing coloring.
    Unsolved,
    /// The returned certificate failed re-validation.
    Invalid,
    Error,
}

/// One solver run. Column order is fixed: the first six columns are the
/// stable part of the CSV layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRow {
    pub case: String,
    pub algorithm: Method,
    pub seed: u64,
    pub k_achieved: Option<u32>,
    pub solved: bool,
    pub time_ms: f64,
    pub status: RunStatus,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// No expectation to compare against.
    Unchecked,
    /// Every run errored.
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub case: String,
    pub algorithm: Method,
    pub achieved: Vec<Option<u32>>,
    pub best: Option<u32>,
    pub median_time_ms: f64,
    pub expected: Option<Expectation>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub rows: Vec<RunRow>,
    pub summaries: Vec<CaseSummary>,
}

impl BenchReport {
    pub fn summary(&self, case: &str, algorithm: Method) -> Option<&CaseSummary> {
        self.summaries
            .iter()
            .find(|s| s.case == case && s.algorithm == algorithm)
    }

    pub fn all_passed(&self) -> bool {
        self.summaries
            .iter()
            .all(|s| matches!(s.verdict, Verdict::Pass | Verdict::Unchecked))
    }
}

struct Prepared {
    distances: DistanceMatrix,
    /// `n - alpha + 1` when the independence number was cheap to get.
    independence_bound: Option<u32>,
}

fn prepare(g: &Graph) -> Prepared {
    let budget = SearchBudget::new(1_000_000, Duration::from_secs(3600)).expect("positive budget");
    let independence_bound = independence_number_exact(g, budget)
        .ok()
        .map(|a| (g.n() - a.value + 1) as u32);
    Prepared {
        distances: all_pairs_distances(g),
        independence_bound,
    }
}

fn heuristic_config(method: Method, params: &SolverParams, seed: u64) -> SolverConfig {
    match method {
        Method::Greedy => SolverConfig::Greedy {
            orders: params
                .greedy_orders
                .unwrap_or(SolverConfig::DEFAULT_GREEDY_ORDERS),
            seed,
        },
        Method::Ls => {
            let mut c = LsConfig::new(1).with_seed(seed);
            if let Some(m) = params.ls_max_iterations {
                c.max_iterations = m;
            }
            SolverConfig::Ls(c)
        }
        Method::Ga => {
            let mut c = GaConfig::new(1).with_seed(seed);
            if let Some(m) = params.ga_max_iterations {
                c.max_iterations = m;
            }
            if let Some(p) = params.ga_population {
                c.population_size = p;
            }
            if let Some(o) = params.ga_offspring {
                c.crossover1_offspring = o;
                c.crossover2_offspring = o;
                c.mutants = o;
            }
            SolverConfig::Ga(c)
        }
        Method::Exact => unreachable!("exact is not a heuristic"),
    }
}

/// Descending-`k` run. LS and the GA start from the smaller of the
/// greedy value for this seed and `n - alpha + 1`.
pub fn run_heuristic(
    d: &DistanceMatrix,
    method: Method,
    params: &SolverParams,
    seed: u64,
    independence_bound: Option<u32>,
) -> Result<RunResult, BenchError> {
    let config = heuristic_config(method, params, seed);
    let greedy_config = heuristic_config(Method::Greedy, params, seed);
    let greedy = minimize_colors(d, &greedy_config, None)?;
    if method == Method::Greedy {
        return Ok(greedy);
    }
    let start = independence_bound.map_or(greedy.k, |b| b.min(greedy.k));
    Ok(minimize_colors(d, &config, Some(start))?)
}

fn row(case: &str, method: Method, seed: u64, status: RunStatus, message: String) -> RunRow {
    RunRow {
        case: case.to_string(),
        algorithm: method,
        seed,
        k_achieved: None,
        solved: false,
        time_ms: 0.0,
        status,
        message,
    }
}

fn run_one(case: &BenchCase, method: Method, seed: u64, prepared: &Prepared) -> RunRow {
    let d = &prepared.distances;
    let start = Instant::now();
    let outcome = match method {
        Method::Exact => {
            let mut budget = SearchBudget::default();
            if let Some(n) = case.params.exact_node_limit {
                budget.node_limit = n;
            }
            if let Some(s) = case.params.exact_time_limit_s {
                budget.time_limit = Duration::from_secs_f64(s);
            }
            match exact_packing_chromatic_from_distances(d, budget) {
                Ok(r) => Ok((r.value, true, r.certificate)),
                Err(ExactError::BudgetExhausted { lower, upper, .. }) => Err(format!(
                    "search budget exhausted; value lies in {lower}..={upper}"
                )),
                Err(e) => Err(e.to_string()),
            }
        }
        _ => run_heuristic(d, method, &case.params, seed, prepared.independence_bound)
            .map(|r| (r.k, r.solved, r.coloring))
            .map_err(|e| e.to_string()),
    };
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut r = match outcome {
        Err(message) => row(&case.name, method, seed, RunStatus::Error, message),
        Ok((_, false, _)) => row(&case.name, method, seed, RunStatus::Unsolved, String::new()),
        Ok((k, true, coloring)) => match is_packing_coloring(d, &coloring) {
            Ok(true) => RunRow {
                k_achieved: Some(k),
                solved: true,
                ..row(&case.name, method, seed, RunStatus::Ok, String::new())
            },
            _ => row(
                &case.name,
                method,
                seed,
                RunStatus::Invalid,
                "certificate failed re-validation".into(),
            ),
        },
    };
    r.time_ms = time_ms;
    r
}

fn median(mut xs: Vec<f64>) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

fn summarize(case: &BenchCase, method: Method, rows: &[RunRow]) -> CaseSummary {
    let achieved: Vec<Option<u32>> = rows.iter().map(|r| r.k_achieved).collect();
    let best = achieved.iter().flatten().copied().min();
    let verdict = if !rows.is_empty() && rows.iter().all(|r| r.status == RunStatus::Error) {
        Verdict::Error
    } else {
        match (case.expected, best) {
            (None, _) => Verdict::Unchecked,
            (Some(e), Some(b)) if e.is_met_by(b) => Verdict::Pass,
            _ => Verdict::Fail,
        }
    };
    CaseSummary {
        case: case.name.clone(),
        algorithm: method,
        achieved,
        best,
        median_time_ms: median(rows.iter().map(|r| r.time_ms).collect()),
        expected: case.expected,
        verdict,
    }
}

fn run_group(
    case: &BenchCase,
    method: Method,
    prepared: &Result<Prepared, String>,
) -> (Vec<RunRow>, CaseSummary) {
    let seeds: Vec<u64> = match method {
        Method::Exact => vec![0],
        _ => case.seeds.clone(),
    };
    let prepared = match prepared {
        Ok(p) => p,
        Err(message) => {
            let rows: Vec<RunRow> = seeds
                .iter()
                .map(|&s| row(&case.name, method, s, RunStatus::Error, message.clone()))
                .collect();
            let summary = summarize(case, method, &rows);
            return (rows, summary);
        }
    };
    let start = Instant::now();
    let limit = case.params.time_limit_s.map(Duration::from_secs_f64);
    let mut rows = Vec::with_capacity(seeds.len());
    for seed in seeds {
        if limit.is_some_and(|l| start.elapsed() >= l) {
            break;
        }
        let r = run_one(case, method, seed, prepared);
        let met = matches!((case.expected, r.k_achieved), (Some(e), Some(k)) if e.is_met_by(k));
        rows.push(r);
        if met && case.params.stop_when_met {
            break;
        }
    }
    let summary = summarize(case, method, &rows);
    (rows, summary)
}

/// Runs every method of every case over its seeds. Groups (one case, one
/// method) are spread over `jobs` worker threads (`0` picks the rayon
/// default); seeds inside a group run in order. A graph that cannot be
/// built marks its case as errored and the rest of the suite still runs.
pub fn run_suite(cases: &[BenchCase], jobs: usize) -> Result<BenchReport, BenchError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| BenchError::Pool(e.to_string()))?;
    Ok(pool.install(|| {
        let prepared: Vec<Result<Prepared, String>> = cases
            .par_iter()
            .map(|c| {
                c.graph
                    .resolve()
                    .map(|g| prepare(&g))
                    .map_err(|e| e.to_string())
            })
            .collect();
        let groups: Vec<(usize, Method)> = cases
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.methods.iter().map(move |&m| (i, m)))
            .collect();
        let results: Vec<(Vec<RunRow>, CaseSummary)> = groups
            .par_iter()
            .map(|&(i, m)| run_group(&cases[i], m, &prepared[i]))
            .collect();
        let mut report = BenchReport::default();
        for (rows, summary) in results {
            report.rows.extend(rows);
            report.summaries.push(summary);
        }
        report
    }))
}
