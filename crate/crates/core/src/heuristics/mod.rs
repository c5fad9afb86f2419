//! Greedy first-fit, local search and the genetic algorithm for packing
//! colorings, plus the descending-`k` driver that turns them into
//! packing chromatic number estimates.

mod genetic;
mod greedy;
mod local_search;
mod minimize;
mod operators;
pub mod rng;

use serde::{Deserialize, Serialize};

use crate::coloring::{fitness_value, Coloring};

pub use genetic::{genetic_algorithm, genetic_algorithm_observed, GaConfig, GaStep};
pub use greedy::{greedy_packing, greedy_random_orders};
pub use local_search::{local_search, local_search_observed, ls_neighborhood, LsConfig, LsStep};
pub use minimize::{minimize_colors, solve_fixed_k, Algorithm, RunResult, SolverConfig};
pub use operators::{crossover1, crossover2, mutation, random_coloring};

/// Best coloring found by one heuristic run at a fixed color budget.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeuristicOutcome {
    pub best_coloring: Coloring,
    pub best_violations: usize,
    pub best_fitness: f64,
    pub iterations_used: u64,
    pub solved: bool,
    pub colors_used: usize,
}

impl HeuristicOutcome {
    pub(crate) fn new(
        best_coloring: Coloring,
        best_violations: usize,
        iterations_used: u64,
    ) -> Self {
        HeuristicOutcome {
            colors_used: best_coloring.colors_used(),
            best_coloring,
            best_violations,
            best_fitness: fitness_value(best_violations),
            iterations_used,
            solved: best_violations == 0,
        }
    }
}
