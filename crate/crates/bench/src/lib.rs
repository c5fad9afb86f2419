//! Benchmark harness for the packing coloring solvers: suites of cases,
//! a parallel runner, CSV/JSON reports, and the built-in suites that
//! replay the published result tables.
//!
//! # Suite files
//!
//! A suite is a JSON array of cases:
//!
//! ```json
//! [
//!   {
//!     "name": "Z21",
//!     "graph": { "spec": "unitary:21" },
//!     "expected": { "value": 15, "kind": "exact", "source": "formula" },
//!     "methods": ["ga", "exact"],
//!     "seeds": [0, 1, 2],
//!     "params": { "ga_population": 100, "stop_when_met": true }
//!   },
//!   {
//!     "name": "C48",
//!     "graph": { "file": "graphs/c48.txt", "format": "edge-list" },
//!     "methods": ["greedy", "ga"],
//!     "seeds": [0]
//!   }
//! ]
//! ```
//!
//! * `graph`: either `{"spec": SPEC}` with a generator spec such as
//!   `cycle:15`, `unitary:45`, `circulant:12:1,3,9,11` or `ti`, or
//!   `{"file": PATH, "format": "edge-list" | "dimacs"}`. Relative paths are
//!   resolved against the suite file; the format defaults to the file
//!   extension (`.col`/`.dimacs` for DIMACS, edge list otherwise).
//! * `expected` (optional): `value`, `kind` (`exact` or `at-most`) and
//!   `source` (`paper-table`, `formula` or `oracle`).
//! * `methods`: any of `greedy`, `ls`, `ga`, `exact`. `exact` runs once.
//! * `seeds`: one run per seed for each heuristic.
//! * `params` (optional): `greedy_orders`, `ls_max_iterations`,
//!   `ga_max_iterations`, `ga_population`, `ga_offspring` (per crossover
//!   operator, also the mutant count), `exact_node_limit`,
//!   `exact_time_limit_s`, `stop_when_met` and `time_limit_s` (per method;
//!   no new seed starts after it).
//!
//! Each heuristic run reports the smallest number of colors it reached:
//! greedy takes the best of its random orders, LS and the GA descend from
//! the greedy value (or `n - alpha + 1` if smaller) while they succeed.

use std::path::PathBuf;

use thiserror::Error;

mod case;
mod report;
mod run;
pub mod suites;

pub use case::{
    load_suite, parse_suite, BenchCase, Expectation, ExpectationKind, ExpectationSource,
    GraphSource, Method, SolverParams,
};
pub use report::{emit_report, read_json_report, write_report, ReportFormat};
pub use run::{run_heuristic, run_suite, BenchReport, CaseSummary, RunRow, RunStatus, Verdict};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: invalid suite: {source}")]
    Suite {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("graph: {0}")]
    Graph(String),
    #[error(transparent)]
    Heuristic(#[from] packing_core::HeuristicError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}
