//! Packing colorings of graphs.
//!
//! A packing `k`-coloring assigns colors `1..=k` so that any two vertices
//! sharing color `i` are at distance greater than `i`; the packing
//! chromatic number is the least such `k`. This crate provides the graph
//! and distance machinery, generators for circulant and unitary Cayley
//! graphs, closed forms for unitary Cayley graphs of `Z_n`, exact oracles
//! for small instances, and the greedy, local search and genetic
//! heuristics.

pub mod coloring;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod heuristics;
pub mod io;

pub use coloring::{count_violations, fitness, is_packing_coloring, Coloring, FitnessReport};
pub use error::{
    ColoringError, FormulaError, GeneratorError, GraphError, HeuristicError, ParseError,
};
pub use exact::{
    decide_packing_k, exact_packing_chromatic, independence_number_exact, Decision, ExactError,
    SearchBudget,
};
pub use generators::GraphSpec;
pub use graph::{all_pairs_distances, diameter, Diameter, DistanceMatrix, Graph, UNREACHABLE};
pub use heuristics::{Algorithm, HeuristicOutcome, RunResult, SolverConfig};
pub use io::GraphFormat;
