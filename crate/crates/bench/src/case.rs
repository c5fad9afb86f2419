use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use packing_core::generators::GraphSpec;
use packing_core::io::parse_graph;
use packing_core::{Graph, GraphFormat};
use serde::{Deserialize, Serialize};

use crate::BenchError;

/// Where a case's graph comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Generated {
        spec: GraphSpec,
    },
    /// Relative paths are resolved against the suite file's directory.
    File {
        file: PathBuf,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        format: Option<GraphFormat>,
    },
}

impl GraphSource {
    pub fn spec(spec: GraphSpec) -> Self {
        GraphSource::Generated { spec }
    }

    pub fn resolve(&self) -> Result<Graph, BenchError> {
        match self {
            GraphSource::Generated { spec } => {
                spec.build().map_err(|e| BenchError::Graph(e.to_string()))
            }
            GraphSource::File { file, format } => {
                let format = format.unwrap_or_else(|| GraphFormat::from_path(file));
                parse_graph(file, format)
                    .map_err(|e| BenchError::Graph(format!("{}: {e}", file.display())))
            }
        }
    }

    fn rebase(&mut self, dir: &Path) {
        if let GraphSource::File { file, .. } = self {
            if file.is_relative() {
                *file = dir.join(&*file);
            }
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Generated { spec } => write!(f, "{spec}"),
            GraphSource::File { file, .. } => write!(f, "{}", file.display()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectationKind {
    /// The best value over all seeds must equal the target.
    Exact,
    /// The best value over all seeds must not exceed the target.
    AtMost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectationSource {
    PaperTable,
    Formula,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub value: u32,
    pub kind: ExpectationKind,
    pub source: ExpectationSource,
}

impl Expectation {
    pub fn exact(value: u32, source: ExpectationSource) -> Self {
        Expectation {
            value,
            kind: ExpectationKind::Exact,
            source,
        }
    }

    pub fn at_most(value: u32, source: ExpectationSource) -> Self {
        Expectation {
            value,
            kind: ExpectationKind::AtMost,
            source,
        }
    }

    pub fn is_met_by(&self, achieved: u32) -> bool {
        match self.kind {
            ExpectationKind::Exact => achieved == self.value,
            ExpectationKind::AtMost => achieved <= self.value,
        }
    }
}

/// Solver run by a case. `exact` ignores seeds and runs once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Greedy,
    Ls,
    Ga,
    Exact,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Method::Greedy => "greedy",
            Method::Ls => "ls",
            Method::Ga => "ga",
            Method::Exact => "exact",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(Method::Greedy),
            "ls" => Ok(Method::Ls),
            "ga" => Ok(Method::Ga),
            "exact" => Ok(Method::Exact),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// Optional overrides of the solver defaults. Missing fields keep the
/// library defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub greedy_orders: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ls_max_iterations: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ga_max_iterations: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ga_population: Option<usize>,
    /// Offspring per crossover operator and number of mutants.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ga_offspring: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_node_limit: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_time_limit_s: Option<f64>,
    /// Skip the remaining seeds of a method once its expectation is met.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub stop_when_met: bool,
    /// Wall-clock allowance per method; no new seed starts after it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_limit_s: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchCase {
    pub name: String,
    pub graph: GraphSource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expectation>,
    pub methods: Vec<Method>,
    pub seeds: Vec<u64>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub params: SolverParams,
}

fn is_default(p: &SolverParams) -> bool {
    *p == SolverParams::default()
}

impl BenchCase {
    pub fn new(
        name: impl Into<String>,
        graph: GraphSource,
        methods: &[Method],
        seeds: impl IntoIterator<Item = u64>,
    ) -> Self {
        BenchCase {
            name: name.into(),
            graph,
            expected: None,
            methods: methods.to_vec(),
            seeds: seeds.into_iter().collect(),
            params: SolverParams::default(),
        }
    }

    pub fn expect(mut self, expectation: Expectation) -> Self {
        self.expected = Some(expectation);
        self
    }

    pub fn with_params(mut self, params: SolverParams) -> Self {
        self.params = params;
        self
    }
}

pub fn parse_suite(text: &str) -> Result<Vec<BenchCase>, serde_json::Error> {
    serde_json::from_str(text)
}

/// Reads a suite file, resolving relative graph paths against its folder.
pub fn load_suite(path: impl AsRef<Path>) -> Result<Vec<BenchCase>, BenchError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut cases = parse_suite(&text).map_err(|source| BenchError::Suite {
        path: path.to_path_buf(),
        source,
    })?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    for case in &mut cases {
        case.graph.rebase(dir);
    }
    Ok(cases)
}
