use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color budget must be at least 1")]
    ZeroBudget,
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: u32, k: u32 },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{family} requires {requirement}, got {got}")]
    Parameter {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error("residue {residue} is not valid modulo {n}")]
    InvalidResidue { residue: u64, n: u64 },
    #[error("connection set is not symmetric modulo {n}: {residue} present but {n}-{residue} = {missing} absent")]
    Asymmetric { n: u64, residue: u64, missing: u64 },
    #[error("unknown graph spec `{0}`")]
    UnknownSpec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing header")]
    MissingHeader,
    #[error("declared {declared} edges but found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("modulus must be at least 2, got {0}")]
    TooSmall(u64),
    #[error("modulus {0} exceeds 2^63 - 1")]
    TooLarge(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeuristicError {
    #[error("operator needs at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("parents differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("parents use different color budgets ({0} vs {1})")]
    BudgetMismatch(u32, u32),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}
