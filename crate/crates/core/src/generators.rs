//! Graph families: unitary Cayley graphs of `Z_n`, circulants, classic
//! families, direct products and a few named graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GeneratorError;
use crate::formulas::{factorize, gcd};
use crate::graph::Graph;

fn param(
    family: &'static str,
    requirement: &'static str,
    got: impl fmt::Display,
) -> GeneratorError {
    GeneratorError::Parameter {
        family,
        requirement,
        got: got.to_string(),
    }
}

/// A set of nonzero residues modulo `n` together with its closure under
/// negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    n: u64,
    residues: BTreeSet<u64>,
    closure: BTreeSet<u64>,
}

impl ConnectionSet {
    pub fn new<I: IntoIterator<Item = u64>>(n: u64, residues: I) -> Result<Self, GeneratorError> {
        if n < 2 {
            return Err(param("connection set", "modulus >= 2", n));
        }
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        if let Some(&bad) = residues.iter().find(|&&s| s == 0 || s >= n) {
            return Err(GeneratorError::InvalidResidue { residue: bad, n });
        }
        let closure = residues.iter().flat_map(|&s| [s, n - s]).collect();
        Ok(ConnectionSet {
            n,
            residues,
            closure,
        })
    }

    /// The units of `Z_n`.
    pub fn units(n: u64) -> Result<Self, GeneratorError> {
        Self::new(n, (1..n).filter(|&s| gcd(s, n) == 1))
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn symmetric_closure(&self) -> &BTreeSet<u64> {
        &self.closure
    }

    pub fn is_symmetric(&self) -> bool {
        self.residues == self.closure
    }

    /// First residue whose negation is missing, as `(s, n - s)`.
    fn asymmetry(&self) -> Option<(u64, u64)> {
        self.residues
            .iter()
            .map(|&s| (s, self.n - s))
            .find(|(_, neg)| !self.residues.contains(neg))
    }
}

/// `Cay(Z_n, S)`. With `symmetrize` off, `S` must already be closed under
/// negation.
pub fn circulant(set: &ConnectionSet, symmetrize: bool) -> Result<Graph, GeneratorError> {
    if !symmetrize {
        if let Some((residue, missing)) = set.asymmetry() {
            return Err(GeneratorError::Asymmetric {
                n: set.n,
                residue,
                missing,
            });
        }
    }
    let n = set.n as usize;
    let diffs: Vec<usize> = set.closure.iter().map(|&s| s as usize).collect();
    let edges = (0..n).flat_map(|u| diffs.iter().map(move |&s| (u, (u + s) % n)));
    Ok(Graph::new(n, edges)?)
}

/// The unitary Cayley graph `Cay(Z_n, Z_n^x)`: `u ~ v` iff `gcd(u - v, n) = 1`.
pub fn unitary_cayley(n: u64) -> Result<Graph, GeneratorError> {
    if n < 2 {
        return Err(param("unitary Cayley graph", "n >= 2", n));
    }
    circulant(&ConnectionSet::units(n)?, false)
}

/// The complete multipartite factors whose direct product is isomorphic to
/// the unitary Cayley graph of `Z_n`: one `K_{p^(r-1), ..., p^(r-1)}` with
/// `p` parts per prime power `p^r` of `n`.
pub fn unitary_cayley_factors(n: u64) -> Result<Vec<Graph>, GeneratorError> {
    let f = factorize(n).map_err(|_| param("unitary Cayley graph", "n >= 2", n))?;
    f.factors()
        .iter()
        .map(|&(p, r)| complete_multipartite(&vec![p.pow(r - 1) as usize; p as usize]))
        .collect()
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(param("complete graph", "n >= 1", n));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::new(n, edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(param("cycle", "n >= 3", n));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(param("path", "n >= 1", n));
    }
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i)))?)
}

/// `K_{1,n}`: center 0 and leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(param("star", "n >= 1 leaves", n));
    }
    Ok(Graph::new(n + 1, (1..=n).map(|i| (0, i)))?)
}

/// `K_{n_1, ..., n_m}` with parts laid out consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GeneratorError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(param(
            "complete multipartite graph",
            "a non-empty list of positive part sizes",
            format!("{parts:?}"),
        ));
    }
    let part_of: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
        .collect();
    let n = part_of.len();
    let edges = (0..n).flat_map(|u| {
        let part_of = &part_of;
        (u + 1..n)
            .filter(move |&v| part_of[u] != part_of[v])
            .map(move |v| (u, v))
    });
    Ok(Graph::new(n, edges)?)
}

/// Direct (tensor) product: `(u1, u2) ~ (v1, v2)` iff `u1 ~ v1` and `u2 ~ v2`.
/// Vertex `(u1, u2)` gets index `u1 * n2 + u2`.
pub fn direct_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n();
    let mut edges = Vec::with_capacity(2 * g1.edge_count() * g2.edge_count());
    for (u1, v1) in g1.edges() {
        for (u2, v2) in g2.edges() {
            edges.push((u1 * n2 + u2, v1 * n2 + v2));
            edges.push((u1 * n2 + v2, v1 * n2 + u2));
        }
    }
    Graph::new(g1.n() * n2, edges).expect("product indices are in range and loop-free")
}

/// Generalized Petersen graph `G(n, k)`: outer cycle `0..n`, spokes
/// `i -- n + i`, inner edges `n + i -- n + (i + k) mod n`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GeneratorError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(param(
            "generalized Petersen graph",
            "n >= 3 and 1 <= k < n/2",
            format!("({n}, {k})"),
        ));
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Ok(Graph::new(2 * n, edges)?)
}

/// The truncated icosahedron (60 vertices, 90 edges, cubic).
pub fn truncated_icosahedron() -> Graph {
    Graph::new(60, TRUNCATED_ICOSAHEDRON_EDGES.iter().copied())
        .expect("embedded edge data is well formed")
}

// Derived from the vertex coordinates (even permutations of (0, ±1, ±3φ),
// (±1, ±(2+φ), ±2φ), (±φ, ±2, ±(2φ+1))) by joining points at minimum
// distance, then relabelled in breadth-first order from vertex 0.
#[rustfmt::skip]
const TRUNCATED_ICOSAHEDRON_EDGES: [(usize, usize); 90] = [
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9), (4, 10), (4, 11),
    (5, 12), (5, 13), (6, 10), (6, 14), (7, 9), (7, 15), (8, 12), (8, 16), (9, 17), (10, 18),
    (11, 13), (11, 19), (12, 20), (13, 21), (14, 22), (14, 23), (15, 23), (15, 24), (16, 25),
    (16, 26), (17, 25), (17, 27), (18, 22), (18, 28), (19, 28), (19, 29), (20, 26), (20, 30),
    (21, 30), (21, 31), (22, 32), (23, 33), (24, 27), (24, 34), (25, 35), (26, 36), (27, 37),
    (28, 38), (29, 31), (29, 39), (30, 40), (31, 41), (32, 42), (32, 43), (33, 34), (33, 42),
    (34, 44), (35, 37), (35, 45), (36, 45), (36, 46), (37, 47), (38, 39), (38, 43), (39, 48),
    (40, 41), (40, 46), (41, 49), (42, 50), (43, 51), (44, 47), (44, 52), (45, 53), (46, 54),
    (47, 55), (48, 49), (48, 56), (49, 57), (50, 51), (50, 52), (51, 56), (52, 58), (53, 54),
    (53, 55), (54, 57), (55, 58), (56, 59), (57, 59), (58, 59),
];

/// Declarative description of a generated graph, written as
/// `family:params` (see [`GraphSpec::from_str`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GraphSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    Edgeless(usize),
    Multipartite(Vec<usize>),
    UnitaryCayley(u64),
    Circulant {
        n: u64,
        residues: Vec<u64>,
        symmetrize: bool,
    },
    Petersen(usize, usize),
    TruncatedIcosahedron,
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, GeneratorError> {
        match self {
            GraphSpec::Complete(n) => complete(*n),
            GraphSpec::Cycle(n) => cycle(*n),
            GraphSpec::Path(n) => path(*n),
            GraphSpec::Star(n) => star(*n),
            GraphSpec::Edgeless(n) => Ok(Graph::edgeless(*n)?),
            GraphSpec::Multipartite(parts) => complete_multipartite(parts),
            GraphSpec::UnitaryCayley(n) => unitary_cayley(*n),
            GraphSpec::Circulant {
                n,
                residues,
                symmetrize,
            } => circulant(
                &ConnectionSet::new(*n, residues.iter().copied())?,
                *symmetrize,
            ),
            GraphSpec::Petersen(n, k) => generalized_petersen(*n, *k),
            GraphSpec::TruncatedIcosahedron => Ok(truncated_icosahedron()),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::Edgeless(n) => write!(f, "edgeless:{n}"),
            GraphSpec::Multipartite(parts) => write!(f, "multipartite:{}", join(parts)),
            GraphSpec::UnitaryCayley(n) => write!(f, "unitary:{n}"),
            GraphSpec::Circulant {
                n,
                residues,
                symmetrize,
            } => {
                let family = if *symmetrize {
                    "circulant-sym"
                } else {
                    "circulant"
                };
                write!(f, "{family}:{n}:{}", join(residues))
            }
            GraphSpec::Petersen(n, k) => write!(f, "petersen:{n},{k}"),
            GraphSpec::TruncatedIcosahedron => f.write_str("ti"),
        }
    }
}

fn parse_list<T: FromStr>(s: &str, spec: &str) -> Result<Vec<T>, GeneratorError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| GeneratorError::UnknownSpec(spec.to_string()))
        })
        .collect()
}

/// Accepted forms: `complete:N`, `cycle:N`, `path:N`, `star:LEAVES`,
/// `edgeless:N`, `multipartite:A,B,...`, `unitary:N`, `circulant:N:S1,S2,...`
/// (connection set must be symmetric), `circulant-sym:N:S1,...`
/// (symmetrized), `petersen:N,K`, `ti`.
impl FromStr for GraphSpec {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GeneratorError::UnknownSpec(s.to_string());
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let one = |rest: &str| rest.trim().parse::<usize>().map_err(|_| unknown());
        Ok(match family.trim() {
            "complete" => GraphSpec::Complete(one(rest)?),
            "cycle" => GraphSpec::Cycle(one(rest)?),
            "path" => GraphSpec::Path(one(rest)?),
            "star" => GraphSpec::Star(one(rest)?),
            "edgeless" => GraphSpec::Edgeless(one(rest)?),
            "multipartite" => GraphSpec::Multipartite(parse_list(rest, s)?),
            "unitary" => GraphSpec::UnitaryCayley(rest.trim().parse().map_err(|_| unknown())?),
            fam @ ("circulant" | "circulant-sym") => {
                let (n, set) = rest.split_once(':').ok_or_else(unknown)?;
                GraphSpec::Circulant {
                    n: n.trim().parse().map_err(|_| unknown())?,
                    residues: parse_list(set, s)?,
                    symmetrize: fam == "circulant-sym",
                }
            }
            "petersen" => match parse_list::<usize>(rest, s)?.as_slice() {
                &[n, k] => GraphSpec::Petersen(n, k),
                _ => return Err(unknown()),
            },
            "ti" | "truncated-icosahedron" if rest.is_empty() => GraphSpec::TruncatedIcosahedron,
            _ => return Err(unknown()),
        })
    }
}

impl TryFrom<String> for GraphSpec {
    type Error = GeneratorError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<GraphSpec> for String {
    fn from(spec: GraphSpec) -> String {
        spec.to_string()
    }
}
