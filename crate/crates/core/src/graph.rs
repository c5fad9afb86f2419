//! Simple undirected graphs and all-pairs distances.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric; there are no loops or
/// parallel edges.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds the simple graph on `n` vertices with the given edges.
    ///
    /// Duplicate pairs (in either orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns `Some(d)` if every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.edge_count())
            .finish()
    }
}

/// Sentinel stored for vertex pairs with no connecting path.
pub const UNREACHABLE: u32 = u32::MAX;

/// Diameter of a graph: the largest finite distance, or infinite when the
/// graph is disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// All-pairs shortest-path distances, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// Runs one breadth-first search per vertex.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == UNREACHABLE {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or [`UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Whether `u` and `v` are joined by a path of length at most `bound`.
    #[inline]
    pub fn within(&self, u: usize, v: usize, bound: u32) -> bool {
        self.get(u, v) <= bound
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Diameter {
        let mut max = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return Diameter::Infinite;
            }
            max = max.max(d);
        }
        Diameter::Finite(max)
    }

    /// Multiset of off-diagonal distances over unordered pairs, as sorted
    /// `(distance, count)` entries.
    pub fn distance_distribution(&self) -> Vec<(u32, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                *counts.entry(self.get(u, v)).or_insert(0usize) += 1;
            }
        }
        counts.into_iter().collect()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DistanceMatrix")
            .field("n", &self.n)
            .field("diameter", &self.diameter())
            .finish()
    }
}

/// For every vertex, the other reachable vertices sorted by distance, so
/// that "all `u` with `d(v, u) <= r`" is a prefix.
#[derive(Debug, Clone)]
pub struct BallIndex {
    sorted: Vec<Vec<(u32, usize)>>,
}

impl BallIndex {
    pub fn new(d: &DistanceMatrix) -> Self {
        let sorted = (0..d.n())
            .map(|v| {
                let mut others: Vec<(u32, usize)> = (0..d.n())
                    .filter(|&u| u != v && d.get(v, u) != UNREACHABLE)
                    .map(|u| (d.get(v, u), u))
                    .collect();
                others.sort_unstable();
                others
            })
            .collect();
        BallIndex { sorted }
    }

    /// Vertices other than `v` within distance `radius` of `v`.
    pub fn ball(&self, v: usize, radius: u32) -> impl Iterator<Item = usize> + '_ {
        let row = &self.sorted[v];
        let len = row.partition_point(|&(d, _)| d <= radius);
        row[..len].iter().map(|&(_, u)| u)
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::from_graph(g)
}

pub fn diameter(d: &DistanceMatrix) -> Diameter {
    d.diameter()
}
