//! Exact oracles for small graphs: packing `k`-colorability, the packing
//! chromatic number, and the independence number.
//!
//! The packing search is a depth-first backtracking over a fixed vertex
//! order (descending degree, ties by index) trying colors in ascending
//! order. Two prunings keep it exact:
//!
//! * forward checking: every uncolored vertex must keep a feasible color;
//! * a capacity bound: class `i` is an independent set of the distance
//!   power graph `G^i` (`u ~ v` iff `d(u, v) <= i`), so a greedy clique
//!   cover of the vertices still eligible for color `i` bounds how many of
//!   them it can take. If the bounds over all colors cannot cover the
//!   uncolored vertices, the node is closed.
//!
//! In a connected graph of diameter `D` every class with color `i >= D` has
//! at most one vertex, so those colors are interchangeable; only the
//! smallest unused one is tried.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{is_packing_coloring, Coloring};
use crate::graph::{all_pairs_distances, BallIndex, DistanceMatrix, Graph};
use crate::heuristics::greedy_packing;

/// Limits for one exact computation. Exceeding either aborts the search
/// with [`Decision::BudgetExhausted`]; it never yields a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Result<Self, ExactError> {
        if node_limit == 0 || time_limit.is_zero() {
            return Err(ExactError::InvalidBudget);
        }
        Ok(SearchBudget {
            node_limit,
            time_limit,
        })
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 100_000_000,
            time_limit: Duration::from_secs(300),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Sat(Coloring),
    Unsat,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    #[error("search budget must have a positive node limit and time limit")]
    InvalidBudget,
    #[error("color budget must be at least 1")]
    ZeroColors,
    #[error("search budget exhausted after {} nodes; value lies in {lower}..={upper}", .stats.nodes)]
    BudgetExhausted {
        lower: u32,
        upper: u32,
        best: Option<Coloring>,
        stats: SearchStats,
    },
}

/// Tracks node and time consumption across one or more searches.
struct Meter {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one node; returns false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.node_limit
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_limit)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

enum Step {
    Found,
    Failed,
    Aborted,
}

struct PackingSearch<'a> {
    d: &'a DistanceMatrix,
    k: u32,
    /// Colors `>= singleton_from` can hold at most one vertex.
    singleton_from: u32,
    order: Vec<usize>,
    balls: BallIndex,
    /// `blocked[v * (k + 1) + i]`: colored vertices of color `i` within
    /// distance `i` of `v`.
    blocked: Vec<u32>,
    colors: Vec<u32>,
    class_size: Vec<u32>,
    uncolored: usize,
    scratch: Vec<usize>,
    covered: Vec<bool>,
}

impl<'a> PackingSearch<'a> {
    fn new(d: &'a DistanceMatrix, k: u32) -> Self {
        let n = d.n();
        let width = k as usize + 1;
        let diameter = d.diameter().finite();
        let singleton_from = match diameter {
            Some(diam) if n > 1 => diam.max(1),
            _ => u32::MAX,
        };
        let mut order: Vec<usize> = (0..n).collect();
        let degree = |v: usize| d.row(v).iter().filter(|&&x| x == 1).count();
        order.sort_by_key(|&v| (std::cmp::Reverse(degree(v)), v));
        PackingSearch {
            d,
            k,
            singleton_from,
            order,
            balls: BallIndex::new(d),
            blocked: vec![0; n * width],
            colors: vec![0; n],
            class_size: vec![0; width],
            uncolored: n,
            scratch: Vec::with_capacity(n),
            covered: vec![false; n],
        }
    }

    #[inline]
    fn width(&self) -> usize {
        self.k as usize + 1
    }

    #[inline]
    fn is_free(&self, v: usize, color: u32) -> bool {
        self.blocked[v * self.width() + color as usize] == 0
    }

    fn assign(&mut self, v: usize, color: u32) {
        let w = self.width();
        self.colors[v] = color;
        self.class_size[color as usize] += 1;
        self.uncolored -= 1;
        for u in self.balls.ball(v, color) {
            self.blocked[u * w + color as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let w = self.width();
        let color = self.colors[v];
        self.colors[v] = 0;
        self.class_size[color as usize] -= 1;
        self.uncolored += 1;
        for u in self.balls.ball(v, color) {
            self.blocked[u * w + color as usize] -= 1;
        }
    }

    fn unused_singleton(&self) -> Option<u32> {
        (self.singleton_from..=self.k).find(|&c| self.class_size[c as usize] == 0)
    }

    /// Colors to try for `v`, ascending.
    fn candidates(&self, v: usize) -> Vec<u32> {
        let low_end = self.singleton_from.min(self.k + 1);
        let mut out: Vec<u32> = (1..low_end).filter(|&c| self.is_free(v, c)).collect();
        out.extend(self.unused_singleton());
        out
    }

    /// Greedy clique cover size of the uncolored vertices still eligible for
    /// `color`, in the power graph `G^color`.
    fn class_capacity(&mut self, color: u32) -> usize {
        let mut cands = std::mem::take(&mut self.scratch);
        cands.clear();
        cands.extend(
            self.order
                .iter()
                .copied()
                .filter(|&v| self.colors[v] == 0 && self.is_free(v, color)),
        );
        for &v in &cands {
            self.covered[v] = false;
        }
        let mut cliques = 0;
        let mut clique: Vec<usize> = Vec::new();
        for a in 0..cands.len() {
            let head = cands[a];
            if self.covered[head] {
                continue;
            }
            cliques += 1;
            self.covered[head] = true;
            clique.clear();
            clique.push(head);
            for &b in &cands[a + 1..] {
                if !self.covered[b] && clique.iter().all(|&m| self.d.within(b, m, color)) {
                    self.covered[b] = true;
                    clique.push(b);
                }
            }
        }
        self.scratch = cands;
        cliques
    }

    /// True when the remaining vertices provably cannot all be colored.
    fn bound_fails(&mut self) -> bool {
        let need = self.uncolored;
        if need == 0 {
            return false;
        }
        let low_end = self.singleton_from.min(self.k + 1);
        let singles = (low_end..=self.k)
            .filter(|&c| self.class_size[c as usize] == 0)
            .count();
        // Forward check.
        if singles == 0 {
            let stuck = self
                .order
                .iter()
                .any(|&v| self.colors[v] == 0 && (1..low_end).all(|c| !self.is_free(v, c)));
            if stuck {
                return true;
            }
        }
        let mut capacity = singles;
        for color in 1..low_end {
            if capacity >= need {
                return false;
            }
            capacity += self.class_capacity(color);
        }
        capacity < need
    }

    fn search(&mut self, depth: usize, meter: &mut Meter) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        if self.bound_fails() {
            return Step::Failed;
        }
        let v = self.order[depth];
        for color in self.candidates(v) {
            if !meter.tick() {
                return Step::Aborted;
            }
            self.assign(v, color);
            match self.search(depth + 1, meter) {
                Step::Failed => self.unassign(v),
                other => return other,
            }
        }
        Step::Failed
    }
}

fn decide_with_meter(d: &DistanceMatrix, k: u32, meter: &mut Meter) -> Decision {
    let mut search = PackingSearch::new(d, k);
    match search.search(0, meter) {
        Step::Found => {
            let coloring = Coloring::new(search.colors, k).expect("search assigns colors in 1..=k");
            debug_assert!(is_packing_coloring(d, &coloring).unwrap());
            Decision::Sat(coloring)
        }
        Step::Failed => Decision::Unsat,
        Step::Aborted => Decision::BudgetExhausted,
    }
}

/// Decides whether the graph behind `d` has a packing `k`-coloring.
pub fn decide_packing_k(
    d: &DistanceMatrix,
    k: u32,
    budget: SearchBudget,
) -> Result<(Decision, SearchStats), ExactError> {
    if k == 0 {
        return Err(ExactError::ZeroColors);
    }
    let mut meter = Meter::new(budget);
    let decision = decide_with_meter(d, k, &mut meter);
    Ok((decision, meter.stats()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactChromatic {
    pub value: u32,
    pub certificate: Coloring,
    pub stats: SearchStats,
}

pub fn exact_packing_chromatic(
    g: &Graph,
    budget: SearchBudget,
) -> Result<ExactChromatic, ExactError> {
    exact_packing_chromatic_from_distances(&all_pairs_distances(g), budget)
}

/// Ascends `k` from 1; the first-fit coloring in natural order supplies the
/// upper end, so `k` never exceeds the number of colors it uses.
pub fn exact_packing_chromatic_from_distances(
    d: &DistanceMatrix,
    budget: SearchBudget,
) -> Result<ExactChromatic, ExactError> {
    let order: Vec<usize> = (0..d.n()).collect();
    let upper = greedy_packing(d, &order).compacted();
    let upper_k = upper.k();
    let mut meter = Meter::new(budget);
    for k in 1..upper_k {
        match decide_with_meter(d, k, &mut meter) {
            Decision::Sat(certificate) => {
                return Ok(ExactChromatic {
                    value: k,
                    certificate,
                    stats: meter.stats(),
                })
            }
            Decision::Unsat => {}
            Decision::BudgetExhausted => {
                return Err(ExactError::BudgetExhausted {
                    lower: k,
                    upper: upper_k,
                    best: Some(upper),
                    stats: meter.stats(),
                })
            }
        }
    }
    Ok(ExactChromatic {
        value: upper_k,
        certificate: upper,
        stats: meter.stats(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactIndependence {
    pub value: usize,
    pub set: Vec<usize>,
    pub stats: SearchStats,
}

struct MisSearch<'a> {
    g: &'a Graph,
    closed: Vec<FixedBitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MisSearch<'_> {
    /// Greedy clique cover of `cands`, an upper bound on their independence
    /// number.
    fn clique_cover(&self, cands: &FixedBitSet) -> usize {
        let mut left = cands.clone();
        let mut cliques = 0;
        while let Some(head) = left.ones().next() {
            cliques += 1;
            left.set(head, false);
            let mut common: FixedBitSet = left.clone();
            common.intersect_with(&self.closed[head]);
            while let Some(next) = common.ones().next() {
                left.set(next, false);
                common.set(next, false);
                common.intersect_with(&self.closed[next]);
            }
        }
        cliques
    }

    fn search(&mut self, mut cands: FixedBitSet, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        if cands.count_ones(..) == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return true;
        }
        if self.current.len() + self.clique_cover(&cands) <= self.best.len() {
            return true;
        }
        let degree_in = |v: usize| {
            let mut nb = self.closed[v].clone();
            nb.intersect_with(&cands);
            nb.count_ones(..)
        };
        let pivot = cands
            .ones()
            .max_by_key(|&v| (degree_in(v), std::cmp::Reverse(v)))
            .unwrap();
        if degree_in(pivot) == 1 {
            // Only closed-neighborhood self: the rest is independent.
            let saved = self.current.len();
            self.current.extend(cands.ones());
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.truncate(saved);
            return true;
        }
        let mut with = cands.clone();
        with.difference_with(&self.closed[pivot]);
        self.current.push(pivot);
        let ok = self.search(with, meter);
        self.current.pop();
        if !ok {
            return false;
        }
        cands.set(pivot, false);
        self.search(cands, meter)
    }
}

/// Exact independence number by branch and bound on the highest-degree
/// vertex, bounded by a greedy clique cover.
pub fn independence_number_exact(
    g: &Graph,
    budget: SearchBudget,
) -> Result<ExactIndependence, ExactError> {
    let n = g.n();
    let closed = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(v);
            g.neighbors(v).iter().for_each(|&u| s.insert(u));
            s
        })
        .collect();
    let mut search = MisSearch {
        g,
        closed,
        best: Vec::new(),
        current: Vec::new(),
    };
    let mut meter = Meter::new(budget);
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let complete = search.search(all, &mut meter);
    let mut set = search.best;
    set.sort_unstable();
    debug_assert!(set
        .iter()
        .all(|&u| set.iter().all(|&v| !search.g.is_adjacent(u, v))));
    if !complete {
        return Err(ExactError::BudgetExhausted {
            lower: set.len() as u32,
            upper: n as u32,
            best: None,
            stats: meter.stats(),
        });
    }
    Ok(ExactIndependence {
        value: set.len(),
        set,
        stats: meter.stats(),
    })
}
