use serde::{Deserialize, Serialize};

use crate::coloring::{count_violations, Coloring};
use crate::error::{ColoringError, HeuristicError};
use crate::graph::{BallIndex, DistanceMatrix};
use crate::heuristics::{operators::random_coloring, rng, HeuristicOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsConfig {
    pub k: u32,
    pub max_iterations: u64,
    pub seed: u64,
}

impl LsConfig {
    pub const DEFAULT_MAX_ITERATIONS: u64 = 1000;

    pub fn new(k: u32) -> Self {
        LsConfig {
            k,
            max_iterations: Self::DEFAULT_MAX_ITERATIONS,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: u64) -> Self {
        self.max_iterations = max_iterations;
        self
    }
}

/// State after one pass of the local search loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LsStep {
    pub iteration: u64,
    /// Violations of the coloring the search moved to.
    pub current_violations: usize,
    pub best_violations: usize,
    /// Whether this pass replaced the best solution.
    pub improved: bool,
}

/// All colorings that differ from `c` in exactly one vertex, vertex-major
/// and color-ascending: `n * (k - 1)` entries.
pub fn ls_neighborhood(c: &Coloring) -> Vec<Coloring> {
    let mut out = Vec::with_capacity(c.len() * (c.k() as usize).saturating_sub(1));
    for v in 0..c.len() {
        for color in (1..=c.k()).filter(|&x| x != c.color(v)) {
            let mut next = c.colors().to_vec();
            next[v] = color;
            out.push(Coloring::from_raw(next, c.k()));
        }
    }
    out
}

/// `conflicts[v][i]`: vertices `u != v` colored `i` with `d(u, v) <= i`.
/// Recoloring `v` from `a` to `b` changes the violation count by
/// `conflicts[v][b] - conflicts[v][a]`.
struct ConflictTable<'a> {
    balls: &'a BallIndex,
    width: usize,
    conflicts: Vec<usize>,
}

impl<'a> ConflictTable<'a> {
    fn new(balls: &'a BallIndex, colors: &[u32], k: u32) -> Self {
        let width = k as usize + 1;
        let mut table = ConflictTable {
            balls,
            width,
            conflicts: vec![0; colors.len() * width],
        };
        for (v, &c) in colors.iter().enumerate() {
            table.add(v, c, 1);
        }
        table
    }

    fn add(&mut self, v: usize, color: u32, sign: isize) {
        for u in self.balls.ball(v, color) {
            let slot = &mut self.conflicts[u * self.width + color as usize];
            *slot = slot.wrapping_add_signed(sign);
        }
    }

    #[inline]
    fn get(&self, v: usize, color: u32) -> usize {
        self.conflicts[v * self.width + color as usize]
    }
}

pub fn local_search(
    d: &DistanceMatrix,
    cfg: &LsConfig,
) -> Result<HeuristicOutcome, HeuristicError> {
    local_search_observed(d, cfg, |_| {})
}

pub fn local_search_observed(
    d: &DistanceMatrix,
    cfg: &LsConfig,
    observe: impl FnMut(&LsStep),
) -> Result<HeuristicOutcome, HeuristicError> {
    if cfg.k == 0 {
        return Err(ColoringError::ZeroBudget.into());
    }
    let initial = random_coloring(d.n(), cfg.k, &mut rng::stream(cfg.seed, rng::INIT));
    local_search_from(d, initial, cfg.max_iterations, observe)
}

/// Local search from a given starting coloring.
///
/// Each pass scans the whole one-vertex neighborhood and picks its best
/// member (the first one on ties). The best-so-far solution is replaced
/// only on strict improvement, but the search always moves to the best
/// neighbor, even when that is worse than the current coloring. Stops on a
/// packing coloring, after `max_iterations` passes, or when the
/// neighborhood is empty (`k = 1`).
pub fn local_search_from(
    d: &DistanceMatrix,
    initial: Coloring,
    max_iterations: u64,
    mut observe: impl FnMut(&LsStep),
) -> Result<HeuristicOutcome, HeuristicError> {
    if initial.len() != d.n() {
        return Err(ColoringError::LengthMismatch {
            expected: d.n(),
            got: initial.len(),
        }
        .into());
    }
    let k = initial.k();
    let mut current = initial.into_colors();
    let mut current_violations = count_violations(d, &current, k);
    let mut best = current.clone();
    let mut best_violations = current_violations;
    if best_violations == 0 || k == 1 {
        return Ok(HeuristicOutcome::new(
            Coloring::from_raw(best, k),
            best_violations,
            0,
        ));
    }

    let balls = BallIndex::new(d);
    let mut table = ConflictTable::new(&balls, &current, k);
    let mut iteration = 0;
    while iteration < max_iterations {
        iteration += 1;
        let mut choice: Option<(usize, u32, usize)> = None;
        for v in 0..current.len() {
            let from = current[v];
            let base = current_violations - table.get(v, from);
            for to in (1..=k).filter(|&c| c != from) {
                let violations = base + table.get(v, to);
                if choice.is_none_or(|(_, _, best_n)| violations < best_n) {
                    choice = Some((v, to, violations));
                }
            }
        }
        let (v, to, neighbor_violations) = choice.expect("k >= 2 gives a non-empty neighborhood");
        let from = current[v];
        table.add(v, from, -1);
        table.add(v, to, 1);
        current[v] = to;
        current_violations = neighbor_violations;

        let improved = neighbor_violations < best_violations;
        if improved {
            best.clone_from(&current);
            best_violations = neighbor_violations;
        }
        observe(&LsStep {
            iteration,
            current_violations,
            best_violations,
            improved,
        });
        if best_violations == 0 {
            break;
        }
    }
    Ok(HeuristicOutcome::new(
        Coloring::from_raw(best, k),
        best_violations,
        iteration,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{fitness, is_packing_coloring};
    use crate::generators::{complete, cycle};
    use crate::graph::all_pairs_distances;

    #[test]
    fn neighborhood_examples() {
        let c = Coloring::new(vec![1, 1], 2).unwrap();
        let n: Vec<Vec<u32>> = ls_neighborhood(&c)
            .into_iter()
            .map(Coloring::into_colors)
            .collect();
        assert_eq!(n, vec![vec![2, 1], vec![1, 2]]);
        let n = ls_neighborhood(&Coloring::new(vec![2], 3).unwrap());
        assert_eq!(
            n.iter().map(|c| c.colors()[0]).collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert_eq!(
            ls_neighborhood(&Coloring::new(vec![1; 5], 4).unwrap()).len(),
            15
        );
    }

    #[test]
    fn triangle_with_three_colors_from_every_start() {
        let d = all_pairs_distances(&complete(3).unwrap());
        for code in 0..27u32 {
            let colors = vec![code % 3 + 1, code / 3 % 3 + 1, code / 9 + 1];
            let start = Coloring::new(colors, 3).unwrap();
            let out = local_search_from(&d, start, 10, |_| {}).unwrap();
            assert!(out.solved);
            assert!(out.iterations_used <= 2, "{code}: {}", out.iterations_used);
        }
    }

    #[test]
    fn triangle_with_two_colors_is_stuck_at_one_violation() {
        let d = all_pairs_distances(&complete(3).unwrap());
        for seed in 0..10 {
            let out = local_search(
                &d,
                &LsConfig::new(2).with_seed(seed).with_max_iterations(20),
            )
            .unwrap();
            assert!(!out.solved);
            assert_eq!(out.best_violations, 1);
            assert_eq!(out.best_fitness, 0.5);
        }
    }

    #[test]
    fn valid_start_returns_immediately() {
        let d = all_pairs_distances(&cycle(5).unwrap());
        let start = Coloring::new(vec![1, 2, 1, 3, 4], 4).unwrap();
        let out = local_search_from(&d, start.clone(), 100, |_| panic!("no iterations")).unwrap();
        assert_eq!(out.best_coloring, start);
        assert_eq!(out.iterations_used, 0);
    }

    #[test]
    fn outcome_matches_recomputed_fitness() {
        let d = all_pairs_distances(&cycle(15).unwrap());
        for seed in 0..5 {
            let out = local_search(&d, &LsConfig::new(4).with_seed(seed)).unwrap();
            let report = fitness(&d, &out.best_coloring).unwrap();
            assert_eq!(report.violations, out.best_violations);
            assert_eq!(
                out.solved,
                is_packing_coloring(&d, &out.best_coloring).unwrap()
            );
        }
    }
}
