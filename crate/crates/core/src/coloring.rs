//! Colorings, the packing validity check, and the violation-count fitness.

use serde::{Deserialize, Serialize};

use crate::error::ColoringError;
use crate::graph::DistanceMatrix;

/// A total assignment of colors `1..=k` to vertices `0..n`.
///
/// Color classes may be empty; validity is judged only by the distance
/// constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::ZeroBudget);
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Coloring { colors, k })
    }

    /// Uses the largest color present as the budget.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(1).max(1);
        Self::new(colors, k)
    }

    pub(crate) fn from_raw(colors: Vec<u32>, k: u32) -> Self {
        debug_assert!(colors.iter().all(|&c| c >= 1 && c <= k));
        Coloring { colors, k }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<u32> {
        self.colors
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Number of distinct colors present.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k as usize + 1];
        self.colors.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Relabels the used colors onto `1..=m` preserving their order, with
    /// `m` the number of colors used.
    ///
    /// No color increases, so a packing coloring stays a packing coloring.
    pub fn compacted(&self) -> Coloring {
        let mut rank = vec![0u32; self.k as usize + 1];
        for &c in &self.colors {
            rank[c as usize] = 1;
        }
        let mut next = 0;
        for r in rank.iter_mut() {
            if *r == 1 {
                next += 1;
                *r = next;
            }
        }
        let colors = self.colors.iter().map(|&c| rank[c as usize]).collect();
        Coloring::from_raw(colors, next.max(1))
    }
}

/// Outcome of the fitness calculation for one coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitnessReport {
    /// Number of unordered same-color pairs `{u, v}` with color `i` and
    /// `d(u, v) <= i`.
    pub violations: usize,
    /// Each violating pair as `(u, v, color)` with `u < v`.
    pub violating_pairs: Vec<(usize, usize, u32)>,
}

impl FitnessReport {
    /// `1 / (1 + violations)`.
    pub fn fitness(&self) -> f64 {
        fitness_value(self.violations)
    }

    /// Fitness as an exact `(numerator, denominator)` pair.
    pub fn fitness_ratio(&self) -> (u64, u64) {
        (1, 1 + self.violations as u64)
    }

    pub fn is_valid(&self) -> bool {
        self.violations == 0
    }
}

pub fn fitness_value(violations: usize) -> f64 {
    1.0 / (1.0 + violations as f64)
}

fn check_len(d: &DistanceMatrix, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != d.n() {
        return Err(ColoringError::LengthMismatch {
            expected: d.n(),
            got: c.len(),
        });
    }
    Ok(())
}

/// Whether every color class `i` is an `i`-packing: distinct vertices of
/// color `i` are at distance at least `i + 1`. Unreachable pairs satisfy
/// every bound.
pub fn is_packing_coloring(d: &DistanceMatrix, c: &Coloring) -> Result<bool, ColoringError> {
    check_len(d, c)?;
    let classes = color_classes(c.colors(), c.k());
    Ok(classes.iter().enumerate().all(|(i, class)| {
        let bound = i as u32;
        class
            .iter()
            .enumerate()
            .all(|(a, &u)| class[a + 1..].iter().all(|&v| !d.within(u, v, bound)))
    }))
}

/// Counts the violating pairs and records them.
pub fn fitness(d: &DistanceMatrix, c: &Coloring) -> Result<FitnessReport, ColoringError> {
    check_len(d, c)?;
    let mut violating_pairs = Vec::new();
    for (i, class) in color_classes(c.colors(), c.k()).iter().enumerate() {
        let bound = i as u32;
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a + 1..] {
                if d.within(u, v, bound) {
                    violating_pairs.push((u, v, bound));
                }
            }
        }
    }
    violating_pairs.sort_unstable();
    Ok(FitnessReport {
        violations: violating_pairs.len(),
        violating_pairs,
    })
}

/// Violation count without collecting pairs. `colors` must lie in `1..=k`
/// and have length `d.n()`.
pub fn count_violations(d: &DistanceMatrix, colors: &[u32], k: u32) -> usize {
    color_classes(colors, k)
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let bound = i as u32;
            class
                .iter()
                .enumerate()
                .map(|(a, &u)| {
                    class[a + 1..]
                        .iter()
                        .filter(|&&v| d.within(u, v, bound))
                        .count()
                })
                .sum::<usize>()
        })
        .sum()
}

/// Vertices grouped by color; index `i` holds class `i` (index 0 is empty).
fn color_classes(colors: &[u32], k: u32) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); k as usize + 1];
    for (v, &c) in colors.iter().enumerate() {
        classes[c as usize].push(v);
    }
    classes
}
