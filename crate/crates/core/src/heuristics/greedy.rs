use rand::seq::SliceRandom;

use crate::coloring::Coloring;
use crate::graph::DistanceMatrix;
use crate::heuristics::rng;

/// First-fit packing coloring: visits vertices in `order` and gives each the
/// smallest color `i` with no earlier vertex of color `i` within distance
/// `i`. The result is always a packing coloring.
///
/// # Panics
///
/// If `order` is not a permutation of `0..d.n()`.
pub fn greedy_packing(d: &DistanceMatrix, order: &[usize]) -> Coloring {
    let n = d.n();
    assert_eq!(order.len(), n, "order must list every vertex once");
    let mut colors = vec![0u32; n];
    // classes[i - 1]: vertices colored i so far
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in order {
        assert_eq!(colors[v], 0, "vertex {v} appears twice in order");
        let slot = classes
            .iter()
            .enumerate()
            .position(|(i, class)| class.iter().all(|&u| !d.within(u, v, i as u32 + 1)))
            .unwrap_or_else(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
        classes[slot].push(v);
        colors[v] = slot as u32 + 1;
    }
    let k = classes.len().max(1) as u32;
    Coloring::from_raw(colors, k)
}

/// Runs first-fit over `runs` uniformly random vertex orders drawn from the
/// greedy stream of `seed`.
pub fn greedy_random_orders(d: &DistanceMatrix, runs: usize, seed: u64) -> Vec<Coloring> {
    let mut rng = rng::stream(seed, rng::GREEDY_ORDER);
    let mut order: Vec<usize> = (0..d.n()).collect();
    (0..runs)
        .map(|_| {
            order.shuffle(&mut rng);
            greedy_packing(d, &order)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_packing_coloring;
    use crate::generators::{complete, complete_multipartite, cycle, path};
    use crate::graph::all_pairs_distances;

    fn natural(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn cycle5_natural_order() {
        let d = all_pairs_distances(&cycle(5).unwrap());
        let c = greedy_packing(&d, &natural(5));
        assert_eq!(c.colors(), &[1, 2, 1, 3, 4]);
        assert!(is_packing_coloring(&d, &c).unwrap());
    }

    #[test]
    fn path4_natural_order() {
        let d = all_pairs_distances(&path(4).unwrap());
        assert_eq!(greedy_packing(&d, &natural(4)).colors(), &[1, 2, 1, 3]);
    }

    #[test]
    fn complete_graph_needs_all_colors() {
        let d = all_pairs_distances(&complete(4).unwrap());
        let c = greedy_packing(&d, &[2, 0, 3, 1]);
        assert_eq!(c.colors(), &[2, 4, 1, 3]);
        assert_eq!(c.colors_used(), 4);
    }

    #[test]
    fn multipartite_color_one_takes_the_first_part() {
        // Parts {0..3}, {3..8}, {8..15}. Color 1 absorbs the part of the
        // first vertex; every other vertex needs its own color, so only
        // orders starting in the 7-part reach n - alpha + 1 = 9.
        let d = all_pairs_distances(&complete_multipartite(&[3, 5, 7]).unwrap());
        let part_size = |v: usize| match v {
            0..=2 => 3,
            3..=7 => 5,
            _ => 7,
        };
        let mut order: Vec<usize> = (0..15).rev().collect();
        assert_eq!(greedy_packing(&d, &order).colors_used(), 9);
        order.reverse();
        assert_eq!(greedy_packing(&d, &order).colors_used(), 13);
        for c in greedy_random_orders(&d, 20, 7) {
            assert!(is_packing_coloring(&d, &c).unwrap());
            let first = (0..15).find(|&v| c.color(v) == 1).unwrap();
            assert_eq!(c.colors_used(), 1 + 15 - part_size(first));
        }
    }

    #[test]
    #[should_panic]
    fn rejects_non_permutation() {
        let d = all_pairs_distances(&path(3).unwrap());
        greedy_packing(&d, &[0, 0, 1]);
    }
}
