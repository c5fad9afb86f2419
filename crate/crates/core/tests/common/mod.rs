#![allow(dead_code)]

use packing_core::Graph;
use proptest::prelude::*;

pub const INF: u32 = u32::MAX;

/// Random simple graph on `1..=max_n` vertices, each pair an edge with
/// probability 1/2.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Graph plus a color budget and a coloring drawn from `1..=k`.
pub fn arb_colored(max_n: usize, max_k: u32) -> impl Strategy<Value = (Graph, u32, Vec<u32>)> {
    (arb_graph(max_n), 1..=max_k).prop_flat_map(|(g, k)| {
        let n = g.n();
        (Just(g), Just(k), proptest::collection::vec(1..=k, n))
    })
}

/// Floyd-Warshall distances, `INF` for unreachable pairs.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] != INF && d[w][v] != INF && d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

/// Violations straight from the definition: same-color pairs `{u, v}` of
/// color `i` with `d(u, v) <= i`.
pub fn naive_violations(d: &[Vec<u32>], colors: &[u32]) -> usize {
    let n = colors.len();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] == colors[v] && d[u][v] <= colors[u] {
                count += 1;
            }
        }
    }
    count
}

/// Smallest `k` admitting a packing coloring, by plain backtracking over
/// vertices in index order.
pub fn naive_packing_chromatic(d: &[Vec<u32>]) -> u32 {
    fn extend(d: &[Vec<u32>], colors: &mut Vec<u32>, k: u32) -> bool {
        let v = colors.len();
        if v == d.len() {
            return true;
        }
        for c in 1..=k {
            if (0..v).all(|u| colors[u] != c || d[u][v] > c) {
                colors.push(c);
                if extend(d, colors, k) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (1..).find(|&k| extend(d, &mut Vec::new(), k)).unwrap()
}

/// Largest independent set size by subset enumeration.
pub fn naive_independence(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&mask| {
            g.edges()
                .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}
