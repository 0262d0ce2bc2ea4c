//! Seeded random graph generators for the property and acceptance runs.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::WeightedGraph;

/// Uniform on `[-2, 2]` with zero rejected.
pub fn random_weight<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let w: f64 = rng.gen_range(-2.0..=2.0);
        if w != 0.0 {
            return w;
        }
    }
}

fn weight<R: Rng>(rng: &mut R, weighted: bool) -> f64 {
    if weighted {
        random_weight(rng)
    } else {
        1.0
    }
}

fn assemble(n: usize, edges: &[(usize, usize, f64)]) -> WeightedGraph {
    WeightedGraph::from_edge_list(n, edges).expect("generator emits simple graphs")
}

/// Erdős–Rényi graph `G(n, p)` with `n` drawn from `sizes`; may be disconnected.
pub fn random_graph<R: Rng>(rng: &mut R, ns: RangeInclusive<usize>, p: f64, weighted: bool) -> WeightedGraph {
    let n = rng.gen_range(ns);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, weight(rng, weighted)));
            }
        }
    }
    assemble(n, &edges)
}

/// Random recursive tree plus each remaining pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, ns: RangeInclusive<usize>, p: f64, weighted: bool) -> WeightedGraph {
    let n = rng.gen_range(ns);
    let mut edges = Vec::new();
    let mut parent = vec![usize::MAX; n];
    for (v, slot) in parent.iter_mut().enumerate().skip(1) {
        *slot = rng.gen_range(0..v);
    }
    for u in 0..n {
        for (v, &pv) in parent.iter().enumerate().skip(u + 1) {
            if pv == u || rng.gen_bool(p) {
                edges.push((u, v, weight(rng, weighted)));
            }
        }
    }
    assemble(n, &edges)
}

/// Connected bipartite graph: a random tree plus cross-side pairs with probability `p`.
pub fn random_bipartite<R: Rng>(rng: &mut R, ns: RangeInclusive<usize>, p: f64, weighted: bool) -> WeightedGraph {
    let n = rng.gen_range(ns);
    let mut side = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    for v in 1..n {
        parent[v] = rng.gen_range(0..v);
        side[v] = !side[parent[v]];
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && (parent[v] == u || rng.gen_bool(p)) {
                edges.push((u, v, weight(rng, weighted)));
            }
        }
    }
    assemble(n, &edges)
}

/// Weighted tree on `2·pairs` vertices, `pairs` drawn from the range, with the perfect matching `{2i, 2i+1}`.
pub fn random_tree_with_matching<R: Rng>(rng: &mut R, pair_counts: RangeInclusive<usize>) -> WeightedGraph {
    let pairs = rng.gen_range(pair_counts);
    let mut edges: Vec<(usize, usize, f64)> = (0..pairs).map(|i| (2 * i, 2 * i + 1, random_weight(rng))).collect();
    for i in 1..pairs {
        let j = rng.gen_range(0..i);
        let a = 2 * i + rng.gen_range(0..2);
        let b = 2 * j + rng.gen_range(0..2);
        edges.push((b, a, random_weight(rng)));
    }
    let mut perm: Vec<usize> = (0..2 * pairs).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v, w)| (perm[u], perm[v], w)).collect();
    assemble(2 * pairs, &edges)
}

/// Weighted unicyclic graph on `n ≥ 3` vertices whose cycle is the triangle `0, 1, 2`.
pub fn random_unicyclic_triangle<R: Rng>(rng: &mut R, ns: RangeInclusive<usize>) -> WeightedGraph {
    let n = rng.gen_range(ns);
    let mut edges = vec![(0, 1, random_weight(rng)), (1, 2, random_weight(rng)), (0, 2, random_weight(rng))];
    for v in 3..n {
        edges.push((rng.gen_range(0..v), v, random_weight(rng)));
    }
    assemble(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_have_their_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..10 {
            assert!(random_connected(&mut rng, n..=n, 0.3, true).is_connected());
            let b = random_bipartite(&mut rng, n..=n, 0.5, false);
            assert!(b.is_connected() && b.is_bipartite());
        }
        for pairs in 1..8 {
            let t = random_tree_with_matching(&mut rng, pairs..=pairs);
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), 2 * pairs - 1);
            assert_eq!(t.count_perfect_matchings_capped().count_capped, 1);
        }
        for n in 3..10 {
            let x = random_unicyclic_triangle(&mut rng, n..=n);
            assert!(x.is_connected());
            assert_eq!(x.edge_count(), n);
        }
    }
}
