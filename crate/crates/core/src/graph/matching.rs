use super::{Edge, WeightedGraph};
use crate::scalar::Scalar;

/// Perfect-matching count capped at two, with one matching as a sample.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingReport {
    /// `min(2, number of perfect matchings)`.
    pub count_capped: u8,
    /// A perfect matching as `(u, v)` pairs with `u < v`, present iff `count_capped >= 1`.
    pub sample: Option<Vec<(usize, usize)>>,
}

pub(super) fn count_capped<T: Scalar>(g: &WeightedGraph<T>) -> MatchingReport {
    let n = g.n();
    if n % 2 == 1 {
        return MatchingReport { count_capped: 0, sample: None };
    }
    let mut state = Search { g, mate: vec![usize::MAX; n], found: 0, sample: None };
    state.extend(0);
    MatchingReport { count_capped: state.found, sample: state.sample }
}

struct Search<'a, T> {
    g: &'a WeightedGraph<T>,
    mate: Vec<usize>,
    found: u8,
    sample: Option<Vec<(usize, usize)>>,
}

impl<T: Scalar> Search<'_, T> {
    // Always matches the lowest unmatched vertex, so each matching is reached once.
    fn extend(&mut self, from: usize) {
        if self.found >= 2 {
            return;
        }
        let Some(u) = (from..self.g.n()).find(|&v| self.mate[v] == usize::MAX) else {
            self.found += 1;
            if self.sample.is_none() {
                let pairs = (0..self.g.n())
                    .filter(|&v| v < self.mate[v])
                    .map(|v| (v, self.mate[v]))
                    .collect();
                self.sample = Some(pairs);
            }
            return;
        };
        for i in 0..self.g.neighbors(u).len() {
            let v = self.g.neighbors(u)[i].0;
            if self.mate[v] != usize::MAX {
                continue;
            }
            self.mate[u] = v;
            self.mate[v] = u;
            self.extend(u + 1);
            self.mate[u] = usize::MAX;
            self.mate[v] = usize::MAX;
            if self.found >= 2 {
                return;
            }
        }
    }
}

/// Exhaustive perfect-matching count over all `n/2`-edge subsets; test oracle for small graphs.
pub fn count_perfect_matchings_brute<T>(n: usize, edges: &[Edge<T>]) -> usize {
    if n % 2 == 1 {
        return 0;
    }
    let k = n / 2;
    let m = edges.len();
    let mut count = 0;
    let mut chosen = Vec::with_capacity(k);
    fn rec<T>(
        start: usize,
        k: usize,
        m: usize,
        n: usize,
        edges: &[Edge<T>],
        chosen: &mut Vec<usize>,
        count: &mut usize,
    ) {
        if chosen.len() == k {
            let mut covered = vec![false; n];
            for &i in chosen.iter() {
                if covered[edges[i].u] || covered[edges[i].v] {
                    return;
                }
                covered[edges[i].u] = true;
                covered[edges[i].v] = true;
            }
            *count += 1;
            return;
        }
        for i in start..m {
            chosen.push(i);
            rec(i + 1, k, m, n, edges, chosen, count);
            chosen.pop();
        }
    }
    rec(0, k, m, n, edges, &mut chosen, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn capped_count_agrees_with_enumeration(
            n in 1usize..=8,
            mask in proptest::collection::vec(any::<bool>(), 28),
        ) {
            let mut pairs = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        pairs.push((u, v));
                    }
                    idx += 1;
                }
            }
            let g = WeightedGraph::<f64>::unweighted(n, &pairs).unwrap();
            let report = g.count_perfect_matchings_capped();
            let exact = count_perfect_matchings_brute(n, g.edges());
            prop_assert_eq!(report.count_capped as usize, exact.min(2));
            match &report.sample {
                Some(sample) => {
                    prop_assert!(exact >= 1);
                    prop_assert_eq!(sample.len(), n / 2);
                    let mut covered = vec![false; n];
                    for &(u, v) in sample {
                        prop_assert!(g.weight(u, v).is_some());
                        prop_assert!(!covered[u] && !covered[v]);
                        covered[u] = true;
                        covered[v] = true;
                    }
                }
                None => prop_assert_eq!(exact, 0),
            }
        }
    }
}
