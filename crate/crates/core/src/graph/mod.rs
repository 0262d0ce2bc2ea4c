//! Weighted simple graphs, their structural analysis, and graph operators.

mod json;
mod matching;
mod ops;

use std::collections::{BTreeMap, VecDeque};

use crate::error::GraphError;
use crate::scalar::Scalar;

pub use json::GraphJson;
pub use matching::{count_perfect_matchings_brute, MatchingReport};

/// An undirected edge `{u, v}` carrying a nonzero real weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<T = f64> {
    pub u: usize,
    pub v: usize,
    pub w: T,
}

/// Simple, loopless, undirected graph with nonzero edge weights.
///
/// Construction validates every edge, so a value of this type always has a
/// symmetric adjacency matrix with a zero diagonal. Disconnected graphs are
/// allowed as values; analysis entry points check connectivity themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph<T = f64> {
    n: usize,
    edges: Vec<Edge<T>>,
    labels: Option<Vec<String>>,
    adj: Vec<Vec<(usize, T)>>,
}

/// Two-colouring of a connected bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> Option<Side> {
        if self.side_a.binary_search(&v).is_ok() {
            Some(Side::A)
        } else if self.side_b.binary_search(&v).is_ok() {
            Some(Side::B)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinKind {
    /// Pairwise non-adjacent twins (equal open neighbourhoods).
    Independent,
    /// Pairwise adjacent twins (equal closed neighbourhoods).
    Clique,
}

/// Maximal set of mutually twin vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinSet {
    pub members: Vec<usize>,
    pub kind: TwinKind,
}

/// Vertex `hub` with two or more degree-one neighbours.
#[derive(Debug, Clone, PartialEq)]
pub struct PendantGroup<T = f64> {
    pub hub: usize,
    /// `(pendant vertex, weight of its edge to hub)` in ascending vertex order.
    pub pendants: Vec<(usize, T)>,
}

impl<T: Scalar> WeightedGraph<T> {
    /// Validates `edges` over vertices `0..n` and builds the graph.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize, T)]) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        let mut stored = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(GraphError::IndexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u });
            }
            if !w.is_finite() {
                return Err(GraphError::NonFiniteWeight { u, v });
            }
            if w == T::zero() {
                return Err(GraphError::ZeroWeight { u, v });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u].push((v, w));
            adj[v].push((u, w));
            stored.push(Edge { u, v, w });
        }
        for list in &mut adj {
            list.sort_by_key(|&(x, _)| x);
        }
        Ok(WeightedGraph { n, edges: stored, labels: None, adj })
    }

    /// Unweighted graph from index pairs.
    pub fn unweighted(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let edges: Vec<_> = pairs.iter().map(|&(u, v)| (u, v, T::one())).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount { expected: self.n, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Neighbours of `u` with edge weights, sorted by vertex.
    pub fn neighbors(&self, u: usize) -> &[(usize, T)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<T> {
        self.adj[u].binary_search_by_key(&v, |&(x, _)| x).ok().map(|i| self.adj[u][i].1)
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.w == T::one())
    }

    /// Dense row-major adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<T> {
        let n = self.n;
        let mut a = vec![T::zero(); n * n];
        for e in &self.edges {
            a[e.u * n + e.v] = e.w;
            a[e.v * n + e.u] = e.w;
        }
        a
    }

    /// Largest absolute edge weight times the maximum degree; bounds the spectral radius.
    pub fn spectral_scale(&self) -> T {
        (0..self.n)
            .map(|u| self.adj[u].iter().fold(T::zero(), |acc, &(_, w)| acc + w.abs()))
            .fold(T::zero(), T::max)
    }

    /// Converts weights to another scalar type.
    pub fn cast<U: Scalar>(&self) -> WeightedGraph<U> {
        let edges: Vec<_> =
            self.edges.iter().map(|e| (e.u, e.v, U::from_f64_lossy(e.w.as_f64()))).collect();
        let mut g = WeightedGraph::from_edge_list(self.n, &edges)
            .expect("casting preserves validity of nonzero weights");
        g.labels = self.labels.clone();
        g
    }

    /// Connected-component id per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().iter().all(|&c| c == 0)
    }

    /// BFS two-colouring with vertex 0 on `side_a`; `None` for non-bipartite graphs.
    pub fn bipartition(&self) -> Result<Option<Bipartition>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.two_colouring().map(|colour| {
            let (mut side_a, mut side_b) = (Vec::new(), Vec::new());
            for (v, c) in colour.into_iter().enumerate() {
                if c == 0 {
                    side_a.push(v);
                } else {
                    side_b.push(v);
                }
            }
            Bipartition { side_a, side_b }
        }))
    }

    /// Bipartiteness test that also accepts disconnected graphs.
    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    fn two_colouring(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        queue.push_back(y);
                    } else if colour[y] == colour[x] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// Maximal twin sets of an unweighted graph.
    ///
    /// Non-adjacent twins share their open neighbourhood and adjacent twins
    /// share their closed neighbourhood, so grouping by each key yields the
    /// independent and clique classes respectively.
    pub fn twin_sets(&self) -> Result<Vec<TwinSet>, GraphError> {
        if !self.is_unweighted() {
            return Err(GraphError::NotUnweighted);
        }
        let mut open: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for u in 0..self.n {
            let nb: Vec<usize> = self.adj[u].iter().map(|&(x, _)| x).collect();
            let mut cl = nb.clone();
            cl.push(u);
            cl.sort_unstable();
            open.entry(nb).or_default().push(u);
            closed.entry(cl).or_default().push(u);
        }
        let mut sets: Vec<TwinSet> = open
            .into_values()
            .filter(|m| m.len() >= 2)
            .map(|members| TwinSet { members, kind: TwinKind::Independent })
            .chain(
                closed
                    .into_values()
                    .filter(|m| m.len() >= 2)
                    .map(|members| TwinSet { members, kind: TwinKind::Clique }),
            )
            .collect();
        sets.sort_by_key(|s| s.members[0]);
        Ok(sets)
    }

    /// Hubs with at least two pendant neighbours.
    pub fn pendant_groups(&self) -> Vec<PendantGroup<T>> {
        (0..self.n)
            .filter_map(|hub| {
                let pendants: Vec<(usize, T)> =
                    self.adj[hub].iter().copied().filter(|&(p, _)| self.degree(p) == 1).collect();
                (pendants.len() >= 2).then_some(PendantGroup { hub, pendants })
            })
            .collect()
    }

    /// Number of perfect matchings, capped at 2.
    pub fn count_perfect_matchings_capped(&self) -> MatchingReport {
        matching::count_capped(self)
    }

    /// `K_2 × G`: copy `(0, u)` is vertex `u`, copy `(1, u)` is vertex `n + u`.
    pub fn bipartite_double(&self) -> WeightedGraph<T> {
        ops::bipartite_double(self)
    }

    /// Replaces each edge by a two-edge path; midpoint of edge `i` is vertex `n + i`.
    pub fn subdivision(&self) -> WeightedGraph<T> {
        ops::subdivision(self)
    }

    /// `G □ H` with vertex `(u, v)` at index `u * |V(H)| + v`.
    pub fn cartesian_product(&self, other: &WeightedGraph<T>) -> WeightedGraph<T> {
        ops::cartesian_product(self, other)
    }

    /// Glues attachment `i` onto base vertex `i` at its root.
    ///
    /// Base vertices keep their indices; the non-root vertices of attachment
    /// `i` follow in order, after those of attachments `0..i`.
    pub fn rooted_product(
        &self,
        attachments: &[(WeightedGraph<T>, usize)],
    ) -> Result<WeightedGraph<T>, GraphError> {
        ops::rooted_product(self, attachments)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = WeightedGraph<f64>;

    fn path(n: usize) -> G {
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        G::unweighted(n, &pairs).unwrap()
    }

    fn cycle(n: usize) -> G {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        G::unweighted(n, &pairs).unwrap()
    }

    fn complete(n: usize) -> G {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        G::unweighted(n, &pairs).unwrap()
    }

    #[test]
    fn edge_list_validation() {
        let p3 = G::from_edge_list(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree(1), 2);
        assert_eq!(
            G::from_edge_list(3, &[(0, 1, 1.0), (1, 1, 1.0)]),
            Err(GraphError::SelfLoop { u: 1 })
        );
        assert_eq!(
            G::from_edge_list(3, &[(0, 1, 1.0), (1, 0, 2.0)]),
            Err(GraphError::DuplicateEdge { u: 1, v: 0 })
        );
        assert_eq!(G::from_edge_list(3, &[(0, 2, 0.0)]), Err(GraphError::ZeroWeight { u: 0, v: 2 }));
        assert_eq!(
            G::from_edge_list(3, &[(0, 3, 1.0)]),
            Err(GraphError::IndexOutOfRange { u: 0, v: 3, n: 3 })
        );
        let c4 = G::from_edge_list(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)]).unwrap();
        assert!(c4.is_connected());
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = G::from_edge_list(4, &[(0, 1, 2.5), (3, 1, -1.0), (2, 0, 0.5)]).unwrap();
        let a = g.adjacency_matrix();
        for i in 0..4 {
            assert_eq!(a[i * 4 + i], 0.0);
            for j in 0..4 {
                assert_eq!(a[i * 4 + j], a[j * 4 + i]);
            }
        }
        assert_eq!(g.weight(1, 3), Some(-1.0));
        assert_eq!(g.weight(2, 3), None);
    }

    #[test]
    fn bipartition_examples() {
        let bp = cycle(4).bipartition().unwrap().unwrap();
        assert_eq!(bp.side_a, vec![0, 2]);
        assert_eq!(bp.side_b, vec![1, 3]);
        assert_eq!(cycle(3).bipartition().unwrap(), None);
        let bp = path(5).bipartition().unwrap().unwrap();
        assert_eq!(bp.side_a, vec![0, 2, 4]);
        assert_eq!(bp.side_b, vec![1, 3]);
        let two_k2 = G::unweighted(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.bipartition(), Err(GraphError::Disconnected));
    }

    #[test]
    fn twin_set_examples() {
        let star = G::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.twin_sets().unwrap(),
            vec![TwinSet { members: vec![1, 2, 3], kind: TwinKind::Independent }]
        );
        assert_eq!(
            complete(4).twin_sets().unwrap(),
            vec![TwinSet { members: vec![0, 1, 2, 3], kind: TwinKind::Clique }]
        );
        assert!(path(4).twin_sets().unwrap().is_empty());
        let weighted = G::from_edge_list(2, &[(0, 1, 2.0)]).unwrap();
        assert_eq!(weighted.twin_sets(), Err(GraphError::NotUnweighted));
    }

    #[test]
    fn pendant_groups_found() {
        let star = G::from_edge_list(3, &[(0, 1, 1.0), (0, 2, 2.0)]).unwrap();
        let groups = star.pendant_groups();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].hub, 0);
        assert_eq!(groups[0].pendants, vec![(1, 1.0), (2, 2.0)]);
        assert!(path(4).pendant_groups().is_empty());
    }

    #[test]
    fn matching_counts() {
        assert_eq!(path(4).count_perfect_matchings_capped().count_capped, 1);
        assert_eq!(cycle(4).count_perfect_matchings_capped().count_capped, 2);
        let p5 = path(5).count_perfect_matchings_capped();
        assert_eq!(p5.count_capped, 0);
        assert!(p5.sample.is_none());
    }

    #[test]
    fn double_of_triangle_is_hexagon() {
        let d = cycle(3).bipartite_double();
        assert_eq!(d.n(), 6);
        assert!(d.is_connected());
        assert!((0..6).all(|v| d.degree(v) == 2));
        let d = complete(2).bipartite_double();
        assert_eq!(d.components(), vec![0, 1, 1, 0]);
    }

    #[test]
    fn subdivision_examples() {
        let s = cycle(3).subdivision();
        assert_eq!(s.n(), 6);
        assert!((0..6).all(|v| s.degree(v) == 2));
        assert!(s.is_connected());
        let star = G::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap().subdivision();
        assert_eq!(star.n(), 7);
        assert_eq!(star.degree(0), 3);
        assert_eq!((1..4).map(|v| star.degree(v)).collect::<Vec<_>>(), vec![1, 1, 1]);
        let p = path(3).subdivision();
        assert_eq!(p.n(), 5);
        assert!(p.bipartition().unwrap().is_some());
    }

    #[test]
    fn cartesian_examples() {
        let k2 = complete(2);
        let c4 = k2.cartesian_product(&k2);
        assert_eq!(c4.n(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert!(c4.is_connected());
        let grid = path(2).cartesian_product(&path(3));
        assert_eq!(grid.n(), 6);
        assert_eq!(grid.edge_count(), 7);
        let h23 = complete(3).cartesian_product(&complete(3));
        assert_eq!(h23.n(), 9);
        assert!((0..9).all(|v| h23.degree(v) == 4));
    }

    #[test]
    fn rooted_product_examples() {
        let k2 = complete(2);
        let p4 = path(2).rooted_product(&[(k2.clone(), 1), (k2.clone(), 0)]).unwrap();
        assert_eq!(p4.n(), 4);
        let mut degs: Vec<_> = (0..4).map(|v| p4.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert!(p4.is_connected());

        let cat = path(3).rooted_product(&vec![(k2.clone(), 0); 3]).unwrap();
        assert_eq!(cat.n(), 6);
        assert_eq!((3..6).map(|v| cat.degree(v)).collect::<Vec<_>>(), vec![1, 1, 1]);

        let c4k2 = cycle(4).rooted_product(&vec![(k2.clone(), 0); 4]).unwrap();
        assert_eq!(c4k2.n(), 8);
        assert!((0..4).all(|v| c4k2.degree(v) == 3));

        assert_eq!(
            path(2).rooted_product(&[(k2.clone(), 0)]),
            Err(GraphError::ArityMismatch { expected: 2, got: 1 })
        );
        assert_eq!(
            path(2).rooted_product(&[(k2.clone(), 0), (k2, 2)]),
            Err(GraphError::BadRoot { index: 1, root: 2, n: 2 })
        );
    }

    #[test]
    fn cast_to_f32() {
        let g = G::from_edge_list(2, &[(0, 1, 0.5)]).unwrap();
        let h: WeightedGraph<f32> = g.cast();
        assert_eq!(h.weight(0, 1), Some(0.5f32));
    }
}
