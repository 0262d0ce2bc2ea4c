use super::WeightedGraph;
use crate::error::GraphError;
use crate::scalar::Scalar;

fn pair_labels(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

fn label_or_index<T>(g: &WeightedGraph<T>, v: usize) -> String {
    g.labels.as_ref().map_or_else(|| v.to_string(), |l| l[v].clone())
}

pub(super) fn bipartite_double<T: Scalar>(g: &WeightedGraph<T>) -> WeightedGraph<T> {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for e in g.edges() {
        edges.push((e.u, n + e.v, e.w));
        edges.push((n + e.u, e.v, e.w));
    }
    let mut out = WeightedGraph::from_edge_list(2 * n, &edges).expect("double of a simple graph is simple");
    out.labels = Some(
        (0..2)
            .flat_map(|copy| (0..n).map(move |v| (copy, v)))
            .map(|(copy, v)| pair_labels(&copy.to_string(), &label_or_index(g, v)))
            .collect(),
    );
    out
}

pub(super) fn subdivision<T: Scalar>(g: &WeightedGraph<T>) -> WeightedGraph<T> {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        edges.push((e.u, n + i, e.w));
        edges.push((n + i, e.v, e.w));
    }
    let mut out = WeightedGraph::from_edge_list(n + g.edge_count(), &edges)
        .expect("subdivision of a simple graph is simple");
    if g.labels.is_some() {
        let mut labels: Vec<String> = (0..n).map(|v| label_or_index(g, v)).collect();
        labels.extend(
            g.edges().iter().map(|e| format!("[{}-{}]", label_or_index(g, e.u), label_or_index(g, e.v))),
        );
        out.labels = Some(labels);
    }
    out
}

pub(super) fn cartesian_product<T: Scalar>(g: &WeightedGraph<T>, h: &WeightedGraph<T>) -> WeightedGraph<T> {
    let (ng, nh) = (g.n(), h.n());
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for u in 0..ng {
        for e in h.edges() {
            edges.push((u * nh + e.u, u * nh + e.v, e.w));
        }
    }
    for e in g.edges() {
        for v in 0..nh {
            edges.push((e.u * nh + v, e.v * nh + v, e.w));
        }
    }
    let mut out =
        WeightedGraph::from_edge_list(ng * nh, &edges).expect("product of simple graphs is simple");
    if g.labels.is_some() || h.labels.is_some() {
        out.labels = Some(
            (0..ng)
                .flat_map(|u| (0..nh).map(move |v| (u, v)))
                .map(|(u, v)| pair_labels(&label_or_index(g, u), &label_or_index(h, v)))
                .collect(),
        );
    }
    out
}

pub(super) fn rooted_product<T: Scalar>(
    g: &WeightedGraph<T>,
    attachments: &[(WeightedGraph<T>, usize)],
) -> Result<WeightedGraph<T>, GraphError> {
    if attachments.len() != g.n() {
        return Err(GraphError::ArityMismatch { expected: g.n(), got: attachments.len() });
    }
    let mut edges: Vec<(usize, usize, T)> = g.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
    let mut next = g.n();
    for (i, (y, root)) in attachments.iter().enumerate() {
        if *root >= y.n() {
            return Err(GraphError::BadRoot { index: i, root: *root, n: y.n() });
        }
        let mut map = vec![0; y.n()];
        for (v, slot) in map.iter_mut().enumerate() {
            if v == *root {
                *slot = i;
            } else {
                *slot = next;
                next += 1;
            }
        }
        edges.extend(y.edges().iter().map(|e| (map[e.u], map[e.v], e.w)));
    }
    WeightedGraph::from_edge_list(next, &edges)
}
