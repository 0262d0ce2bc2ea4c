//! Distinct-eigenvalue projector decomposition of a weighted adjacency matrix
//! and walk-amplitude evaluation built from it.

mod arith;
mod jacobi;
mod oracles;
mod periodicity;

use num_complex::Complex;

use crate::error::{GraphError, SpectralError};
use crate::graph::WeightedGraph;
use crate::scalar::Scalar;

pub use arith::{
    for_each_relation, integer_relation, odd_sum_relation, rational_approx, recognize, relation_lattice,
    two_adic, EigenvalueClass, RadicalCombo, DEFAULT_RECOGNIZE_TOL, MAX_RELATION_VALUES,
};
pub(crate) use arith::combo_sub;
pub use oracles::{cycle_diagonal_oracle, path_diagonal_oracle};
pub use periodicity::{periodicity, periodicity_with, PeriodicityReason, PeriodicityReport};

/// Default relative clustering threshold for `f64`.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;
/// Default support threshold on `‖E_λ e_u‖`.
pub const DEFAULT_SUPPORT_TOL: f64 = 1e-8;
/// Norms in `[AMBIGUOUS_SUPPORT_FLOOR, support_tol)` are reported as ambiguous.
pub const AMBIGUOUS_SUPPORT_FLOOR: f64 = 1e-10;

/// Distinct eigenvalues (strictly descending) with their orthogonal projectors.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T = f64> {
    n: usize,
    eigenvalues: Vec<T>,
    multiplicities: Vec<usize>,
    projectors: Vec<Vec<T>>,
    cluster_tol: T,
}

/// A vertex's eigenvalue support and the matching projector diagonals.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexProfile<T = f64> {
    pub vertex: usize,
    /// Indices into [`SpectralDecomposition::eigenvalues`], descending by eigenvalue.
    pub support: Vec<usize>,
    pub diagonals: Vec<T>,
    /// Eigenvalue indices whose projected norm is too small to admit but too
    /// large to dismiss as roundoff.
    pub ambiguous: Vec<usize>,
}

impl<T: Scalar> VertexProfile<T> {
    pub fn contains(&self, index: usize) -> bool {
        self.support.contains(&index)
    }

    pub fn diagonal_of(&self, index: usize) -> Option<T> {
        self.support.iter().position(|&i| i == index).map(|k| self.diagonals[k])
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

fn default_cluster_tol<T: Scalar>() -> T {
    T::from_f64_lossy(DEFAULT_CLUSTER_TOL.max(64.0 * T::EPSILON_F64))
}

/// Decomposes `A(g)` with the default clustering threshold.
pub fn eigendecompose<T: Scalar>(g: &WeightedGraph<T>) -> Result<SpectralDecomposition<T>, SpectralError> {
    eigendecompose_with_tol(g, default_cluster_tol())
}

/// Decomposes `A(g)`; raw eigenvalues closer than `cluster_tol · max(1, |λ|max)`
/// are merged into one distinct eigenvalue.
pub fn eigendecompose_with_tol<T: Scalar>(
    g: &WeightedGraph<T>,
    cluster_tol: T,
) -> Result<SpectralDecomposition<T>, SpectralError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let a = g.adjacency_matrix();
    let eig = jacobi::symmetric_eigen(&a, n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.values[j].partial_cmp(&eig.values[i]).expect("finite eigenvalues"));

    let max_abs = eig.values.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
    let gap = cluster_tol * max_abs.max(T::one());

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &k in &order {
        match groups.last_mut() {
            Some(group) if eig.values[*group.last().unwrap()] - eig.values[k] < gap => group.push(k),
            _ => groups.push(vec![k]),
        }
    }

    let mut eigenvalues = Vec::with_capacity(groups.len());
    let mut multiplicities = Vec::with_capacity(groups.len());
    let mut projectors = Vec::with_capacity(groups.len());
    for group in &groups {
        let mean = group.iter().map(|&k| eig.values[k]).sum::<T>() / T::from_usize(group.len()).unwrap();
        let mut p = vec![T::zero(); n * n];
        for &k in group {
            for i in 0..n {
                let vi = eig.vectors[i * n + k];
                if vi == T::zero() {
                    continue;
                }
                for j in 0..n {
                    p[i * n + j] = p[i * n + j] + vi * eig.vectors[j * n + k];
                }
            }
        }
        eigenvalues.push(mean);
        multiplicities.push(group.len());
        projectors.push(p);
    }
    Ok(SpectralDecomposition { n, eigenvalues, multiplicities, projectors, cluster_tol })
}

impl<T: Scalar> SpectralDecomposition<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn projectors(&self) -> &[Vec<T>] {
        &self.projectors
    }

    /// Row-major `n × n` projector onto the eigenspace of eigenvalue `index`.
    pub fn projector(&self, index: usize) -> &[T] {
        &self.projectors[index]
    }

    pub fn cluster_tol(&self) -> T {
        self.cluster_tol
    }

    /// Absolute gap below which two eigenvalues count as equal.
    pub fn equality_gap(&self) -> T {
        let max_abs = self.eigenvalues.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
        self.cluster_tol * max_abs.max(T::one())
    }

    pub fn lambda_max_abs(&self) -> T {
        self.eigenvalues.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    /// `(E_λ)_{u,v}` for eigenvalue `index`.
    pub fn entry(&self, index: usize, u: usize, v: usize) -> T {
        self.projectors[index][u * self.n + v]
    }

    pub fn diagonal(&self, index: usize, u: usize) -> T {
        self.entry(index, u, u)
    }

    /// Index of the distinct eigenvalue closest to `value`, if within the equality gap.
    pub fn index_of(&self, value: T) -> Option<usize> {
        let gap = self.equality_gap();
        self.eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, &l)| (l - value).abs() < gap)
            .min_by(|a, b| (*a.1 - value).abs().partial_cmp(&(*b.1 - value).abs()).unwrap())
            .map(|(i, _)| i)
    }

    pub fn zero_index(&self) -> Option<usize> {
        self.index_of(T::zero())
    }

    pub fn is_singular(&self) -> bool {
        self.zero_index().is_some()
    }

    /// Index of `-λ` for eigenvalue `index`, if present.
    pub fn negation_of(&self, index: usize) -> Option<usize> {
        self.index_of(-self.eigenvalues[index])
    }

    fn check_vertex(&self, u: usize) -> Result<(), SpectralError> {
        if u >= self.n {
            return Err(SpectralError::VertexOutOfRange { u, n: self.n });
        }
        Ok(())
    }

    pub fn support(&self, u: usize) -> Result<VertexProfile<T>, SpectralError> {
        self.support_with_tol(u, T::from_f64_lossy(DEFAULT_SUPPORT_TOL))
    }

    /// Eigenvalues with `‖E_λ e_u‖ > support_tol`; the norm equals `sqrt((E_λ)_{u,u})`.
    pub fn support_with_tol(&self, u: usize, support_tol: T) -> Result<VertexProfile<T>, SpectralError> {
        self.check_vertex(u)?;
        let floor = T::from_f64_lossy(AMBIGUOUS_SUPPORT_FLOOR);
        let mut profile = VertexProfile { vertex: u, support: vec![], diagonals: vec![], ambiguous: vec![] };
        for i in 0..self.eigenvalues.len() {
            let d = self.diagonal(i, u);
            let norm = d.max(T::zero()).sqrt();
            if norm > support_tol {
                profile.support.push(i);
                profile.diagonals.push(d);
            } else if norm >= floor {
                profile.ambiguous.push(i);
            }
        }
        Ok(profile)
    }

    /// `U(t)_{u,u} = Σ e^{itλ} (E_λ)_{u,u}`.
    pub fn walk_diagonal(&self, u: usize, t: T) -> Result<Complex<T>, SpectralError> {
        self.walk_entry(u, u, t)
    }

    /// `U(t)_{u,v} = Σ e^{itλ} (E_λ)_{u,v}`.
    pub fn walk_entry(&self, u: usize, v: usize, t: T) -> Result<Complex<T>, SpectralError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut acc = Complex::new(T::zero(), T::zero());
        for (i, &l) in self.eigenvalues.iter().enumerate() {
            let e = self.entry(i, u, v);
            let (s, c) = (l * t).sin_cos();
            acc = acc + Complex::new(c * e, s * e);
        }
        Ok(acc)
    }

    /// True iff `(E_λ)_{u,u} = (E_λ)_{v,v}` within `1e-9` for every eigenvalue.
    pub fn cospectral(&self, u: usize, v: usize) -> Result<bool, SpectralError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let tol = T::from_f64_lossy(1e-9_f64.max(64.0 * T::EPSILON_F64));
        Ok((0..self.eigenvalues.len()).all(|i| (self.diagonal(i, u) - self.diagonal(i, v)).abs() <= tol))
    }

    /// `Σ λ_i P_i` as a row-major matrix.
    pub fn reconstruct(&self) -> Vec<T> {
        let mut a = vec![T::zero(); self.n * self.n];
        for (l, p) in self.eigenvalues.iter().zip(&self.projectors) {
            for (x, &y) in a.iter_mut().zip(p) {
                *x = *x + *l * y;
            }
        }
        a
    }
}

/// Predicts whether `S(g)` is nonsingular from the structure of `g`.
///
/// A connected graph has nonsingular subdivision exactly when it is unicyclic
/// and the subdivided cycle is itself nonsingular; the latter is checked by
/// decomposing the weighted cycle's subdivision.
pub fn subdivision_nonsingular(g: &WeightedGraph<f64>) -> Result<bool, SpectralError> {
    if !g.is_connected() {
        return Ok(false);
    }
    if g.edge_count() != g.n() {
        return Ok(false);
    }
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    while let Some(u) = stack.pop() {
        removed[u] = true;
        for &(v, _) in g.neighbors(u) {
            if !removed[v] {
                degree[v] -= 1;
                if degree[v] == 1 {
                    stack.push(v);
                }
            }
        }
    }
    let cycle: Vec<usize> = (0..n).filter(|&u| !removed[u]).collect();
    let index = |v: usize| cycle.binary_search(&v).unwrap();
    let edges: Vec<(usize, usize, f64)> = g
        .edges()
        .iter()
        .filter(|e| !removed[e.u] && !removed[e.v])
        .map(|e| (index(e.u), index(e.v), e.w))
        .collect();
    let c = WeightedGraph::from_edge_list(cycle.len(), &edges).map_err(|_: GraphError| SpectralError::EmptyGraph)?;
    Ok(!eigendecompose(&c.subdivision())?.is_singular())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn path(n: usize) -> WeightedGraph {
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        WeightedGraph::unweighted(n, &pairs).unwrap()
    }

    fn complete(n: usize) -> WeightedGraph {
        let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        WeightedGraph::unweighted(n, &pairs).unwrap()
    }

    #[test]
    fn p3_spectrum() {
        let s = eigendecompose(&path(3)).unwrap();
        assert_eq!(s.eigenvalues().len(), 3);
        assert_abs_diff_eq!(s.eigenvalues()[0], 2f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues()[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues()[2], -(2f64.sqrt()), epsilon = 1e-12);
        let mid = s.support(1).unwrap();
        assert_eq!(mid.support, vec![0, 2]);
    }

    #[test]
    fn k4_multiplicities() {
        let s = eigendecompose(&complete(4)).unwrap();
        assert_eq!(s.multiplicities(), &[1, 3]);
        assert_abs_diff_eq!(s.eigenvalues()[0], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues()[1], -1.0, epsilon = 1e-12);
    }

    #[test]
    fn subdivided_star_spectrum() {
        let star = WeightedGraph::<f64>::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = eigendecompose(&star.subdivision()).unwrap();
        assert_eq!(s.multiplicities(), &[1, 2, 1, 2, 1]);
        for (l, want) in s.eigenvalues().iter().zip([2.0, 1.0, 0.0, -1.0, -2.0]) {
            assert_abs_diff_eq!(*l, want, epsilon = 1e-10);
        }
        let centre = s.support(0).unwrap();
        assert_eq!(centre.support, vec![0, 2, 4]);
        assert_abs_diff_eq!(centre.diagonal_of(2).unwrap(), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn k5_walk() {
        let s = eigendecompose(&complete(5)).unwrap();
        let p = s.support(2).unwrap();
        assert_abs_diff_eq!(p.diagonal_of(1).unwrap(), 0.8, epsilon = 1e-12);
        let u = s.walk_diagonal(0, std::f64::consts::PI / 5.0).unwrap();
        assert_abs_diff_eq!(u.norm(), 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(s.walk_diagonal(3, 0.0).unwrap().re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn c8_at_half_pi() {
        let pairs: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        let s = eigendecompose(&WeightedGraph::unweighted(8, &pairs).unwrap()).unwrap();
        let u = s.walk_diagonal(0, std::f64::consts::FRAC_PI_2).unwrap();
        assert!(u.re <= 1e-9 && u.im.abs() <= 1e-9);
    }

    #[test]
    fn cospectrality() {
        let s = eigendecompose(&path(3)).unwrap();
        assert!(s.cospectral(0, 2).unwrap());
        let s = eigendecompose(&path(4)).unwrap();
        assert!(!s.cospectral(0, 1).unwrap());
        let star = WeightedGraph::<f64>::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(eigendecompose(&star).unwrap().cospectral(1, 3).unwrap());
    }

    #[test]
    fn double_of_k3() {
        let s = eigendecompose(&complete(3).bipartite_double()).unwrap();
        assert_eq!(s.multiplicities(), &[1, 2, 2, 1]);
        for (l, want) in s.eigenvalues().iter().zip([2.0, 1.0, -1.0, -2.0]) {
            assert_abs_diff_eq!(*l, want, epsilon = 1e-10);
        }
    }

    #[test]
    fn f32_decomposition() {
        let s = eigendecompose(&complete(4).cast::<f32>()).unwrap();
        assert_eq!(s.multiplicities(), &[1, 3]);
        assert!((s.eigenvalues()[0] - 3.0).abs() < 1e-5);
    }

    #[test]
    fn empty_graph_rejected() {
        let g = WeightedGraph::<f64>::from_edge_list(0, &[]).unwrap();
        assert_eq!(eigendecompose(&g).unwrap_err(), SpectralError::EmptyGraph);
    }

    #[test]
    fn subdivision_prediction() {
        let c3 = complete(3);
        assert!(subdivision_nonsingular(&c3).unwrap());
        let c4 = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!subdivision_nonsingular(&c4).unwrap());
        let tadpole = WeightedGraph::from_edge_list(4, &[(0, 1, 1.0), (1, 2, 2.0), (2, 0, -0.5), (2, 3, 1.5)]).unwrap();
        assert!(subdivision_nonsingular(&tadpole).unwrap());
        assert!(!eigendecompose(&tadpole.subdivision()).unwrap().is_singular());
        assert!(!subdivision_nonsingular(&path(4)).unwrap());
    }
}
