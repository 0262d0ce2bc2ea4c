//! Machine-checkable expectations for each family.

use std::f64::consts::PI;

use super::{CellKind, FamilySpec};
use crate::sedentary::Verdict;
use crate::spectral::{integer_relation, recognize, two_adic, EigenvalueClass, SpectralDecomposition};

const SPECTRUM_RECOGNIZE_TOL: f64 = 1e-10;
const BOUND_TOL: f64 = 1e-9;
const OBSERVED_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedStatus {
    Sedentary,
    NotSedentary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExpectedBound {
    /// The certified lower bound equals this value.
    Certified(f64),
    /// The certified lower bound is at least this value.
    AtLeast(f64),
    /// The infimum of `|U(t)_{u,u}|`: the certified bound must not exceed it
    /// and the observed minimum must not fall below it.
    Infimum(f64),
}

impl ExpectedBound {
    pub fn check(&self, v: &Verdict) -> Result<(), String> {
        let lb = v.lower_bound().ok_or("verdict has no lower bound")?;
        match *self {
            ExpectedBound::Certified(c) if (lb - c).abs() > BOUND_TOL => {
                Err(format!("certified bound {lb} differs from {c}"))
            }
            ExpectedBound::AtLeast(c) if lb < c - BOUND_TOL => Err(format!("certified bound {lb} is below {c}")),
            ExpectedBound::Infimum(c) => {
                if lb > c + BOUND_TOL {
                    return Err(format!("certified bound {lb} exceeds the infimum {c}"));
                }
                match v.observed {
                    Some(o) if o.numeric_min < c - OBSERVED_TOL => {
                        Err(format!("observed minimum {} is below the infimum {c}", o.numeric_min))
                    }
                    _ => Ok(()),
                }
            }
            _ => Ok(()),
        }
    }
}

/// A number-theoretic hypothesis an expectation depends on.
#[derive(Debug, Clone, PartialEq)]
pub enum Guard {
    /// The values admit no integer relation with coefficients up to 32.
    Independent(Vec<f64>),
    /// The values are integers with equal 2-adic valuations, or independent.
    EqualTwoAdicOrIndependent(Vec<f64>),
}

impl Guard {
    pub fn holds(&self) -> bool {
        let independent = |v: &[f64]| matches!(integer_relation(v, 32, 1e-9), Ok(None));
        match self {
            Guard::Independent(v) => independent(v),
            Guard::EqualTwoAdicOrIndependent(v) => {
                let nu: Option<Vec<u32>> = v
                    .iter()
                    .map(|&x| recognize(x, 1e-9).as_integer().and_then(|k| two_adic(k).ok()))
                    .collect();
                nu.is_some_and(|nu| nu.windows(2).all(|w| w[0] == w[1])) || independent(v)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VertexExpectation {
    pub vertices: Vec<usize>,
    pub status: ExpectedStatus,
    pub bound: Option<ExpectedBound>,
    /// Expectation applies only when the guard holds.
    pub guard: Option<Guard>,
    pub reason: &'static str,
}

impl VertexExpectation {
    fn new(vertices: impl IntoIterator<Item = usize>, status: ExpectedStatus, reason: &'static str) -> Self {
        VertexExpectation { vertices: vertices.into_iter().collect(), status, bound: None, guard: None, reason }
    }

    fn bound(mut self, b: ExpectedBound) -> Self {
        self.bound = Some(b);
        self
    }

    fn guard(mut self, g: Guard) -> Self {
        self.guard = Some(g);
        self
    }

    pub fn applies(&self) -> bool {
        self.guard.as_ref().is_none_or(Guard::holds)
    }

    /// Checks one verdict for a vertex in [`Self::vertices`].
    pub fn check(&self, v: &Verdict) -> Result<(), String> {
        let ok = match self.status {
            ExpectedStatus::Sedentary => v.is_sedentary(),
            ExpectedStatus::NotSedentary => v.is_not_sedentary(),
        };
        if !ok {
            return Err(format!(
                "vertex {}: expected {:?} ({}), got {} via {}",
                v.vertex,
                self.status,
                self.reason,
                v.status_str(),
                v.kind()
            ));
        }
        match &self.bound {
            Some(b) => b.check(v).map_err(|e| format!("vertex {}: {e}", v.vertex)),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedProfile {
    /// Distinct eigenvalues, descending, with multiplicities.
    pub spectrum: Option<Vec<(EigenvalueClass, usize)>>,
    pub vertex_expectations: Vec<VertexExpectation>,
}

impl ExpectedProfile {
    /// Compares against a decomposition: values within `tol`, multiplicities exactly.
    pub fn check_spectrum(&self, s: &SpectralDecomposition, tol: f64) -> Result<(), String> {
        let Some(spec) = &self.spectrum else { return Ok(()) };
        if spec.len() != s.eigenvalues().len() {
            return Err(format!("expected {} distinct eigenvalues, found {}", spec.len(), s.eigenvalues().len()));
        }
        for ((class, m), (&l, &k)) in spec.iter().zip(s.eigenvalues().iter().zip(s.multiplicities())) {
            if (class.value() - l).abs() > tol || *m != k {
                return Err(format!("expected {class} with multiplicity {m}, found {l} with multiplicity {k}"));
            }
        }
        Ok(())
    }
}

/// Groups values within `1e-9` and sorts descending.
fn spectrum(values: impl IntoIterator<Item = (f64, usize)>) -> Vec<(EigenvalueClass, usize)> {
    let mut v: Vec<(f64, usize)> = values.into_iter().filter(|&(_, m)| m > 0).collect();
    v.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut out: Vec<(f64, usize)> = Vec::new();
    for (x, m) in v {
        match out.last_mut() {
            Some(last) if (last.0 - x).abs() < 1e-9 => last.1 += m,
            _ => out.push((x, m)),
        }
    }
    out.into_iter()
        .map(|(x, m)| {
            let x = if x.abs() < 1e-12 { 0.0 } else { x };
            let class = match recognize(x, SPECTRUM_RECOGNIZE_TOL) {
                EigenvalueClass::Unrecognized { .. } => EigenvalueClass::Unrecognized { value: x },
                c => c,
            };
            (class, m)
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub(super) fn expected(spec: &FamilySpec) -> ExpectedProfile {
    use ExpectedBound::*;
    use ExpectedStatus::*;
    let mut spec_values = None;
    let mut ve = Vec::new();
    match *spec {
        FamilySpec::Path { n } => {
            spec_values = Some(spectrum((1..=n).map(|j| (2.0 * (j as f64 * PI / (n as f64 + 1.0)).cos(), 1))));
            if n >= 2 {
                ve.push(VertexExpectation::new(0..n, NotSedentary, "unweighted paths are not sedentary"));
            }
        }
        FamilySpec::WeightedEndPath { n, alpha } => {
            let half = (n as f64 - 1.0) / 2.0;
            if alpha * alpha > half {
                let e0 = alpha * alpha / (alpha * alpha + half);
                ve.push(
                    VertexExpectation::new([0], Sedentary, "heavy zero projector at the reweighted end")
                        .bound(Certified(2.0 * e0 - 1.0)),
                );
            }
        }
        FamilySpec::Cycle { n } => {
            spec_values = Some(spectrum((0..n).map(|j| (2.0 * (2.0 * PI * j as f64 / n as f64).cos(), 1))));
            if n % 2 == 0 {
                ve.push(VertexExpectation::new(0..n, NotSedentary, "unweighted even cycles are not sedentary"));
            }
        }
        FamilySpec::WeightedC4k { k, alpha } => {
            let rest = 2.0 * k as f64 - 1.0;
            if alpha * alpha > rest {
                let e0 = alpha * alpha / (alpha * alpha + rest);
                ve.push(
                    VertexExpectation::new([1], Sedentary, "zero projector diagonal above one half")
                        .bound(AtLeast(2.0 * e0 - 1.0)),
                );
            }
        }
        FamilySpec::Star { m } => {
            let r = (m as f64).sqrt();
            spec_values = Some(spectrum([(r, 1), (0.0, m - 1), (-r, 1)]));
            ve.push(VertexExpectation::new([0], NotSedentary, "0 is outside the centre's support"));
            if m >= 3 {
                ve.push(
                    VertexExpectation::new(1..=m, Sedentary, "twin set of size at least three")
                        .bound(Certified(1.0 - 2.0 / m as f64)),
                );
            } else {
                ve.push(VertexExpectation::new(1..=m, NotSedentary, "star leaves with at most one twin"));
            }
        }
        FamilySpec::WeightedStar { ref weights } => {
            let total: f64 = weights.iter().map(|w| w * w).sum();
            let m = weights.len();
            spec_values = Some(spectrum([(total.sqrt(), 1), (0.0, m - 1), (-total.sqrt(), 1)]));
            ve.push(VertexExpectation::new([0], NotSedentary, "0 is outside the centre's support"));
            for (i, &w) in weights.iter().enumerate() {
                let b = 1.0 - 2.0 * w * w / total;
                if b > BOUND_TOL {
                    ve.push(VertexExpectation::new([i + 1], Sedentary, "light pendant in a pendant group").bound(Certified(b)));
                } else {
                    ve.push(VertexExpectation::new([i + 1], NotSedentary, "heavy pendant with a single positive eigenvalue"));
                }
            }
        }
        FamilySpec::SubdividedStar { m } => {
            let r = (m as f64 + 1.0).sqrt();
            spec_values = Some(spectrum([(r, 1), (1.0, m - 1), (0.0, 1), (-1.0, m - 1), (-r, 1)]));
            ve.push(VertexExpectation::new(0..=2 * m, NotSedentary, "subdivided stars are not sedentary"));
        }
        FamilySpec::PendantPath { n } => {
            ve.push(VertexExpectation::new([n], Sedentary, "the pendant is 1/n-sedentary").bound(Certified(1.0 / n as f64)));
        }
        FamilySpec::Complete { n } => {
            spec_values = Some(spectrum([(n as f64 - 1.0, 1), (-1.0, n - 1)]));
            if n >= 3 {
                ve.push(
                    VertexExpectation::new(0..n, Sedentary, "complete graphs are (1-2/n)-sedentary")
                        .bound(Certified(1.0 - 2.0 / n as f64)),
                );
            } else if n == 2 {
                ve.push(VertexExpectation::new(0..n, NotSedentary, "K_2 has perfect state transfer"));
            }
        }
        FamilySpec::CompleteMultipartite { ref parts } => {
            let mut base = 0;
            for &p in parts {
                if p >= 3 {
                    ve.push(
                        VertexExpectation::new(base..base + p, Sedentary, "part of size at least three")
                            .bound(AtLeast(1.0 - 2.0 / p as f64)),
                    );
                }
                base += p;
            }
        }
        FamilySpec::CocktailParty { m } => {
            spec_values = Some(spectrum([(2.0 * m as f64 - 2.0, 1), (0.0, m), (-2.0, m - 1)]));
            if m >= 3 {
                let (status, reason) = if m % 2 == 1 {
                    (Sedentary, "cocktail party with an odd number of parts")
                } else {
                    (NotSedentary, "cocktail party with an even number of parts")
                };
                ve.push(VertexExpectation::new(0..2 * m, status, reason));
            }
        }
        FamilySpec::Threshold { ref cells } => {
            let mut base = 0;
            for c in cells {
                if c.size >= 3 {
                    let reason = match c.kind {
                        CellKind::Empty => "independent cell of size at least three",
                        CellKind::Clique => "clique cell of size at least three",
                    };
                    ve.push(
                        VertexExpectation::new(base..base + c.size, Sedentary, reason)
                            .bound(AtLeast(1.0 - 2.0 / c.size as f64)),
                    );
                }
                base += c.size;
            }
        }
        FamilySpec::FiveEigenvalue { ref components } => {
            let f = components.len();
            let e = components[0].0 * components[0].1;
            let deg_v: usize = components.iter().map(|c| c.0).sum();
            let h: usize = components.iter().map(|&(p, q)| p + q).sum();
            let lambda = ((e + deg_v) as f64).sqrt();
            let se = (e as f64).sqrt();
            spec_values = Some(spectrum([(lambda, 1), (se, f - 1), (0.0, h + 1 - 2 * f), (-se, f - 1), (-lambda, 1)]));
            let mut base = 0;
            for &(p, q) in components {
                let joined = base..base + p;
                let far = base + p..base + p + q;
                match p {
                    1 if e >= 4 => ve.push(VertexExpectation::new(joined, NotSedentary, "star centre next to the apex")),
                    2 if e >= 4 => ve.push(
                        VertexExpectation::new(joined, NotSedentary, "size-two part next to the apex")
                            .guard(Guard::Independent(vec![lambda, se])),
                    ),
                    p if p >= 3 => ve.push(VertexExpectation::new(joined, Sedentary, "part of size at least three")),
                    _ => {}
                }
                match q {
                    1 if e >= 4 => ve.push(
                        VertexExpectation::new(far, NotSedentary, "star centre away from the apex")
                            .guard(Guard::EqualTwoAdicOrIndependent(vec![lambda, se])),
                    ),
                    2 if e >= 4 => ve.push(VertexExpectation::new(far, Sedentary, "size-two part away from the apex")),
                    q if q >= 3 => ve.push(VertexExpectation::new(far, Sedentary, "part of size at least three")),
                    _ => {}
                }
                base += p + q;
            }
            ve.push(VertexExpectation::new([h], NotSedentary, "apex support is {±λ, 0}"));
        }
        FamilySpec::Shrikhande => {
            spec_values = Some(spectrum([(6.0, 1), (2.0, 6), (-2.0, 9)]));
            ve.push(VertexExpectation::new(0..16, Sedentary, "heavy projector for eigenvalue -2").bound(Certified(0.125)));
        }
        FamilySpec::Hamming { d, q } => {
            spec_values = Some(spectrum(
                (0..=d).map(|i| (((q - 1) * d) as f64 - (q * i) as f64, binomial(d, i) * (q - 1).pow(i as u32))),
            ));
            if q >= 3 {
                let c = (1.0 - 2.0 / q as f64).powi(d as i32);
                ve.push(VertexExpectation::new(0..q.pow(d as u32), Sedentary, "Hamming graph constant").bound(Infimum(c)));
            }
        }
        FamilySpec::Doob { l, d } => {
            let n = 16usize.pow(l as u32) * 4usize.pow(d as u32);
            let c = 0.5f64.powi((2 * l + d) as i32);
            ve.push(VertexExpectation::new(0..n, Sedentary, "Doob graph constant").bound(Infimum(c)));
        }
        FamilySpec::CompleteMinusEdge { n } => {
            ve.push(VertexExpectation::new([0, 1], NotSedentary, "endpoint of the removed edge"));
            if n >= 5 {
                ve.push(
                    VertexExpectation::new(2..n, Sedentary, "clique twins of size at least three")
                        .bound(AtLeast(1.0 - 2.0 / (n - 2) as f64)),
                );
            }
        }
    }
    ExpectedProfile { spectrum: spec_values, vertex_expectations: ve }
}
