//! Dense-grid infimum scanner for `|U(t)_{u,u}|` with golden-section refinement.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::SpectralError;
use crate::scalar::Scalar;
use crate::spectral::{periodicity, SpectralDecomposition};

pub const DEFAULT_HORIZON: f64 = 200.0;
const REFINE_TOL: f64 = 1e-10;
const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanOptions {
    pub horizon: f64,
    /// Grid spacing; `None` picks `min(0.01, π/(8·λmax))`.
    pub step: Option<f64>,
    /// Replace the horizon by the minimum period when the vertex is periodic.
    pub use_period: bool,
    /// Number of smallest grid minima refined by golden-section search.
    pub refine: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { horizon: DEFAULT_HORIZON, step: None, use_period: true, refine: 10 }
    }
}

impl ScanOptions {
    pub fn with_horizon(horizon: f64) -> Self {
        ScanOptions { horizon, ..Self::default() }
    }

    pub fn fixed_horizon(horizon: f64) -> Self {
        ScanOptions { horizon, use_period: false, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanResult {
    pub times: Vec<f64>,
    pub magnitudes: Vec<f64>,
    /// Golden-section refined local minima as `(t, |U(t)|)`.
    pub refined: Vec<(f64, f64)>,
    pub global_min: f64,
    pub argmin: f64,
    pub horizon: f64,
    pub step: f64,
    /// Minimum period used as the horizon, when one was found.
    pub period: Option<f64>,
}

impl ScanResult {
    /// True when the scan covered a full period, so `global_min` is the infimum.
    pub fn is_exact(&self) -> bool {
        self.period.is_some()
    }
}

pub fn auto_step(lambda_max: f64) -> f64 {
    if lambda_max > 0.0 {
        0.01f64.min(PI / (8.0 * lambda_max))
    } else {
        0.01
    }
}

/// `(λ, (E_λ)_{u,u})` pairs of the support, as `f64`.
pub(crate) fn support_terms<T: Scalar>(s: &SpectralDecomposition<T>, u: usize) -> Result<Vec<(f64, f64)>, SpectralError> {
    let p = s.support(u)?;
    Ok(p.support.iter().zip(&p.diagonals).map(|(&i, &d)| (s.eigenvalues()[i].as_f64(), d.as_f64())).collect())
}

pub(crate) fn amplitude(terms: &[(f64, f64)], t: f64) -> Complex64 {
    terms.iter().map(|&(l, d)| Complex64::from_polar(d, l * t)).sum()
}

pub(crate) struct Minimum {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub refined: Vec<(f64, f64)>,
    pub min: f64,
    pub argmin: f64,
    pub step: f64,
}

fn golden<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > REFINE_TOL {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}

/// Values within this of each other count as tied; the earlier time wins.
const TIE_TOL: f64 = 1e-12;

fn better(a: (f64, f64), b: (f64, f64)) -> bool {
    b.1 < a.1 - TIE_TOL || ((b.1 - a.1).abs() <= TIE_TOL && b.0 < a.0)
}

/// Minimizes `f` on `[0, horizon]` by grid sampling plus refinement around the
/// `refine` smallest local minima of the grid.
pub(crate) fn minimize<F: Fn(f64) -> f64>(f: F, horizon: f64, step: f64, refine: usize) -> Minimum {
    let count = ((horizon / step).ceil() as usize).max(1);
    let h = horizon / count as f64;
    let times: Vec<f64> = (0..=count).map(|i| i as f64 * h).collect();
    let values: Vec<f64> = times.iter().map(|&t| f(t)).collect();

    let mut best = (times[0], values[0]);
    for (&t, &v) in times.iter().zip(&values) {
        if better(best, (t, v)) {
            best = (t, v);
        }
    }
    let last = values.len() - 1;
    let mut minima: Vec<usize> = (1..last).filter(|&i| values[i] <= values[i - 1] && values[i] <= values[i + 1]).collect();
    if last >= 1 && values[last] <= values[last - 1] {
        minima.push(last);
    }
    minima.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    minima.truncate(refine);

    let mut refined = Vec::with_capacity(minima.len());
    for i in minima {
        let lo = times[i - 1];
        let hi = times[(i + 1).min(last)];
        let r = golden(&f, lo, hi);
        if better(best, r) {
            best = r;
        }
        refined.push(r);
    }
    refined.sort_by(|a, b| a.0.total_cmp(&b.0));
    Minimum { times, values, refined, min: best.1, argmin: best.0, step: h }
}

/// Samples `|U(t)_{u,u}|` on a dense grid and refines the smallest minima.
///
/// When the vertex is periodic and `use_period` is set, the horizon becomes
/// the minimum period and the result is the exact infimum up to refinement.
pub fn numeric_scan<T: Scalar>(
    s: &SpectralDecomposition<T>,
    u: usize,
    opts: &ScanOptions,
) -> Result<ScanResult, SpectralError> {
    let terms = support_terms(s, u)?;
    let period = if opts.use_period {
        match periodicity(s, u) {
            Ok(r) if r.periodic => r.period,
            _ => None,
        }
    } else {
        None
    };
    let horizon = period.unwrap_or(opts.horizon);
    let step = opts.step.unwrap_or_else(|| auto_step(s.lambda_max_abs().as_f64()));
    let m = minimize(|t| amplitude(&terms, t).norm(), horizon, step, opts.refine);
    Ok(ScanResult {
        times: m.times,
        magnitudes: m.values,
        refined: m.refined,
        global_min: m.min,
        argmin: m.argmin,
        horizon,
        step: m.step,
        period,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use crate::spectral::eigendecompose;

    fn complete(n: usize) -> WeightedGraph {
        let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        WeightedGraph::unweighted(n, &pairs).unwrap()
    }

    #[test]
    fn k5_minimum() {
        let s = eigendecompose(&complete(5)).unwrap();
        let r = numeric_scan(&s, 0, &ScanOptions::default()).unwrap();
        assert!((r.horizon - 2.0 * PI / 5.0).abs() < 1e-12);
        assert!((r.global_min - 0.6).abs() < 1e-9);
        assert!((r.argmin - PI / 5.0).abs() < 1e-6);
        assert!(r.is_exact());
    }

    #[test]
    fn periodic_scan_is_stable_over_multiple_periods() {
        let s = eigendecompose(&complete(4)).unwrap();
        let one = numeric_scan(&s, 0, &ScanOptions::default()).unwrap();
        let rho = one.period.unwrap();
        let three = numeric_scan(&s, 0, &ScanOptions::fixed_horizon(3.0 * rho)).unwrap();
        assert!((one.global_min - three.global_min).abs() < 1e-9);
    }

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let m = minimize(|t| (t - 0.123456789).powi(2) + 0.5, 1.0, 0.01, 3);
        assert!((m.argmin - 0.123456789).abs() < 1e-6);
        assert!((m.min - 0.5).abs() < 1e-12);
    }
}
