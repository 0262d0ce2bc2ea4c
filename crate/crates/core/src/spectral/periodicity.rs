//! Periodicity of a vertex via the ratio condition on its eigenvalue support.

use std::f64::consts::PI;

use num_integer::Integer;
use serde::Serialize;

use super::arith::{rational_approx, recognize, EigenvalueClass};
use super::SpectralDecomposition;
use crate::error::SpectralError;
use crate::scalar::Scalar;

/// Recognition tolerance used when deciding periodicity.
pub const PERIODICITY_RECOGNIZE_TOL: f64 = 1e-9;
const VERIFY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodicityReason {
    SingleEigenvalue,
    TwoEigenvalues,
    RatioConditionInteger,
    RatioConditionSqrt,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodicityReport {
    pub periodic: bool,
    pub period: Option<f64>,
    pub reason: PeriodicityReason,
    /// `|U(period)_{u,u}| = 1` held numerically.
    pub verified: bool,
    /// The check also passed at half the period, so `period` only bounds the minimum.
    pub half_period_passes: bool,
}

impl PeriodicityReport {
    fn fails() -> Self {
        PeriodicityReport {
            periodic: false,
            period: None,
            reason: PeriodicityReason::Fails,
            verified: false,
            half_period_passes: false,
        }
    }
}

pub fn periodicity<T: Scalar>(s: &SpectralDecomposition<T>, u: usize) -> Result<PeriodicityReport, SpectralError> {
    periodicity_with(s, u, PERIODICITY_RECOGNIZE_TOL)
}

/// Decides periodicity of `u` from the differences `λ − λ₀` of its support.
///
/// The vertex is periodic iff all differences are rational multiples of one
/// another. When they are recognized integers, or rational multiples of a
/// common `√Δ`, the period is `2π/g` with `g` the gcd of the integerized
/// differences (times `√Δ / L` in the radical case).
pub fn periodicity_with<T: Scalar>(
    s: &SpectralDecomposition<T>,
    u: usize,
    recognize_tol: f64,
) -> Result<PeriodicityReport, SpectralError> {
    let profile = s.support(u)?;
    let values: Vec<f64> = profile.support.iter().map(|&i| s.eigenvalues()[i].as_f64()).collect();
    let period = match values.len() {
        0 | 1 => {
            return Ok(PeriodicityReport {
                periodic: true,
                period: None,
                reason: PeriodicityReason::SingleEigenvalue,
                verified: true,
                half_period_passes: false,
            })
        }
        2 => Some((2.0 * PI / (values[0] - values[1]).abs(), PeriodicityReason::TwoEigenvalues)),
        _ => {
            let diffs: Vec<f64> = values[1..].iter().map(|v| values[0] - v).collect();
            let classes: Vec<EigenvalueClass> = diffs.iter().map(|&d| recognize(d, recognize_tol)).collect();
            match integerized_period(&classes) {
                Some(p) => Some(p),
                None => {
                    let rational = diffs[1..]
                        .iter()
                        .all(|d| rational_approx(d / diffs[0], 64, recognize_tol).is_some());
                    if rational {
                        return Err(SpectralError::UnrecognizedEigenvalues {
                            vertex: u,
                            values: classes.iter().filter(|c| !c.is_recognized()).map(|c| c.value()).collect(),
                        });
                    }
                    None
                }
            }
        }
    };
    let Some((rho, reason)) = period else {
        return Ok(PeriodicityReport::fails());
    };
    let at = |t: f64| s.walk_diagonal(u, T::from_f64_lossy(t)).map(|z| z.norm().as_f64());
    let verified = (at(rho)? - 1.0).abs() <= VERIFY_TOL;
    if !verified {
        return Ok(PeriodicityReport::fails());
    }
    let half_period_passes = (at(rho / 2.0)? - 1.0).abs() <= VERIFY_TOL;
    Ok(PeriodicityReport { periodic: true, period: Some(rho), reason, verified, half_period_passes })
}

/// Period from exactly recognized support differences, or `None` when they are
/// mixed or unrecognized.
fn integerized_period(diffs: &[EigenvalueClass]) -> Option<(f64, PeriodicityReason)> {
    if let Some(ints) = diffs.iter().map(|c| c.as_integer()).collect::<Option<Vec<i64>>>() {
        let g = ints.iter().fold(0i64, |g, k| g.gcd(k));
        return Some((2.0 * PI / g as f64, PeriodicityReason::RatioConditionInteger));
    }
    let mut delta = None;
    let mut fracs = Vec::with_capacity(diffs.len());
    for c in diffs {
        match *c {
            EigenvalueClass::RatioSqrt { p, q, delta: d } => {
                if delta.is_some_and(|e| e != d) {
                    return None;
                }
                delta = Some(d);
                fracs.push((p, q));
            }
            _ => return None,
        }
    }
    let delta = delta?;
    let l = fracs.iter().fold(1i64, |l, &(_, q)| l.lcm(&q));
    let g = fracs.iter().fold(0i64, |g, &(p, q)| g.gcd(&(p * (l / q))));
    Some((2.0 * PI * l as f64 / (g as f64 * (delta as f64).sqrt()), PeriodicityReason::RatioConditionSqrt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use crate::spectral::eigendecompose;
    use approx::assert_abs_diff_eq;

    #[test]
    fn c4_period_pi() {
        let g = WeightedGraph::<f64>::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = periodicity(&eigendecompose(&g).unwrap(), 0).unwrap();
        assert!(r.periodic && r.verified && !r.half_period_passes);
        assert_eq!(r.reason, PeriodicityReason::RatioConditionInteger);
        assert_abs_diff_eq!(r.period.unwrap(), PI, epsilon = 1e-12);
    }

    #[test]
    fn k2_two_eigenvalues() {
        let g = WeightedGraph::<f64>::unweighted(2, &[(0, 1)]).unwrap();
        let r = periodicity(&eigendecompose(&g).unwrap(), 1).unwrap();
        assert_eq!(r.reason, PeriodicityReason::TwoEigenvalues);
        assert_abs_diff_eq!(r.period.unwrap(), PI, epsilon = 1e-12);
    }

    #[test]
    fn p3_end_is_sqrt_periodic() {
        let g = WeightedGraph::<f64>::unweighted(3, &[(0, 1), (1, 2)]).unwrap();
        let r = periodicity(&eigendecompose(&g).unwrap(), 0).unwrap();
        assert_eq!(r.reason, PeriodicityReason::RatioConditionSqrt);
        assert!(r.verified);
        assert_abs_diff_eq!(r.period.unwrap(), PI * 2f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn p5_end_fails() {
        let pairs: Vec<_> = (0..4).map(|i| (i, i + 1)).collect();
        let g = WeightedGraph::<f64>::unweighted(5, &pairs).unwrap();
        let r = periodicity(&eigendecompose(&g).unwrap(), 0).unwrap();
        assert!(!r.periodic);
    }

    #[test]
    fn p4_fails() {
        let g = WeightedGraph::<f64>::unweighted(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = periodicity(&eigendecompose(&g).unwrap(), 0).unwrap();
        assert!(!r.periodic);
        assert_eq!(r.reason, PeriodicityReason::Fails);
    }
}
