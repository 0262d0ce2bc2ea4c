//! Verdict transfer to Cartesian products and bipartite doubles.

use super::scan::{numeric_scan, ScanOptions};
use super::{Certificate, CertificateKind, Evidence, Flag, Observation, Status, Verdict, HALF_TOL, WITNESS_TOL};
use crate::error::SedentaryError;
use crate::graph::WeightedGraph;
use crate::spectral::{eigendecompose, SpectralDecomposition};

/// Verdict for `(x, y)` in `X □ Y` from the factor verdicts; `|U|` factorizes
/// over the product. `ny` is the vertex count of `Y`, fixing the product
/// index `x·ny + y`.
pub fn cartesian_classify(vx: &Verdict, vy: &Verdict, ny: usize) -> Verdict {
    let vertex = vx.vertex * ny + vy.vertex;
    let evidence = Evidence::Factors { left: Box::new(vx.clone()), right: Box::new(vy.clone()) };
    let cert = Certificate::new(CertificateKind::CartesianCombine, evidence);
    let observed = match (vx.observed, vy.observed) {
        (Some(a), Some(b)) if a.horizon == b.horizon => Some(Observation {
            numeric_min: a.numeric_min * b.numeric_min,
            horizon: a.horizon,
            exact: false,
        }),
        _ => None,
    };
    let verdict = match (vx.status, vy.status) {
        (Status::Sedentary { lower_bound: a }, Status::Sedentary { lower_bound: b }) => Verdict::sedentary(vertex, a * b, cert),
        (Status::NotSedentary { .. }, _) | (_, Status::NotSedentary { .. }) => Verdict::not_sedentary(vertex, None, cert),
        _ => {
            let (min, horizon) = observed.map_or((f64::NAN, 0.0), |o| (o.numeric_min, o.horizon));
            return Verdict::inconclusive(vertex, min, horizon, cert);
        }
    };
    match observed {
        Some(o) => verdict.with_observation(o),
        None => verdict,
    }
}

/// Verdicts for the copies `u` and `n + u` of `u` in the bipartite double.
///
/// The copies share `U(t)_{u,u}`'s real part as their amplitude, so the zero
/// eigenspace diagonal decides them, with the half case inheriting `verdict_u`.
pub fn double_classify(
    g: &WeightedGraph,
    s: &SpectralDecomposition,
    u: usize,
    verdict_u: &Verdict,
) -> Result<(Verdict, Verdict), SedentaryError> {
    let n = g.n();
    if u >= n {
        return Err(SedentaryError::VertexOutOfRange { u, n });
    }
    if g.is_bipartite() {
        return Err(SedentaryError::BipartiteInput);
    }
    let e0 = s.zero_index().map(|z| s.diagonal(z, u)).filter(|&d| d.max(0.0).sqrt() > crate::spectral::DEFAULT_SUPPORT_TOL);
    let cert = || {
        Certificate::new(
            CertificateKind::DoubleTransfer,
            Evidence::Double { base_vertex: u, zero_diagonal: e0, base: Box::new(verdict_u.clone()) },
        )
    };
    let both = |make: &dyn Fn(usize) -> Verdict| (make(u), make(n + u));

    let Some(d) = e0 else {
        return Ok(both(&|v| Verdict::not_sedentary(v, None, cert())));
    };
    if d > 0.5 + HALF_TOL {
        return Ok(both(&|v| Verdict::sedentary(v, 2.0 * d - 1.0, cert())));
    }
    if (d - 0.5).abs() <= HALF_TOL {
        let cert = || cert().flagged(Flag::HalfCaseBoundary);
        return match verdict_u.status {
            Status::Sedentary { .. } => {
                let double = g.bipartite_double();
                let sd = eigendecompose(&double)?;
                let r = numeric_scan(&sd, u, &ScanOptions::default())?;
                let exact = r.is_exact();
                let obs = Observation { numeric_min: r.global_min, horizon: r.horizon, exact };
                Ok(both(&|v| {
                    let c = if exact { cert() } else { cert().flagged(Flag::ObservedBound) };
                    Verdict::sedentary(v, r.global_min, c).with_observation(obs)
                }))
            }
            Status::NotSedentary { witness_time } => {
                let witness =
                    witness_time.filter(|&t| s.walk_diagonal(u, t).map(|z| z.re.abs() <= WITNESS_TOL).unwrap_or(false));
                Ok(both(&|v| Verdict::not_sedentary(v, witness, cert())))
            }
            Status::Inconclusive { numeric_min, horizon } => {
                Ok(both(&|v| Verdict::inconclusive(v, numeric_min, horizon, cert())))
            }
        };
    }
    let double = g.bipartite_double();
    let sd = eigendecompose(&double)?;
    let r = numeric_scan(&sd, u, &ScanOptions::default())?;
    Ok(both(&|v| Verdict::inconclusive(v, r.global_min, r.horizon, cert())))
}
