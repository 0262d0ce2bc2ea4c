//! Individual certificate tests. Each returns a verdict only when it fires.

use std::f64::consts::PI;
use std::ops::ControlFlow;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use super::scan::{numeric_scan, ScanOptions};
use super::{Certificate, CertificateKind, ClassifyOptions, Evidence, Flag, HalfRoute, Verdict, WITNESS_TOL};
use crate::error::SedentaryError;
use crate::graph::WeightedGraph;
use crate::spectral::{
    combo_sub, for_each_relation, integer_relation, odd_sum_relation, rational_approx, recognize, relation_lattice,
    two_adic, EigenvalueClass, RadicalCombo, SpectralDecomposition, VertexProfile, MAX_RELATION_VALUES,
};

const CONJUGATE_TOL: f64 = 1e-8;
const AUDIT_KEEP: usize = 64;

/// One relation `Σ ℓ_λ λ = 0` over `S` and the `S'` that satisfied it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationAudit {
    pub coefficients: Vec<i64>,
    pub s_prime: Vec<usize>,
    pub d: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubsetCertificate {
    /// Eigenvalue indices of `S`, a subset of the positive support.
    pub subset_s: Vec<usize>,
    pub alpha_mass: f64,
    pub zeta: f64,
    /// `ζ/π = a/b` when recognized as rational.
    pub zeta_over_pi: Option<(i64, i64)>,
    /// `S'` used by the first audited relation (empty when there were none).
    pub s_prime: Vec<usize>,
    /// Leading relations with their passing `S'`; at most 64 are kept.
    pub relation_audit: Vec<RelationAudit>,
    pub relations_checked: usize,
    /// No nonzero relation exists at all (exact lattice computation).
    pub exact: bool,
    /// `ζ/λ` for the smallest `λ ∈ S`; exact witness only when `|S| = 1`.
    pub time_hint: f64,
}

fn positive_support(s: &SpectralDecomposition, p: &VertexProfile) -> Vec<(usize, f64, f64)> {
    let gap = s.equality_gap();
    p.support
        .iter()
        .zip(&p.diagonals)
        .filter(|(&i, _)| s.eigenvalues()[i] > gap)
        .map(|(&i, &d)| (i, s.eigenvalues()[i], d))
        .collect()
}

fn zero_diagonal(s: &SpectralDecomposition, p: &VertexProfile) -> Option<(usize, f64)> {
    let z = s.zero_index()?;
    p.diagonal_of(z).map(|d| (z, d))
}

fn re_at(s: &SpectralDecomposition, u: usize, t: f64) -> f64 {
    s.walk_diagonal(u, t).map(|z| z.re).unwrap_or(f64::NAN)
}

/// Zero of `U(t)_{u,u}` in `(0, t]` for a bipartite graph, given `Re U(t) ≤ 0`.
///
/// The diagonal amplitude of a bipartite walk is real and starts at `1`, so
/// bisection on `[0, t]` converges to a root.
pub(crate) fn bipartite_root(s: &SpectralDecomposition, u: usize, t: f64) -> Option<f64> {
    let re = re_at(s, u, t);
    if re.is_nan() || re > WITNESS_TOL {
        return None;
    }
    let (mut lo, mut hi) = (0.0, t);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if re_at(s, u, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = if re_at(s, u, lo).abs() < re_at(s, u, hi).abs() { lo } else { hi };
    s.walk_diagonal(u, root).ok().filter(|z| z.norm() <= WITNESS_TOL).map(|_| root)
}

/// Fires when some support diagonal exceeds `1/2 + half_tol`.
pub fn projection_heavy(s: &SpectralDecomposition, profile: &VertexProfile, half_tol: f64) -> Option<Verdict> {
    let (k, &d) = profile.diagonals.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1))?;
    if d <= 0.5 + half_tol {
        return None;
    }
    let i = profile.support[k];
    let evidence = Evidence::Projection { eigenvalue_index: i, eigenvalue: s.eigenvalues()[i], diagonal: d };
    Some(Verdict::sedentary(profile.vertex, 2.0 * d - 1.0, Certificate::new(CertificateKind::ProjectionHeavy, evidence)))
}

/// Sedentary pendants sharing a hub.
///
/// The pendants of a hub span null vectors `x` with `Σ w_i x_i = 0`, so
/// `(E_0)_{i,i} ≥ 1 − w_i² / Σ w_j²`. Unweighted groups of three or more are
/// twin sets. Two equal-weight pendants fire only if the true `(E_0)_{i,i}`
/// exceeds one half.
pub fn pendant_group(g: &WeightedGraph, s: &SpectralDecomposition, half_tol: f64) -> Result<Vec<Verdict>, SedentaryError> {
    let groups = g.pendant_groups();
    if groups.is_empty() {
        return Err(SedentaryError::NoPendantGroup);
    }
    let zero = s.zero_index();
    let mut out = Vec::new();
    for group in groups {
        let unweighted = group.pendants.iter().all(|&(_, w)| w == 1.0);
        let total: f64 = group.pendants.iter().map(|&(_, w)| w * w).sum();
        let members: Vec<usize> = group.pendants.iter().map(|&(p, _)| p).collect();
        for &(p, w) in &group.pendants {
            let actual = zero.map(|z| s.diagonal(z, p));
            if unweighted && group.pendants.len() >= 3 {
                if let (Some(z), Some(d)) = (zero, actual) {
                    let evidence = Evidence::Twins {
                        members: members.clone(),
                        kind: crate::graph::TwinKind::Independent,
                        eigenvalue_index: z,
                        diagonal: d,
                    };
                    out.push(Verdict::sedentary(p, 2.0 * d - 1.0, Certificate::new(CertificateKind::TwinSetLarge, evidence)));
                }
                continue;
            }
            let structural = 1.0 - w * w / total;
            let bound = if structural > 0.5 + half_tol {
                Some(structural)
            } else if group.pendants.len() == 2 && (structural - 0.5).abs() <= half_tol {
                actual.filter(|&d| d > 0.5 + half_tol)
            } else {
                None
            };
            if let Some(b) = bound {
                let evidence =
                    Evidence::Pendants { hub: group.hub, pendants: group.pendants.clone(), diagonal_bound: b };
                out.push(Verdict::sedentary(p, 2.0 * b - 1.0, Certificate::new(CertificateKind::PendantGroup, evidence)));
            }
        }
    }
    Ok(out)
}

/// Whole-graph certificate: a bipartite graph with a unique perfect matching
/// or an even number of distinct eigenvalues is nonsingular.
pub fn unique_pm(g: &WeightedGraph, s: &SpectralDecomposition) -> Option<Certificate> {
    if !g.is_connected() || !g.is_bipartite() {
        return None;
    }
    let report = g.count_perfect_matchings_capped();
    if report.count_capped == 1 {
        let edges = report.sample.unwrap_or_default();
        return Some(Certificate::new(CertificateKind::UniquePerfectMatching, Evidence::Matching { edges }));
    }
    let count = s.eigenvalues().len();
    (count % 2 == 0)
        .then(|| Certificate::new(CertificateKind::EvenDistinctEigenvalues, Evidence::DistinctCount { count }))
}

/// Fires for a bipartite graph when `0` is outside the support of `u`.
pub fn bipartite_zero_free(g: &WeightedGraph, s: &SpectralDecomposition, profile: &VertexProfile) -> Option<Verdict> {
    if !g.is_connected() || !g.is_bipartite() || zero_diagonal(s, profile).is_some() {
        return None;
    }
    let positive = positive_support(s, profile).into_iter().map(|(_, l, _)| l).collect();
    let evidence = Evidence::Support { positive, zero_diagonal: None };
    Some(Verdict::not_sedentary(profile.vertex, None, Certificate::new(CertificateKind::BipartiteZeroFree, evidence)))
}

/// Single positive support value, equal-`ν₂` integers, or a `Q`-independent
/// positive support, for a vertex of a bipartite graph with `0` in its
/// support and `(E_0)_{u,u} < 1/2`.
pub fn cor18_tests(
    s: &SpectralDecomposition,
    profile: &VertexProfile,
    opts: &ClassifyOptions,
) -> Result<Option<Verdict>, SedentaryError> {
    let u = profile.vertex;
    let (_, e0) = zero_diagonal(s, profile)
        .ok_or_else(|| SedentaryError::PreconditionViolated(format!("0 is not in the support of vertex {u}")))?;
    if e0 >= 0.5 - opts.half_tol {
        return Err(SedentaryError::PreconditionViolated(format!("(E_0)_{{u,u}} = {e0} is not below 1/2")));
    }
    let positive = positive_support(s, profile);
    let values: Vec<f64> = positive.iter().map(|&(_, l, _)| l).collect();

    if let [(_, l, _)] = positive[..] {
        let t = bipartite_root(s, u, PI / l).unwrap_or(PI / l);
        let evidence = Evidence::Support { positive: values, zero_diagonal: Some(e0) };
        return Ok(Some(Verdict::not_sedentary(u, Some(t), Certificate::new(CertificateKind::SinglePositive, evidence))));
    }
    if positive.len() < 2 {
        return Ok(None);
    }

    let classes: Vec<EigenvalueClass> = values.iter().map(|&v| recognize(v, opts.recognize_tol)).collect();
    if let Some(ints) = classes.iter().map(|c| c.as_integer()).collect::<Option<Vec<i64>>>() {
        let nu: Vec<u32> = ints.iter().map(|&k| two_adic(k)).collect::<Result<_, _>>()?;
        if nu.iter().all(|&x| x == nu[0]) {
            let t0 = PI / f64::from(1u32 << nu[0]);
            let t = bipartite_root(s, u, t0).unwrap_or(t0);
            let evidence = Evidence::TwoAdic { positive: ints, valuation: nu[0], zero_diagonal: e0 };
            return Ok(Some(Verdict::not_sedentary(u, Some(t), Certificate::new(CertificateKind::EqualTwoAdic, evidence))));
        }
    }

    let forms: Option<Vec<RadicalCombo>> = values.iter().map(|&v| exact_form(s, v, opts.recognize_tol)).collect();
    let independent = match forms.as_deref().and_then(relation_lattice) {
        Some(kernel) => kernel.is_empty().then_some(true),
        None if values.len() <= MAX_RELATION_VALUES => {
            integer_relation(&values, opts.relation_bound, opts.relation_tol)?.is_none().then_some(false)
        }
        None => None,
    };
    Ok(independent.map(|exact| {
        let evidence = Evidence::Independence { positive: values, exact, coeff_bound: opts.relation_bound };
        let cert = Certificate::new(CertificateKind::LinearIndependent, evidence);
        let cert = if exact { cert } else { cert.flagged(Flag::BoundedEvidence) };
        Verdict::not_sedentary(u, None, cert)
    }))
}

/// Exact form of an eigenvalue as `Σ c_Δ √Δ`.
///
/// Tries the recognized forms first, then `(a + b√Δ)/c` for `c ≤ 4`, which is
/// accepted only when the conjugate `(a − b√Δ)/c` is also an eigenvalue.
pub(crate) fn exact_form(s: &SpectralDecomposition, value: f64, tol: f64) -> Option<RadicalCombo> {
    if let Some(c) = recognize(value, tol).radical() {
        return Some(c);
    }
    let lmax = s.lambda_max_abs().max(1.0);
    for c in 1..=4i64 {
        let cf = c as f64;
        let amax = (2.0 * cf * lmax).ceil() as i64;
        for a in -amax..=amax {
            let w = cf * value - a as f64;
            match recognize(w, tol * cf) {
                EigenvalueClass::Integer { k } => {
                    let mut m = RadicalCombo::new();
                    m.insert(1, Ratio::new(a + k, c));
                    return Some(m);
                }
                EigenvalueClass::RatioSqrt { p, q, delta } => {
                    let conj = (a as f64 - p as f64 / q as f64 * (delta as f64).sqrt()) / cf;
                    if s.eigenvalues().iter().any(|&l| (l - conj).abs() <= CONJUGATE_TOL * lmax) {
                        let mut m = RadicalCombo::new();
                        if a != 0 {
                            m.insert(1, Ratio::new(a, c));
                        }
                        m.insert(delta, Ratio::new(p, q * c));
                        return Some(m);
                    }
                }
                EigenvalueClass::Unrecognized { .. } => {}
            }
        }
    }
    None
}

/// `t* = πL/(2^η √Δ)` when every difference is `(k/L)√Δ` with one common
/// `ν₂(k) = η`; at `t*` each `e^{i(λ−θ)t}` equals `−1`.
fn half_case_witness(diffs: &[RadicalCombo]) -> Option<f64> {
    let mut delta = None;
    let mut coeffs = Vec::with_capacity(diffs.len());
    for d in diffs {
        if d.len() != 1 {
            return None;
        }
        let (&key, &c) = d.iter().next()?;
        if delta.is_some_and(|e| e != key) {
            return None;
        }
        delta = Some(key);
        coeffs.push(c);
    }
    let l = coeffs.iter().fold(1i64, |l, c| l.lcm(c.denom()));
    let ks: Vec<i64> = coeffs.iter().map(|c| c.numer() * (l / c.denom())).collect();
    let eta = two_adic(ks[0]).ok()?;
    if ks.iter().any(|&k| two_adic(k).ok() != Some(eta)) {
        return None;
    }
    Some(PI * l as f64 / (f64::from(1u32 << eta) * (delta? as f64).sqrt()))
}

/// Lower bound for a sedentary half-case vertex: the exact period minimum if
/// periodic, otherwise the observed scan minimum.
fn half_case_bound(s: &SpectralDecomposition, u: usize, scan: &ScanOptions) -> Result<(f64, bool), SedentaryError> {
    let opts = ScanOptions { use_period: true, ..scan.clone() };
    let r = numeric_scan(s, u, &opts)?;
    Ok((r.global_min, r.is_exact()))
}

/// Half case `(E_θ)_{u,u} = 1/2`: sedentary iff some integer relation on the
/// differences `λ − θ` has an odd coefficient sum.
///
/// With exactly recognized support the relation lattice decides both ways.
/// Otherwise only a found odd relation is conclusive and `Ok(None)` is
/// returned when the bounded search is exhausted.
pub fn half_case_parity(
    s: &SpectralDecomposition,
    profile: &VertexProfile,
    theta_index: usize,
    opts: &ClassifyOptions,
) -> Result<Option<Verdict>, SedentaryError> {
    let u = profile.vertex;
    let diag = profile.diagonal_of(theta_index).unwrap_or(0.0);
    if (diag - 0.5).abs() > opts.half_tol {
        return Err(SedentaryError::NotHalfCase { diagonal: diag });
    }
    let theta = s.eigenvalues()[theta_index];
    let others: Vec<usize> = profile.support.iter().copied().filter(|&i| i != theta_index).collect();
    let diffs: Vec<f64> = others.iter().map(|&i| s.eigenvalues()[i] - theta).collect();

    let evidence = |route, relation, kernel| Evidence::HalfCase { theta_index, theta, route, relation, kernel };
    let sedentary = |evidence: Evidence, flags: &[Flag]| -> Result<Verdict, SedentaryError> {
        let (bound, exact) = half_case_bound(s, u, &opts.scan)?;
        let mut cert = Certificate::new(CertificateKind::HalfCaseParity, evidence).flagged(Flag::HalfCaseBoundary);
        for &f in flags {
            cert = cert.flagged(f);
        }
        if !exact {
            cert = cert.flagged(Flag::ObservedBound);
        }
        Ok(Verdict::sedentary(u, bound, cert))
    };

    let theta_form = exact_form(s, theta, opts.recognize_tol);
    let forms: Option<Vec<RadicalCombo>> =
        others.iter().map(|&i| exact_form(s, s.eigenvalues()[i], opts.recognize_tol)).collect();
    if let (Some(tf), Some(forms)) = (theta_form, forms) {
        let combos: Vec<RadicalCombo> = forms.iter().map(|f| combo_sub(f, &tf)).collect();
        if let Some(kernel) = relation_lattice(&combos) {
            if let Some(odd) = kernel.iter().find(|v| v.iter().sum::<i64>() % 2 != 0).cloned() {
                return sedentary(evidence(HalfRoute::ExactLattice, Some(odd), kernel), &[]).map(Some);
            }
            let witness = half_case_witness(&combos)
                .filter(|&t| s.walk_diagonal(u, t).map(|z| z.norm() <= WITNESS_TOL).unwrap_or(false));
            let cert = Certificate::new(CertificateKind::HalfCaseParity, evidence(HalfRoute::ExactLattice, None, kernel))
                .flagged(Flag::HalfCaseBoundary);
            return Ok(Some(Verdict::not_sedentary(u, witness, cert)));
        }
    }
    if diffs.is_empty() || diffs.len() > MAX_RELATION_VALUES {
        return Ok(None);
    }
    match odd_sum_relation(&diffs, opts.relation_bound, opts.relation_tol)? {
        Some(rel) => sedentary(evidence(HalfRoute::BoundedSearch, Some(rel), vec![]), &[Flag::BoundedEvidence]).map(Some),
        None => Ok(None),
    }
}

fn passing_s_prime(ell: &[i64], zeta_over_pi: Option<(i64, i64)>) -> Option<(u32, i64)> {
    let k = ell.len();
    (0u32..1 << k).find_map(|mask| {
        let d: i64 = (0..k).map(|j| if mask >> j & 1 == 1 { -ell[j] } else { ell[j] }).sum();
        let ok = match zeta_over_pi {
            None => d == 0,
            Some((a, b)) => {
                d % b == 0
                    && (d == 0 || {
                        let need = i64::from(two_adic(b).unwrap_or(0)) - i64::from(two_adic(a).unwrap_or(0));
                        i64::from(two_adic(d).unwrap_or(0)) > need
                    })
            }
        };
        ok.then_some((mask, d))
    })
}

/// Subset test over the positive support: finds `S` with mass `α ≥ 1/4` such
/// that every integer relation on `S` (up to the coefficient bound) admits an
/// `S'` meeting the `D_{S'}` condition for `ζ = arccos(−1/(4α))`.
pub fn kronecker_subset(
    s: &SpectralDecomposition,
    profile: &VertexProfile,
    opts: &ClassifyOptions,
) -> Result<Option<Verdict>, SedentaryError> {
    let u = profile.vertex;
    let (_, e0) = zero_diagonal(s, profile)
        .ok_or_else(|| SedentaryError::PreconditionViolated(format!("0 is not in the support of vertex {u}")))?;
    if e0 >= 0.5 - opts.half_tol {
        return Err(SedentaryError::PreconditionViolated(format!("(E_0)_{{u,u}} = {e0} is not below 1/2")));
    }
    let positive = positive_support(s, profile);
    if positive.len() > MAX_RELATION_VALUES {
        return Err(SedentaryError::SupportTooLarge { size: positive.len() });
    }
    let k = positive.len();
    let all_forms: Vec<Option<RadicalCombo>> =
        positive.iter().map(|&(_, l, _)| exact_form(s, l, opts.recognize_tol)).collect();
    let mut subsets: Vec<u32> = (1u32..1 << k).collect();
    subsets.sort_by_key(|&m| {
        let members: Vec<usize> = (0..k).filter(|&j| m >> j & 1 == 1).collect();
        (members.len(), members)
    });

    for mask in subsets {
        let members: Vec<usize> = (0..k).filter(|&j| mask >> j & 1 == 1).collect();
        let chosen: Vec<(usize, f64, f64)> = members.iter().map(|&j| positive[j]).collect();
        let alpha: f64 = chosen.iter().map(|&(_, _, d)| d).sum();
        if alpha < 0.25 {
            continue;
        }
        let zeta = (-1.0 / (4.0 * alpha)).acos();
        let zeta_over_pi = rational_approx(zeta / PI, 64, 1e-9);
        let values: Vec<f64> = chosen.iter().map(|&(_, l, _)| l).collect();

        let forms: Option<Vec<RadicalCombo>> = members.iter().map(|&j| all_forms[j].clone()).collect();
        let exact = forms.as_deref().and_then(relation_lattice).is_some_and(|kernel| kernel.is_empty());

        let mut audit = Vec::new();
        let mut checked = 0usize;
        let mut ok = true;
        if !exact && values.len() > 1 {
            for_each_relation(&values, opts.kronecker_bound, opts.relation_tol, |ell| {
                checked += 1;
                if checked > opts.kronecker_relation_cap {
                    ok = false;
                    return ControlFlow::Break(());
                }
                match passing_s_prime(ell, zeta_over_pi) {
                    Some((sp, d)) => {
                        if audit.len() < AUDIT_KEEP {
                            let s_prime = (0..ell.len()).filter(|&j| sp >> j & 1 == 1).map(|j| chosen[j].0).collect();
                            audit.push(RelationAudit { coefficients: ell.to_vec(), s_prime, d });
                        }
                        ControlFlow::Continue(())
                    }
                    None => {
                        ok = false;
                        ControlFlow::Break(())
                    }
                }
            })?;
        }
        if !ok {
            continue;
        }
        let lambda_min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let time_hint = zeta / lambda_min;
        let witness = if chosen.len() == 1 { bipartite_root(s, u, time_hint) } else { None };
        let cert = SubsetCertificate {
            subset_s: chosen.iter().map(|&(i, _, _)| i).collect(),
            alpha_mass: alpha,
            zeta,
            zeta_over_pi,
            s_prime: audit.first().map(|a: &RelationAudit| a.s_prime.clone()).unwrap_or_default(),
            relation_audit: audit,
            relations_checked: checked,
            exact: exact || values.len() == 1,
            time_hint,
        };
        let bounded = !cert.exact;
        let mut certificate = Certificate::new(CertificateKind::KroneckerSubset, Evidence::Subset(cert));
        if bounded {
            certificate = certificate.flagged(Flag::BoundedEvidence);
        }
        return Ok(Some(Verdict::not_sedentary(u, witness, certificate)));
    }
    Ok(None)
}
