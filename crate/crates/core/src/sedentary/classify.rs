//! Fixed-order certificate cascade with a numeric fallback.

use std::f64::consts::PI;

use super::certs::{
    bipartite_root, bipartite_zero_free, cor18_tests, half_case_parity, kronecker_subset, pendant_group, projection_heavy, unique_pm,
};
use super::scan::{minimize, numeric_scan, support_terms, amplitude, auto_step, ScanOptions};
use super::{Certificate, CertificateKind, ClassifyOptions, Evidence, Flag, Observation, Verdict, WITNESS_TOL};
use crate::error::{GraphError, SedentaryError};
use crate::graph::{TwinSet, TwinKind, WeightedGraph};
use crate::spectral::{periodicity, SpectralDecomposition, VertexProfile, MAX_RELATION_VALUES};

/// Scan minima above this are reported as a sedentary period minimum.
const PERIOD_MIN_FLOOR: f64 = 1e-6;
const STEPS: usize = 8;

/// Graph-level state shared by every vertex of one classification run.
pub struct Classifier<'a> {
    g: &'a WeightedGraph,
    s: &'a SpectralDecomposition,
    opts: ClassifyOptions,
    bipartite: bool,
    twins: Vec<TwinSet>,
    pendants: Vec<Verdict>,
    graph_cert: Option<Certificate>,
}

impl<'a> Classifier<'a> {
    pub fn new(g: &'a WeightedGraph, s: &'a SpectralDecomposition, opts: ClassifyOptions) -> Result<Self, SedentaryError> {
        if g.n() == 0 {
            return Err(crate::error::SpectralError::EmptyGraph.into());
        }
        if !g.is_connected() {
            return Err(GraphError::Disconnected.into());
        }
        if s.n() != g.n() {
            return Err(SedentaryError::PreconditionViolated(format!(
                "decomposition has {} vertices, graph has {}",
                s.n(),
                g.n()
            )));
        }
        let twins = if g.is_unweighted() { g.twin_sets()? } else { Vec::new() };
        let pendants = match pendant_group(g, s, opts.half_tol) {
            Ok(v) => v,
            Err(SedentaryError::NoPendantGroup) => Vec::new(),
            Err(e) => return Err(e),
        };
        Ok(Classifier { g, s, bipartite: g.is_bipartite(), twins, pendants, graph_cert: unique_pm(g, s), opts })
    }

    pub fn options(&self) -> &ClassifyOptions {
        &self.opts
    }

    fn profile(&self, u: usize) -> Result<VertexProfile, SedentaryError> {
        if u >= self.g.n() {
            return Err(SedentaryError::VertexOutOfRange { u, n: self.g.n() });
        }
        Ok(self.s.support_with_tol(u, self.opts.support_tol)?)
    }

    /// First certificate in cascade order, or the numeric fallback.
    pub fn classify(&self, u: usize) -> Result<Verdict, SedentaryError> {
        let profile = self.profile(u)?;
        let mut verdict = None;
        for k in 0..STEPS {
            if let Some(v) = self.step(k, &profile)? {
                verdict = Some(v);
                break;
            }
        }
        let mut verdict = match verdict {
            Some(v) => v,
            None => self.fallback(&profile)?,
        };
        if !profile.ambiguous.is_empty() {
            verdict.certificate = verdict.certificate.flagged(Flag::SupportAmbiguity);
        }
        if self.opts.attach_scan && verdict.observed.is_none() && !verdict.is_inconclusive() {
            let r = numeric_scan(self.s, u, &self.opts.scan)?;
            verdict = verdict.with_observation(Observation { numeric_min: r.global_min, horizon: r.horizon, exact: r.is_exact() });
        }
        Ok(verdict)
    }

    pub fn classify_all(&self) -> Result<Vec<Verdict>, SedentaryError> {
        (0..self.g.n()).map(|u| self.classify(u)).collect()
    }

    /// Every certificate step that fires for `u`, in cascade order.
    pub fn all_firings(&self, u: usize) -> Result<Vec<Verdict>, SedentaryError> {
        let profile = self.profile(u)?;
        let mut out = Vec::new();
        for k in 0..STEPS {
            if let Some(v) = self.step(k, &profile)? {
                out.push(v);
            }
        }
        Ok(out)
    }

    fn zero_below_half(&self, profile: &VertexProfile) -> bool {
        self.s
            .zero_index()
            .and_then(|z| profile.diagonal_of(z))
            .is_some_and(|d| d < 0.5 - self.opts.half_tol)
    }

    fn step(&self, k: usize, profile: &VertexProfile) -> Result<Option<Verdict>, SedentaryError> {
        let u = profile.vertex;
        let (g, s, opts) = (self.g, self.s, &self.opts);
        match k {
            0 => Ok(self.twin_step(profile)),
            1 => Ok(projection_heavy(s, profile, opts.half_tol)),
            2 => Ok(self.pendants.iter().find(|v| v.vertex == u).cloned()),
            3 => Ok(self.graph_cert.clone().map(|c| Verdict::not_sedentary(u, None, c))),
            4 => Ok(bipartite_zero_free(g, s, profile)),
            5 if self.bipartite && self.zero_below_half(profile) => cor18_tests(s, profile, opts),
            6 => {
                let theta = profile
                    .support
                    .iter()
                    .zip(&profile.diagonals)
                    .find(|(_, &d)| (d - 0.5).abs() <= opts.half_tol)
                    .map(|(&i, _)| i);
                match theta {
                    Some(i) => half_case_parity(s, profile, i, opts),
                    None => Ok(None),
                }
            }
            7 if self.bipartite && self.zero_below_half(profile) => {
                let positive = profile.support.iter().filter(|&&i| s.eigenvalues()[i] > s.equality_gap()).count();
                if positive > MAX_RELATION_VALUES {
                    return Ok(None);
                }
                kronecker_subset(s, profile, opts)
            }
            _ => Ok(None),
        }
    }

    fn twin_step(&self, profile: &VertexProfile) -> Option<Verdict> {
        let u = profile.vertex;
        let set = self.twins.iter().find(|t| t.members.len() >= 3 && t.members.contains(&u))?;
        let theta = match set.kind {
            TwinKind::Independent => 0.0,
            TwinKind::Clique => -1.0,
        };
        let i = self.s.index_of(theta)?;
        let d = profile.diagonal_of(i)?;
        let evidence = Evidence::Twins { members: set.members.clone(), kind: set.kind, eigenvalue_index: i, diagonal: d };
        Some(Verdict::sedentary(u, 2.0 * d - 1.0, Certificate::new(CertificateKind::TwinSetLarge, evidence)))
    }

    fn fallback(&self, profile: &VertexProfile) -> Result<Verdict, SedentaryError> {
        let u = profile.vertex;
        let s = self.s;
        if let Ok(report) = periodicity(s, u) {
            if report.periodic {
                let r = numeric_scan(s, u, &ScanOptions { use_period: true, ..self.opts.scan.clone() })?;
                if r.period.is_some() {
                    let evidence =
                        Evidence::Scan { numeric_min: r.global_min, argmin: r.argmin, horizon: r.horizon, period: r.period };
                    let cert = Certificate::new(CertificateKind::PeriodicMinimum, evidence);
                    let obs = Observation { numeric_min: r.global_min, horizon: r.horizon, exact: true };
                    if r.global_min > PERIOD_MIN_FLOOR {
                        return Ok(Verdict::sedentary(u, r.global_min, cert).with_observation(obs));
                    }
                    if r.global_min <= WITNESS_TOL {
                        return Ok(Verdict::not_sedentary(u, Some(r.argmin), cert).with_observation(obs));
                    }
                }
            }
        }

        let terms = support_terms(s, u)?;
        let horizon = self.opts.scan.horizon;
        if self.bipartite {
            let gap = s.equality_gap();
            for &i in &profile.support {
                let l = s.eigenvalues()[i];
                if l > gap {
                    if let Some(t) = bipartite_root(s, u, PI / l) {
                        let value = amplitude(&terms, t).re;
                        let cert = Certificate::new(CertificateKind::NumericWitness, Evidence::Witness { time: t, value });
                        return Ok(Verdict::not_sedentary(u, Some(t), cert));
                    }
                }
            }
            let step = self.opts.scan.step.unwrap_or_else(|| auto_step(s.lambda_max_abs()));
            let m = minimize(|t| amplitude(&terms, t).re, horizon, step, self.opts.scan.refine);
            if let Some(t) = bipartite_root(s, u, m.argmin) {
                let value = amplitude(&terms, t).re;
                let cert = Certificate::new(CertificateKind::NumericWitness, Evidence::Witness { time: t, value });
                return Ok(Verdict::not_sedentary(u, Some(t), cert));
            }
        }

        let r = numeric_scan(s, u, &ScanOptions { use_period: false, ..self.opts.scan.clone() })?;
        let evidence = Evidence::Scan { numeric_min: r.global_min, argmin: r.argmin, horizon: r.horizon, period: None };
        let cert = Certificate::new(CertificateKind::NumericScan, evidence).flagged(Flag::ObservedBound);
        Ok(Verdict::inconclusive(u, r.global_min, r.horizon, cert))
    }
}

/// Classifies a single vertex with a fresh [`Classifier`].
pub fn classify_vertex(
    g: &WeightedGraph,
    s: &SpectralDecomposition,
    u: usize,
    opts: &ClassifyOptions,
) -> Result<Verdict, SedentaryError> {
    Classifier::new(g, s, opts.clone())?.classify(u)
}
