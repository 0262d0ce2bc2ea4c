//! Per-vertex sedentariness verdicts backed by replayable certificates.

mod certs;
mod classify;
mod scan;
mod transfer;

use serde::Serialize;

use crate::graph::TwinKind;

pub use certs::{
    bipartite_zero_free, cor18_tests, half_case_parity, kronecker_subset, pendant_group, projection_heavy, unique_pm,
    RelationAudit, SubsetCertificate,
};
pub use classify::{classify_vertex, Classifier};
pub use scan::{auto_step, numeric_scan, ScanOptions, ScanResult, DEFAULT_HORIZON};
pub use transfer::{cartesian_classify, double_classify};

/// Diagonals within this distance of `1/2` count as the half case.
pub const HALF_TOL: f64 = 1e-8;
/// `|U(t*)|` or `Re U(t*)` at or below this value certifies a witness time.
pub const WITNESS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    TwinSetLarge,
    ProjectionHeavy,
    PendantGroup,
    UniquePerfectMatching,
    EvenDistinctEigenvalues,
    BipartiteZeroFree,
    SinglePositive,
    EqualTwoAdic,
    LinearIndependent,
    HalfCaseParity,
    KroneckerSubset,
    /// Minimum of `|U(t)_{u,u}|` over one full period of a periodic vertex.
    PeriodicMinimum,
    NumericWitness,
    CartesianCombine,
    DoubleTransfer,
    /// No certificate fired; the verdict carries scan evidence only.
    NumericScan,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::TwinSetLarge => "twin_set_large",
            CertificateKind::ProjectionHeavy => "projection_heavy",
            CertificateKind::PendantGroup => "pendant_group",
            CertificateKind::UniquePerfectMatching => "unique_perfect_matching",
            CertificateKind::EvenDistinctEigenvalues => "even_distinct_eigenvalues",
            CertificateKind::BipartiteZeroFree => "bipartite_zero_free",
            CertificateKind::SinglePositive => "single_positive",
            CertificateKind::EqualTwoAdic => "equal_two_adic",
            CertificateKind::LinearIndependent => "linear_independent",
            CertificateKind::HalfCaseParity => "half_case_parity",
            CertificateKind::KroneckerSubset => "kronecker_subset",
            CertificateKind::PeriodicMinimum => "periodic_minimum",
            CertificateKind::NumericWitness => "numeric_witness",
            CertificateKind::CartesianCombine => "cartesian_combine",
            CertificateKind::DoubleTransfer => "double_transfer",
            CertificateKind::NumericScan => "numeric_scan",
        }
    }
}

impl std::fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Qualifiers attached to a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    /// Rests on a bounded relation search rather than an exact lattice computation.
    BoundedEvidence,
    /// A projector diagonal sat within tolerance of `1/2`.
    HalfCaseBoundary,
    /// Some projected norm fell in the ambiguous support band.
    SupportAmbiguity,
    /// The lower bound is a scan minimum over a finite horizon, not a proven infimum.
    ObservedBound,
    /// NotSedentary via a limiting argument; no finite witness time.
    LimitCertificate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HalfRoute {
    /// Integer kernel of exactly recognized differences.
    ExactLattice,
    /// Odd-sum relation found by bounded search.
    BoundedSearch,
}

/// Kind-specific data sufficient to replay a certificate against the graph
/// and its decomposition.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    Projection { eigenvalue_index: usize, eigenvalue: f64, diagonal: f64 },
    Twins { members: Vec<usize>, kind: TwinKind, eigenvalue_index: usize, diagonal: f64 },
    Pendants { hub: usize, pendants: Vec<(usize, f64)>, diagonal_bound: f64 },
    Matching { edges: Vec<(usize, usize)> },
    DistinctCount { count: usize },
    Support { positive: Vec<f64>, zero_diagonal: Option<f64> },
    TwoAdic { positive: Vec<i64>, valuation: u32, zero_diagonal: f64 },
    Independence { positive: Vec<f64>, exact: bool, coeff_bound: i64 },
    HalfCase {
        theta_index: usize,
        theta: f64,
        route: HalfRoute,
        relation: Option<Vec<i64>>,
        kernel: Vec<Vec<i64>>,
    },
    Subset(SubsetCertificate),
    Scan { numeric_min: f64, argmin: f64, horizon: f64, period: Option<f64> },
    Witness { time: f64, value: f64 },
    Factors { left: Box<Verdict>, right: Box<Verdict> },
    Double { base_vertex: usize, zero_diagonal: Option<f64>, base: Box<Verdict> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub evidence: Evidence,
    pub flags: Vec<Flag>,
}

impl Certificate {
    pub fn new(kind: CertificateKind, evidence: Evidence) -> Self {
        Certificate { kind, evidence, flags: Vec::new() }
    }

    pub fn flagged(mut self, flag: Flag) -> Self {
        if !self.flags.contains(&flag) {
            self.flags.push(flag);
        }
        self
    }

    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Sedentary { lower_bound: f64 },
    NotSedentary { witness_time: Option<f64> },
    Inconclusive { numeric_min: f64, horizon: f64 },
}

/// Scan evidence reported next to the certified status.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Observation {
    pub numeric_min: f64,
    pub horizon: f64,
    /// The scan covered a full period.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub vertex: usize,
    pub status: Status,
    pub certificate: Certificate,
    pub observed: Option<Observation>,
}

/// The flat JSON shape of a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictReport {
    pub vertex: usize,
    pub status: &'static str,
    pub certificate: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_time: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub horizon: Option<f64>,
}

impl Verdict {
    pub fn sedentary(vertex: usize, lower_bound: f64, certificate: Certificate) -> Self {
        Verdict { vertex, status: Status::Sedentary { lower_bound }, certificate, observed: None }
    }

    pub fn not_sedentary(vertex: usize, witness_time: Option<f64>, certificate: Certificate) -> Self {
        let certificate = if witness_time.is_none() { certificate.flagged(Flag::LimitCertificate) } else { certificate };
        Verdict { vertex, status: Status::NotSedentary { witness_time }, certificate, observed: None }
    }

    pub fn inconclusive(vertex: usize, numeric_min: f64, horizon: f64, certificate: Certificate) -> Self {
        Verdict { vertex, status: Status::Inconclusive { numeric_min, horizon }, certificate, observed: None }
    }

    pub fn with_observation(mut self, observed: Observation) -> Self {
        self.observed = Some(observed);
        self
    }

    pub fn kind(&self) -> CertificateKind {
        self.certificate.kind
    }

    pub fn is_sedentary(&self) -> bool {
        matches!(self.status, Status::Sedentary { .. })
    }

    pub fn is_not_sedentary(&self) -> bool {
        matches!(self.status, Status::NotSedentary { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.status, Status::Inconclusive { .. })
    }

    pub fn lower_bound(&self) -> Option<f64> {
        match self.status {
            Status::Sedentary { lower_bound } => Some(lower_bound),
            _ => None,
        }
    }

    pub fn witness_time(&self) -> Option<f64> {
        match self.status {
            Status::NotSedentary { witness_time } => witness_time,
            _ => None,
        }
    }

    pub fn status_str(&self) -> &'static str {
        match self.status {
            Status::Sedentary { .. } => "sedentary",
            Status::NotSedentary { .. } => "not_sedentary",
            Status::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn report(&self) -> VerdictReport {
        let (numeric_min, horizon) = match (self.status, self.observed) {
            (Status::Inconclusive { numeric_min, horizon }, _) => (Some(numeric_min), Some(horizon)),
            (_, Some(o)) => (Some(o.numeric_min), Some(o.horizon)),
            _ => (None, None),
        };
        VerdictReport {
            vertex: self.vertex,
            status: self.status_str(),
            certificate: self.certificate.kind.as_str(),
            lower_bound: self.lower_bound(),
            witness_time: self.witness_time(),
            numeric_min,
            horizon,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.report()).expect("verdict report serializes")
    }
}

/// Tunables for the certificate cascade.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifyOptions {
    pub support_tol: f64,
    pub half_tol: f64,
    /// Recognition tolerance for eigenvalue forms inside the cascade.
    pub recognize_tol: f64,
    pub relation_bound: i64,
    pub relation_tol: f64,
    pub kronecker_bound: i64,
    /// Relations examined per subset before the Kronecker search gives up.
    pub kronecker_relation_cap: usize,
    pub scan: ScanOptions,
    /// Attach scan evidence to every verdict.
    pub attach_scan: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            support_tol: crate::spectral::DEFAULT_SUPPORT_TOL,
            half_tol: HALF_TOL,
            recognize_tol: 1e-9,
            relation_bound: 32,
            relation_tol: 1e-9,
            kronecker_bound: 8,
            kronecker_relation_cap: 20_000,
            scan: ScanOptions::default(),
            attach_scan: true,
        }
    }
}

impl ClassifyOptions {
    /// Skips the per-verdict scan; certificates that need a scan still run one.
    pub fn without_scan() -> Self {
        ClassifyOptions { attach_scan: false, ..Self::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_shape() {
        let v = Verdict::sedentary(
            3,
            0.25,
            Certificate::new(CertificateKind::ProjectionHeavy, Evidence::Witness { time: 0.0, value: 1.0 }),
        )
        .with_observation(Observation { numeric_min: 0.3, horizon: 10.0, exact: false });
        let json: serde_json::Value = serde_json::from_str(&v.to_json()).unwrap();
        assert_eq!(json["vertex"], 3);
        assert_eq!(json["status"], "sedentary");
        assert_eq!(json["certificate"], "projection_heavy");
        assert_eq!(json["lower_bound"], 0.25);
        assert_eq!(json["numeric_min"], 0.3);
        assert!(json.get("witness_time").is_none());

        let v = Verdict::not_sedentary(
            0,
            None,
            Certificate::new(CertificateKind::BipartiteZeroFree, Evidence::Support { positive: vec![1.0], zero_diagonal: None }),
        );
        assert!(v.certificate.has_flag(Flag::LimitCertificate));
        assert_eq!(v.report().status, "not_sedentary");
    }
}
