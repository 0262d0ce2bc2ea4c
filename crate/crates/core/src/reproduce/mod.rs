//! Acceptance-criteria suite with pinned tolerances and fixed seeds.
//!
//! Each criterion yields a [`CriterionReport`] of named checks; a failing or
//! erroring check fails the criterion without stopping the others.

pub mod corpus;

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::families::{self, FamilySpec};
use crate::graph::{count_perfect_matchings_brute, WeightedGraph};
use crate::sedentary::{
    cartesian_classify, double_classify, numeric_scan, CertificateKind, Classifier, ClassifyOptions, ScanOptions, Verdict,
};
use crate::spectral::{
    cycle_diagonal_oracle, eigendecompose, path_diagonal_oracle, periodicity, recognize, subdivision_nonsingular,
    EigenvalueClass, SpectralDecomposition, DEFAULT_RECOGNIZE_TOL,
};

const SCAN_TOL: f64 = 1e-6;
const ARGMIN_TOL: f64 = 1e-3;
const EXACT_TOL: f64 = 1e-9;
const SPECTRUM_TOL: f64 = 1e-8;
const PENDANT_PATH_UPPER: f64 = 0.22;

type Outcome = Result<(bool, String), Box<dyn std::error::Error + Send + Sync>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Paths,
    Cycles,
    Families,
    Products,
    Doubles,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "paths", "cycles", "families", "products", "doubles"];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Paths => "paths",
            Suite::Cycles => "cycles",
            Suite::Families => "families",
            Suite::Products => "products",
            Suite::Doubles => "doubles",
        }
    }

    /// Criterion ids in this suite, ascending.
    pub fn criteria(self) -> Vec<usize> {
        CRITERIA.iter().filter(|c| self == Suite::All || c.suite == self).map(|c| c.id).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "paths" => Suite::Paths,
            "cycles" => Suite::Cycles,
            "families" => Suite::Families,
            "products" => Suite::Products,
            "doubles" => Suite::Doubles,
            _ => return Err(format!("unknown suite `{s}`; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

pub struct CriterionInfo {
    pub id: usize,
    pub title: &'static str,
    /// Home suite; every criterion also runs under [`Suite::All`].
    pub suite: Suite,
    run: fn(&mut Checks),
}

pub const CRITERIA: [CriterionInfo; 13] = [
    CriterionInfo { id: 1, title: "complete graphs", suite: Suite::Families, run: complete_graphs },
    CriterionInfo { id: 2, title: "paths", suite: Suite::Paths, run: paths },
    CriterionInfo { id: 3, title: "even cycles", suite: Suite::Cycles, run: even_cycles },
    CriterionInfo { id: 4, title: "subdivided stars", suite: Suite::Families, run: subdivided_stars },
    CriterionInfo { id: 5, title: "weighted odd path", suite: Suite::Paths, run: weighted_odd_path },
    CriterionInfo { id: 6, title: "weighted C_4k", suite: Suite::Cycles, run: weighted_c4k },
    CriterionInfo { id: 7, title: "cocktail parties and doubles", suite: Suite::Doubles, run: cocktail_parties },
    CriterionInfo { id: 8, title: "Cartesian products", suite: Suite::Products, run: products },
    CriterionInfo { id: 9, title: "Shrikhande and Doob", suite: Suite::Products, run: shrikhande_doob },
    CriterionInfo { id: 10, title: "pendant path G_5", suite: Suite::Paths, run: pendant_path },
    CriterionInfo { id: 11, title: "matchings and nonsingular subdivisions", suite: Suite::Families, run: matchings },
    CriterionInfo { id: 12, title: "property suites", suite: Suite::All, run: properties },
    CriterionInfo { id: 13, title: "five-eigenvalue example", suite: Suite::Families, run: five_eigenvalue },
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One summary line, e.g. `criterion  1: PASS  complete graphs (8/8 checks)`.
    pub fn line(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        format!(
            "criterion {:>2}: {}  {} ({}/{} checks)",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            ok,
            self.checks.len()
        )
    }
}

#[derive(Default)]
pub struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Records `f`'s outcome; an error becomes a failed check.
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) {
        match f() {
            Ok((passed, detail)) => self.push(name, passed, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }
}

/// Runs one criterion by id.
pub fn criterion(id: usize) -> Option<CriterionReport> {
    let info = CRITERIA.iter().find(|c| c.id == id)?;
    let mut checks = Checks::default();
    (info.run)(&mut checks);
    Some(CriterionReport { id, title: info.title, checks: checks.0 })
}

/// Runs a suite's criteria concurrently; reports come back in id order.
pub fn run_suite(suite: Suite) -> Vec<CriterionReport> {
    let ids = suite.criteria();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ids.iter().map(|&id| scope.spawn(move || criterion(id))).collect();
        handles
            .into_iter()
            .zip(&ids)
            .map(|(h, &id)| match h.join() {
                Ok(r) => r.expect("suite ids are registered"),
                Err(_) => CriterionReport {
                    id,
                    title: CRITERIA[id - 1].title,
                    checks: vec![Check { name: "run".into(), passed: false, detail: "panicked".into() }],
                },
            })
            .collect()
    })
}

fn options() -> ClassifyOptions {
    ClassifyOptions::without_scan()
}

fn classify_all(g: &WeightedGraph, s: &SpectralDecomposition) -> Result<Vec<Verdict>, crate::error::SedentaryError> {
    Classifier::new(g, s, options())?.classify_all()
}

/// `kind × count` summary of a verdict list.
fn kinds(verdicts: &[Verdict]) -> String {
    let mut m: BTreeMap<&str, usize> = BTreeMap::new();
    for v in verdicts {
        *m.entry(v.kind().as_str()).or_default() += 1;
    }
    m.iter().map(|(k, c)| format!("{k}×{c}")).collect::<Vec<_>>().join(", ")
}

fn all_not_sedentary(verdicts: &[Verdict]) -> (bool, String) {
    match verdicts.iter().find(|v| !v.is_not_sedentary()) {
        Some(v) => (false, format!("vertex {} is {} via {}", v.vertex, v.status_str(), v.kind())),
        None => (true, format!("{} vertices not sedentary [{}]", verdicts.len(), kinds(verdicts))),
    }
}

/// Compares distinct eigenvalues (descending) and multiplicities.
fn spectrum_matches(s: &SpectralDecomposition, want: &[(f64, usize)]) -> (bool, String) {
    let got: Vec<(f64, usize)> = s.eigenvalues().iter().copied().zip(s.multiplicities().iter().copied()).collect();
    let ok = got.len() == want.len()
        && got.iter().zip(want).all(|(a, b)| (a.0 - b.0).abs() <= SPECTRUM_TOL && a.1 == b.1);
    let show = |v: &[(f64, usize)]| v.iter().map(|(l, m)| format!("{l:.9}^{m}")).collect::<Vec<_>>().join(" ");
    (ok, format!("got {}", show(&got)))
}

fn complete_graphs(c: &mut Checks) {
    for n in 3..=10 {
        c.run(format!("K_{n} period scan"), || {
            let s = eigendecompose(&families::complete(n)?)?;
            let r = numeric_scan(&s, 0, &ScanOptions::default())?;
            let (want, at) = (1.0 - 2.0 / n as f64, PI / n as f64);
            let ok = r.period.is_some() && (r.global_min - want).abs() <= SCAN_TOL && (r.argmin - at).abs() <= ARGMIN_TOL;
            Ok((ok, format!("min {:.9} at t = {:.6}; expected {want:.9} at {at:.6}", r.global_min, r.argmin)))
        });
    }
}

/// Largest oracle-vs-projector gap over every vertex and 100 times in `[0, 10]`.
fn oracle_gap(
    s: &SpectralDecomposition,
    oracle: impl Fn(usize, f64) -> Result<num_complex::Complex64, crate::error::SpectralError>,
) -> Result<f64, crate::error::SpectralError> {
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let t = 10.0 * k as f64 / 99.0;
        for u in 0..s.n() {
            worst = worst.max((oracle(u, t)? - s.walk_diagonal(u, t)?).norm());
        }
    }
    Ok(worst)
}

fn paths(c: &mut Checks) {
    for n in 3..=12 {
        c.run(format!("P_{n} not sedentary"), || {
            let g = families::path(n)?;
            let s = eigendecompose(&g)?;
            Ok(all_not_sedentary(&classify_all(&g, &s)?))
        });
    }
    for n in [9, 11, 13] {
        c.run(format!("P_{n} sign at pi/sqrt(2)"), || {
            let mut worst = f64::NEG_INFINITY;
            for u in (1..=n).step_by(2) {
                worst = worst.max(path_diagonal_oracle(n, u, PI / SQRT_2)?.re);
            }
            Ok((worst <= EXACT_TOL, format!("max real part over odd u: {worst:.3e}")))
        });
    }
    for n in 3..=12 {
        c.run(format!("P_{n} oracle agreement"), || {
            let s = eigendecompose(&families::path(n)?)?;
            let gap = oracle_gap(&s, |u, t| path_diagonal_oracle(n, u + 1, t))?;
            Ok((gap <= EXACT_TOL, format!("max gap {gap:.3e}")))
        });
    }
}

fn even_cycles(c: &mut Checks) {
    for n in [4, 8, 12, 16] {
        c.run(format!("C_{n} sign at pi/2"), || {
            let re = cycle_diagonal_oracle(n, PI / 2.0)?.re;
            Ok((re <= EXACT_TOL, format!("real part {re:.3e}")))
        });
    }
    for n in 3..=12 {
        c.run(format!("C_{n} oracle agreement"), || {
            let s = eigendecompose(&families::cycle(n)?)?;
            let gap = oracle_gap(&s, |_, t| cycle_diagonal_oracle(n, t))?;
            Ok((gap <= EXACT_TOL, format!("max gap {gap:.3e}")))
        });
    }
    for n in [6, 10] {
        c.run(format!("C_{n} via the double of C_{}", n / 2), || {
            let base = families::cycle(n / 2)?;
            let s = eigendecompose(&base)?;
            let double = base.bipartite_double();
            let shape = double.n() == n && double.is_connected() && (0..n).all(|v| double.degree(v) == 2);
            let c = Classifier::new(&base, &s, options())?;
            let mut ok = shape && !s.is_singular();
            for u in 0..base.n() {
                let (a, b) = double_classify(&base, &s, u, &c.classify(u)?)?;
                ok &= a.is_not_sedentary() && b.is_not_sedentary();
            }
            let direct = classify_all(&double, &eigendecompose(&double)?)?;
            let (direct_ok, detail) = all_not_sedentary(&direct);
            Ok((ok && direct_ok, format!("double is C_{n}: {shape}; transfer and direct classification: {detail}")))
        });
    }
}

fn subdivided_stars(c: &mut Checks) {
    for m in 2..=8 {
        c.run(format!("G({m})"), || {
            let g = FamilySpec::SubdividedStar { m }.build()?;
            let s = eigendecompose(&g)?;
            let r = ((m + 1) as f64).sqrt();
            let (spec_ok, spec) = spectrum_matches(&s, &[(r, 1), (1.0, m - 1), (0.0, 1), (-1.0, m - 1), (-r, 1)]);
            let (status_ok, status) = all_not_sedentary(&classify_all(&g, &s)?);
            Ok((spec_ok && status_ok, format!("{spec}; {status}")))
        });
    }
    c.run("G(3) leaf sign at pi", || {
        let s = eigendecompose(&FamilySpec::SubdividedStar { m: 3 }.build()?)?;
        let re = s.walk_diagonal(4, PI)?.re;
        Ok((re < 0.0, format!("Re U(pi) at leaf = {re:.9}")))
    });
}

fn weighted_odd_path(c: &mut Checks) {
    c.run("n = 5, alpha = 2", || {
        let g = FamilySpec::WeightedEndPath { n: 5, alpha: 2.0 }.build()?;
        let s = eigendecompose(&g)?;
        let e0 = s.zero_index().map_or(0.0, |z| s.diagonal(z, 0));
        let v = Classifier::new(&g, &s, options())?.classify(0)?;
        let lb = v.lower_bound().unwrap_or(f64::NAN);
        let r = numeric_scan(&s, 0, &ScanOptions::fixed_horizon(100.0))?;
        let ok = (e0 - 2.0 / 3.0).abs() <= EXACT_TOL
            && (lb - 1.0 / 3.0).abs() <= EXACT_TOL
            && r.global_min >= 1.0 / 3.0 - SCAN_TOL;
        Ok((ok, format!("E0 = {e0:.12}; {} bound {lb:.12} via {}; scan min {:.9}", v.status_str(), v.kind(), r.global_min)))
    });
}

fn weighted_c4k(c: &mut Checks) {
    c.run("k = 2, alpha = 3", || {
        let g = FamilySpec::WeightedC4k { k: 2, alpha: 3.0 }.build()?;
        let s = eigendecompose(&g)?;
        let e0 = s.zero_index().map_or(0.0, |z| s.diagonal(z, 1));
        let v = Classifier::new(&g, &s, options())?.classify(1)?;
        let r = numeric_scan(&s, 1, &ScanOptions::default())?;
        let ok = e0 >= 0.75 - EXACT_TOL && r.global_min >= 0.5 - SCAN_TOL && v.is_sedentary();
        Ok((ok, format!("E0 = {e0:.12}; scan min {:.9} over {:.3}; {} via {}", r.global_min, r.horizon, v.status_str(), v.kind())))
    });
}

fn cocktail_parties(c: &mut Checks) {
    for m in 3..=8 {
        c.run(format!("CP({m})"), || {
            let g = FamilySpec::CocktailParty { m }.build()?;
            let s = eigendecompose(&g)?;
            let cl = Classifier::new(&g, &s, options())?;
            let mut ok = true;
            let mut first = None;
            for u in 0..g.n() {
                let v = cl.classify(u)?;
                let status = if m % 2 == 1 { v.is_sedentary() } else { v.is_not_sedentary() };
                let (a, b) = double_classify(&g, &s, u, &v)?;
                ok &= status
                    && v.kind() == CertificateKind::HalfCaseParity
                    && a.status_str() == v.status_str()
                    && b.status_str() == v.status_str();
                first.get_or_insert_with(|| format!("{} via {}; double copies {} / {}", v.status_str(), v.kind(), a.status_str(), b.status_str()));
            }
            Ok((ok, format!("vertex 0: {}", first.unwrap_or_default())))
        });
    }
}

fn products(c: &mut Checks) {
    c.run("H(2,3)", || {
        let g = families::hamming(2, 3)?;
        let s = eigendecompose(&g)?;
        let vs = classify_all(&g, &s)?;
        let bound_ok = vs.iter().all(|v| v.lower_bound().is_some_and(|b| (b - 1.0 / 9.0).abs() <= EXACT_TOL));
        let mut worst: f64 = 0.0;
        for u in 0..g.n() {
            worst = worst.max((s.walk_diagonal(u, PI / 3.0)?.norm() - 1.0 / 9.0).abs());
        }
        Ok((bound_ok && worst <= EXACT_TOL, format!("bounds [{}]; max ||U(pi/3)| - 1/9| = {worst:.3e}", kinds(&vs))))
    });
    c.run("K_3 x K_3 transfer", || {
        let k3 = families::complete(3)?;
        let vs = classify_all(&k3, &eigendecompose(&k3)?)?;
        let mut ok = true;
        for x in &vs {
            for y in &vs {
                let v = cartesian_classify(x, y, 3);
                ok &= v.vertex == x.vertex * 3 + y.vertex && v.lower_bound().is_some_and(|b| (b - 1.0 / 9.0).abs() <= EXACT_TOL);
            }
        }
        Ok((ok, "factor bounds 1/3 combine to 1/9".to_string()))
    });
    c.run("P_2 x P_3", || {
        let (p2, p3) = (families::path(2)?, families::path(3)?);
        let g = p2.cartesian_product(&p3);
        let direct = classify_all(&g, &eigendecompose(&g)?)?;
        let (a, b) = (classify_all(&p2, &eigendecompose(&p2)?)?, classify_all(&p3, &eigendecompose(&p3)?)?);
        let transfer_ok = a.iter().all(|x| b.iter().all(|y| cartesian_classify(x, y, 3).is_not_sedentary()));
        let (ok, detail) = all_not_sedentary(&direct);
        Ok((ok && transfer_ok, format!("{detail}; transfer agrees: {transfer_ok}")))
    });
    c.run("magnitude product law", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0803);
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let g = corpus::random_connected(&mut rng, 2..=4, 0.5, true);
            let h = corpus::random_connected(&mut rng, 2..=4, 0.5, true);
            let (sg, sh, sp) = (eigendecompose(&g)?, eigendecompose(&h)?, eigendecompose(&g.cartesian_product(&h))?);
            for _ in 0..20 {
                let t = rng.gen_range(0.0..=10.0);
                for x in 0..g.n() {
                    for y in 0..h.n() {
                        let lhs = sp.walk_diagonal(x * h.n() + y, t)?.norm();
                        let rhs = sg.walk_diagonal(x, t)?.norm() * sh.walk_diagonal(y, t)?.norm();
                        worst = worst.max((lhs - rhs).abs());
                    }
                }
            }
        }
        Ok((worst <= EXACT_TOL, format!("20 factor pairs x 20 times; max gap {worst:.3e}")))
    });
}

fn shrikhande_doob(c: &mut Checks) {
    c.run("Shrikhande scan on [0, pi]", || {
        let s = eigendecompose(&families::shrikhande()?)?;
        let r = numeric_scan(&s, 0, &ScanOptions::fixed_horizon(PI))?;
        let ok = (r.global_min - 0.25).abs() <= SCAN_TOL && (r.argmin - PI / 4.0).abs() <= ARGMIN_TOL;
        Ok((ok, format!("min {:.9} at t = {:.6}", r.global_min, r.argmin)))
    });
    c.run("D(1,1)", || {
        let g = FamilySpec::Doob { l: 1, d: 1 }.build()?;
        let s = eigendecompose(&g)?;
        let at = s.walk_diagonal(0, PI / 4.0)?.norm();
        let v = Classifier::new(&g, &s, options())?.classify(0)?;
        let lb = v.lower_bound().unwrap_or(f64::NAN);
        let ok = (at - 0.125).abs() <= EXACT_TOL && (lb - 0.125).abs() <= SCAN_TOL;
        Ok((ok, format!("|U(pi/4)| = {at:.12}; {} bound {lb:.9} via {}", v.status_str(), v.kind())))
    });
}

fn pendant_path(c: &mut Checks) {
    c.run("G_5 pendant over horizon 2000", || {
        let g = FamilySpec::PendantPath { n: 5 }.build()?;
        let s = eigendecompose(&g)?;
        let r = numeric_scan(&s, 5, &ScanOptions::fixed_horizon(2000.0))?;
        let ok = r.global_min >= 0.2 - SCAN_TOL && r.global_min <= PENDANT_PATH_UPPER;
        Ok((ok, format!("min {:.9} at t = {:.4}", r.global_min, r.argmin)))
    });
}

fn matchings(c: &mut Checks) {
    c.run("100 weighted trees with perfect matchings", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1101);
        let mut tally = Vec::new();
        for i in 0..100 {
            let g = corpus::random_tree_with_matching(&mut rng, 1..=8);
            let s = eigendecompose(&g)?;
            if s.zero_index().is_some() {
                return Ok((false, format!("tree {i}: zero in spectrum")));
            }
            let vs = classify_all(&g, &s)?;
            let (ok, detail) = all_not_sedentary(&vs);
            if !ok {
                return Ok((false, format!("tree {i}: {detail}")));
            }
            tally.extend(vs);
        }
        Ok((true, format!("{} vertices not sedentary [{}]", tally.len(), kinds(&tally))))
    });
    c.run("100 weighted unicyclic graphs on a triangle", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1102);
        let mut tally = Vec::new();
        for i in 0..100 {
            let x = corpus::random_unicyclic_triangle(&mut rng, 3..=10);
            let sx = x.subdivision();
            let s = eigendecompose(&sx)?;
            if !subdivision_nonsingular(&x)? || s.is_singular() {
                return Ok((false, format!("graph {i}: S(X) singular")));
            }
            let vs = classify_all(&sx, &s)?;
            let (ok, detail) = all_not_sedentary(&vs);
            if !ok {
                return Ok((false, format!("graph {i}: {detail}")));
            }
            tally.extend(vs);
        }
        Ok((true, format!("{} vertices of S(X) not sedentary [{}]", tally.len(), kinds(&tally))))
    });
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn matmul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

fn projector_algebra(s: &SpectralDecomposition, a: &[f64]) -> Option<String> {
    let n = s.n();
    let ps = s.projectors();
    let mut identity = vec![0.0; n * n];
    (0..n).for_each(|i| identity[i * n + i] = 1.0);
    let mut sum = vec![0.0; n * n];
    for (i, p) in ps.iter().enumerate() {
        if max_abs_diff(&matmul(p, p, n), p) > EXACT_TOL {
            return Some(format!("projector {i} not idempotent"));
        }
        for (j, q) in ps.iter().enumerate().skip(i + 1) {
            if matmul(p, q, n).iter().any(|x| x.abs() > EXACT_TOL) {
                return Some(format!("projectors {i}, {j} not orthogonal"));
            }
        }
        sum.iter_mut().zip(p).for_each(|(x, y)| *x += y);
    }
    if max_abs_diff(&sum, &identity) > EXACT_TOL {
        return Some("projectors do not sum to I".into());
    }
    if max_abs_diff(&s.reconstruct(), a) > SPECTRUM_TOL {
        return Some("sum of lambda P differs from A".into());
    }
    None
}

/// Builtin family graphs with at most 16 vertices plus small random unweighted graphs.
fn classification_corpus() -> Vec<(String, WeightedGraph)> {
    let mut out: Vec<(String, WeightedGraph)> = families::builtin_corpus()
        .into_iter()
        .filter_map(|spec| spec.build().ok().map(|g| (spec.to_string(), g)))
        .filter(|(_, g)| g.n() <= 16)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1203);
    for i in 0..40 {
        out.push((format!("random unweighted #{i}"), corpus::random_connected(&mut rng, 3..=7, 0.4, false)));
    }
    out
}

fn properties(c: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1201);
    let graphs: Vec<WeightedGraph> =
        (0..200).map(|_| corpus::random_graph(&mut rng, 1..=8, 0.5, true)).collect();

    c.run("projector algebra, 200 weighted graphs", || {
        for (i, g) in graphs.iter().enumerate() {
            if let Some(e) = projector_algebra(&eigendecompose(g)?, &g.adjacency_matrix()) {
                return Ok((false, format!("graph {i}: {e}")));
            }
        }
        Ok((true, "idempotent, orthogonal, complete, reconstructs A".into()))
    });
    c.run("unitarity, 10 times per graph", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1202);
        let mut worst: f64 = 0.0;
        for g in &graphs {
            let s = eigendecompose(g)?;
            for _ in 0..10 {
                let t = rng.gen_range(0.0..=10.0);
                for u in 0..g.n() {
                    let mut norm = 0.0;
                    for v in 0..g.n() {
                        norm += s.walk_entry(u, v, t)?.norm_sqr();
                    }
                    worst = worst.max((norm - 1.0).abs());
                }
            }
        }
        Ok((worst <= EXACT_TOL, format!("max |row norm - 1| = {worst:.3e}")))
    });

    let mut rng = ChaCha8Rng::seed_from_u64(0x1204);
    let bipartite: Vec<WeightedGraph> =
        (0..100).map(|_| corpus::random_bipartite(&mut rng, 2..=10, 0.4, true)).collect();
    c.run("bipartite spectral symmetry", || {
        for (i, g) in bipartite.iter().enumerate() {
            let s = eigendecompose(g)?;
            for k in 0..s.eigenvalues().len() {
                let Some(j) = s.negation_of(k) else {
                    return Ok((false, format!("graph {i}: no partner for {}", s.eigenvalues()[k])));
                };
                if (0..g.n()).any(|u| (s.diagonal(k, u) - s.diagonal(j, u)).abs() > EXACT_TOL) {
                    return Ok((false, format!("graph {i}: diagonals differ at {}", s.eigenvalues()[k])));
                }
            }
        }
        Ok((true, "100 graphs symmetric".into()))
    });
    c.run("half bound on nonzero support", || {
        let mut worst = f64::NEG_INFINITY;
        for g in &bipartite {
            let s = eigendecompose(g)?;
            for u in 0..g.n() {
                let p = s.support(u)?;
                let e0 = s.zero_index().and_then(|z| p.diagonal_of(z)).unwrap_or(0.0);
                for (&i, &d) in p.support.iter().zip(&p.diagonals) {
                    if Some(i) != s.zero_index() {
                        worst = worst.max(d - (1.0 - e0) / 2.0);
                    }
                }
            }
        }
        Ok((worst <= EXACT_TOL, format!("max of (E)_uu - (1 - E0)/2 = {worst:.3e}")))
    });

    let corpus = classification_corpus();
    c.run("cospectral vertices share status", || {
        let mut pairs = 0;
        for (name, g) in &corpus {
            let s = eigendecompose(g)?;
            let vs = classify_all(g, &s)?;
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if s.cospectral(u, v)? {
                        pairs += 1;
                        if vs[u].status_str() != vs[v].status_str() {
                            let d = format!("{name}: {u} is {}, {v} is {}", vs[u].status_str(), vs[v].status_str());
                            return Ok((false, d));
                        }
                    }
                }
            }
        }
        Ok((true, format!("{pairs} cospectral pairs over {} graphs", corpus.len())))
    });
    c.run("scanner respects certified bounds and witnesses", || {
        let (mut bounds, mut witnesses) = (0, 0);
        for (name, g) in &corpus {
            let s = eigendecompose(g)?;
            for v in classify_all(g, &s)? {
                if let Some(lb) = v.lower_bound() {
                    bounds += 1;
                    let r = numeric_scan(&s, v.vertex, &ScanOptions::default())?;
                    if r.global_min < lb - SCAN_TOL {
                        return Ok((false, format!("{name} vertex {}: scan {} below bound {lb}", v.vertex, r.global_min)));
                    }
                }
                if let Some(t) = v.witness_time() {
                    witnesses += 1;
                    let z = s.walk_diagonal(v.vertex, t)?.norm();
                    if z > EXACT_TOL {
                        return Ok((false, format!("{name} vertex {}: |U({t})| = {z:.3e}", v.vertex)));
                    }
                }
            }
        }
        Ok((true, format!("{bounds} bounds and {witnesses} witnesses confirmed")))
    });
    c.run("no contradictory firings on the family corpus", || {
        for spec in families::builtin_corpus() {
            let g = spec.build()?;
            let s = eigendecompose(&g)?;
            let cl = Classifier::new(&g, &s, options())?;
            for u in 0..g.n() {
                let f = cl.all_firings(u)?;
                if f.iter().any(Verdict::is_sedentary) && f.iter().any(Verdict::is_not_sedentary) {
                    return Ok((false, format!("{spec} vertex {u}: both statuses fire")));
                }
            }
        }
        Ok((true, "consistent".into()))
    });
    c.run("periodic scans agree over one and three periods", || {
        let mut checked = 0;
        for (name, g) in &corpus {
            let s = eigendecompose(g)?;
            let Some(rho) = periodicity(&s, 0)?.period else { continue };
            let one = numeric_scan(&s, 0, &ScanOptions::fixed_horizon(rho))?;
            let three = numeric_scan(&s, 0, &ScanOptions::fixed_horizon(3.0 * rho))?;
            checked += 1;
            if (one.global_min - three.global_min).abs() > EXACT_TOL {
                return Ok((false, format!("{name}: {} vs {}", one.global_min, three.global_min)));
            }
        }
        Ok((true, format!("{checked} periodic vertices")))
    });

    c.run("double spectrum is the signed spectrum", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1205);
        for i in 0..50 {
            let g = corpus::random_connected(&mut rng, 2..=6, 0.5, true);
            let s = eigendecompose(&g)?;
            let mut want: Vec<(f64, usize)> = Vec::new();
            for (&l, &m) in s.eigenvalues().iter().zip(s.multiplicities()) {
                want.push((l, m));
                want.push((-l, m));
            }
            want.sort_by(|a, b| b.0.total_cmp(&a.0));
            let mut merged: Vec<(f64, usize)> = Vec::new();
            for (l, m) in want {
                match merged.last_mut() {
                    Some(last) if (last.0 - l).abs() <= SPECTRUM_TOL => last.1 += m,
                    _ => merged.push((l, m)),
                }
            }
            let (ok, detail) = spectrum_matches(&eigendecompose(&g.bipartite_double())?, &merged);
            if !ok {
                return Ok((false, format!("graph {i}: {detail}")));
            }
        }
        Ok((true, "50 doubles".into()))
    });
    c.run("capped matching count matches enumeration", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1206);
        for i in 0..200 {
            let g = corpus::random_graph(&mut rng, 1..=8, 0.4, false);
            let brute = count_perfect_matchings_brute(g.n(), g.edges()).min(2) as u8;
            if g.count_perfect_matchings_capped().count_capped != brute {
                return Ok((false, format!("graph {i}: enumeration gives {brute}")));
            }
        }
        Ok((true, "200 graphs".into()))
    });
    c.run("recognition round trips", || {
        for k in -100..=100 {
            if recognize(k as f64, DEFAULT_RECOGNIZE_TOL) != (EigenvalueClass::Integer { k }) {
                return Ok((false, format!("integer {k}")));
            }
        }
        for p in 1..=8 {
            for q in 1..=8 {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                for delta in [2, 3, 5, 6, 7] {
                    let want = EigenvalueClass::RatioSqrt { p, q, delta };
                    if recognize(want.value(), DEFAULT_RECOGNIZE_TOL) != want {
                        return Ok((false, format!("{want}")));
                    }
                }
            }
        }
        Ok((true, "integers and ratio-sqrt values recognized".into()))
    });
}

fn five_eigenvalue(c: &mut Checks) {
    let spec = FamilySpec::FiveEigenvalue { components: vec![(1, 4), (2, 2)] };
    let built = || -> Result<_, Box<dyn std::error::Error + Send + Sync>> {
        let g = spec.build()?;
        let s = eigendecompose(&g)?;
        Ok((g, s))
    };
    c.run("spectrum", || {
        let (_, s) = built()?;
        let r = 7f64.sqrt();
        let (ok, detail) = spectrum_matches(&s, &[(r, 1), (2.0, 1), (0.0, 6), (-2.0, 1), (-r, 1)]);
        let lambda_ok = (s.eigenvalues()[0] - r).abs() <= EXACT_TOL;
        Ok((ok && lambda_ok, detail))
    });
    let (g, s) = match built() {
        Ok(x) => x,
        Err(e) => return c.push("build", false, format!("error: {e}")),
    };
    let verdicts = match classify_all(&g, &s) {
        Ok(v) => v,
        Err(e) => return c.push("classify", false, format!("error: {e}")),
    };
    let expected = match spec.expected() {
        Ok(x) => x,
        Err(e) => return c.push("expectations", false, format!("error: {e}")),
    };
    for x in expected.vertex_expectations.iter().filter(|x| x.applies()) {
        let errors: Vec<String> = x.vertices.iter().filter_map(|&u| x.check(&verdicts[u]).err()).collect();
        let detail = if errors.is_empty() {
            let got: Vec<Verdict> = x.vertices.iter().map(|&u| verdicts[u].clone()).collect();
            format!("{:?} [{}]", x.status, kinds(&got))
        } else {
            errors.join("; ")
        };
        c.push(format!("vertices {:?}: {}", x.vertices, x.reason), errors.is_empty(), detail);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_partition_the_criteria() {
        let mut ids: Vec<usize> = Suite::NAMES[1..]
            .iter()
            .flat_map(|s| s.parse::<Suite>().unwrap().criteria())
            .collect();
        ids.sort();
        assert_eq!(ids, (1..=13).filter(|&i| i != 12).collect::<Vec<_>>());
        assert_eq!(Suite::All.criteria().len(), 13);
        assert!("nope".parse::<Suite>().is_err());
    }
}
