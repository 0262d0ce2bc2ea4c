use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qwsed_core::error::{FamilyError, GraphError, SedentaryError, SpectralError};
use qwsed_core::families::FamilySpec;
use qwsed_core::reproduce::{run_suite, Suite};
use qwsed_core::sedentary::{numeric_scan, Classifier, ClassifyOptions, ScanOptions};
use qwsed_core::spectral::{eigendecompose_with_tol, recognize, SpectralDecomposition, DEFAULT_RECOGNIZE_TOL};
use qwsed_core::{Graph, GraphJson};

const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Sedentary-vertex analysis for continuous-time quantum walks.
#[derive(Parser)]
#[command(name = "qwsed", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distinct eigenvalues, multiplicities and recognized closed forms.
    Spectrum {
        graph: PathBuf,
        /// Relative eigenvalue clustering threshold.
        #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL)]
        tol: f64,
        /// Tolerance for recognizing integers and rational multiples of square roots.
        #[arg(long, default_value_t = DEFAULT_RECOGNIZE_TOL)]
        recognize_tol: f64,
    },
    /// Verdict JSON for one vertex or every vertex.
    Classify {
        graph: PathBuf,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long, default_value_t = qwsed_core::sedentary::DEFAULT_HORIZON)]
        horizon: f64,
        /// Emit full certificates with their evidence.
        #[arg(long)]
        evidence: bool,
        #[command(flatten)]
        tols: Tolerances,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV trace `t,re,im,abs` of `U(t)_{u,u}`.
    Scan {
        graph: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value_t = qwsed_core::sedentary::DEFAULT_HORIZON)]
        horizon: f64,
        /// Grid spacing; defaults to min(0.01, pi/(8 lambda_max)).
        #[arg(long)]
        step: Option<f64>,
        /// Shorten the horizon to the minimum period when the vertex is periodic.
        #[arg(long)]
        period: bool,
        #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL)]
        cluster_tol: f64,
        #[arg(long)]
        csv: PathBuf,
    },
    /// Writes a family graph as JSON.
    Build {
        family: String,
        /// Family parameter as `key=value`; repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the acceptance suite and prints a pass/fail table.
    Reproduce {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Print every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Args)]
struct Tolerances {
    #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL)]
    cluster_tol: f64,
    #[arg(long)]
    support_tol: Option<f64>,
    #[arg(long)]
    half_tol: Option<f64>,
    #[arg(long)]
    recognize_tol: Option<f64>,
    #[arg(long)]
    relation_bound: Option<i64>,
    #[arg(long)]
    relation_tol: Option<f64>,
    #[arg(long)]
    kronecker_bound: Option<i64>,
}

impl Tolerances {
    fn options(&self, horizon: f64) -> ClassifyOptions {
        let mut o = ClassifyOptions::default();
        o.scan.horizon = horizon;
        o.support_tol = self.support_tol.unwrap_or(o.support_tol);
        o.half_tol = self.half_tol.unwrap_or(o.half_tol);
        o.recognize_tol = self.recognize_tol.unwrap_or(o.recognize_tol);
        o.relation_bound = self.relation_bound.unwrap_or(o.relation_bound);
        o.relation_tol = self.relation_tol.unwrap_or(o.relation_tol);
        o.kronecker_bound = self.kronecker_bound.unwrap_or(o.kronecker_bound);
        o
    }
}

/// Exit 2: bad input or schema; exit 3: the analysis itself failed.
enum Failure {
    Schema(String),
    Analysis(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Schema(_) => 2,
            Failure::Analysis(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Schema(m) | Failure::Analysis(m) => m,
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Schema(format!("graph: {e}"))
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure::Schema(format!("family: {e}"))
    }
}

impl From<SpectralError> for Failure {
    fn from(e: SpectralError) -> Self {
        Failure::Analysis(format!("spectral: {e}"))
    }
}

impl From<SedentaryError> for Failure {
    fn from(e: SedentaryError) -> Self {
        Failure::Analysis(format!("classify: {e}"))
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Schema(format!("{}: {e}", path.display()))
}

fn positive(name: &str, x: f64) -> Result<(), Failure> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Failure::Schema(format!("--{name} must be positive, got {x}")))
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Graph::from_json(&text).map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))
}

fn decompose(g: &Graph, tol: f64) -> Result<SpectralDecomposition, Failure> {
    positive("cluster-tol", tol)?;
    Ok(eigendecompose_with_tol(g, tol)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| io_error(p, e)),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn check_vertex(g: &Graph, u: usize) -> Result<(), Failure> {
    if u < g.n() {
        Ok(())
    } else {
        Err(Failure::Analysis(format!("--vertex {u} out of range for {} vertices", g.n())))
    }
}

fn spectrum(path: &Path, tol: f64, recognize_tol: f64) -> Result<(), Failure> {
    let g = load(path)?;
    let s = decompose(&g, tol)?;
    let rows: Vec<_> = s
        .eigenvalues()
        .iter()
        .zip(s.multiplicities())
        .map(|(&l, &m)| {
            let form = recognize(l, recognize_tol);
            json!({ "value": l, "multiplicity": m, "form": form.is_recognized().then(|| form.to_string()) })
        })
        .collect();
    let doc = json!({ "n": g.n(), "cluster_tol": s.cluster_tol(), "eigenvalues": rows });
    emit(None, &serde_json::to_string_pretty(&doc).expect("spectrum serializes"))
}

fn classify(
    path: &Path,
    vertex: Option<usize>,
    horizon: f64,
    evidence: bool,
    tols: &Tolerances,
    out: Option<&Path>,
) -> Result<(), Failure> {
    positive("horizon", horizon)?;
    let g = load(path)?;
    let s = decompose(&g, tols.cluster_tol)?;
    let c = Classifier::new(&g, &s, tols.options(horizon))?;
    let verdicts = match vertex {
        Some(u) => {
            check_vertex(&g, u)?;
            vec![c.classify(u)?]
        }
        None => c.classify_all()?,
    };
    let text = if evidence {
        serde_json::to_string_pretty(&verdicts)
    } else {
        serde_json::to_string_pretty(&verdicts.iter().map(|v| v.report()).collect::<Vec<_>>())
    };
    emit(out, &text.expect("verdicts serialize"))
}

#[allow(clippy::too_many_arguments)]
fn scan(
    path: &Path,
    u: usize,
    horizon: f64,
    step: Option<f64>,
    period: bool,
    cluster_tol: f64,
    csv: &Path,
) -> Result<(), Failure> {
    positive("horizon", horizon)?;
    if let Some(h) = step {
        positive("step", h)?;
    }
    let g = load(path)?;
    check_vertex(&g, u)?;
    let s = decompose(&g, cluster_tol)?;
    let opts = ScanOptions { horizon, step, use_period: period, ..ScanOptions::default() };
    let r = numeric_scan(&s, u, &opts)?;
    let mut times: Vec<f64> = r.times.iter().copied().chain(r.refined.iter().map(|&(t, _)| t)).collect();
    times.sort_by(f64::total_cmp);
    times.dedup();
    let mut w = std::io::BufWriter::new(fs::File::create(csv).map_err(|e| io_error(csv, e))?);
    let mut write = || -> std::io::Result<()> {
        writeln!(w, "t,re,im,abs")?;
        for &t in &times {
            let z = s.walk_diagonal(u, t).expect("vertex checked");
            writeln!(w, "{t},{},{},{}", z.re, z.im, z.norm())?;
        }
        w.flush()
    };
    write().map_err(|e| io_error(csv, e))
}

fn build(family: &str, params: &[String], out: Option<&Path>) -> Result<(), Failure> {
    let pairs = params
        .iter()
        .map(|p| match p.split_once('=') {
            Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
            None => Err(Failure::Schema(format!("--param `{p}` is not key=value"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let g = FamilySpec::parse(family, &pairs)?.build()?;
    let doc = GraphJson::from(&g);
    emit(out, &serde_json::to_string(&doc).expect("graph serializes"))
}

fn reproduce(suite: Suite, verbose: bool) -> bool {
    let reports = run_suite(suite);
    println!("suite: {suite}");
    for r in &reports {
        println!("{}", r.line());
        for c in r.checks.iter().filter(|c| verbose || !c.passed) {
            println!("    [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} passed, {failed} failed", reports.len() - failed);
    failed == 0
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum { graph, tol, recognize_tol } => spectrum(graph, *tol, *recognize_tol).map(|_| true),
        Command::Classify { graph, vertex, horizon, evidence, tols, out } => {
            classify(graph, *vertex, *horizon, *evidence, tols, out.as_deref()).map(|_| true)
        }
        Command::Scan { graph, vertex, horizon, step, period, cluster_tol, csv } => {
            scan(graph, *vertex, *horizon, *step, *period, *cluster_tol, csv).map(|_| true)
        }
        Command::Build { family, params, out } => build(family, params, out.as_deref()).map(|_| true),
        Command::Reproduce { suite, verbose } => Ok(reproduce(*suite, *verbose)),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("qwsed: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
