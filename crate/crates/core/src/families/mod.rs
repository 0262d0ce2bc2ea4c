//! Named graph families with their expected spectra and verdicts.
//!
//! Vertex numbering is fixed per family and documented on each variant.

mod expected;

use std::fmt;

use crate::error::FamilyError;
use crate::graph::WeightedGraph;

pub use expected::{ExpectedBound, ExpectedProfile, ExpectedStatus, Guard, VertexExpectation};

/// Kind of a threshold-graph cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    /// Independent set, added by disjoint union.
    Empty,
    /// Clique, added by join.
    Clique,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    /// `P_n` on `0..n`.
    Path { n: usize },
    /// Odd `P_n` with edge `{0, 1}` of weight `1/α`.
    WeightedEndPath { n: usize, alpha: f64 },
    /// `C_n` on `0..n`.
    Cycle { n: usize },
    /// `C_{4k}` with edges `{0, 1}` and `{1, 2}` of weight `1/α`; vertex `1` is the target.
    WeightedC4k { k: usize, alpha: f64 },
    /// `K_{1,m}` with centre `0`.
    Star { m: usize },
    /// Star with centre `0` and leaf `i + 1` on an edge of weight `weights[i]`.
    WeightedStar { weights: Vec<f64> },
    /// `G(m)`: centre `0`, middle vertices `1..=m`, leaf `m + i` hanging off `i`.
    SubdividedStar { m: usize },
    /// `G_n`: odd `P_n` on `0..n` plus pendant `n` attached to vertex `1`.
    PendantPath { n: usize },
    Complete { n: usize },
    /// Parts numbered consecutively in the given order.
    CompleteMultipartite { parts: Vec<usize> },
    /// `K_{2,…,2}` with `m` parts; part `j` is `{2j, 2j + 1}`.
    CocktailParty { m: usize },
    /// Cells numbered in order; a clique cell is joined to everything before it.
    Threshold { cells: Vec<Cell> },
    /// Disjoint `K_{p,q}` components, each numbered `p` side first, plus an apex
    /// (last vertex) joined to every `p` side.
    FiveEigenvalue { components: Vec<(usize, usize)> },
    /// Cayley graph on `Z_4 × Z_4`, `(a, b) ↦ 4a + b`.
    Shrikhande,
    /// `K_q^{□d}` with base-`q` digit indexing.
    Hamming { d: usize, q: usize },
    /// `ℓ` Shrikhande factors then `H(d, 4)`, product-indexed left to right.
    Doob { l: usize, d: usize },
    /// `K_n` minus the edge `{0, 1}`.
    CompleteMinusEdge { n: usize },
}

pub const FAMILY_NAMES: [&str; 17] = [
    "path",
    "weighted_end_path",
    "cycle",
    "weighted_c4k",
    "star",
    "weighted_star",
    "subdivided_star",
    "pendant_path_Gn",
    "complete",
    "complete_multipartite",
    "cocktail_party",
    "threshold",
    "five_eigenvalue",
    "shrikhande",
    "hamming",
    "doob",
    "complete_minus_edge",
];

struct Params<'a> {
    family: &'static str,
    items: &'a [(String, String)],
}

impl Params<'_> {
    fn raw(&self, key: &str) -> Option<&str> {
        self.items.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn err(&self, msg: impl Into<String>) -> FamilyError {
        FamilyError::bad(self.family, msg)
    }

    fn usize(&self, key: &str) -> Result<usize, FamilyError> {
        let v = self.raw(key).ok_or_else(|| self.err(format!("missing parameter `{key}`")))?;
        v.trim().parse().map_err(|_| self.err(format!("`{key}` must be a non-negative integer, got `{v}`")))
    }

    fn f64_or(&self, key: &str, default: f64) -> Result<f64, FamilyError> {
        match self.raw(key) {
            None => Ok(default),
            Some(v) => v.trim().parse().map_err(|_| self.err(format!("`{key}` must be a number, got `{v}`"))),
        }
    }

    fn list<T: std::str::FromStr>(&self, key: &str) -> Result<Vec<T>, FamilyError> {
        let v = self.raw(key).ok_or_else(|| self.err(format!("missing parameter `{key}`")))?;
        v.split(',')
            .map(|x| x.trim().parse().map_err(|_| self.err(format!("bad entry `{x}` in `{key}`"))))
            .collect()
    }

    fn check_known(&self, known: &[&str]) -> Result<(), FamilyError> {
        match self.items.iter().find(|(k, _)| !known.contains(&k.as_str())) {
            Some((k, _)) => Err(self.err(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

fn parse_cell(s: &str) -> Option<Cell> {
    let s = s.trim();
    let kind = match s.chars().next()? {
        'O' | 'o' => CellKind::Empty,
        'K' | 'k' => CellKind::Clique,
        _ => return None,
    };
    Some(Cell { kind, size: s[1..].parse().ok()? })
}

fn parse_component(s: &str) -> Option<(usize, usize)> {
    let (p, q) = s.trim().split_once(['x', 'X'])?;
    Some((p.parse().ok()?, q.parse().ok()?))
}

/// `α = √((n−1)/2) + 1`, strictly past the sedentary threshold.
pub fn default_end_path_alpha(n: usize) -> f64 {
    ((n as f64 - 1.0) / 2.0).sqrt() + 1.0
}

/// `α = √(2k−1) + 1`, strictly past the sedentary threshold.
pub fn default_c4k_alpha(k: usize) -> f64 {
    (2.0 * k as f64 - 1.0).sqrt() + 1.0
}

impl FamilySpec {
    /// Parses a family name with `key=value` parameters. List parameters are
    /// comma separated: `parts=2,3,3`, `weights=1,2`, `cells=O2,K1,O1,K1`,
    /// `components=1x4,2x2`.
    pub fn parse(name: &str, params: &[(String, String)]) -> Result<Self, FamilyError> {
        let family = FAMILY_NAMES
            .iter()
            .copied()
            .find(|f| f.eq_ignore_ascii_case(name))
            .ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))?;
        let p = Params { family, items: params };
        let (spec, known): (FamilySpec, &[&str]) = match family {
            "path" => (FamilySpec::Path { n: p.usize("n")? }, &["n"]),
            "weighted_end_path" => {
                let n = p.usize("n")?;
                (FamilySpec::WeightedEndPath { n, alpha: p.f64_or("alpha", default_end_path_alpha(n))? }, &["n", "alpha"])
            }
            "cycle" => (FamilySpec::Cycle { n: p.usize("n")? }, &["n"]),
            "weighted_c4k" => {
                let k = p.usize("k")?;
                (FamilySpec::WeightedC4k { k, alpha: p.f64_or("alpha", default_c4k_alpha(k))? }, &["k", "alpha"])
            }
            "star" => (FamilySpec::Star { m: p.usize("m")? }, &["m"]),
            "weighted_star" => (FamilySpec::WeightedStar { weights: p.list("weights")? }, &["weights"]),
            "subdivided_star" => (FamilySpec::SubdividedStar { m: p.usize("m")? }, &["m"]),
            "pendant_path_Gn" => (FamilySpec::PendantPath { n: p.usize("n")? }, &["n"]),
            "complete" => (FamilySpec::Complete { n: p.usize("n")? }, &["n"]),
            "complete_multipartite" => (FamilySpec::CompleteMultipartite { parts: p.list("parts")? }, &["parts"]),
            "cocktail_party" => (FamilySpec::CocktailParty { m: p.usize("m")? }, &["m"]),
            "threshold" => {
                let raw = p.raw("cells").ok_or_else(|| p.err("missing parameter `cells`"))?;
                let cells = raw
                    .split(',')
                    .map(|c| parse_cell(c).ok_or_else(|| p.err(format!("bad cell `{c}`, expected O<size> or K<size>"))))
                    .collect::<Result<_, _>>()?;
                (FamilySpec::Threshold { cells }, &["cells"])
            }
            "five_eigenvalue" => {
                let raw = p.raw("components").ok_or_else(|| p.err("missing parameter `components`"))?;
                let components = raw
                    .split(',')
                    .map(|c| parse_component(c).ok_or_else(|| p.err(format!("bad component `{c}`, expected PxQ"))))
                    .collect::<Result<_, _>>()?;
                (FamilySpec::FiveEigenvalue { components }, &["components"])
            }
            "shrikhande" => (FamilySpec::Shrikhande, &[]),
            "hamming" => (FamilySpec::Hamming { d: p.usize("d")?, q: p.usize("q")? }, &["d", "q"]),
            "doob" => (FamilySpec::Doob { l: p.usize("l")?, d: p.usize("d")? }, &["l", "d"]),
            "complete_minus_edge" => (FamilySpec::CompleteMinusEdge { n: p.usize("n")? }, &["n"]),
            _ => unreachable!("family names are exhaustive"),
        };
        p.check_known(known)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::WeightedEndPath { .. } => "weighted_end_path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::WeightedC4k { .. } => "weighted_c4k",
            FamilySpec::Star { .. } => "star",
            FamilySpec::WeightedStar { .. } => "weighted_star",
            FamilySpec::SubdividedStar { .. } => "subdivided_star",
            FamilySpec::PendantPath { .. } => "pendant_path_Gn",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteMultipartite { .. } => "complete_multipartite",
            FamilySpec::CocktailParty { .. } => "cocktail_party",
            FamilySpec::Threshold { .. } => "threshold",
            FamilySpec::FiveEigenvalue { .. } => "five_eigenvalue",
            FamilySpec::Shrikhande => "shrikhande",
            FamilySpec::Hamming { .. } => "hamming",
            FamilySpec::Doob { .. } => "doob",
            FamilySpec::CompleteMinusEdge { .. } => "complete_minus_edge",
        }
    }

    fn bad(&self, msg: impl Into<String>) -> FamilyError {
        FamilyError::bad(self.name(), msg)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let ok = |cond: bool, msg: &str| if cond { Ok(()) } else { Err(self.bad(msg)) };
        match self {
            FamilySpec::Path { n } => ok(*n >= 1, "n must be at least 1"),
            FamilySpec::WeightedEndPath { n, alpha } => {
                ok(*n >= 3 && n % 2 == 1, "n must be odd and at least 3")?;
                ok(alpha.is_finite() && *alpha != 0.0, "alpha must be finite and nonzero")
            }
            FamilySpec::Cycle { n } => ok(*n >= 3, "n must be at least 3"),
            FamilySpec::WeightedC4k { k, alpha } => {
                ok(*k >= 1, "k must be at least 1")?;
                ok(alpha.is_finite() && *alpha != 0.0, "alpha must be finite and nonzero")
            }
            FamilySpec::Star { m } => ok(*m >= 1, "m must be at least 1"),
            FamilySpec::WeightedStar { weights } => {
                ok(!weights.is_empty(), "weights must be nonempty")?;
                ok(weights.iter().all(|w| w.is_finite() && *w != 0.0), "weights must be finite and nonzero")
            }
            FamilySpec::SubdividedStar { m } => ok(*m >= 2, "m must be at least 2"),
            FamilySpec::PendantPath { n } => ok(*n >= 3 && n % 2 == 1, "n must be odd and at least 3"),
            FamilySpec::Complete { n } => ok(*n >= 1, "n must be at least 1"),
            FamilySpec::CompleteMultipartite { parts } => {
                ok(parts.len() >= 2, "at least two parts are required")?;
                ok(parts.iter().all(|&p| p >= 1), "part sizes must be positive")
            }
            FamilySpec::CocktailParty { m } => ok(*m >= 2, "m must be at least 2"),
            FamilySpec::Threshold { cells } => {
                ok(cells.len() >= 2, "at least two cells are required")?;
                ok(cells.iter().all(|c| c.size >= 1), "cell sizes must be positive")?;
                ok(cells[0].size >= 2, "the first cell must have size at least 2")?;
                ok(cells.windows(2).all(|w| w[0].kind != w[1].kind), "cell kinds must alternate")?;
                ok(cells.last().is_some_and(|c| c.kind == CellKind::Clique), "the last cell must be a clique")
            }
            FamilySpec::FiveEigenvalue { components } => {
                ok(components.len() >= 2, "at least two components are required")?;
                ok(components.iter().all(|&(p, q)| p >= 1 && q >= 1), "part sizes must be positive")?;
                let e = components[0].0 * components[0].1;
                ok(components.iter().all(|&(p, q)| p * q == e), "components must have equal edge counts")?;
                let mut shapes: Vec<(usize, usize)> = components.iter().map(|&(p, q)| (p.min(q), p.max(q))).collect();
                shapes.sort_unstable();
                ok(shapes.windows(2).all(|w| w[0] != w[1]), "components must be mutually non-isomorphic")
            }
            FamilySpec::Shrikhande => Ok(()),
            FamilySpec::Hamming { d, q } => ok(*d >= 1 && *q >= 2, "need d >= 1 and q >= 2"),
            FamilySpec::Doob { l, d } => {
                ok(*l >= 1, "l must be at least 1")?;
                ok(2 * l + d <= 4, "16^l * 4^d must not exceed 256 vertices")
            }
            FamilySpec::CompleteMinusEdge { n } => ok(*n >= 3, "n must be at least 3"),
        }
    }

    pub fn build(&self) -> Result<WeightedGraph, FamilyError> {
        self.validate()?;
        let g = match self {
            FamilySpec::Path { n } => path(*n)?,
            FamilySpec::WeightedEndPath { n, alpha } => {
                let mut e = path_edges(*n);
                e[0].2 = 1.0 / alpha;
                WeightedGraph::from_edge_list(*n, &e)?
            }
            FamilySpec::Cycle { n } => cycle(*n)?,
            FamilySpec::WeightedC4k { k, alpha } => {
                let n = 4 * k;
                let mut e: Vec<(usize, usize, f64)> = (0..n).map(|i| (i, (i + 1) % n, 1.0)).collect();
                e[0].2 = 1.0 / alpha;
                e[1].2 = 1.0 / alpha;
                WeightedGraph::from_edge_list(n, &e)?
            }
            FamilySpec::Star { m } => WeightedGraph::unweighted(m + 1, &(1..=*m).map(|i| (0, i)).collect::<Vec<_>>())?,
            FamilySpec::WeightedStar { weights } => {
                let e: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (0, i + 1, w)).collect();
                WeightedGraph::from_edge_list(weights.len() + 1, &e)?
            }
            FamilySpec::SubdividedStar { m } => {
                let mut e: Vec<(usize, usize)> = (1..=*m).map(|i| (0, i)).collect();
                e.extend((1..=*m).map(|i| (i, m + i)));
                WeightedGraph::unweighted(2 * m + 1, &e)?
            }
            FamilySpec::PendantPath { n } => {
                let mut e = path_edges(*n);
                e.push((1, *n, 1.0));
                WeightedGraph::from_edge_list(n + 1, &e)?
            }
            FamilySpec::Complete { n } => complete(*n)?,
            FamilySpec::CompleteMultipartite { parts } => complete_multipartite(parts)?,
            FamilySpec::CocktailParty { m } => complete_multipartite(&vec![2; *m])?,
            FamilySpec::Threshold { cells } => threshold(cells)?,
            FamilySpec::FiveEigenvalue { components } => five_eigenvalue(components)?,
            FamilySpec::Shrikhande => shrikhande()?,
            FamilySpec::Hamming { d, q } => hamming(*d, *q)?,
            FamilySpec::Doob { l, d } => {
                let s = shrikhande()?;
                let mut g = s.clone();
                for _ in 1..*l {
                    g = g.cartesian_product(&s);
                }
                if *d > 0 {
                    g = g.cartesian_product(&hamming(*d, 4)?);
                }
                g
            }
            FamilySpec::CompleteMinusEdge { n } => {
                let pairs: Vec<_> = all_pairs(*n).into_iter().filter(|&p| p != (0, 1)).collect();
                WeightedGraph::unweighted(*n, &pairs)?
            }
        };
        Ok(g)
    }

    pub fn expected(&self) -> Result<ExpectedProfile, FamilyError> {
        self.validate()?;
        Ok(expected::expected(self))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[String]| v.join(",");
        match self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } | FamilySpec::CompleteMinusEdge { n } => {
                write!(f, "{}(n={n})", self.name())
            }
            FamilySpec::PendantPath { n } => write!(f, "{}(n={n})", self.name()),
            FamilySpec::WeightedEndPath { n, alpha } => write!(f, "{}(n={n}, alpha={alpha})", self.name()),
            FamilySpec::WeightedC4k { k, alpha } => write!(f, "{}(k={k}, alpha={alpha})", self.name()),
            FamilySpec::Star { m } | FamilySpec::SubdividedStar { m } | FamilySpec::CocktailParty { m } => {
                write!(f, "{}(m={m})", self.name())
            }
            FamilySpec::WeightedStar { weights } => {
                write!(f, "{}(weights={})", self.name(), join(&weights.iter().map(|w| w.to_string()).collect::<Vec<_>>()))
            }
            FamilySpec::CompleteMultipartite { parts } => {
                write!(f, "{}(parts={})", self.name(), join(&parts.iter().map(|p| p.to_string()).collect::<Vec<_>>()))
            }
            FamilySpec::Threshold { cells } => {
                let c: Vec<String> = cells
                    .iter()
                    .map(|c| format!("{}{}", if c.kind == CellKind::Clique { 'K' } else { 'O' }, c.size))
                    .collect();
                write!(f, "{}(cells={})", self.name(), join(&c))
            }
            FamilySpec::FiveEigenvalue { components } => {
                let c: Vec<String> = components.iter().map(|(p, q)| format!("{p}x{q}")).collect();
                write!(f, "{}(components={})", self.name(), join(&c))
            }
            FamilySpec::Shrikhande => f.write_str("shrikhande"),
            FamilySpec::Hamming { d, q } => write!(f, "hamming(d={d}, q={q})"),
            FamilySpec::Doob { l, d } => write!(f, "doob(l={l}, d={d})"),
        }
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize, f64)> {
    (1..n).map(|i| (i - 1, i, 1.0)).collect()
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn path(n: usize) -> Result<WeightedGraph, FamilyError> {
    Ok(WeightedGraph::from_edge_list(n, &path_edges(n))?)
}

pub fn cycle(n: usize) -> Result<WeightedGraph, FamilyError> {
    Ok(WeightedGraph::unweighted(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())?)
}

pub fn complete(n: usize) -> Result<WeightedGraph, FamilyError> {
    Ok(WeightedGraph::unweighted(n, &all_pairs(n))?)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<WeightedGraph, FamilyError> {
    let n: usize = parts.iter().sum();
    let part_of: Vec<usize> = parts.iter().enumerate().flat_map(|(j, &p)| std::iter::repeat_n(j, p)).collect();
    let pairs: Vec<_> = all_pairs(n).into_iter().filter(|&(a, b)| part_of[a] != part_of[b]).collect();
    Ok(WeightedGraph::unweighted(n, &pairs)?)
}

fn threshold(cells: &[Cell]) -> Result<WeightedGraph, FamilyError> {
    let mut pairs = Vec::new();
    let mut n = 0;
    for cell in cells {
        let start = n;
        n += cell.size;
        if cell.kind == CellKind::Clique {
            pairs.extend(all_pairs(n).into_iter().filter(|&(_, b)| b >= start));
        }
    }
    Ok(WeightedGraph::unweighted(n, &pairs)?)
}

fn five_eigenvalue(components: &[(usize, usize)]) -> Result<WeightedGraph, FamilyError> {
    let n: usize = components.iter().map(|&(p, q)| p + q).sum::<usize>() + 1;
    let apex = n - 1;
    let mut pairs = Vec::new();
    let mut base = 0;
    for &(p, q) in components {
        for a in base..base + p {
            pairs.push((a, apex));
            pairs.extend((base + p..base + p + q).map(|b| (a, b)));
        }
        base += p + q;
    }
    Ok(WeightedGraph::unweighted(n, &pairs)?)
}

pub fn shrikhande() -> Result<WeightedGraph, FamilyError> {
    const GEN: [(usize, usize); 3] = [(1, 0), (0, 1), (1, 1)];
    let idx = |a: usize, b: usize| 4 * (a % 4) + b % 4;
    let mut pairs = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for &(x, y) in &GEN {
                pairs.push((idx(a, b), idx(a + x, b + y)));
            }
        }
    }
    let g = WeightedGraph::unweighted(16, &pairs)?;
    check_srg(&g, (16, 6, 2, 2)).map_err(|m| FamilyError::bad("shrikhande", m))?;
    Ok(g)
}

/// Verifies strongly regular parameters `(n, k, λ, μ)`.
pub fn check_srg(g: &WeightedGraph, (n, k, lambda, mu): (usize, usize, usize, usize)) -> Result<(), String> {
    if g.n() != n {
        return Err(format!("expected {n} vertices, found {}", g.n()));
    }
    if let Some(u) = (0..n).find(|&u| g.degree(u) != k) {
        return Err(format!("vertex {u} has degree {}, expected {k}", g.degree(u)));
    }
    for (a, b) in all_pairs(n) {
        let common = g.neighbors(a).iter().filter(|&&(x, _)| g.weight(b, x).is_some()).count();
        let want = if g.weight(a, b).is_some() { lambda } else { mu };
        if common != want {
            return Err(format!("vertices {a} and {b} have {common} common neighbours, expected {want}"));
        }
    }
    Ok(())
}

pub fn hamming(d: usize, q: usize) -> Result<WeightedGraph, FamilyError> {
    let k = complete(q)?;
    let mut g = k.clone();
    for _ in 1..d {
        g = g.cartesian_product(&k);
    }
    Ok(g)
}

/// The specs exercised by the family reproduction suite and the property tests.
pub fn builtin_corpus() -> Vec<FamilySpec> {
    let mut v = Vec::new();
    v.extend((3..=9).map(|n| FamilySpec::Path { n }));
    v.push(FamilySpec::WeightedEndPath { n: 5, alpha: 2.0 });
    v.push(FamilySpec::WeightedEndPath { n: 7, alpha: default_end_path_alpha(7) });
    v.extend((4..=10).step_by(2).map(|n| FamilySpec::Cycle { n }));
    v.push(FamilySpec::WeightedC4k { k: 2, alpha: 3.0 });
    v.push(FamilySpec::WeightedC4k { k: 1, alpha: default_c4k_alpha(1) });
    v.extend((1..=5).map(|m| FamilySpec::Star { m }));
    v.push(FamilySpec::WeightedStar { weights: vec![1.0, 2.0] });
    v.push(FamilySpec::WeightedStar { weights: vec![1.0, 1.0] });
    v.push(FamilySpec::WeightedStar { weights: vec![1.0, 2.0, 0.5] });
    v.extend((2..=6).map(|m| FamilySpec::SubdividedStar { m }));
    v.extend([3, 5, 7].map(|n| FamilySpec::PendantPath { n }));
    v.extend((3..=6).map(|n| FamilySpec::Complete { n }));
    v.push(FamilySpec::CompleteMultipartite { parts: vec![1, 3, 3] });
    v.push(FamilySpec::CompleteMultipartite { parts: vec![2, 3] });
    v.extend((3..=6).map(|m| FamilySpec::CocktailParty { m }));
    v.push(FamilySpec::Threshold {
        cells: vec![
            Cell { kind: CellKind::Empty, size: 3 },
            Cell { kind: CellKind::Clique, size: 1 },
            Cell { kind: CellKind::Empty, size: 2 },
            Cell { kind: CellKind::Clique, size: 3 },
        ],
    });
    v.push(FamilySpec::FiveEigenvalue { components: vec![(1, 4), (2, 2)] });
    v.push(FamilySpec::Shrikhande);
    v.push(FamilySpec::Hamming { d: 2, q: 3 });
    v.push(FamilySpec::Hamming { d: 2, q: 4 });
    v.extend((3..=6).map(|n| FamilySpec::CompleteMinusEdge { n }));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, &str)]) -> Vec<(String, String)> {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn parse_and_build() {
        let s = FamilySpec::parse("subdivided_star", &params(&[("m", "3")])).unwrap();
        assert_eq!(s.build().unwrap().n(), 7);
        let s = FamilySpec::parse("five_eigenvalue", &params(&[("components", "1x4,2x2")])).unwrap();
        let g = s.build().unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree(9), 3);
        let s = FamilySpec::parse("threshold", &params(&[("cells", "O2,K1,O1,K1")])).unwrap();
        assert!(s.build().unwrap().is_connected());
        assert_eq!(FamilySpec::parse("cocktail_party", &params(&[("m", "3")])).unwrap().build().unwrap().edge_count(), 12);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(FamilySpec::parse("nope", &[]), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!(FamilySpec::parse("path", &[]), Err(FamilyError::BadParams { .. })));
        assert!(FamilySpec::parse("path", &params(&[("n", "x")])).is_err());
        assert!(FamilySpec::parse("path", &params(&[("n", "3"), ("m", "2")])).is_err());
        assert!(FamilySpec::parse("weighted_end_path", &params(&[("n", "4")])).is_err());
        assert!(FamilySpec::parse("five_eigenvalue", &params(&[("components", "1x4,4x1")])).is_err());
        assert!(FamilySpec::parse("threshold", &params(&[("cells", "O2,O1,K1")])).is_err());
    }

    #[test]
    fn shrikhande_is_srg() {
        let g = shrikhande().unwrap();
        assert!(check_srg(&g, (16, 6, 2, 2)).is_ok());
        assert!(check_srg(&hamming(2, 4).unwrap(), (16, 6, 2, 2)).is_ok());
        assert!(check_srg(&cycle(5).unwrap(), (5, 2, 0, 1)).is_ok());
    }

    #[test]
    fn display_round_trips_names() {
        for spec in builtin_corpus() {
            assert!(spec.to_string().starts_with(spec.name()));
        }
    }
}
