//! Arithmetic recognition of eigenvalues and integer-relation search.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::SpectralError;

pub const DEFAULT_RECOGNIZE_TOL: f64 = 1e-7;
pub const MAX_RELATION_VALUES: usize = 6;
const MAX_PQ: i64 = 64;
const MAX_DELTA: i64 = 10_000;

/// Recognized arithmetic form of a real eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum EigenvalueClass {
    Integer { k: i64 },
    /// `(p/q)·√delta`, `gcd(p, q) = 1`, `delta` square-free and at least 2.
    RatioSqrt { p: i64, q: i64, delta: i64 },
    Unrecognized { value: f64 },
}

impl EigenvalueClass {
    pub fn value(&self) -> f64 {
        match *self {
            EigenvalueClass::Integer { k } => k as f64,
            EigenvalueClass::RatioSqrt { p, q, delta } => p as f64 / q as f64 * (delta as f64).sqrt(),
            EigenvalueClass::Unrecognized { value } => value,
        }
    }

    pub fn is_recognized(&self) -> bool {
        !matches!(self, EigenvalueClass::Unrecognized { .. })
    }

    pub fn as_integer(&self) -> Option<i64> {
        match *self {
            EigenvalueClass::Integer { k } => Some(k),
            _ => None,
        }
    }

    /// The value as a rational combination of square roots (`1` keys the rational part).
    pub fn radical(&self) -> Option<RadicalCombo> {
        let mut m = RadicalCombo::new();
        match *self {
            EigenvalueClass::Integer { k } => {
                if k != 0 {
                    m.insert(1, Ratio::from_integer(k));
                }
            }
            EigenvalueClass::RatioSqrt { p, q, delta } => {
                m.insert(delta, Ratio::new(p, q));
            }
            EigenvalueClass::Unrecognized { .. } => return None,
        }
        Some(m)
    }
}

impl std::fmt::Display for EigenvalueClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            EigenvalueClass::Integer { k } => write!(f, "{k}"),
            EigenvalueClass::RatioSqrt { p, q: 1, delta } => write!(f, "{p}*sqrt({delta})"),
            EigenvalueClass::RatioSqrt { p, q, delta } => write!(f, "{p}/{q}*sqrt({delta})"),
            EigenvalueClass::Unrecognized { value } => write!(f, "{value}"),
        }
    }
}

/// Sparse `Σ c_Δ √Δ` with rational coefficients, keyed by square-free `Δ`.
pub type RadicalCombo = BTreeMap<i64, Ratio<i64>>;

pub(crate) fn combo_sub(a: &RadicalCombo, b: &RadicalCombo) -> RadicalCombo {
    let mut out = a.clone();
    for (&d, &c) in b {
        let e = out.entry(d).or_insert_with(|| Ratio::from_integer(0));
        *e -= c;
    }
    out.retain(|_, c| *c.numer() != 0);
    out
}

fn is_squarefree(d: i64) -> bool {
    let mut k = 2;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Snaps `value` to an integer, else to `(p/q)√Δ` with `p, q ≤ 64` and square-free `Δ ≤ 10⁴`.
pub fn recognize(value: f64, tol: f64) -> EigenvalueClass {
    if !value.is_finite() {
        return EigenvalueClass::Unrecognized { value };
    }
    let r = value.round();
    if (value - r).abs() <= tol && r.abs() < 9.0e15 {
        return EigenvalueClass::Integer { k: r as i64 };
    }
    let a = value.abs();
    let sign = if value < 0.0 { -1 } else { 1 };
    for q in 1..=MAX_PQ {
        for p in 1..=MAX_PQ {
            if p.gcd(&q) != 1 {
                continue;
            }
            let x = q as f64 * a / p as f64;
            let sq = x * x;
            if sq > MAX_DELTA as f64 + 0.5 {
                continue;
            }
            let delta = sq.round() as i64;
            if delta < 2 || !is_squarefree(delta) {
                continue;
            }
            let cand = p as f64 / q as f64 * (delta as f64).sqrt();
            if (cand - a).abs() <= tol {
                return EigenvalueClass::RatioSqrt { p: sign * p, q, delta };
            }
        }
    }
    EigenvalueClass::Unrecognized { value }
}

/// Exact 2-adic valuation.
pub fn two_adic(k: i64) -> Result<u32, SpectralError> {
    if k == 0 {
        return Err(SpectralError::ZeroInput);
    }
    Ok(k.trailing_zeros())
}

/// Best rational `p/q` with `q ≤ max_den` and `|x − p/q| ≤ tol·max(1, |x|)`.
pub fn rational_approx(x: f64, max_den: i64, tol: f64) -> Option<(i64, i64)> {
    if !x.is_finite() {
        return None;
    }
    let slack = tol * x.abs().max(1.0);
    (1..=max_den).find_map(|q| {
        let p = (x * q as f64).round();
        ((x - p / q as f64).abs() <= slack).then_some((p as i64, q))
    })
}

struct RangeMin {
    table: Vec<Vec<u32>>,
}

impl RangeMin {
    fn new(base: Vec<u32>) -> Self {
        let mut table = vec![base];
        let mut width = 1;
        while 2 * width <= table[0].len() {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width).map(|i| prev[i].min(prev[i + width])).collect();
            table.push(next);
            width *= 2;
        }
        RangeMin { table }
    }

    /// Minimum over the half-open range `lo..hi`, which must be nonempty.
    fn query(&self, lo: usize, hi: usize) -> u32 {
        let len = hi - lo;
        let level = (usize::BITS - 1 - len.leading_zeros()) as usize;
        let row = &self.table[level];
        row[lo].min(row[hi - (1 << level)])
    }
}

/// All tuples of `[-bound, bound]^dim` in lexicographic order, flattened.
fn lex_tuples(dim: usize, bound: i64) -> Vec<i64> {
    let side = (2 * bound + 1) as usize;
    let count = side.pow(dim as u32);
    let mut out = Vec::with_capacity(count * dim);
    let mut cur = vec![-bound; dim];
    for _ in 0..count {
        out.extend_from_slice(&cur);
        for j in (0..dim).rev() {
            if cur[j] < bound {
                cur[j] += 1;
                break;
            }
            cur[j] = -bound;
        }
    }
    out
}

fn canonical(t: &[i64]) -> bool {
    t.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

fn dot(t: &[i64], v: &[f64]) -> f64 {
    t.iter().zip(v).map(|(&c, &x)| c as f64 * x).sum()
}

fn parity(t: &[i64]) -> usize {
    (t.iter().sum::<i64>().rem_euclid(2)) as usize
}

/// Meet-in-the-middle view of the box `[-bound, bound]^k` split into a left
/// block (the first `⌊k/2⌋` coordinates) and a right block.
struct Box2 {
    h: usize,
    rdim: usize,
    right: Vec<i64>,
    /// Per parity class: right ranks sorted by sum, their sums, and a range-min table.
    classes: [(Vec<u32>, Vec<f64>, RangeMin); 2],
    left: Vec<i64>,
    left_sums: Vec<f64>,
    right_sums: Vec<f64>,
}

impl Box2 {
    fn new(values: &[f64], bound: i64, split_parity: bool) -> Self {
        let k = values.len();
        let h = k / 2;
        let rdim = k - h;
        let right = lex_tuples(rdim, bound);
        let rcount = right.len() / rdim;
        let right_sums: Vec<f64> = (0..rcount).map(|r| dot(&right[r * rdim..(r + 1) * rdim], &values[h..])).collect();
        let build = |class: Option<usize>| {
            let mut idx: Vec<u32> = (0..rcount as u32)
                .filter(|&r| class.is_none_or(|c| parity(&right[r as usize * rdim..(r as usize + 1) * rdim]) == c))
                .collect();
            idx.sort_by(|&a, &b| right_sums[a as usize].total_cmp(&right_sums[b as usize]).then(a.cmp(&b)));
            let sums: Vec<f64> = idx.iter().map(|&r| right_sums[r as usize]).collect();
            let rm = RangeMin::new(idx.clone());
            (idx, sums, rm)
        };
        let classes = if split_parity {
            [build(Some(0)), build(Some(1))]
        } else {
            [build(None), (vec![], vec![], RangeMin::new(vec![]))]
        };
        let left = lex_tuples(h, bound);
        let lcount = left.len().checked_div(h).unwrap_or(1);
        let left_sums = (0..lcount).map(|l| dot(&left[l * h..(l + 1) * h], &values[..h])).collect();
        Box2 { h, rdim, right, classes, left, left_sums, right_sums }
    }

    fn right_tuple(&self, r: usize) -> &[i64] {
        &self.right[r * self.rdim..(r + 1) * self.rdim]
    }

    fn left_tuple(&self, l: usize) -> &[i64] {
        &self.left[l * self.h..(l + 1) * self.h]
    }

    fn window(&self, class: usize, target: f64, thr: f64) -> (usize, usize) {
        let sums = &self.classes[class].1;
        let lo = sums.partition_point(|&s| s < target - thr);
        let hi = sums.partition_point(|&s| s <= target + thr);
        (lo, hi)
    }
}

fn validate(values: &[f64]) -> Result<(), SpectralError> {
    if values.is_empty() {
        return Err(SpectralError::NoValues);
    }
    if values.len() > MAX_RELATION_VALUES {
        return Err(SpectralError::TooManyValues { count: values.len() });
    }
    Ok(())
}

fn first_in_box(values: &[f64], bound: i64, thr: f64, odd: bool) -> Option<Vec<i64>> {
    let b = Box2::new(values, bound, odd);
    let zero_left = vec![0; b.h];
    let rcount = b.right_sums.len();
    for r in 0..rcount {
        let t = b.right_tuple(r);
        if canonical(t) && b.right_sums[r].abs() <= thr && (!odd || parity(t) == 1) {
            return Some([zero_left.as_slice(), t].concat());
        }
    }
    for l in 0..b.left_sums.len() {
        let lt = b.left_tuple(l);
        if !canonical(lt) {
            continue;
        }
        let target = -b.left_sums[l];
        let classes: &[usize] = if odd { if parity(lt) == 0 { &[1] } else { &[0] } } else { &[0] };
        let best = classes
            .iter()
            .filter_map(|&c| {
                let (lo, hi) = b.window(c, target, thr);
                (lo < hi).then(|| b.classes[c].2.query(lo, hi))
            })
            .min();
        if let Some(r) = best {
            return Some([lt, b.right_tuple(r as usize)].concat());
        }
    }
    None
}

fn tiered_search(values: &[f64], coeff_bound: i64, tol: f64, odd: bool) -> Result<Option<Vec<i64>>, SpectralError> {
    validate(values)?;
    let thr = tol * values.iter().map(|v| v.abs()).sum::<f64>();
    for bound in 1..=coeff_bound {
        if let Some(t) = first_in_box(values, bound, thr, odd) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// First nonzero `ℓ` with `|ℓ_j| ≤ coeff_bound` and `|Σ ℓ_j v_j| ≤ tol·Σ|v_j|`.
///
/// Candidates are ordered by sup-norm first and lexicographically within a
/// sup-norm, restricted to tuples whose first nonzero entry is positive.
pub fn integer_relation(values: &[f64], coeff_bound: i64, tol: f64) -> Result<Option<Vec<i64>>, SpectralError> {
    tiered_search(values, coeff_bound, tol, false)
}

/// As [`integer_relation`], restricted to relations whose coefficient sum is odd.
pub fn odd_sum_relation(values: &[f64], coeff_bound: i64, tol: f64) -> Result<Option<Vec<i64>>, SpectralError> {
    tiered_search(values, coeff_bound, tol, true)
}

/// Calls `f` on every canonical relation with `|ℓ_j| ≤ coeff_bound`.
///
/// Returns `Ok(true)` when the enumeration ran to completion and `Ok(false)`
/// when `f` stopped it early.
pub fn for_each_relation<F>(values: &[f64], coeff_bound: i64, tol: f64, mut f: F) -> Result<bool, SpectralError>
where
    F: FnMut(&[i64]) -> ControlFlow<()>,
{
    validate(values)?;
    let thr = tol * values.iter().map(|v| v.abs()).sum::<f64>();
    let b = Box2::new(values, coeff_bound, false);
    let zero_left = vec![0; b.h];
    for r in 0..b.right_sums.len() {
        let t = b.right_tuple(r);
        if canonical(t) && b.right_sums[r].abs() <= thr && f(&[zero_left.as_slice(), t].concat()).is_break() {
            return Ok(false);
        }
    }
    for l in 0..b.left_sums.len() {
        let lt = b.left_tuple(l);
        if !canonical(lt) {
            continue;
        }
        let (lo, hi) = b.window(0, -b.left_sums[l], thr);
        for &r in &b.classes[0].0[lo..hi] {
            if f(&[lt, b.right_tuple(r as usize)].concat()).is_break() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Basis of the integer kernel `{ℓ ∈ Zᵏ : Σ ℓ_j c_j = 0}` for exact radical combinations.
///
/// Returns `None` if intermediate arithmetic overflows.
pub fn relation_lattice(combos: &[RadicalCombo]) -> Option<Vec<Vec<i64>>> {
    let k = combos.len();
    let mut deltas: Vec<i64> = combos.iter().flat_map(|c| c.keys().copied()).collect();
    deltas.sort_unstable();
    deltas.dedup();
    let mut m: Vec<Vec<i128>> = Vec::with_capacity(deltas.len());
    for d in &deltas {
        let coeffs: Vec<Ratio<i64>> = combos.iter().map(|c| c.get(d).copied().unwrap_or_default()).collect();
        let l = coeffs.iter().fold(1i128, |acc, c| acc.lcm(&(*c.denom() as i128)));
        m.push(coeffs.iter().map(|c| *c.numer() as i128 * (l / *c.denom() as i128)).collect());
    }
    let mut w: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| i128::from(i == j)).collect()).collect();

    let col_axpy = |m: &mut Vec<Vec<i128>>, w: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| -> Option<()> {
        for row in m.iter_mut() {
            row[dst] = row[dst].checked_sub(q.checked_mul(row[src])?)?;
        }
        for row in w.iter_mut() {
            row[dst] = row[dst].checked_sub(q.checked_mul(row[src])?)?;
        }
        Some(())
    };
    let swap_cols = |m: &mut Vec<Vec<i128>>, w: &mut Vec<Vec<i128>>, a: usize, b: usize| {
        for row in m.iter_mut().chain(w.iter_mut()) {
            row.swap(a, b);
        }
    };

    let mut pivot = 0;
    for r in 0..deltas.len() {
        if pivot == k {
            break;
        }
        loop {
            let best = (pivot..k).filter(|&j| m[r][j] != 0).min_by_key(|&j| m[r][j].unsigned_abs());
            let Some(j) = best else { break };
            swap_cols(&mut m, &mut w, pivot, j);
            let mut done = true;
            for j in pivot + 1..k {
                if m[r][j] != 0 {
                    let q = m[r][j] / m[r][pivot];
                    col_axpy(&mut m, &mut w, j, pivot, q)?;
                    if m[r][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    (pivot..k)
        .map(|j| (0..k).map(|i| i64::try_from(w[i][j]).ok()).collect::<Option<Vec<i64>>>())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognize_examples() {
        assert_eq!(recognize(2.00000000003, DEFAULT_RECOGNIZE_TOL), EigenvalueClass::Integer { k: 2 });
        assert_eq!(recognize(1.7320508075, DEFAULT_RECOGNIZE_TOL), EigenvalueClass::RatioSqrt { p: 1, q: 1, delta: 3 });
        assert_eq!(recognize(1.1180339, DEFAULT_RECOGNIZE_TOL), EigenvalueClass::RatioSqrt { p: 1, q: 2, delta: 5 });
        assert_eq!(recognize(-2f64.sqrt(), 1e-9), EigenvalueClass::RatioSqrt { p: -1, q: 1, delta: 2 });
        assert!(!recognize(std::f64::consts::PI, 1e-9).is_recognized());
    }

    #[test]
    fn recognize_round_trips() {
        for k in -100..=100 {
            assert_eq!(recognize(k as f64, DEFAULT_RECOGNIZE_TOL), EigenvalueClass::Integer { k });
        }
        for p in 1..=8i64 {
            for q in 1..=8i64 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for delta in [2, 3, 5, 6, 7] {
                    let c = EigenvalueClass::RatioSqrt { p, q, delta };
                    assert_eq!(recognize(c.value(), DEFAULT_RECOGNIZE_TOL), c);
                    assert_eq!(recognize(recognize(c.value(), 1e-9).value(), 1e-9), c);
                }
            }
        }
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(two_adic(12).unwrap(), 2);
        assert_eq!(two_adic(-2).unwrap(), 1);
        assert_eq!(two_adic(7).unwrap(), 0);
        assert_eq!(two_adic(0).unwrap_err(), SpectralError::ZeroInput);
    }

    #[test]
    fn relation_examples() {
        let r2 = 2f64.sqrt();
        assert_eq!(integer_relation(&[r2, 2.0 * r2], 4, 1e-9).unwrap(), Some(vec![2, -1]));
        assert_eq!(integer_relation(&[1.0, r2], 10, 1e-9).unwrap(), None);
        assert_eq!(integer_relation(&[1.0, 2.0, 3.0], 3, 1e-9).unwrap(), Some(vec![1, 1, -1]));
        assert_eq!(integer_relation(&[3.0], 2, 1e-9).unwrap(), None);
        assert_eq!(integer_relation(&[0.0, 1.0], 2, 1e-9).unwrap(), Some(vec![1, 0]));
        assert!(matches!(integer_relation(&[1.0; 7], 2, 1e-9), Err(SpectralError::TooManyValues { count: 7 })));
        assert_eq!(integer_relation(&[], 2, 1e-9).unwrap_err(), SpectralError::NoValues);
    }

    fn brute_first(values: &[f64], bound: i64, tol: f64, odd: bool) -> Option<Vec<i64>> {
        let thr = tol * values.iter().map(|v| v.abs()).sum::<f64>();
        for n in 1..=bound {
            let all = lex_tuples(values.len(), n);
            for t in all.chunks(values.len()) {
                if canonical(t) && dot(t, values).abs() <= thr && (!odd || parity(t) == 1) {
                    return Some(t.to_vec());
                }
            }
        }
        None
    }

    #[test]
    fn meet_in_middle_matches_brute_force() {
        let sets: [&[f64]; 5] = [
            &[1.0, 2.0, 3.0, 5.0],
            &[2f64.sqrt(), 3f64.sqrt(), 1.0, 2.0 * 2f64.sqrt()],
            &[4.0, 6.0, 10.0],
            &[1.5, 2.5, 7.0, 0.5, 3.0],
            &[5f64.sqrt(), 1.0, 2.0],
        ];
        for v in sets {
            for odd in [false, true] {
                assert_eq!(tiered_search(v, 4, 1e-9, odd).unwrap(), brute_first(v, 4, 1e-9, odd), "{v:?} odd={odd}");
            }
        }
    }

    #[test]
    fn relation_enumeration_counts() {
        let mut seen = Vec::new();
        let done = for_each_relation(&[2.0, 6.0], 8, 1e-9, |t| {
            seen.push(t.to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(done);
        seen.sort();
        assert_eq!(seen, vec![vec![3, -1], vec![6, -2]]);
    }

    #[test]
    fn lattice_of_radicals() {
        let two = EigenvalueClass::Integer { k: 2 }.radical().unwrap();
        let r2 = EigenvalueClass::RatioSqrt { p: 1, q: 1, delta: 2 }.radical().unwrap();
        let half_r2 = EigenvalueClass::RatioSqrt { p: 1, q: 2, delta: 2 }.radical().unwrap();
        let basis = relation_lattice(&[two.clone(), r2.clone(), half_r2]).unwrap();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert_eq!(v[0], 0);
        assert_eq!(v[1] * 2 + v[2], 0);
        assert!(relation_lattice(&[two, r2]).unwrap().is_empty());
        let ints: Vec<RadicalCombo> = [2, 6, 4].iter().map(|&k| EigenvalueClass::Integer { k }.radical().unwrap()).collect();
        let basis = relation_lattice(&ints).unwrap();
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert_eq!(2 * b[0] + 6 * b[1] + 4 * b[2], 0);
        }
    }
}
