//! Cyclic Jacobi diagonalization of dense real symmetric matrices.

use crate::error::SpectralError;
use crate::scalar::Scalar;

pub(crate) const MAX_SWEEPS: usize = 80;

/// Eigenvalues (unsorted) and row-major eigenvector matrix whose column `k`
/// is the unit eigenvector for eigenvalue `k`.
pub(crate) struct Eigen<T> {
    pub values: Vec<T>,
    pub vectors: Vec<T>,
}

/// Diagonalizes the symmetric row-major `n × n` matrix `a`.
///
/// Each rotation zeroes one off-diagonal pair; sweeps repeat until the
/// off-diagonal Frobenius mass falls below `eps² · ‖A‖²`.
pub(crate) fn symmetric_eigen<T: Scalar>(a: &[T], n: usize) -> Result<Eigen<T>, SpectralError> {
    let mut m = a.to_vec();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let frob: T = m.iter().map(|&x| x * x).sum();
    let eps = T::from_f64_lossy(T::EPSILON_F64);
    let target = eps * eps * frob;

    for _sweep in 0..MAX_SWEEPS {
        let off: T = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| m[p * n + q] * m[p * n + q])
            .sum();
        if off <= target || off == T::zero() {
            let values = (0..n).map(|i| m[i * n + i]).collect();
            return Ok(Eigen { values, vectors: v });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let two = T::one() + T::one();
                let tau = (m[q * n + q] - m[p * n + p]) / (two * apq);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = c * kp - s * kq;
                    m[k * n + q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = c * pk - s * qk;
                    m[q * n + k] = s * pk + c * qk;
                }
                m[p * n + q] = T::zero();
                m[q * n + p] = T::zero();
                for k in 0..n {
                    let (kp, kq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * kp - s * kq;
                    v[k * n + q] = s * kp + c * kq;
                }
            }
        }
    }
    Err(SpectralError::ConvergenceFailure { sweeps: MAX_SWEEPS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn residual(a: &[f64], n: usize, e: &Eigen<f64>) -> f64 {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            for i in 0..n {
                let av: f64 = (0..n).map(|j| a[i * n + j] * e.vectors[j * n + k]).sum();
                worst = worst.max((av - e.values[k] * e.vectors[i * n + k]).abs());
            }
        }
        worst
    }

    #[test]
    fn two_by_two() {
        let a = [2.0, 1.0, 1.0, 2.0];
        let e = symmetric_eigen(&a, 2).unwrap();
        let mut vals = e.values.clone();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 3.0).abs() < 1e-14);
        assert!(residual(&a, 2, &e) < 1e-14);
    }

    proptest! {
        #[test]
        fn matches_nalgebra(entries in proptest::collection::vec(-3.0f64..3.0, 36)) {
            let n = 6;
            let mut a = vec![0.0; n * n];
            for i in 0..n {
                for j in i..n {
                    a[i * n + j] = entries[i * n + j];
                    a[j * n + i] = entries[i * n + j];
                }
            }
            let e = symmetric_eigen(&a, n).unwrap();
            prop_assert!(residual(&a, n, &e) < 1e-12);
            let mut ours = e.values.clone();
            ours.sort_by(f64::total_cmp);
            let oracle = nalgebra::DMatrix::from_row_slice(n, n, &a).symmetric_eigen();
            let mut theirs: Vec<f64> = oracle.eigenvalues.iter().copied().collect();
            theirs.sort_by(f64::total_cmp);
            for (x, y) in ours.iter().zip(&theirs) {
                prop_assert!((x - y).abs() < 1e-11);
            }
        }
    }
}
