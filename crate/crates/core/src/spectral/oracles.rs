//! Closed-form walk diagonals of unweighted paths and cycles.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::SpectralError;

/// `U(t)_{u,u}` on `P_n` with 1-based `u`, from the sine eigenbasis.
pub fn path_diagonal_oracle(n: usize, u: usize, t: f64) -> Result<Complex64, SpectralError> {
    if u == 0 || u > n {
        return Err(SpectralError::IndexOutOfRange { u, n });
    }
    let m = (n + 1) as f64;
    let sum: Complex64 = (1..=n)
        .map(|j| {
            let theta = j as f64 * PI / m;
            let s = (u as f64 * theta).sin();
            Complex64::from_polar(s * s, 2.0 * t * theta.cos())
        })
        .sum();
    Ok(sum * (2.0 / m))
}

/// `U(t)_{u,u}` on `C_n`, identical for every vertex.
pub fn cycle_diagonal_oracle(n: usize, t: f64) -> Result<Complex64, SpectralError> {
    if n < 3 {
        return Err(SpectralError::CycleTooShort(n));
    }
    let sum: Complex64 =
        (0..n).map(|j| Complex64::from_polar(1.0, 2.0 * t * (2.0 * PI * j as f64 / n as f64).cos())).sum();
    Ok(sum / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use crate::spectral::eigendecompose;

    #[test]
    fn path_examples() {
        let z = path_diagonal_oracle(9, 1, PI / 2f64.sqrt()).unwrap();
        assert!(z.re <= 1e-9);
        assert!((path_diagonal_oracle(4, 2, 0.0).unwrap() - 1.0).norm() < 1e-12);
        let pairs: Vec<_> = (0..4).map(|i| (i, i + 1)).collect();
        let s = eigendecompose(&WeightedGraph::unweighted(5, &pairs).unwrap()).unwrap();
        let z = path_diagonal_oracle(5, 3, 1.0).unwrap();
        assert!((z - s.walk_diagonal(2, 1.0).unwrap()).norm() < 1e-12);
        assert!(path_diagonal_oracle(4, 0, 1.0).is_err());
        assert!(path_diagonal_oracle(4, 5, 1.0).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert!(cycle_diagonal_oracle(8, PI / 2.0).unwrap().re <= 1e-9);
        assert!((cycle_diagonal_oracle(4, PI).unwrap().norm() - 1.0).abs() < 1e-12);
        assert!((cycle_diagonal_oracle(7, 0.0).unwrap() - 1.0).norm() < 1e-12);
        assert_eq!(cycle_diagonal_oracle(2, 1.0).unwrap_err(), SpectralError::CycleTooShort(2));
    }
}
