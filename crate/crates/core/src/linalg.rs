//! Hermitian eigenvalue helpers.
//!
//! An n×n complex Hermitian matrix `A = X + iY` embeds into the real
//! symmetric 2n×2n matrix `[[X, -Y], [Y, X]]` whose spectrum is that of
//! `A` with doubled multiplicities, so the real symmetric solver covers
//! the complex case.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense column-major complex matrix as nested rows.
pub type CMat = Vec<Vec<Complex64>>;

fn real_embedding(a: &CMat) -> DMatrix<f64> {
    let n = a.len();
    let mut m = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let x = a[i][j].re;
            let y = a[i][j].im;
            m[(i, j)] = x;
            m[(i + n, j + n)] = x;
            m[(i, j + n)] = -y;
            m[(i + n, j)] = y;
        }
    }
    // Symmetrise to absorb Hermiticity rounding before the solver.
    let mt = m.transpose();
    (m + mt) * 0.5
}

/// Largest Hermiticity defect `max |A_{ij} - conj(A_{ji})|`.
pub fn hermiticity_defect(a: &CMat) -> f64 {
    let n = a.len();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((a[i][j] - a[j][i].conj()).norm());
        }
    }
    worst
}

/// All eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(a: &CMat) -> Result<Vec<f64>> {
    let n = a.len();
    if n == 0 {
        return Ok(vec![]);
    }
    for row in a {
        if row.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: row.len() });
        }
    }
    let eig = real_embedding(a).symmetric_eigen();
    let mut all: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    all.sort_by(f64::total_cmp);
    // Doubled spectrum: keep every other entry.
    Ok(all.into_iter().step_by(2).collect())
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn hermitian_smallest_eigenvalue(a: &CMat) -> Result<f64> {
    Ok(*hermitian_eigenvalues(a)?
        .first()
        .ok_or(Error::InvalidParameter("empty matrix".into()))?)
}

/// Eigen decomposition of a Hermitian matrix: ascending eigenvalues and
/// matching complex eigenvectors.
pub fn hermitian_eigh(a: &CMat) -> Result<(Vec<f64>, Vec<Vec<Complex64>>)> {
    let n = a.len();
    if n == 0 {
        return Ok((vec![], vec![]));
    }
    let eig = real_embedding(a).symmetric_eigen();
    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));

    // The doubled spectrum pairs eigenvectors (u; v) and (-v; u) for the
    // same eigenvalue of A; either one maps to the complex eigenvector
    // u + iv. Deduplicate by greedily keeping vectors that stay linearly
    // independent over C after projection.
    let mut values: Vec<f64> = Vec::with_capacity(n);
    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for &idx in &order {
        if values.len() == n {
            break;
        }
        let col = eig.eigenvectors.column(idx);
        let cand: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new(col[i], col[i + n]))
            .collect();
        let norm: f64 = cand.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue;
        }
        let cand: Vec<Complex64> = cand.iter().map(|c| c / norm).collect();
        // Reject candidates parallel (over C) to an already-kept vector
        // of the same eigenvalue.
        let lambda = eig.eigenvalues[idx];
        let mut dependent = false;
        for (&kept_lambda, kept) in values.iter().zip(&vectors) {
            if (lambda - kept_lambda).abs() > 1e-9 * (1.0 + lambda.abs()) {
                continue;
            }
            let overlap: Complex64 = kept
                .iter()
                .zip(&cand)
                .map(|(&a, &b)| a.conj() * b)
                .sum();
            if overlap.norm() > 1.0 - 1e-8 {
                dependent = true;
                break;
            }
        }
        if !dependent {
            values.push(lambda);
            vectors.push(cand);
        }
    }
    if values.len() != n {
        return Err(Error::SingularSystem);
    }
    Ok((values, vectors))
}
