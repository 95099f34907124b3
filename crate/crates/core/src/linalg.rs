//! Small dense linear algebra for observer design.
//!
//! Everything here works on [`Matrix`] (a dynamically sized nalgebra matrix)
//! and is meant for desk-scale systems; the Lyapunov solver vectorizes the
//! equation with Kronecker products and is capped at [`LYAPUNOV_MAX_DIM`].

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

pub type Matrix = DMatrix<f64>;

/// Largest dimension accepted by [`solve_lyapunov`].
pub const LYAPUNOV_MAX_DIM: usize = 30;

/// Default margin for [`is_hurwitz`].
pub const HURWITZ_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("{what} must be square, got {rows}x{cols}")]
    NotSquare {
        what: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hurwitz (spectral abscissa {abscissa})")]
    NotHurwitz { abscissa: f64 },
    #[error("dimension {n} exceeds the Lyapunov solver limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("{0} must be symmetric positive definite")]
    NotPositiveDefinite(&'static str),
    #[error("linear system is singular")]
    Singular,
    #[error("pair (A, C) is not observable: observability rank {rank} < {n}")]
    Unobservable { rank: usize, n: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

/// Builds a matrix from row-major nested vectors (the config-file layout).
pub fn from_rows(rows: &[Vec<f64>]) -> Result<Matrix, LinalgError> {
    let r = rows.len();
    if r == 0 {
        return Err(LinalgError::Invalid("matrix has no rows".into()));
    }
    let c = rows[0].len();
    if c == 0 || rows.iter().any(|row| row.len() != c) {
        return Err(LinalgError::DimensionMismatch(
            "matrix rows must be non-empty and of equal length".into(),
        ));
    }
    Ok(Matrix::from_fn(r, c, |i, j| rows[i][j]))
}

/// Row-major nested vectors, the inverse of [`from_rows`].
pub fn to_rows(m: &Matrix) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

fn require_square(what: &'static str, m: &Matrix) -> Result<usize, LinalgError> {
    if m.nrows() != m.ncols() {
        return Err(LinalgError::NotSquare {
            what,
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(m.nrows())
}

/// Eigenvalues via Hessenberg reduction and shifted QR (real Schur form).
pub fn eigenvalues(a: &Matrix) -> Result<Vec<Complex64>, LinalgError> {
    require_square("A", a)?;
    Ok(a.clone()
        .complex_eigenvalues()
        .iter()
        .map(|z| Complex64::new(z.re, z.im))
        .collect())
}

/// Largest real part over the spectrum.
pub fn spectral_abscissa(a: &Matrix) -> Result<f64, LinalgError> {
    Ok(eigenvalues(a)?
        .iter()
        .map(|z| z.re)
        .fold(f64::NEG_INFINITY, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzReport {
    pub hurwitz: bool,
    pub abscissa: f64,
}

/// True iff every eigenvalue has real part below `-margin`.
pub fn is_hurwitz(a: &Matrix, margin: f64) -> Result<HurwitzReport, LinalgError> {
    let abscissa = spectral_abscissa(a)?;
    Ok(HurwitzReport {
        hurwitz: abscissa < -margin,
        abscissa,
    })
}

/// min over eigenvalues of |arg λ| - απ/2.
///
/// Positive values mean the spectrum sits inside the classical Caputo
/// stability sector. This is a diagnostic; the Lyapunov route is the
/// authoritative stability test for ABC dynamics.
pub fn matignon_margin(a: &Matrix, alpha: f64) -> Result<f64, LinalgError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(LinalgError::Invalid(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let half_sector = alpha * std::f64::consts::FRAC_PI_2;
    Ok(eigenvalues(a)?
        .iter()
        .map(|z| z.arg().abs() - half_sector)
        .fold(f64::INFINITY, f64::min))
}

pub fn is_symmetric(m: &Matrix, tol: f64) -> bool {
    m.is_square() && (m - m.transpose()).amax() <= tol * m.amax().max(1.0)
}

pub fn is_positive_definite(m: &Matrix) -> bool {
    is_symmetric(m, 1e-10) && m.clone().cholesky().is_some()
}

/// Extreme eigenvalues (min, max) of a symmetric matrix.
pub fn symmetric_eig_range(m: &Matrix) -> Result<(f64, f64), LinalgError> {
    require_square("matrix", m)?;
    let ev = m.clone().symmetric_eigenvalues();
    let lo = ev.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ev.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok((lo, hi))
}

/// Spectral norm (largest singular value).
pub fn spectral_norm(m: &Matrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone()
        .singular_values()
        .iter()
        .cloned()
        .fold(0.0, f64::max)
}

/// Solves P·Ā + Āᵀ·P = −Q for symmetric positive definite P.
pub fn solve_lyapunov(abar: &Matrix, q: &Matrix) -> Result<Matrix, LinalgError> {
    let n = require_square("A", abar)?;
    if q.nrows() != n || q.ncols() != n {
        return Err(LinalgError::DimensionMismatch(format!(
            "Q is {}x{}, expected {n}x{n}",
            q.nrows(),
            q.ncols()
        )));
    }
    if !is_positive_definite(q) {
        return Err(LinalgError::NotPositiveDefinite("Q"));
    }
    let report = is_hurwitz(abar, 0.0)?;
    if !report.hurwitz {
        return Err(LinalgError::NotHurwitz {
            abscissa: report.abscissa,
        });
    }
    let p = lyapunov_kronecker(abar, q)?;
    if !is_positive_definite(&p) {
        return Err(LinalgError::NotPositiveDefinite("P"));
    }
    Ok(p)
}

/// Residual ‖PĀ + ĀᵀP + Q‖ (Frobenius).
pub fn lyapunov_residual(abar: &Matrix, q: &Matrix, p: &Matrix) -> f64 {
    (p * abar + abar.transpose() * p + q).norm()
}

/// Kronecker solve without definiteness checks; the result is symmetrized.
fn lyapunov_kronecker(abar: &Matrix, q: &Matrix) -> Result<Matrix, LinalgError> {
    let n = abar.nrows();
    if n > LYAPUNOV_MAX_DIM {
        return Err(LinalgError::TooLarge {
            n,
            max: LYAPUNOV_MAX_DIM,
        });
    }
    // column-major vec: vec(ĀᵀP) = (I ⊗ Āᵀ) vec P,  vec(PĀ) = (Āᵀ ⊗ I) vec P
    let eye = Matrix::identity(n, n);
    let at = abar.transpose();
    let lhs = eye.kronecker(&at) + at.kronecker(&eye);
    let rhs = -nalgebra::DVector::from_column_slice(q.as_slice());
    let vec_p = lhs.lu().solve(&rhs).ok_or(LinalgError::Singular)?;
    let p = Matrix::from_column_slice(n, n, vec_p.as_slice());
    Ok((&p + p.transpose()) * 0.5)
}

/// Rank of the observability matrix [C; CA; …; CA^{n-1}].
pub fn observability_rank(a: &Matrix, c: &Matrix) -> Result<usize, LinalgError> {
    let n = require_square("A", a)?;
    if c.ncols() != n {
        return Err(LinalgError::DimensionMismatch(format!(
            "C has {} columns, A is {n}x{n}",
            c.ncols()
        )));
    }
    let p = c.nrows();
    let mut obs = Matrix::zeros(n * p, n);
    let mut block = c.clone();
    for k in 0..n {
        obs.view_mut((k * p, 0), (p, n)).copy_from(&block);
        block = &block * a;
    }
    let scale = obs.amax().max(1.0);
    Ok(obs.rank(1e-10 * scale))
}

/// Observer gain by spectrum shifting.
///
/// Solves P_o·(−(A + σI)) + (−(A + σI))ᵀ·P_o = −CᵀC and returns
/// K = P_o⁻¹Cᵀ. For an observable pair and σ > max(0, −min Re λ(A)) the
/// resulting A − KC has every eigenvalue with real part ≤ −σ. Heuristic:
/// no control over the placement beyond that bound.
pub fn shift_gain(a: &Matrix, c: &Matrix, sigma: f64) -> Result<Matrix, LinalgError> {
    let n = require_square("A", a)?;
    let rank = observability_rank(a, c)?;
    if rank < n {
        return Err(LinalgError::Unobservable { rank, n });
    }
    let min_re = eigenvalues(a)?
        .iter()
        .map(|z| z.re)
        .fold(f64::INFINITY, f64::min);
    let needed = f64::max(0.0, -min_re);
    if !(sigma > needed) {
        return Err(LinalgError::Invalid(format!(
            "shift sigma = {sigma} must exceed {needed}"
        )));
    }
    let shifted = -(a + Matrix::identity(n, n) * sigma);
    let ctc = c.transpose() * c;
    let p_o = lyapunov_kronecker(&shifted, &ctc)?;
    let chol = p_o
        .clone()
        .cholesky()
        .ok_or(LinalgError::NotPositiveDefinite("P_o"))?;
    Ok(chol.solve(&c.transpose()))
}
