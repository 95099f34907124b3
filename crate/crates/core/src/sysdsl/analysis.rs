use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{DslError, Env, Expr};
use crate::linalg::{spectral_norm, Matrix};

/// Safety factor applied to sampled Lipschitz constants.
pub const LIPSCHITZ_SAFETY: f64 = 1.05;

/// Minimum number of sample points for a Lipschitz estimate.
pub const MIN_SAMPLES: usize = 100;

/// Axis-aligned box lo ≤ x ≤ hi.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl Region {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self, DslError> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(DslError::Invalid(format!(
                "region bounds must be nonempty and of equal length, got {} and {}",
                lo.len(),
                hi.len()
            )));
        }
        if lo.iter().zip(&hi).any(|(a, b)| !(a <= b) || !a.is_finite() || !b.is_finite()) {
            return Err(DslError::Invalid("region is empty: need finite lo <= hi".into()));
        }
        Ok(Self { lo, hi })
    }

    /// Symmetric box [−r, r]^n.
    pub fn cube(n: usize, r: f64) -> Result<Self, DslError> {
        Self::new(vec![-r; n], vec![r; n])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    fn center(&self) -> Vec<f64> {
        self.lo.iter().zip(&self.hi).map(|(a, b)| 0.5 * (a + b)).collect()
    }
}

/// Central-difference Jacobian ∂f_i/∂x_j with step h·max(1, |x_j|).
pub fn jacobian_fd(field: &[Expr], x: &[f64], u: &[f64], t: f64, h: f64) -> Result<Matrix, DslError> {
    if !(h > 0.0) {
        return Err(DslError::Invalid(format!("step must be positive, got {h}")));
    }
    let (m, n) = (field.len(), x.len());
    let mut jac = Matrix::zeros(m, n);
    let mut xp = x.to_vec();
    for j in 0..n {
        let step = h * x[j].abs().max(1.0);
        xp[j] = x[j] + step;
        let fp: Vec<f64> = field.iter().map(|e| e.eval(&Env::new(&xp, u, t))).collect();
        xp[j] = x[j] - step;
        let fm: Vec<f64> = field.iter().map(|e| e.eval(&Env::new(&xp, u, t))).collect();
        xp[j] = x[j];
        for i in 0..m {
            let d = (fp[i] - fm[i]) / (2.0 * step);
            if !d.is_finite() {
                return Err(DslError::NonFinite(format!("d f{}/d x{} at x = {x:?}", i + 1, j + 1)));
            }
            jac[(i, j)] = d;
        }
    }
    Ok(jac)
}

/// Largest Jacobian spectral norm over the box center and `samples`
/// seeded uniform points, with u = 0 and t = 0.
pub fn sup_jacobian_norm(field: &[Expr], region: &Region, samples: usize, seed: u64) -> Result<f64, DslError> {
    let u = vec![0.0; input_count(field)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = spectral_norm(&jacobian_fd(field, &region.center(), &u, 0.0, 1e-5)?);
    for _ in 0..samples {
        let p: Vec<f64> = region
            .lo
            .iter()
            .zip(&region.hi)
            .map(|(&a, &b)| if a == b { a } else { rng.gen_range(a..=b) })
            .collect();
        best = best.max(spectral_norm(&jacobian_fd(field, &p, &u, 0.0, 1e-5)?));
    }
    Ok(best)
}

/// Sampled Lipschitz constant of `field` over `region`, inflated by
/// [`LIPSCHITZ_SAFETY`]. Points are drawn with the given seed.
pub fn lipschitz_estimate(field: &[Expr], region: &Region, samples: usize, seed: u64) -> Result<f64, DslError> {
    if samples < MIN_SAMPLES {
        return Err(DslError::Invalid(format!("need at least {MIN_SAMPLES} samples, got {samples}")));
    }
    Ok(LIPSCHITZ_SAFETY * sup_jacobian_norm(field, region, samples, seed)?)
}

fn input_count(field: &[Expr]) -> usize {
    super::dependencies(field).inputs.iter().next_back().map_or(0, |i| i + 1)
}
