use super::{check_tolerance, richardson_estimate, FracError, FractionalOrder, Operators, Trajectory};
use crate::report::CheckReport;

/// Allowed growth of the Newton–Leibniz constant between the two grids.
pub const NEWTON_LEIBNIZ_SAFETY: f64 = 2.0;

fn abs_scale(t: &Trajectory) -> f64 {
    t.max_abs().max(1.0)
}

/// ABC ≤ ABR on the whole grid for scalar x with x(t0) ≥ 0.
///
/// `worst_margin` is max(ABC − ABR).
pub fn check_lemma2_inequality(x: &Trajectory, ord: FractionalOrder) -> Result<CheckReport, FracError> {
    x.require_scalar()?;
    if x.sample(0)[0] < 0.0 {
        return Err(FracError::Precondition(format!(
            "x(t0) must be nonnegative, got {}",
            x.sample(0)[0]
        )));
    }
    let ops = Operators::for_trajectory(ord, x)?;
    let abc = ops.abc_derivative(x)?;
    let abr = ops.abr_derivative(x)?;
    let margins = abc.sub(&abr)?.values()?;
    let est = richardson_estimate(x, |y| super::abc_derivative(y, ord))?;
    let tol = check_tolerance(abs_scale(&abr).max(abs_scale(&abc)), est);
    Ok(CheckReport::from_margins("lemma2_abc_le_abr", &x.times(), &margins, tol)
        .with_detail("quadrature_estimate", est))
}

/// Tolerance of the ABR/ABC relation, relative to the largest ABR value.
pub const ABR_RELATION_TOL: f64 = 1e-12;

/// ABR − ABC = B/(1−α)·x(t0)·E_α(−α/(1−α)(t−t0)^α), with the kernel
/// evaluated directly rather than through the cached weights.
pub fn check_abr_relation(x: &Trajectory, ord: FractionalOrder) -> Result<CheckReport, FracError> {
    let ops = Operators::for_trajectory(ord, x)?;
    let abc = ops.abc_derivative(x)?;
    let abr = ops.abr_derivative(x)?;
    let (alpha, b) = (ord.alpha(), ord.b());
    let x0 = x.sample(0).to_vec();
    let mut margins = Vec::with_capacity(x.len());
    for k in 0..x.len() {
        let t = k as f64 * x.dt();
        let kernel = crate::mlf::ml_one(alpha, -alpha / (1.0 - alpha) * t.powf(alpha))?;
        let worst = (0..x.dim())
            .map(|j| (abr.sample(k)[j] - abc.sample(k)[j] - b / (1.0 - alpha) * x0[j] * kernel).abs())
            .fold(0.0, f64::max);
        margins.push(worst);
    }
    let tol = ABR_RELATION_TOL * abs_scale(&abr);
    Ok(CheckReport::from_margins("abr_relation", &x.times(), &margins, tol))
}

/// Target order of the starting weights used by the Newton–Leibniz check.
const NEWTON_LEIBNIZ_ORDER: f64 = 1.9;

/// Residual of AB-I(ABC-D x) = x − x(t0), per component norm.
///
/// The ABC derivative of smooth data behaves like Σ c_j (t−t0)^{1+jα} near
/// t0, so the integral carries starting weights for those exponents.
fn newton_leibniz_residual(x: &Trajectory, ord: FractionalOrder) -> Result<Trajectory, FracError> {
    let exps = super::singular_exponents(ord.alpha(), 1.0, NEWTON_LEIBNIZ_ORDER);
    let ops = Operators::with_starting_exponents(ord, x.dt(), x.len(), &exps)?;
    let recovered = ops.ab_integral(&ops.abc_derivative(x)?)?;
    let x0 = x.sample(0).to_vec();
    let increment = x.map(x.dim(), |s| s.iter().zip(&x0).map(|(v, v0)| v - v0).collect());
    Ok(recovered.sub(&increment)?.norms())
}

/// Newton–Leibniz formula AB-I(ABC-D x) = x − x(t0).
///
/// The residual r is computed on the given grid and on the grid with every
/// other sample. The constant C = max|r_coarse| / (2dt)² is estimated from
/// the coarse grid, and the check passes iff max|r| ≤ SAFETY·C·dt²
/// (or below the 1e-8·scale floor). `details` carries C and the observed
/// order log2(max|r_coarse| / max|r|).
pub fn check_newton_leibniz(x: &Trajectory, ord: FractionalOrder) -> Result<CheckReport, FracError> {
    if x.len() < 5 {
        return Err(FracError::TooShort { need: 5, got: x.len() });
    }
    let fine = newton_leibniz_residual(x, ord)?;
    let coarse = newton_leibniz_residual(&x.decimate(2)?, ord)?;
    let dt = x.dt();
    let r_fine = fine.max_abs();
    let r_coarse = coarse.max_abs();
    let constant = r_coarse / (4.0 * dt * dt);
    let tol = f64::max(1e-8 * abs_scale(x), NEWTON_LEIBNIZ_SAFETY * constant * dt * dt);
    let order = if r_fine > 0.0 && r_coarse > 0.0 {
        (r_coarse / r_fine).log2()
    } else {
        f64::NAN
    };
    let mut report = CheckReport::from_margins("newton_leibniz", &x.times(), &fine.values()?, tol)
        .with_detail("constant", constant)
        .with_detail("residual", r_fine);
    if order.is_finite() {
        report = report.with_detail("observed_order", order);
    }
    Ok(report)
}

/// ‖AB-I x‖ ≤ AB-I ‖x‖ pointwise (Euclidean norm).
///
/// `worst_margin` is max(‖AB-I x‖ − AB-I ‖x‖).
pub fn check_integral_norm_inequality(x: &Trajectory, ord: FractionalOrder) -> Result<CheckReport, FracError> {
    let ops = Operators::for_trajectory(ord, x)?;
    let lhs = ops.ab_integral(x)?.norms();
    let norms = x.norms();
    let rhs = ops.ab_integral(&norms)?;
    let margins = lhs.sub(&rhs)?.values()?;
    let est = richardson_estimate(&norms, |y| super::ab_integral(y, ord))?;
    let tol = check_tolerance(abs_scale(&rhs), est);
    Ok(CheckReport::from_margins("integral_norm_bound", &x.times(), &margins, tol)
        .with_detail("quadrature_estimate", est))
}
