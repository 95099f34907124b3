//! Mittag-Leffler envelopes, Lyapunov monitors and the ABC inequality suite.
//!
//! An [`Envelope`] is the bound M·[E_α(−c·t^α)]^d with t measured from the
//! start of the trajectory it is compared against. Growth bounds for
//! Lipschitz systems use a negative rate.
//!
//! Every check returns a [`CheckReport`]. Violated preconditions (a negative
//! Lyapunov sample, a non-monotone weight) are errors, never failed checks.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fracops::{
    check_tolerance, richardson_estimate, Derivative, FracError, FractionalOrder, Operators, Trajectory,
};
use crate::linalg::{is_positive_definite, is_symmetric, Matrix};
use crate::mlf::{gamma, ml_one, MlError};
use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum StabilityError {
    #[error(transparent)]
    Frac(#[from] FracError),
    #[error(transparent)]
    Ml(#[from] MlError),
    #[error("bound inapplicable: {0}")]
    Inapplicable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

/// t ↦ M·[E_α(−c·t^α)]^d.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub coeff: f64,
    /// Negative for growth envelopes.
    pub rate: f64,
    pub power: f64,
    pub alpha: f64,
}

impl Envelope {
    pub fn new(coeff: f64, rate: f64, power: f64, alpha: f64) -> Result<Self, StabilityError> {
        if !(coeff >= 0.0 && coeff.is_finite()) {
            return Err(StabilityError::Invalid(format!("envelope coefficient must be >= 0, got {coeff}")));
        }
        if !rate.is_finite() {
            return Err(StabilityError::Invalid(format!("envelope rate must be finite, got {rate}")));
        }
        if !(power > 0.0 && power.is_finite()) {
            return Err(StabilityError::Invalid(format!("envelope power must be > 0, got {power}")));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(StabilityError::Invalid(format!("alpha must lie in (0, 1), got {alpha}")));
        }
        Ok(Self { coeff, rate, power, alpha })
    }

    /// Value at elapsed time `t ≥ 0`.
    pub fn eval(&self, t: f64) -> Result<f64, StabilityError> {
        if self.coeff == 0.0 {
            return Ok(0.0);
        }
        let e = ml_one(self.alpha, -self.rate * t.max(0.0).powf(self.alpha))?;
        Ok(self.coeff * e.powf(self.power))
    }

    /// Values on the grid of `x`, with elapsed time t_k − t0.
    pub fn sample(&self, x: &Trajectory) -> Result<Vec<f64>, StabilityError> {
        (0..x.len()).map(|k| self.eval(k as f64 * x.dt())).collect()
    }

    pub fn is_decaying(&self) -> bool {
        self.rate >= 0.0
    }
}

/// Growth bound for f Lipschitz with constant κ:
/// ‖x(t)‖ ≤ B/(B−κ(1−α))·‖x0‖·E_α(κα/(B−κ(1−α))·t^α).
pub fn growth_envelope(kappa: f64, x0_norm: f64, ord: FractionalOrder) -> Result<Envelope, StabilityError> {
    if !(kappa >= 0.0) || !(x0_norm >= 0.0) {
        return Err(StabilityError::Invalid(format!(
            "kappa and |x0| must be nonnegative, got {kappa} and {x0_norm}"
        )));
    }
    let (alpha, b) = (ord.alpha(), ord.b());
    let denom = b - kappa * (1.0 - alpha);
    if denom <= 0.0 {
        return Err(StabilityError::Inapplicable(format!(
            "B = {b} must exceed kappa(1 - alpha) = {}",
            kappa * (1.0 - alpha)
        )));
    }
    Envelope::new(b / denom * x0_norm, -kappa * alpha / denom, 1.0, alpha)
}

/// Constants of a Lyapunov certificate α1‖x‖^a ≤ V ≤ α2‖x‖^{ab},
/// ABC-D V ≤ −α3‖x‖^{ab}, and the derived decay constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LyapunovConditions {
    pub a: f64,
    pub b: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub ord: FractionalOrder,
}

impl LyapunovConditions {
    pub fn new(a: f64, b: f64, alpha1: f64, alpha2: f64, alpha3: f64, ord: FractionalOrder) -> Result<Self, StabilityError> {
        for (name, v) in [("a", a), ("b", b), ("alpha1", alpha1), ("alpha2", alpha2), ("alpha3", alpha3)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(StabilityError::Invalid(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { a, b, alpha1, alpha2, alpha3, ord })
    }

    /// γ = (1−α)/B·α3/α2.
    pub fn gamma(&self) -> f64 {
        (1.0 - self.ord.alpha()) / self.ord.b() * self.alpha3 / self.alpha2
    }

    /// κ0 = γα/((γ+1)(1−α)), the decay rate of V.
    pub fn kappa0(&self) -> f64 {
        let (g, al) = (self.gamma(), self.ord.alpha());
        g * al / ((g + 1.0) * (1.0 - al))
    }

    /// κ1 = V(t0)/(γ+1).
    pub fn kappa1(&self, v0: f64) -> f64 {
        v0 / (self.gamma() + 1.0)
    }

    /// κ2 = (1−α)/(B(γ+1)).
    pub fn kappa2(&self) -> f64 {
        (1.0 - self.ord.alpha()) / (self.ord.b() * (self.gamma() + 1.0))
    }

    /// κ3 = α/(B(γ+1)).
    pub fn kappa3(&self) -> f64 {
        self.ord.alpha() / (self.ord.b() * (self.gamma() + 1.0))
    }
}

/// ‖x(t)‖ ≤ [α2/(α1(γ+1))·‖x0‖^{ab}·E_α(−κ0 t^α)]^{1/a}.
pub fn ml_stability_envelope(
    cond: &LyapunovConditions,
    x0_norm: f64,
    ord: FractionalOrder,
) -> Result<Envelope, StabilityError> {
    if ord != cond.ord {
        return Err(StabilityError::Invalid("conditions were built for a different order".into()));
    }
    if !(x0_norm >= 0.0) {
        return Err(StabilityError::Invalid(format!("|x0| must be nonnegative, got {x0_norm}")));
    }
    let m = (cond.alpha2 / (cond.alpha1 * (cond.gamma() + 1.0)) * x0_norm.powf(cond.a * cond.b)).powf(1.0 / cond.a);
    Envelope::new(m, cond.kappa0(), 1.0 / cond.a, ord.alpha())
}

/// ‖err(t_k)‖ ≤ env(t_k)·(1 + tol) on the whole grid.
///
/// Margins are ‖err‖/env − 1; `details.slack` is 1 minus the worst ratio.
pub fn check_ml_bound(err: &Trajectory, env: &Envelope, tol: f64) -> Result<CheckReport, StabilityError> {
    let bound = env.sample(err)?;
    let margins: Vec<f64> = err
        .norms()
        .as_flat()
        .iter()
        .zip(&bound)
        .map(|(&e, &b)| match (e, b) {
            (e, _) if e == 0.0 => -1.0,
            (_, b) if b == 0.0 => f64::INFINITY,
            (e, b) => e / b - 1.0,
        })
        .collect();
    let report = CheckReport::from_margins("ml_bound", &err.times(), &margins, tol);
    let slack = -report.worst_margin;
    Ok(report
        .with_detail("slack", json_number(slack))
        .with_detail("coeff", env.coeff)
        .with_detail("rate", env.rate)
        .with_detail("power", env.power))
}

/// Non-finite floats have no JSON representation; they become null.
fn json_number(v: f64) -> serde_json::Value {
    serde_json::Number::from_f64(v).map_or(serde_json::Value::Null, serde_json::Value::Number)
}

fn scale_of(values: &[f64]) -> f64 {
    values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

/// Comparison lemma: ABC-D x ≥ ABC-D y and x(t0) = y(t0) imply x ≥ y.
///
/// The check passes unless derivative dominance holds (to tolerance) while
/// the ordering fails. The ordering tolerance is the derivative tolerance
/// propagated through the AB integral. `details` carries both verdicts.
pub fn check_comparison(x: &Trajectory, y: &Trajectory, ord: FractionalOrder) -> Result<CheckReport, StabilityError> {
    x.require_scalar()?;
    y.require_scalar()?;
    x.require_same_grid(y)?;
    let xs = x.values()?;
    let ys = y.values()?;
    let value_scale = scale_of(&xs).max(scale_of(&ys)).max(1.0);
    let start_gap = (xs[0] - ys[0]).abs();
    if start_gap > 1e-8 * value_scale {
        return Err(StabilityError::Precondition(format!(
            "x(t0) and y(t0) differ by {start_gap}"
        )));
    }
    let ops = Operators::for_trajectory(ord, x)?;
    let dx = ops.abc_derivative(x)?.values()?;
    let dy = ops.abc_derivative(y)?.values()?;
    let abc = |z: &Trajectory| crate::fracops::abc_derivative(z, ord);
    let est = richardson_estimate(x, abc)?.max(richardson_estimate(y, abc)?);
    let deriv_tol = check_tolerance(scale_of(&dx).max(scale_of(&dy)), est);
    let dominance = dx.iter().zip(&dy).all(|(a, b)| *a >= b - deriv_tol);

    let (alpha, b) = (ord.alpha(), ord.b());
    let span = x.t_end() - x.t0();
    let propagated = deriv_tol * ((1.0 - alpha) / b + alpha / b * span.powf(alpha) / gamma(1.0 + alpha)?);
    let order_tol = propagated.max(1e-8 * value_scale);
    let gaps: Vec<f64> = ys.iter().zip(&xs).map(|(y, x)| y - x).collect();
    let mut report = CheckReport::from_margins("comparison", &x.times(), &gaps, order_tol);
    let ordering = report.pass;
    report.pass = !dominance || ordering;
    Ok(report
        .with_detail("dominance", dominance)
        .with_detail("ordering", ordering)
        .with_detail("derivative_tol", deriv_tol))
}

/// Class-K comparison function s ↦ c·s^p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassK {
    pub c: f64,
    pub p: f64,
}

impl ClassK {
    pub fn new(c: f64, p: f64) -> Result<Self, StabilityError> {
        if !(c > 0.0 && c.is_finite() && p > 0.0 && p.is_finite()) {
            return Err(StabilityError::Invalid(format!("class-K power law needs c, p > 0, got c = {c}, p = {p}")));
        }
        Ok(Self { c, p })
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.c * s.powf(self.p)
    }
}

/// D V(t_k) ≤ −γ3(‖x(t_k)‖) for k ≥ 1, with D the ABC or ABR derivative.
///
/// The first sample is skipped: every derivative vanishes at t0 while
/// −γ3(‖x(t0)‖) < 0 whenever x(t0) ≠ 0.
pub fn lyapunov_monitor(
    v: &Trajectory,
    x: &Trajectory,
    gamma3: &ClassK,
    ord: FractionalOrder,
    op: Derivative,
) -> Result<CheckReport, StabilityError> {
    v.require_scalar()?;
    v.require_same_grid(x)?;
    let vs = v.values()?;
    if let Some((k, bad)) = vs.iter().enumerate().find(|(_, s)| !(**s >= 0.0)) {
        return Err(StabilityError::Precondition(format!(
            "V must be nonnegative, got {bad} at t = {}",
            v.time(k)
        )));
    }
    let dv = op.apply(v, ord)?.values()?;
    let est = richardson_estimate(v, |z| op.apply(z, ord))?;
    let norms = x.norms();
    let bound: Vec<f64> = norms.as_flat().iter().map(|&s| gamma3.eval(s)).collect();
    let margins: Vec<f64> = dv.iter().zip(&bound).map(|(d, g)| d + g).skip(1).collect();
    let tol = check_tolerance(scale_of(&dv).max(scale_of(&bound)), est);
    let times = &v.times()[1..];
    Ok(CheckReport::from_margins("lyapunov_monitor", times, &margins, tol).with_detail("quadrature_estimate", est))
}

/// Selector for the inequality suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Inequality {
    /// ½·D(x²) ≤ x·D x.
    E36,
    /// φ decreasing, x ≥ 0: D(φx) ≤ φ·D x.
    E38,
    /// φ increasing, x ≥ 0: D(φx) ≥ φ·D x.
    E39,
    /// φ decreasing, x ≥ 0 componentwise: D(φᵀx) ≤ φᵀ·D x.
    E40,
    /// φ ≥ 0 decreasing: D(φx²) ≤ 2φx·D x.
    E41,
    /// φ ≥ 0 decreasing, P SPD: D(φ·xᵀPx) ≤ 2φ·xᵀP·D x.
    E42,
    /// P SPD: D(xᵀPx) ≤ 2xᵀP·D x.
    E43,
}

impl Inequality {
    pub const ALL: [Inequality; 7] = [
        Inequality::E36,
        Inequality::E38,
        Inequality::E39,
        Inequality::E40,
        Inequality::E41,
        Inequality::E42,
        Inequality::E43,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Inequality::E36 => "E36",
            Inequality::E38 => "E38",
            Inequality::E39 => "E39",
            Inequality::E40 => "E40",
            Inequality::E41 => "E41",
            Inequality::E42 => "E42",
            Inequality::E43 => "E43",
        }
    }

    pub fn needs_phi(self) -> bool {
        !matches!(self, Inequality::E36 | Inequality::E43)
    }

    pub fn needs_matrix(self) -> bool {
        matches!(self, Inequality::E42 | Inequality::E43)
    }

    /// Whether x (and φ for E40) must be vector valued rather than scalar.
    pub fn vector_x(self) -> bool {
        matches!(self, Inequality::E40 | Inequality::E42 | Inequality::E43)
    }
}

impl std::str::FromStr for Inequality {
    type Err = StabilityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Inequality::ALL
            .into_iter()
            .find(|i| i.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| StabilityError::Invalid(format!("unknown inequality '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Monotone {
    Decreasing,
    Increasing,
}

fn require_monotone(phi: &Trajectory, dir: Monotone) -> Result<(), StabilityError> {
    let slack = 1e-12 * phi.max_abs().max(1.0);
    for j in 0..phi.dim() {
        let c = phi.component(j);
        for k in 1..c.len() {
            let step = c[k] - c[k - 1];
            let bad = match dir {
                Monotone::Decreasing => step > slack,
                Monotone::Increasing => step < -slack,
            };
            if bad {
                return Err(StabilityError::Precondition(format!(
                    "phi component {} is not {} at t = {}",
                    j + 1,
                    if dir == Monotone::Decreasing { "nonincreasing" } else { "nondecreasing" },
                    phi.time(k)
                )));
            }
        }
    }
    Ok(())
}

fn require_nonnegative(x: &Trajectory, name: &str) -> Result<(), StabilityError> {
    match x.as_flat().iter().position(|v| !(*v >= 0.0)) {
        Some(i) => Err(StabilityError::Precondition(format!(
            "{name} must be nonnegative, violated at t = {}",
            x.time(i / x.dim())
        ))),
        None => Ok(()),
    }
}

fn require_dim(x: &Trajectory, dim: usize, name: &str) -> Result<(), StabilityError> {
    if x.dim() != dim {
        return Err(StabilityError::Precondition(format!(
            "{name} must have dimension {dim}, got {}",
            x.dim()
        )));
    }
    Ok(())
}

fn quadratic(p: &Matrix, a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[i] * p[(i, j)] * b[j]).sum::<f64>()).sum()
}

/// Evaluates one of the weighted ABC inequalities on the samples.
///
/// `worst_margin` is max(LHS − RHS) with the inequality oriented as LHS ≤
/// RHS (E39 is flipped). Preconditions of the selected lemma are checked on
/// the samples first and reported as errors.
pub fn inequality_suite(
    phi: Option<&Trajectory>,
    x: &Trajectory,
    p: Option<&Matrix>,
    ord: FractionalOrder,
    which: Inequality,
) -> Result<CheckReport, StabilityError> {
    let phi = match (which.needs_phi(), phi) {
        (true, Some(phi)) => {
            phi.require_same_grid(x)?;
            Some(phi)
        }
        (true, None) => return Err(StabilityError::Precondition(format!("{} needs phi", which.name()))),
        (false, _) => None,
    };
    let p = match (which.needs_matrix(), p) {
        (true, Some(p)) => {
            if p.nrows() != x.dim() || p.ncols() != x.dim() {
                return Err(StabilityError::Precondition(format!(
                    "P must be {0}x{0}, got {1}x{2}",
                    x.dim(),
                    p.nrows(),
                    p.ncols()
                )));
            }
            if !is_symmetric(p, 1e-12 * p.amax().max(1.0)) || !is_positive_definite(p) {
                return Err(StabilityError::Precondition("P must be symmetric positive definite".into()));
            }
            Some(p)
        }
        (true, None) => return Err(StabilityError::Precondition(format!("{} needs P", which.name()))),
        (false, _) => None,
    };
    if !which.vector_x() {
        require_dim(x, 1, "x")?;
    }
    if let Some(phi) = phi {
        require_dim(phi, if which == Inequality::E40 { x.dim() } else { 1 }, "phi")?;
        let dir = if which == Inequality::E39 { Monotone::Increasing } else { Monotone::Decreasing };
        require_monotone(phi, dir)?;
        if matches!(which, Inequality::E41 | Inequality::E42) {
            require_nonnegative(phi, "phi")?;
        }
    }
    if matches!(which, Inequality::E38 | Inequality::E39 | Inequality::E40) {
        require_nonnegative(x, "x")?;
    }

    let ops = Operators::for_trajectory(ord, x)?;
    let dx = ops.abc_derivative(x)?;
    let phi_at = |k: usize| phi.map_or(1.0, |f| f.sample(k)[0]);
    // the combined signal whose derivative forms the left side
    let inner = match which {
        Inequality::E36 => x.map(1, |s| vec![0.5 * s[0] * s[0]]),
        Inequality::E38 | Inequality::E39 | Inequality::E41 => {
            let square = which == Inequality::E41;
            x.map_timed(1, |t, s| {
                let k = ((t - x.t0()) / x.dt()).round() as usize;
                vec![phi_at(k) * if square { s[0] * s[0] } else { s[0] }]
            })
        }
        Inequality::E40 => {
            let phi = phi.expect("checked above");
            x.map_timed(1, |t, s| {
                let k = ((t - x.t0()) / x.dt()).round() as usize;
                vec![phi.sample(k).iter().zip(s).map(|(a, b)| a * b).sum()]
            })
        }
        Inequality::E42 | Inequality::E43 => {
            let p = p.expect("checked above");
            x.map_timed(1, |t, s| {
                let k = ((t - x.t0()) / x.dt()).round() as usize;
                vec![phi_at(k) * quadratic(p, s, s)]
            })
        }
    };
    let lhs = ops.abc_derivative(&inner)?.values()?;
    let mut factor = 0.0_f64;
    let rhs: Vec<f64> = (0..x.len())
        .map(|k| {
            let (s, d) = (x.sample(k), dx.sample(k));
            let (value, f) = match which {
                Inequality::E36 => (s[0] * d[0], s[0]),
                Inequality::E38 | Inequality::E39 => (phi_at(k) * d[0], phi_at(k)),
                Inequality::E40 => {
                    let f = phi.expect("checked above").sample(k);
                    (f.iter().zip(d).map(|(a, b)| a * b).sum(), f.iter().fold(0.0, |m, v| m + v.abs()))
                }
                Inequality::E41 => (2.0 * phi_at(k) * s[0] * d[0], 2.0 * phi_at(k) * s[0]),
                Inequality::E42 | Inequality::E43 => {
                    let p = p.expect("checked above");
                    let w = 2.0 * phi_at(k) * s.iter().map(|v| v.abs()).sum::<f64>() * p.amax() * s.len() as f64;
                    (2.0 * phi_at(k) * quadratic(p, s, d), w)
                }
            };
            factor = factor.max(f.abs());
            value
        })
        .collect();
    let margins: Vec<f64> = match which {
        Inequality::E39 => rhs.iter().zip(&lhs).map(|(r, l)| r - l).collect(),
        _ => lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect(),
    };
    let abc = |z: &Trajectory| crate::fracops::abc_derivative(z, ord);
    let est = richardson_estimate(&inner, abc)? + factor * richardson_estimate(x, abc)?;
    let tol = check_tolerance(scale_of(&lhs).max(scale_of(&rhs)), est);
    Ok(CheckReport::from_margins(which.name(), &x.times(), &margins, tol).with_detail("quadrature_estimate", est))
}
