//! Atangana–Baleanu operators on uniformly sampled trajectories.
//!
//! * `rl_integral`: Riemann–Liouville integral, product trapezoid rule.
//! * `ab_integral`: (1−α)/B·x + α/B·I^α x.
//! * `abc_derivative`: B/(1−α)·∫ x′(τ) E_α(−α/(1−α)(t−τ)^α) dτ with x taken
//!   piecewise linear between samples and the kernel integrated exactly.
//! * `abr_derivative`: the ABC value plus B/(1−α)·x(t0)·E_α(−α/(1−α)(t−t0)^α).
//!
//! All four are second order in dt for smooth data. Quadrature tables depend
//! only on (α, B, dt, N) and can be reused through [`Operators`].

mod checks;
mod trajectory;
mod weights;

pub use checks::{
    check_integral_norm_inequality, check_abr_relation, check_lemma2_inequality, check_newton_leibniz,
    ABR_RELATION_TOL, NEWTON_LEIBNIZ_SAFETY,
};
pub use trajectory::Trajectory;
pub use weights::{singular_exponents, AbcWeights, RlWeights, StartingWeights, MAX_STARTING_EXPONENTS};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mlf::MlError;

#[derive(Debug, Error)]
pub enum FracError {
    #[error(transparent)]
    Ml(#[from] MlError),
    #[error("trajectory too short: need at least {need} samples, got {got}")]
    TooShort { need: usize, got: usize },
    #[error("invalid fractional order: {0}")]
    InvalidOrder(String),
    #[error("invalid trajectory: {0}")]
    Invalid(String),
    #[error("grid mismatch: (t0, dt, N) = {left:?} vs {right:?}")]
    GridMismatch {
        left: (f64, f64, usize),
        right: (f64, f64, usize),
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("csv: {0}")]
    Csv(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Order α ∈ (0, 1) together with the normalization value B(α) > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawOrder", into = "RawOrder")]
pub struct FractionalOrder {
    alpha: f64,
    b: f64,
}

#[derive(Serialize, Deserialize)]
struct RawOrder {
    alpha: f64,
    #[serde(rename = "B", default = "unit_b")]
    b: f64,
}

fn unit_b() -> f64 {
    1.0
}

impl TryFrom<RawOrder> for FractionalOrder {
    type Error = FracError;
    fn try_from(r: RawOrder) -> Result<Self, FracError> {
        FractionalOrder::new(r.alpha, r.b)
    }
}

impl From<FractionalOrder> for RawOrder {
    fn from(o: FractionalOrder) -> Self {
        RawOrder { alpha: o.alpha, b: o.b }
    }
}

impl FractionalOrder {
    pub fn new(alpha: f64, b: f64) -> Result<Self, FracError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(FracError::InvalidOrder(format!(
                "alpha must lie in (0, 1), got {alpha}"
            )));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(FracError::InvalidOrder(format!("B(alpha) must be positive, got {b}")));
        }
        Ok(Self { alpha, b })
    }

    /// B(α) = 1.
    pub fn unit(alpha: f64) -> Result<Self, FracError> {
        Self::new(alpha, 1.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// α/(1−α), the rate inside the Mittag-Leffler kernel.
    pub fn kernel_rate(&self) -> f64 {
        self.alpha / (1.0 - self.alpha)
    }

    /// The kernel E_α(−α/(1−α)·r^α) at lag r ≥ 0.
    pub fn kernel(&self, r: f64) -> Result<f64, FracError> {
        Ok(crate::mlf::ml_one(self.alpha, -self.kernel_rate() * r.powf(self.alpha))?)
    }
}

/// Quadrature tables for one (order, dt, N) combination.
#[derive(Debug, Clone)]
pub struct Operators {
    ord: FractionalOrder,
    rl: RlWeights,
    abc: AbcWeights,
}

impl Operators {
    pub fn new(ord: FractionalOrder, dt: f64, len: usize) -> Result<Self, FracError> {
        Ok(Self {
            ord,
            rl: RlWeights::new(ord.alpha(), dt, len)?,
            abc: AbcWeights::new(ord, dt, len)?,
        })
    }

    pub fn for_trajectory(ord: FractionalOrder, x: &Trajectory) -> Result<Self, FracError> {
        Self::new(ord, x.dt(), x.len())
    }

    /// Like [`Operators::new`], with the integrals carrying starting weights
    /// for the given non-integer exponents of the integrand near t0.
    pub fn with_starting_exponents(
        ord: FractionalOrder,
        dt: f64,
        len: usize,
        exponents: &[f64],
    ) -> Result<Self, FracError> {
        Ok(Self {
            ord,
            rl: RlWeights::with_starting_weights(ord.alpha(), dt, len, exponents)?,
            abc: AbcWeights::new(ord, dt, len)?,
        })
    }

    pub fn order(&self) -> FractionalOrder {
        self.ord
    }

    pub fn rl_weights(&self) -> &RlWeights {
        &self.rl
    }

    pub fn abc_weights(&self) -> &AbcWeights {
        &self.abc
    }

    fn check_grid(&self, x: &Trajectory) -> Result<(), FracError> {
        if (x.dt() - self.rl.dt()).abs() > 1e-12 * x.dt() || x.len() > self.rl.capacity() {
            return Err(FracError::GridMismatch {
                left: (x.t0(), x.dt(), x.len()),
                right: (x.t0(), self.rl.dt(), self.rl.capacity()),
            });
        }
        Ok(())
    }

    pub fn rl_integral(&self, x: &Trajectory) -> Result<Trajectory, FracError> {
        self.check_grid(x)?;
        rl_with(&self.rl, x)
    }

    pub fn ab_integral(&self, x: &Trajectory) -> Result<Trajectory, FracError> {
        let rl = self.rl_integral(x)?;
        Ok(ab_combine(self.ord, x, &rl))
    }

    pub fn abc_derivative(&self, x: &Trajectory) -> Result<Trajectory, FracError> {
        self.check_grid(x)?;
        if x.len() < 3 {
            return Err(FracError::TooShort { need: 3, got: x.len() });
        }
        let dim = x.dim();
        let mut out = Trajectory::zeros(x.t0(), x.dt(), x.len(), dim)?;
        for k in 1..x.len() {
            self.abc.derivative_at(k, x.as_flat(), dim, out.sample_mut(k));
        }
        Ok(out)
    }

    pub fn abr_derivative(&self, x: &Trajectory) -> Result<Trajectory, FracError> {
        let mut out = self.abc_derivative(x)?;
        self.add_initial_value_term(x, &mut out);
        Ok(out)
    }

    /// Adds B/(1−α)·x(t0)·K(t − t0) to `out`.
    fn add_initial_value_term(&self, x: &Trajectory, out: &mut Trajectory) {
        let s = self.ord.b() / (1.0 - self.ord.alpha());
        let x0 = x.sample(0).to_vec();
        let kernel = self.abc.kernel();
        for k in 0..x.len() {
            for (o, &v) in out.sample_mut(k).iter_mut().zip(&x0) {
                *o += s * v * kernel[k];
            }
        }
    }
}

fn rl_with(w: &RlWeights, x: &Trajectory) -> Result<Trajectory, FracError> {
    let dim = x.dim();
    let mut out = Trajectory::zeros(x.t0(), x.dt(), x.len(), dim)?;
    let data = x.as_flat();
    for k in 1..x.len() {
        w.trapezoid_at(k, data, dim, out.sample_mut(k));
    }
    Ok(out)
}

fn ab_combine(ord: FractionalOrder, x: &Trajectory, rl: &Trajectory) -> Trajectory {
    let (a, b) = (ord.alpha(), ord.b());
    let local = (1.0 - a) / b;
    let memory = a / b;
    x.zip_with(rl, |xv, rv| local * xv + memory * rv)
        .expect("same grid by construction")
}

/// Riemann–Liouville integral of order `alpha` > 0 (α ≥ 1 allowed).
pub fn rl_integral(x: &Trajectory, alpha: f64) -> Result<Trajectory, FracError> {
    rl_with(&RlWeights::new(alpha, x.dt(), x.len())?, x)
}

/// AB fractional integral.
pub fn ab_integral(x: &Trajectory, ord: FractionalOrder) -> Result<Trajectory, FracError> {
    let rl = rl_integral(x, ord.alpha())?;
    Ok(ab_combine(ord, x, &rl))
}

/// AB derivative in the Caputo sense.
pub fn abc_derivative(x: &Trajectory, ord: FractionalOrder) -> Result<Trajectory, FracError> {
    if x.len() < 3 {
        return Err(FracError::TooShort { need: 3, got: x.len() });
    }
    Operators::for_trajectory(ord, x)?.abc_derivative(x)
}

/// AB derivative in the Riemann–Liouville sense.
pub fn abr_derivative(x: &Trajectory, ord: FractionalOrder) -> Result<Trajectory, FracError> {
    if x.len() < 3 {
        return Err(FracError::TooShort { need: 3, got: x.len() });
    }
    Operators::for_trajectory(ord, x)?.abr_derivative(x)
}

/// Operator selector for code that treats the derivatives uniformly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Derivative {
    Abc,
    Abr,
}

impl Derivative {
    pub fn apply(self, x: &Trajectory, ord: FractionalOrder) -> Result<Trajectory, FracError> {
        match self {
            Derivative::Abc => abc_derivative(x, ord),
            Derivative::Abr => abr_derivative(x, ord),
        }
    }
}

/// Discretization error estimate for a second-order grid operator: the max
/// difference between the result on the grid with every other sample and
/// the full-grid result at shared points, divided by 3. Zero when the grid
/// is too short to thin.
pub fn richardson_estimate(
    x: &Trajectory,
    op: impl Fn(&Trajectory) -> Result<Trajectory, FracError>,
) -> Result<f64, FracError> {
    if x.len() < 5 {
        return Ok(0.0);
    }
    let fine = op(x)?;
    let coarse = op(&x.decimate(2)?)?;
    let mut est = 0.0_f64;
    for i in 0..coarse.len() {
        for (a, b) in coarse.sample(i).iter().zip(fine.sample(2 * i)) {
            est = est.max((a - b).abs());
        }
    }
    Ok(est / 3.0)
}

/// Check tolerance: max(1e-8·scale, 10·estimate).
pub fn check_tolerance(scale: f64, estimate: f64) -> f64 {
    f64::max(1e-8 * scale.max(1.0), 10.0 * estimate)
}
