//! Mittag-Leffler observers: Luenberger-type for linear plants, high-gain
//! for triangular nonlinear plants, and a Lipschitz observer working in
//! the coordinates z = x − φ2(y).
//!
//! Each `simulate_*` runs plant and observer jointly, fits an envelope
//! M·E_α(−ĉt^α) to the error norm and monitors the ABC derivative of the
//! quadratic certificate along the run.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fracops::{Derivative, FracError, FractionalOrder, Trajectory};
use crate::linalg::{
    is_hurwitz, is_positive_definite, lyapunov_residual, shift_gain, solve_lyapunov, spectral_norm,
    symmetric_eig_range, to_rows, LinalgError, Matrix,
};
use crate::mlf::ml_one;
use crate::report::CheckReport;
use crate::solver::{integrate_coupled, Ivp, ObserverField, Plant, SolverError, SolverOptions};
use crate::stability::{
    check_ml_bound, lyapunov_monitor, ml_stability_envelope, ClassK, Envelope, LyapunovConditions, StabilityError,
};
use crate::sysdsl::{
    eval_outputs, mat_vec, sup_jacobian_norm, Decomposition, DslError, Drift, Env, Expr, OutputMap, Region, SystemDef,
};

/// Envelope tolerance used unless the caller overrides it.
pub const ENVELOPE_TOL: f64 = 2e-2;

/// Largest number of samples used to fit an envelope.
const FIT_POINTS: usize = 400;

/// Residual allowed in the Lipschitz-observer Lyapunov pair.
pub const LYAPUNOV_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum ObserverError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Stability(#[from] StabilityError),
    #[error(transparent)]
    Frac(#[from] FracError),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error("plant structure: {0}")]
    Structure(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObserverFamily {
    Linear,
    HighGain,
    Lipschitz,
}

/// How the linear observer gain is chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum GainChoice {
    Given(Matrix),
    /// Spectrum shift by σ, see [`shift_gain`].
    Shift(f64),
}

/// A constructed observer.
///
/// Certificate roles differ per family:
/// - linear: V = eᵀPe with PĀ + ĀᵀP = −Q;
/// - high-gain: V = ε̄ᵀQε̄ in ε̄ = Π(x̂ − x) with ĀᵀQ + QĀ = −I, P = I;
/// - Lipschitz: V = (z − x̂)ᵀQ(z − x̂) with QĀ + ĀᵀQ = −P.
///
/// For the Lipschitz family the observer state estimates z, and `xhat0`
/// is given in z-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ObserverSpec {
    pub family: ObserverFamily,
    pub a: Matrix,
    pub c: Matrix,
    pub gain: Matrix,
    /// Gain multiplying the innovation: K, or Π⁻¹K for high-gain.
    pub injection: Matrix,
    pub theta: Option<f64>,
    pub pi: Option<Matrix>,
    pub decomposition: Option<Decomposition>,
    pub p: Matrix,
    pub q: Matrix,
    pub xhat0: Vec<f64>,
}

impl ObserverSpec {
    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    /// Ā = A − KC.
    pub fn closed_loop(&self) -> Matrix {
        &self.a - &self.gain * &self.c
    }

    pub fn with_initial(mut self, xhat0: Vec<f64>) -> Result<Self, ObserverError> {
        if xhat0.len() != self.dim() {
            return Err(ObserverError::Invalid(format!(
                "observer initial state has dimension {}, expected {}",
                xhat0.len(),
                self.dim()
            )));
        }
        self.xhat0 = xhat0;
        Ok(self)
    }

    fn certificate(&self) -> Certificate {
        Certificate {
            gain: to_rows(&self.gain),
            p: to_rows(&self.p),
            q: to_rows(&self.q),
            pi: self.pi.as_ref().map(to_rows),
        }
    }
}

/// Matrices of the certificate in row-major form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub gain: Vec<Vec<f64>>,
    pub p: Vec<Vec<f64>>,
    pub q: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<Vec<f64>>>,
}

/// Envelope fitted to an error-norm trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeFit {
    pub envelope: Envelope,
    /// RMS of log(envelope/‖e‖) over the fit samples.
    pub log_rms: f64,
    pub fit_samples: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObserverReport {
    pub family: ObserverFamily,
    /// e = x − x̂; z − x̂ for the Lipschitz family.
    #[serde(skip)]
    pub error: Trajectory,
    #[serde(skip)]
    pub plant: Trajectory,
    #[serde(skip)]
    pub estimate: Trajectory,
    pub fit: EnvelopeFit,
    pub envelope_check: CheckReport,
    pub monitor: Option<CheckReport>,
    /// Envelope implied by the certificate through the stability theorem.
    pub certified: Option<Envelope>,
    pub certified_check: Option<CheckReport>,
    pub condition: Option<CheckReport>,
    pub certificate: Certificate,
    pub initial_error: f64,
    pub terminal_error: f64,
    pub warnings: Vec<String>,
    pub verdict: bool,
}

impl ObserverReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Simulation settings shared by the three families.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationOptions {
    pub ord: FractionalOrder,
    pub t0: f64,
    pub t_end: f64,
    pub dt: f64,
    pub solver: SolverOptions,
    /// Relative tolerance of the envelope check.
    pub envelope_tol: f64,
}

impl SimulationOptions {
    pub fn new(ord: FractionalOrder, t0: f64, t_end: f64, dt: f64) -> Self {
        Self {
            ord,
            t0,
            t_end,
            dt,
            solver: SolverOptions::default(),
            envelope_tol: ENVELOPE_TOL,
        }
    }

    fn ivp(&self, x0: Vec<f64>) -> Ivp {
        Ivp {
            x0,
            ord: self.ord,
            t0: self.t0,
            t_end: self.t_end,
            dt: self.dt,
        }
    }
}

/// Sampling data for sup ‖∇φ3‖.
#[derive(Debug, Clone, PartialEq)]
pub struct Sampling {
    pub region: Region,
    pub samples: usize,
    pub seed: u64,
}

fn require_linear_plant(system: &SystemDef) -> Result<(&Matrix, &Matrix), ObserverError> {
    match (&system.drift, &system.output) {
        (Drift::Linear(a), OutputMap::Linear(c)) => Ok((a, c)),
        _ => Err(ObserverError::Structure("plant needs a linear drift A and output C".into())),
    }
}

fn check_dims(a: &Matrix, c: &Matrix, k: &Matrix) -> Result<(), ObserverError> {
    let n = a.nrows();
    if a.ncols() != n || c.ncols() != n || k.nrows() != n || k.ncols() != c.nrows() {
        return Err(ObserverError::Invalid(format!(
            "dimensions do not match: A {}x{}, C {}x{}, K {}x{}",
            a.nrows(),
            a.ncols(),
            c.nrows(),
            c.ncols(),
            k.nrows(),
            k.ncols()
        )));
    }
    Ok(())
}

fn require_spd(m: &Matrix, what: &'static str) -> Result<(), ObserverError> {
    if !is_positive_definite(m) {
        return Err(LinalgError::NotPositiveDefinite(what).into());
    }
    Ok(())
}

/// Linear observer D x̂ = A·x̂ + B·u + K(y − C·x̂).
///
/// With an automatic gain the pair must be observable. A given K only
/// has to make Ā = A − KC Hurwitz.
pub fn design_linear(a: &Matrix, c: &Matrix, gain: GainChoice, q: &Matrix) -> Result<ObserverSpec, ObserverError> {
    let k = match gain {
        GainChoice::Given(k) => k,
        GainChoice::Shift(sigma) => shift_gain(a, c, sigma)?,
    };
    check_dims(a, c, &k)?;
    let abar = a - &k * c;
    let hurwitz = is_hurwitz(&abar, 0.0)?;
    if !hurwitz.hurwitz {
        return Err(LinalgError::NotHurwitz { abscissa: hurwitz.abscissa }.into());
    }
    let p = solve_lyapunov(&abar, q)?;
    let n = a.nrows();
    Ok(ObserverSpec {
        family: ObserverFamily::Linear,
        a: a.clone(),
        c: c.clone(),
        injection: k.clone(),
        gain: k,
        theta: None,
        pi: None,
        decomposition: None,
        p,
        q: q.clone(),
        xhat0: vec![0.0; n],
    })
}

/// Π(θ) = diag(θ, θ², …, θⁿ).
pub fn scaling_matrix(theta: f64, n: usize) -> Result<Matrix, ObserverError> {
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(ObserverError::Invalid(format!("theta must be positive, got {theta}")));
    }
    Ok(Matrix::from_diagonal(&nalgebra::DVector::from_fn(n, |i, _| theta.powi(i as i32 + 1))))
}

/// High-gain observer D x̂ = A·x̂ + φ(x̂, u) + Π⁻¹K(y − C·x̂) for a plant
/// in observability canonical form with lower-triangular φ.
pub fn build_high_gain(system: &SystemDef, k: &Matrix, theta: f64) -> Result<ObserverSpec, ObserverError> {
    let (a, c) = require_linear_plant(system)?;
    let n = system.dim;
    check_dims(a, c, k)?;
    let shift = Matrix::from_fn(n, n, |i, j| if j == i + 1 { 1.0 } else { 0.0 });
    if a != &shift {
        return Err(ObserverError::Structure("A must be the shift matrix".into()));
    }
    let e1 = Matrix::from_fn(1, n, |_, j| if j == 0 { 1.0 } else { 0.0 });
    if c != &e1 {
        return Err(ObserverError::Structure("C must be [1, 0, ..., 0]".into()));
    }
    if system.decomposition.is_some() {
        return Err(ObserverError::Structure("high-gain plant takes phi, not phi1/phi2/phi3".into()));
    }
    if let Some(phi) = &system.phi {
        for (i, e) in phi.iter().enumerate() {
            let deps = e.dependencies();
            if let Some(j) = deps.states.iter().find(|&&j| j > i) {
                return Err(ObserverError::Structure(format!(
                    "phi{} depends on x{}; component k may only use x1..xk",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let abar = a - k * c;
    let pi = scaling_matrix(theta, n)?;
    let pi_inv = Matrix::from_diagonal(&pi.diagonal().map(|d| 1.0 / d));
    let q = solve_lyapunov(&abar, &Matrix::identity(n, n))?;
    Ok(ObserverSpec {
        family: ObserverFamily::HighGain,
        a: a.clone(),
        c: c.clone(),
        injection: &pi_inv * k,
        gain: k.clone(),
        theta: Some(theta),
        pi: Some(pi),
        decomposition: None,
        p: Matrix::identity(n, n),
        q,
        xhat0: vec![0.0; n],
    })
}

/// ρ = −θ⁻¹/λmax(Q) + 2·(λmin(Q)/λmax(Q))·κ_φ·n²; passes iff ρ < 0.
pub fn high_gain_condition(theta: f64, q: &Matrix, kappa_phi: f64, n: usize) -> Result<CheckReport, ObserverError> {
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(ObserverError::Invalid(format!("theta must be positive, got {theta}")));
    }
    if !(kappa_phi >= 0.0 && kappa_phi.is_finite()) {
        return Err(ObserverError::Invalid(format!("kappa_phi must be nonnegative, got {kappa_phi}")));
    }
    require_spd(q, "Q")?;
    let (lmin, lmax) = symmetric_eig_range(q)?;
    let n2 = (n * n) as f64;
    let rho = -1.0 / (theta * lmax) + 2.0 * lmin / lmax * kappa_phi * n2;
    let threshold = if kappa_phi == 0.0 { f64::INFINITY } else { 1.0 / (2.0 * lmin * kappa_phi * n2) };
    let mut report = CheckReport::from_margins("high_gain_condition", &[0.0], &[rho], 0.0);
    report.pass = rho < 0.0;
    Ok(report
        .with_detail("rho", rho)
        .with_detail("theta", theta)
        .with_detail("theta_threshold", json_number(threshold))
        .with_detail("kappa_phi", kappa_phi))
}

/// Lipschitz observer for D x = A·x + φ1(y) + ∇φ2(y)·D y + φ3(x):
/// D x̂ = A·x̂ + φ1(y) + A·φ2(y) + φ3(x̂ + φ2(y)) + K(y1 − C·x̂) with
/// y1 = y − C·φ2(y).
pub fn build_lipschitz(
    a: &Matrix,
    c: &Matrix,
    decomposition: Decomposition,
    k: &Matrix,
    p: &Matrix,
    q: &Matrix,
) -> Result<ObserverSpec, ObserverError> {
    check_dims(a, c, k)?;
    let n = a.nrows();
    let d = &decomposition;
    if d.phi1.len() != n || d.phi2.len() != n || d.phi3.len() != n {
        return Err(ObserverError::Invalid(format!(
            "phi1, phi2, phi3 need {n} components each, got {}, {}, {}",
            d.phi1.len(),
            d.phi2.len(),
            d.phi3.len()
        )));
    }
    require_spd(p, "P")?;
    require_spd(q, "Q")?;
    let abar = a - k * c;
    let residual = lyapunov_residual(&abar, p, q);
    let scale = p.norm().max(1.0);
    if !(residual <= LYAPUNOV_RESIDUAL_TOL * scale) {
        return Err(ObserverError::Invalid(format!(
            "Q(A - KC) + (A - KC)^T Q + P has norm {residual:e}, above {:e}",
            LYAPUNOV_RESIDUAL_TOL * scale
        )));
    }
    Ok(ObserverSpec {
        family: ObserverFamily::Lipschitz,
        a: a.clone(),
        c: c.clone(),
        injection: k.clone(),
        gain: k.clone(),
        theta: None,
        pi: None,
        decomposition: Some(decomposition),
        p: p.clone(),
        q: q.clone(),
        xhat0: vec![0.0; n],
    })
}

/// sup ‖∇φ3‖ over the sampled box against ½·λmin(P)/λmax(Q); passes iff
/// the estimate is strictly smaller.
pub fn lipschitz_condition(phi3: &[Expr], p: &Matrix, q: &Matrix, sampling: &Sampling) -> Result<CheckReport, ObserverError> {
    require_spd(p, "P")?;
    require_spd(q, "Q")?;
    if sampling.region.dim() != phi3.len() {
        return Err(ObserverError::Invalid(format!(
            "region has dimension {}, phi3 has {} components",
            sampling.region.dim(),
            phi3.len()
        )));
    }
    let sup = sup_jacobian_norm(phi3, &sampling.region, sampling.samples, sampling.seed)?;
    let (pmin, _) = symmetric_eig_range(p)?;
    let (_, qmax) = symmetric_eig_range(q)?;
    let bound = 0.5 * pmin / qmax;
    let mut report = CheckReport::from_margins("lipschitz_condition", &[0.0], &[sup - bound], 0.0);
    report.pass = sup < bound;
    Ok(report
        .with_detail("sup_gradient", sup)
        .with_detail("bound", bound)
        .with_detail("region_lo", sampling.region.lo.clone())
        .with_detail("region_hi", sampling.region.hi.clone())
        .with_detail("samples", sampling.samples))
}

/// Observer right-hand side; `model` supplies B·u(t) and φ(x̂, u).
struct Dynamics<'a> {
    spec: &'a ObserverSpec,
    model: &'a SystemDef,
}

impl ObserverField for Dynamics<'_> {
    fn dim(&self) -> usize {
        self.spec.dim()
    }

    fn eval(&self, t: f64, xhat: &[f64], y: &[f64], out: &mut [f64]) {
        let spec = self.spec;
        let innovation: Vec<f64> = match &spec.decomposition {
            None => {
                self.model.eval_physical(t, xhat, out);
                let cx = mat_vec(&spec.c, xhat);
                y.iter().zip(cx).map(|(a, b)| a - b).collect()
            }
            Some(d) => {
                let shift = eval_outputs(&d.phi2, y);
                let p1 = eval_outputs(&d.phi1, y);
                let arg: Vec<f64> = xhat.iter().zip(&shift).map(|(a, b)| a + b).collect();
                let env = Env::new(&arg, &[], t);
                let ax = mat_vec(&spec.a, xhat);
                let ashift = mat_vec(&spec.a, &shift);
                for i in 0..out.len() {
                    out[i] = ax[i] + p1[i] + ashift[i] + d.phi3[i].eval(&env);
                }
                let cshift = mat_vec(&spec.c, &shift);
                let cx = mat_vec(&spec.c, xhat);
                (0..y.len()).map(|i| y[i] - cshift[i] - cx[i]).collect()
            }
        };
        for (o, g) in out.iter_mut().zip(mat_vec(&spec.injection, &innovation)) {
            *o += g;
        }
    }
}

impl Plant for SystemDef {
    fn output_dim(&self) -> usize {
        SystemDef::output_dim(self)
    }

    fn output(&self, t: f64, state: &[f64], y: &mut [f64]) {
        y.copy_from_slice(&self.to_physical(t, state).1);
    }
}

struct Run {
    plant: Trajectory,
    estimate: Trajectory,
    error: Trajectory,
}

fn run(system: &SystemDef, spec: &ObserverSpec, x0: &[f64], opts: &SimulationOptions) -> Result<Run, ObserverError> {
    if system.dim != spec.dim() || system.output_dim() != spec.c.nrows() {
        return Err(ObserverError::Invalid(format!(
            "plant has state/output dimension {}/{}, observer expects {}/{}",
            system.dim,
            system.output_dim(),
            spec.dim(),
            spec.c.nrows()
        )));
    }
    let z0 = system.to_internal(opts.t0, x0);
    let dynamics = Dynamics { spec, model: system };
    let sol = integrate_coupled(system, &dynamics, &opts.ivp(z0), &spec.xhat0, &opts.solver, None)?;
    let error = sol.plant.sub(&sol.observer)?;
    Ok(Run {
        plant: sol.plant,
        estimate: sol.observer,
        error,
    })
}

/// Fits d = 1 and (M, ĉ) to ‖e(t_k)‖.
///
/// At most `FIT_POINTS` samples are used, nearly uniform in log time.
/// For each ĉ the smallest M dominating those samples is taken, and ĉ
/// minimizes the squared log gap between envelope and data. The envelope
/// is then checked on the full grid separately.
pub fn fit_envelope(err: &Trajectory, alpha: f64) -> Result<EnvelopeFit, ObserverError> {
    let norms = err.norms().values()?;
    let idx = fit_indices(norms.len());
    let pts: Vec<(f64, f64)> = idx
        .iter()
        .filter(|&&k| norms[k] > 0.0)
        .map(|&k| (k as f64 * err.dt(), norms[k].ln()))
        .collect();
    if pts.is_empty() {
        return Ok(EnvelopeFit {
            envelope: Envelope::new(0.0, 1.0, 1.0, alpha)?,
            log_rms: 0.0,
            fit_samples: 0,
        });
    }
    let profile = |log_c: f64| -> Result<(f64, f64), ObserverError> {
        let c = log_c.exp();
        let mut gaps = Vec::with_capacity(pts.len());
        for &(t, le) in &pts {
            let e = ml_one(alpha, -c * t.powf(alpha)).map_err(StabilityError::from)?;
            gaps.push(le - e.max(f64::MIN_POSITIVE).ln());
        }
        let log_m = gaps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let ss = gaps.iter().map(|g| (log_m - g).powi(2)).sum::<f64>();
        Ok((ss, log_m))
    };
    let (lo, hi, steps) = (-12.0_f64, 6.0_f64, 72);
    let h = (hi - lo) / steps as f64;
    let mut best = (f64::INFINITY, lo);
    for i in 0..=steps {
        let lc = lo + h * i as f64;
        let (ss, _) = profile(lc)?;
        if ss < best.0 {
            best = (ss, lc);
        }
    }
    // golden-section refinement inside the neighboring grid cells
    let (mut a, mut b) = (best.1 - h, best.1 + h);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut f2) = (profile(x1)?.0, profile(x2)?.0);
    for _ in 0..60 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = profile(x1)?.0;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = profile(x2)?.0;
        }
    }
    let lc = if f1.min(f2) < best.0 { 0.5 * (a + b) } else { best.1 };
    let (ss, log_m) = profile(lc)?;
    Ok(EnvelopeFit {
        envelope: Envelope::new(log_m.exp(), lc.exp(), 1.0, alpha)?,
        log_rms: (ss / pts.len() as f64).sqrt(),
        fit_samples: pts.len(),
    })
}

fn fit_indices(len: usize) -> Vec<usize> {
    if len <= FIT_POINTS {
        return (0..len).collect();
    }
    let dense = FIT_POINTS / 4;
    let mut idx: Vec<usize> = (0..dense).collect();
    let rest = FIT_POINTS - dense;
    let ratio = ((len - 1) as f64 / dense as f64).powf(1.0 / rest as f64);
    let mut x = dense as f64;
    for _ in 0..rest {
        x *= ratio;
        let k = (x.round() as usize).min(len - 1);
        if k > *idx.last().unwrap() {
            idx.push(k);
        }
    }
    if *idx.last().unwrap() != len - 1 {
        idx.push(len - 1);
    }
    idx
}

/// Smallest elapsed time at which `env` falls to `ratio` of its initial
/// value, found by doubling and bisection; `None` above `t_max`.
pub fn horizon_for_ratio(env: &Envelope, ratio: f64, t_max: f64) -> Result<Option<f64>, ObserverError> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(ObserverError::Invalid(format!("ratio must lie in (0, 1), got {ratio}")));
    }
    if env.coeff == 0.0 || !(env.rate > 0.0) {
        return Ok(None);
    }
    let target = ratio * env.eval(0.0)?;
    let (mut lo, mut hi) = (0.0, 1.0);
    while env.eval(hi)? > target {
        if hi >= t_max {
            return Ok(None);
        }
        lo = hi;
        hi = (2.0 * hi).min(t_max);
    }
    refine(env, target, lo, hi).map(Some)
}

fn refine(env: &Envelope, target: f64, mut lo: f64, mut hi: f64) -> Result<f64, ObserverError> {
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if env.eval(mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

fn quadratic_form(x: &Trajectory, m: &Matrix) -> Trajectory {
    x.map(1, |s| vec![mat_vec(m, s).iter().zip(s).map(|(a, b)| a * b).sum()])
}

struct Summary {
    fit: EnvelopeFit,
    envelope_check: CheckReport,
    initial: f64,
    terminal: f64,
}

fn summarize(error: &Trajectory, opts: &SimulationOptions) -> Result<Summary, ObserverError> {
    let fit = fit_envelope(error, opts.ord.alpha())?;
    let envelope_check = check_ml_bound(error, &fit.envelope, opts.envelope_tol)?;
    let norms = error.norms().values()?;
    Ok(Summary {
        fit,
        envelope_check,
        initial: norms[0],
        terminal: *norms.last().expect("nonempty trajectory"),
    })
}

/// Certified envelope for V = eᵀMe with D V ≤ −c‖e‖², checked on `err`.
fn certified(
    err: &Trajectory,
    m: &Matrix,
    c: f64,
    opts: &SimulationOptions,
) -> Result<(Envelope, CheckReport), ObserverError> {
    let (mmin, mmax) = symmetric_eig_range(m)?;
    let cond = LyapunovConditions::new(2.0, 1.0, mmin, mmax, c, opts.ord)?;
    let e0 = err.norms().sample(0)[0];
    let env = ml_stability_envelope(&cond, e0, opts.ord)?;
    let mut check = check_ml_bound(err, &env, opts.envelope_tol)?;
    check.check = "certified_bound".into();
    Ok((env, check))
}

fn finish(
    spec: &ObserverSpec,
    run: Run,
    summary: Summary,
    monitor: Option<CheckReport>,
    cert: Option<(Envelope, CheckReport)>,
    condition: Option<CheckReport>,
    warnings: Vec<String>,
) -> ObserverReport {
    let verdict = summary.envelope_check.pass && summary.terminal <= summary.initial && summary.fit.envelope.rate > 0.0;
    let (certified, certified_check) = cert.map_or((None, None), |(e, c)| (Some(e), Some(c)));
    ObserverReport {
        family: spec.family,
        error: run.error,
        plant: run.plant,
        estimate: run.estimate,
        fit: summary.fit,
        envelope_check: summary.envelope_check,
        monitor,
        certified,
        certified_check,
        condition,
        certificate: spec.certificate(),
        initial_error: summary.initial,
        terminal_error: summary.terminal,
        warnings,
        verdict,
    }
}

fn require_family(spec: &ObserverSpec, family: ObserverFamily) -> Result<(), ObserverError> {
    if spec.family != family {
        return Err(ObserverError::Invalid(format!("expected a {family:?} observer, got {:?}", spec.family)));
    }
    Ok(())
}

/// Runs a linear observer against a linear plant from x0.
///
/// Monitors D(eᵀPe) ≤ −λmin(Q)‖e‖².
pub fn simulate_linear(
    system: &SystemDef,
    spec: &ObserverSpec,
    x0: &[f64],
    opts: &SimulationOptions,
) -> Result<ObserverReport, ObserverError> {
    require_family(spec, ObserverFamily::Linear)?;
    let (a, c) = require_linear_plant(system)?;
    if system.phi.is_some() || system.decomposition.is_some() {
        return Err(ObserverError::Structure("linear observer needs a plant without phi".into()));
    }
    if a != &spec.a || c != &spec.c {
        return Err(ObserverError::Invalid("observer A and C differ from the plant".into()));
    }
    let run = run(system, spec, x0, opts)?;
    let summary = summarize(&run.error, opts)?;
    let (qmin, _) = symmetric_eig_range(&spec.q)?;
    let v = quadratic_form(&run.error, &spec.p);
    let monitor = lyapunov_monitor(&v, &run.error, &ClassK::new(qmin, 2.0)?, opts.ord, Derivative::Abc)?;
    let cert = certified(&run.error, &spec.p, qmin, opts)?;
    Ok(finish(spec, run, summary, Some(monitor), Some(cert), None, Vec::new()))
}

/// Runs a high-gain observer; κ_φ is the Lipschitz constant of φ.
///
/// With ρ < 0 the monitor checks D V ≤ ρ·V in ε̄ = Π(x̂ − x), as the
/// class-K bound −|ρ|·λmin(Q)·‖ε̄‖². Otherwise the run proceeds with a
/// warning and no monitor.
pub fn simulate_high_gain(
    system: &SystemDef,
    spec: &ObserverSpec,
    x0: &[f64],
    kappa_phi: f64,
    opts: &SimulationOptions,
) -> Result<ObserverReport, ObserverError> {
    require_family(spec, ObserverFamily::HighGain)?;
    let theta = spec.theta.expect("high-gain spec has theta");
    let pi = spec.pi.as_ref().expect("high-gain spec has Pi");
    let condition = high_gain_condition(theta, &spec.q, kappa_phi, spec.dim())?;
    let rho = condition.worst_margin;
    let mut warnings = Vec::new();
    if !condition.pass {
        warnings.push(format!("high-gain condition fails: rho = {rho} >= 0"));
    }
    let run = run(system, spec, x0, opts)?;
    let summary = summarize(&run.error, opts)?;
    let scaled = run.error.map(spec.dim(), |e| mat_vec(pi, e).iter().map(|v| -v).collect());
    let (monitor, cert) = if condition.pass {
        let (qmin, _) = symmetric_eig_range(&spec.q)?;
        let rate = -rho * qmin;
        let v = quadratic_form(&scaled, &spec.q);
        let monitor = lyapunov_monitor(&v, &scaled, &ClassK::new(rate, 2.0)?, opts.ord, Derivative::Abc)?;
        let (env, mut check) = certified(&scaled, &spec.q, rate, opts)?;
        check = check.with_detail("coordinates", "scaled");
        (Some(monitor), Some((env, check)))
    } else {
        (None, None)
    };
    Ok(finish(spec, run, summary, monitor, cert, Some(condition), warnings))
}

/// Runs a Lipschitz observer in z-coordinates.
///
/// The condition on sup ‖∇φ3‖ is evaluated over `sampling`; if it fails
/// the run proceeds with a warning. When λmin(P) − 2‖Q‖·sup‖∇φ3‖ > 0 the
/// monitor checks D V ≤ −(λmin(P) − 2‖Q‖·sup‖∇φ3‖)‖z − x̂‖².
pub fn simulate_lipschitz(
    system: &SystemDef,
    spec: &ObserverSpec,
    x0: &[f64],
    sampling: &Sampling,
    opts: &SimulationOptions,
) -> Result<ObserverReport, ObserverError> {
    require_family(spec, ObserverFamily::Lipschitz)?;
    let d = spec.decomposition.as_ref().expect("lipschitz spec has a decomposition");
    let (a, c) = require_linear_plant(system)?;
    if a != &spec.a || c != &spec.c {
        return Err(ObserverError::Invalid("observer A and C differ from the plant".into()));
    }
    if system.decomposition.as_ref() != Some(d) {
        return Err(ObserverError::Invalid("plant and observer use different phi1, phi2, phi3".into()));
    }
    let condition = lipschitz_condition(&d.phi3, &spec.p, &spec.q, sampling)?;
    let mut warnings = Vec::new();
    if !condition.pass {
        warnings.push("sup |grad phi3| is not below lambda_min(P) / (2 lambda_max(Q)); convergence is not guaranteed".into());
    }
    let run = run(system, spec, x0, opts)?;
    let summary = summarize(&run.error, opts)?;
    let sup = condition.details["sup_gradient"].as_f64().expect("numeric detail");
    let (pmin, _) = symmetric_eig_range(&spec.p)?;
    let decay = pmin - 2.0 * spectral_norm(&spec.q) * sup;
    let (monitor, cert) = if decay > 0.0 {
        let v = quadratic_form(&run.error, &spec.q);
        let monitor = lyapunov_monitor(&v, &run.error, &ClassK::new(decay, 2.0)?, opts.ord, Derivative::Abc)?
            .with_detail("decay", decay);
        (Some(monitor), Some(certified(&run.error, &spec.q, decay, opts)?))
    } else {
        (None, None)
    };
    Ok(finish(spec, run, summary, monitor, cert, Some(condition), warnings))
}

/// Physical estimate x̂ + φ2(y) for a Lipschitz observer run.
pub fn physical_estimate(system: &SystemDef, spec: &ObserverSpec, report: &ObserverReport) -> Trajectory {
    match &spec.decomposition {
        None => report.estimate.clone(),
        Some(d) => {
            let mut out = report.estimate.clone();
            for k in 0..out.len() {
                let t = report.plant.time(k);
                let (_, y) = system.to_physical(t, report.plant.sample(k));
                let shift = eval_outputs(&d.phi2, &y);
                for (v, s) in out.sample_mut(k).iter_mut().zip(shift) {
                    *v += s;
                }
            }
            out
        }
    }
}

fn json_number(v: f64) -> serde_json::Value {
    serde_json::Number::from_f64(v).map_or(serde_json::Value::Null, serde_json::Value::Number)
}
