//! Predictor–corrector integration of ABC-D^α x = f(t, x).
//!
//! The problem is solved in its integral form
//!
//! x(t) = x0 + (1−α)/B·f(t, x(t)) + α/B·I^α f(t)
//!
//! with I^α discretized by product integration: rectangle weights for the
//! explicit predictor, trapezoid weights for the corrector. The local term
//! makes every step implicit in x_k; the corrector resolves it with a few
//! Newton iterations on a finite-difference Jacobian.
//!
//! Unless f(t0, x0) = 0 the integral form has a jump at t0: its right limit
//! x0⁺ solves x0⁺ = x0 + (1−α)/B·f(t0, x0⁺). Sample 0 of the output holds x0;
//! the memory integral starts from f(t0, x0⁺).

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::fracops::{singular_exponents, FracError, FractionalOrder, RlWeights, Trajectory};
use crate::linalg::Matrix;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("state became non-finite at step {index} (t = {time}); last valid step {last_valid}")]
    Divergence {
        index: usize,
        time: f64,
        last_valid: usize,
        /// Samples 0..=last_valid.
        partial: Box<Option<Trajectory>>,
    },
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error(transparent)]
    Frac(#[from] FracError),
}

/// Right-hand side f(t, x) of an ABC system.
pub trait VectorField: Sync {
    fn dim(&self) -> usize;
    fn eval(&self, t: f64, x: &[f64], out: &mut [f64]);
}

/// f(t, x) = A·x.
#[derive(Debug, Clone)]
pub struct LinearField {
    pub a: Matrix,
}

impl VectorField for LinearField {
    fn dim(&self) -> usize {
        self.a.nrows()
    }

    fn eval(&self, _t: f64, x: &[f64], out: &mut [f64]) {
        let n = self.dim();
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..n).map(|j| self.a[(i, j)] * x[j]).sum();
        }
    }
}

/// Wraps a closure as a vector field.
pub struct FnField<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(f64, &[f64], &mut [f64]) + Sync> FnField<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F: Fn(f64, &[f64], &mut [f64]) + Sync> VectorField for FnField<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, t: f64, x: &[f64], out: &mut [f64]) {
        (self.f)(t, x, out)
    }
}

/// Initial-value problem data (the vector field is passed separately).
#[derive(Debug, Clone, PartialEq)]
pub struct Ivp {
    pub x0: Vec<f64>,
    pub ord: FractionalOrder,
    pub t0: f64,
    pub t_end: f64,
    pub dt: f64,
}

impl Ivp {
    /// Number of grid points: the grid t0 + k·dt is extended until it
    /// reaches `t_end` (up to a 1e-9·dt slack).
    pub fn steps(&self) -> usize {
        ((self.t_end - self.t0) / self.dt - 1e-9).ceil() as usize + 1
    }

    fn validate(&self, dim: usize) -> Result<(), SolverError> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(SolverError::InvalidProblem(format!("dt must be positive, got {}", self.dt)));
        }
        if !(self.t_end > self.t0) {
            return Err(SolverError::InvalidProblem(format!(
                "T = {} must exceed t0 = {}",
                self.t_end, self.t0
            )));
        }
        if self.x0.len() != dim {
            return Err(SolverError::InvalidProblem(format!(
                "x0 has dimension {}, system has {dim}",
                self.x0.len()
            )));
        }
        if self.x0.iter().any(|v| !v.is_finite()) {
            return Err(SolverError::InvalidProblem("x0 must be finite".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Newton iterations after the predictor.
    pub corrector_iterations: usize,
    /// Lipschitz constant of f, if known; only used for the growth-bound
    /// applicability warning.
    pub lipschitz: Option<f64>,
    /// Target order for the starting weights that absorb the t^{i+jα}
    /// behavior of solutions near t0; `None` uses the plain trapezoid rule.
    pub starting_order: Option<f64>,
}

/// Default target order of the starting weights.
pub const STARTING_ORDER: f64 = 1.9;

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            corrector_iterations: 2,
            lipschitz: None,
            starting_order: Some(STARTING_ORDER),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// dt^α·α/(1−α) > 0.5: the kernel decays within a step.
    CoarseStep,
    /// B(α) ≤ κ(1−α): the Lipschitz growth bound does not apply.
    LipschitzBoundInapplicable,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub trajectory: Trajectory,
    /// Right limit x(t0⁺) of the integral form.
    pub x0_plus: Vec<f64>,
    pub warnings: Vec<Warning>,
}

/// Integrates `field` over the grid of `ivp`.
///
/// `progress` is called once per completed step with (k, t_k).
pub fn integrate(
    field: &dyn VectorField,
    ivp: &Ivp,
    opts: &SolverOptions,
    mut progress: Option<&mut dyn FnMut(usize, f64)>,
) -> Result<Solution, SolverError> {
    let n = field.dim();
    ivp.validate(n)?;
    let ord = ivp.ord;
    let (alpha, b) = (ord.alpha(), ord.b());
    let mut warnings = Vec::new();
    if ivp.dt.powf(alpha) * ord.kernel_rate() > 0.5 {
        warnings.push(Warning::CoarseStep);
    }
    if let Some(kappa) = opts.lipschitz {
        if b <= kappa * (1.0 - alpha) {
            warnings.push(Warning::LipschitzBoundInapplicable);
        }
    }

    let len = ivp.steps();
    let dt = ivp.dt;
    let weights = match opts.starting_order {
        Some(order) => RlWeights::with_starting_weights(alpha, dt, len, &singular_exponents(alpha, 0.0, order))?,
        None => RlWeights::new(alpha, dt, len)?,
    };
    // steps 1..startup are refined as one block once they all exist
    let startup = match weights.starting() {
        Some(st) if opts.corrector_iterations > 0 => st.nodes() - 1,
        _ => 0,
    };
    let local = (1.0 - alpha) / b;
    let memory = alpha / b;

    let mut states = vec![0.0; len * n];
    let mut history = vec![0.0; len * n];
    states[..n].copy_from_slice(&ivp.x0);

    let mut stepper = Stepper {
        field,
        n,
        x0: &ivp.x0,
        scratch: vec![0.0; n],
        probe: vec![0.0; n],
    };

    // right limit at t0: x = x0 + local·f(t0, x)
    let mut x0_plus = ivp.x0.clone();
    let zero = vec![0.0; n];
    stepper.newton(ivp.t0, local, &zero, &mut x0_plus, opts.corrector_iterations.max(1) + 2);
    if x0_plus.iter().any(|v| !v.is_finite()) {
        return Err(divergence(0, ivp.t0, 0, None));
    }
    field.eval(ivp.t0, &x0_plus, &mut history[..n]);

    let mut lagged = vec![0.0; n];
    let mut x = vec![0.0; n];
    for k in 1..len {
        let t = ivp.t0 + k as f64 * dt;

        // predictor: rectangle memory, local term from the previous f
        lagged.iter_mut().for_each(|v| *v = 0.0);
        weights.rectangle(k, &history, n, &mut lagged);
        let f_prev = &history[(k - 1) * n..k * n];
        for i in 0..n {
            x[i] = ivp.x0[i] + local * f_prev[i] + memory * lagged[i];
        }
        // one substitution into the local term
        field.eval(t, &x, &mut stepper.scratch);
        for i in 0..n {
            x[i] = ivp.x0[i] + local * stepper.scratch[i] + memory * lagged[i];
        }

        // corrector: trapezoid memory, Newton on the implicit part
        lagged.iter_mut().for_each(|v| *v = 0.0);
        weights.trapezoid_lagged(k, &history, n, &mut lagged);
        if k > startup {
            weights.starting_correction(k, &history, n, &mut lagged);
        }
        lagged.iter_mut().for_each(|v| *v *= memory);
        let implicit = local + memory * weights.trapezoid_diagonal();
        stepper.newton(t, implicit, &lagged, &mut x, opts.corrector_iterations);

        let f_k = &mut history[k * n..(k + 1) * n];
        field.eval(t, &x, f_k);
        if x.iter().chain(f_k.iter()).any(|v| !v.is_finite()) {
            let partial = Trajectory::from_flat(ivp.t0, dt, n, states[..k * n].to_vec()).ok();
            return Err(divergence(k, t, k - 1, partial));
        }
        states[k * n..(k + 1) * n].copy_from_slice(&x);
        if k == startup {
            refine_startup(field, ivp, &weights, startup, &mut states, &mut history);
        }
        if let Some(cb) = progress.as_deref_mut() {
            cb(k, t);
        }
    }

    Ok(Solution {
        trajectory: Trajectory::from_flat(ivp.t0, dt, n, states)?,
        x0_plus,
        warnings,
    })
}

/// Newton on the coupled equations of steps 1..=m, whose starting weights
/// reach ahead to later nodes. Keeps the plain values if the iteration fails.
fn refine_startup(
    field: &dyn VectorField,
    ivp: &Ivp,
    weights: &RlWeights,
    m: usize,
    states: &mut [f64],
    history: &mut [f64],
) {
    let n = field.dim();
    let (alpha, b) = (ivp.ord.alpha(), ivp.ord.b());
    let (local, memory) = ((1.0 - alpha) / b, alpha / b);
    let time = |k: usize| ivp.t0 + k as f64 * ivp.dt;
    let mut x = states[..(m + 1) * n].to_vec();
    let mut f = history[..(m + 1) * n].to_vec();
    let dim = m * n;
    let mut probe = vec![0.0; n];
    let (mut fp, mut fm) = (vec![0.0; n], vec![0.0; n]);
    for _ in 0..12 {
        let mut resid = DVector::zeros(dim);
        for k in 1..=m {
            let mut mem = vec![0.0; n];
            weights.trapezoid_at(k, &f, n, &mut mem);
            for i in 0..n {
                resid[(k - 1) * n + i] =
                    x[k * n + i] - ivp.x0[i] - local * f[k * n + i] - memory * mem[i];
            }
        }
        // node Jacobians of f by central differences
        let mut jacs = Vec::with_capacity(m);
        for j in 1..=m {
            let xj = &x[j * n..(j + 1) * n];
            let mut jac = DMatrix::<f64>::zeros(n, n);
            for c in 0..n {
                let h = 1e-7 * xj[c].abs().max(1.0);
                probe.copy_from_slice(xj);
                probe[c] += h;
                field.eval(time(j), &probe, &mut fp);
                probe[c] = xj[c] - h;
                field.eval(time(j), &probe, &mut fm);
                for r in 0..n {
                    jac[(r, c)] = (fp[r] - fm[r]) / (2.0 * h);
                }
            }
            jacs.push(jac);
        }
        let mut big = DMatrix::<f64>::identity(dim, dim);
        for k in 1..=m {
            for j in 1..=m {
                let coef = memory * weights.trapezoid_coefficient(k, j) + if j == k { local } else { 0.0 };
                if coef == 0.0 {
                    continue;
                }
                let block = &jacs[j - 1] * coef;
                let mut view = big.view_mut(((k - 1) * n, (j - 1) * n), (n, n));
                view -= block;
            }
        }
        let Some(delta) = big.lu().solve(&resid) else {
            return;
        };
        let mut step = 0.0_f64;
        let mut size = 0.0_f64;
        for k in 1..=m {
            for i in 0..n {
                x[k * n + i] -= delta[(k - 1) * n + i];
                step = step.max(delta[(k - 1) * n + i].abs());
                size = size.max(x[k * n + i].abs());
            }
            field.eval(time(k), &x[k * n..(k + 1) * n], &mut f[k * n..(k + 1) * n]);
        }
        if x.iter().chain(&f).any(|v| !v.is_finite()) {
            return;
        }
        if step <= 1e-15 * (1.0 + size) {
            break;
        }
    }
    states[n..(m + 1) * n].copy_from_slice(&x[n..]);
    history[n..(m + 1) * n].copy_from_slice(&f[n..]);
}

fn divergence(index: usize, time: f64, last_valid: usize, partial: Option<Trajectory>) -> SolverError {
    SolverError::Divergence {
        index,
        time,
        last_valid,
        partial: Box::new(partial),
    }
}

struct Stepper<'a> {
    field: &'a dyn VectorField,
    n: usize,
    x0: &'a [f64],
    scratch: Vec<f64>,
    probe: Vec<f64>,
}

impl Stepper<'_> {
    /// Newton iterations for G(x) = x − x0 − c·f(t, x) − rest = 0.
    fn newton(&mut self, t: f64, c: f64, rest: &[f64], x: &mut [f64], iterations: usize) {
        let n = self.n;
        for _ in 0..iterations {
            self.field.eval(t, x, &mut self.scratch);
            let g = DVector::from_fn(n, |i, _| x[i] - self.x0[i] - c * self.scratch[i] - rest[i]);
            if g.iter().all(|v| *v == 0.0) {
                return;
            }
            let mut jac = DMatrix::<f64>::identity(n, n);
            for j in 0..n {
                let h = 1e-7 * x[j].abs().max(1.0);
                self.probe.copy_from_slice(x);
                self.probe[j] += h;
                let mut fp = vec![0.0; n];
                self.field.eval(t, &self.probe, &mut fp);
                self.probe[j] = x[j] - h;
                let mut fm = vec![0.0; n];
                self.field.eval(t, &self.probe, &mut fm);
                for i in 0..n {
                    jac[(i, j)] -= c * (fp[i] - fm[i]) / (2.0 * h);
                }
            }
            let Some(delta) = jac.lu().solve(&g) else {
                return;
            };
            for i in 0..n {
                x[i] -= delta[i];
            }
        }
    }
}

/// A vector field with an output map y = h(t, state).
pub trait Plant: VectorField {
    fn output_dim(&self) -> usize;
    fn output(&self, t: f64, state: &[f64], y: &mut [f64]);
}

/// Observer dynamics ABC-D x̂ = g(t, x̂, y).
pub trait ObserverField: Sync {
    fn dim(&self) -> usize;
    fn eval(&self, t: f64, xhat: &[f64], y: &[f64], out: &mut [f64]);
}

/// Plant and observer trajectories on one grid.
#[derive(Debug, Clone)]
pub struct CoupledSolution {
    pub plant: Trajectory,
    pub observer: Trajectory,
    pub x0_plus: Vec<f64>,
    pub xhat0_plus: Vec<f64>,
    pub warnings: Vec<Warning>,
}

struct Augmented<'a> {
    plant: &'a dyn Plant,
    observer: &'a dyn ObserverField,
}

impl VectorField for Augmented<'_> {
    fn dim(&self) -> usize {
        self.plant.dim() + self.observer.dim()
    }

    fn eval(&self, t: f64, s: &[f64], out: &mut [f64]) {
        let n = self.plant.dim();
        let mut y = vec![0.0; self.plant.output_dim()];
        self.plant.eval(t, &s[..n], &mut out[..n]);
        self.plant.output(t, &s[..n], &mut y);
        self.observer.eval(t, &s[n..], &y, &mut out[n..]);
    }
}

/// Integrates plant and observer jointly as one system in (x, x̂).
///
/// Each implicit step solves for both states at once, so the observer at
/// step k sees y(t_k) = h(x(t_k)) of the same step. `ivp.x0` is the plant
/// initial state.
pub fn integrate_coupled(
    plant: &dyn Plant,
    observer: &dyn ObserverField,
    ivp: &Ivp,
    xhat0: &[f64],
    opts: &SolverOptions,
    progress: Option<&mut dyn FnMut(usize, f64)>,
) -> Result<CoupledSolution, SolverError> {
    let n = plant.dim();
    if ivp.x0.len() != n {
        return Err(SolverError::InvalidProblem(format!(
            "x0 has dimension {}, plant has {n}",
            ivp.x0.len()
        )));
    }
    if xhat0.len() != observer.dim() {
        return Err(SolverError::InvalidProblem(format!(
            "observer initial state has dimension {}, observer has {}",
            xhat0.len(),
            observer.dim()
        )));
    }
    let joint = Augmented { plant, observer };
    let mut big = ivp.clone();
    big.x0 = ivp.x0.iter().chain(xhat0).copied().collect();
    let sol = integrate(&joint, &big, opts, progress)?;
    let traj = &sol.trajectory;
    let m = observer.dim();
    let plant_traj = traj.map(n, |s| s[..n].to_vec());
    let observer_traj = traj.map(m, |s| s[n..].to_vec());
    Ok(CoupledSolution {
        plant: plant_traj,
        observer: observer_traj,
        x0_plus: sol.x0_plus[..n].to_vec(),
        xhat0_plus: sol.x0_plus[n..].to_vec(),
        warnings: sol.warnings,
    })
}

/// Closed-form solution of ABC-D x = −λx, x(0) = x0, for t > 0:
/// B/(B + (1−α)λ)·x0·E_α(−αλ/(B + (1−α)λ)·t^α).
pub fn relaxation_closed_form(
    ord: FractionalOrder,
    lambda: f64,
    x0: f64,
    t: f64,
) -> Result<f64, crate::mlf::MlError> {
    let (a, b) = (ord.alpha(), ord.b());
    let d = b + (1.0 - a) * lambda;
    Ok(b / d * x0 * crate::mlf::ml_one(a, -a * lambda / d * t.powf(a))?)
}
