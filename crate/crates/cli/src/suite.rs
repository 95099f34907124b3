//! Seeded verification sweeps and explicit cases behind `abfrac verify`.
//!
//! Every job draws from its own generator seeded by (seed, check, α index,
//! trajectory index), so results do not depend on the worker count.

use abfrac::fracops::{
    check_integral_norm_inequality, check_abr_relation, check_lemma2_inequality, check_newton_leibniz, Derivative,
    FracError, FractionalOrder, Trajectory,
};
use abfrac::linalg::{spectral_norm, Matrix};
use abfrac::report::CheckReport;
use abfrac::solver::{integrate, relaxation_closed_form, FnField, Ivp, LinearField, SolverError, SolverOptions};
use abfrac::stability::{
    check_comparison, check_ml_bound, growth_envelope, inequality_suite, lyapunov_monitor, Inequality,
    StabilityError,
};
use abfrac::sysdsl::{CaseConfig, Env, Expr, SUITE_CHECKS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Relative error allowed against the relaxation closed form.
pub const RELAXATION_TOL: f64 = 1e-3;

/// Relative excess allowed above the Lipschitz growth envelope.
pub const GROWTH_TOL: f64 = 1e-2;

/// Uniform grid t0 + k·dt reaching t_end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub t0: f64,
    pub t_end: f64,
    pub dt: f64,
}

impl Grid {
    pub fn len(&self) -> usize {
        ((self.t_end - self.t0) / self.dt - 1e-9).ceil() as usize + 1
    }

    fn trajectory(&self, dim: usize, f: impl Fn(f64) -> Vec<f64>) -> Result<Trajectory, FracError> {
        let t0 = self.t0;
        Trajectory::from_fn(t0, self.dt, self.len(), dim, |t| f(t - t0))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteSettings {
    pub grid: Grid,
    pub b: f64,
    pub seed: u64,
    pub alphas: Vec<f64>,
    pub trajectories: usize,
    pub checks: Vec<String>,
}

impl Default for SuiteSettings {
    fn default() -> Self {
        Self {
            grid: Grid {
                t0: 0.0,
                t_end: 1.0,
                dt: 5e-3,
            },
            b: 1.0,
            seed: 0,
            alphas: vec![0.3, 0.5, 0.7, 0.9],
            trajectories: 20,
            checks: SUITE_CHECKS.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    InputError,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub check: String,
    pub alpha: f64,
    pub index: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub input_errors: usize,
}

impl Summary {
    pub fn of(outcomes: &[Outcome]) -> Self {
        let count = |s| outcomes.iter().filter(|o| o.status == s).count();
        Self {
            total: outcomes.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            input_errors: count(Status::InputError),
        }
    }
}

/// Errors of a single job, split by whether the input was at fault.
enum JobError {
    Input(String),
    Failure(String),
}

impl From<FracError> for JobError {
    fn from(e: FracError) -> Self {
        match e {
            FracError::Ml(_) | FracError::Csv(_) | FracError::Io(_) => JobError::Failure(e.to_string()),
            _ => JobError::Input(e.to_string()),
        }
    }
}

impl From<StabilityError> for JobError {
    fn from(e: StabilityError) -> Self {
        match e {
            StabilityError::Frac(f) => f.into(),
            StabilityError::Ml(_) => JobError::Failure(e.to_string()),
            _ => JobError::Input(e.to_string()),
        }
    }
}

impl From<SolverError> for JobError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::InvalidProblem(_) => JobError::Input(e.to_string()),
            _ => JobError::Failure(e.to_string()),
        }
    }
}

fn outcome(check: &str, alpha: f64, index: usize, result: Result<CheckReport, JobError>) -> Outcome {
    let (status, report, error) = match result {
        Ok(r) => (if r.pass { Status::Pass } else { Status::Fail }, Some(r), None),
        Err(JobError::Input(e)) => (Status::InputError, None, Some(e)),
        Err(JobError::Failure(e)) => (Status::Fail, None, Some(e)),
    };
    Outcome {
        check: check.to_string(),
        alpha,
        index,
        status,
        report,
        error,
    }
}

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn job_seed(seed: u64, check: &str, alpha_index: usize, index: usize) -> u64 {
    let name = check.bytes().fold(0xcbf2_9ce4_8422_2325_u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    mix(mix(mix(seed ^ name) ^ alpha_index as u64) ^ index as u64)
}

/// c0 + c1·t + c2·t² + a·sin(ωt + p).
#[derive(Debug, Clone, Copy)]
struct Smooth {
    c: [f64; 3],
    amp: f64,
    w: f64,
    p: f64,
}

impl Smooth {
    fn random(rng: &mut ChaCha8Rng) -> Self {
        Self {
            c: [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
            amp: rng.gen_range(-1.0..1.0),
            w: rng.gen_range(0.5..4.0),
            p: rng.gen_range(0.0..std::f64::consts::TAU),
        }
    }

    fn eval(&self, t: f64) -> f64 {
        self.c[0] + t * (self.c[1] + t * self.c[2]) + self.amp * (self.w * t + self.p).sin()
    }
}

/// Strictly positive smooth signal exp(s(t)/2).
fn positive(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let s = Smooth::random(rng);
    move |t| (0.5 * s.eval(t)).exp()
}

/// c + a·e^{−bt}, nonincreasing and nonnegative.
fn decreasing(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let (c, a, b) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..2.0), rng.gen_range(0.1..5.0));
    move |t| c + a * (-b * t).exp()
}

/// c + a(1 − e^{−bt}) + d·t, nondecreasing.
fn increasing(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let (c, a, b, d) = (
        rng.gen_range(-1.0..1.0),
        rng.gen_range(0.0..2.0),
        rng.gen_range(0.1..5.0),
        rng.gen_range(0.0..1.0),
    );
    move |t| c + a * (1.0 - (-b * t).exp()) + d * t
}

/// Nonnegative nondecreasing ramp with r(0) = 0.
fn ramp(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let kind = rng.gen_range(0..3);
    let (c, p, b) = (rng.gen_range(0.01..2.0), rng.gen_range(1.0..2.0), rng.gen_range(0.5..5.0));
    move |t| match kind {
        0 => c * t.powf(p),
        1 => c * (1.0 - (-b * t).exp()),
        _ => c * (t + b * t * t),
    }
}

/// L·Lᵀ + 0.1·I with L lower triangular.
fn random_spd(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let l = Matrix::from_fn(n, n, |i, j| if j <= i { rng.gen_range(-1.0..1.0) } else { 0.0 });
    &l * l.transpose() + Matrix::identity(n, n) * 0.1
}

fn smooth_vector(rng: &mut ChaCha8Rng, grid: &Grid, n: usize) -> Result<Trajectory, FracError> {
    let parts: Vec<Smooth> = (0..n).map(|_| Smooth::random(rng)).collect();
    grid.trajectory(n, |t| parts.iter().map(|s| s.eval(t)).collect())
}

fn scalar(grid: &Grid, f: impl Fn(f64) -> f64) -> Result<Trajectory, FracError> {
    grid.trajectory(1, |t| vec![f(t)])
}

fn inequality_job(
    which: Inequality,
    ord: FractionalOrder,
    grid: &Grid,
    rng: &mut ChaCha8Rng,
) -> Result<CheckReport, JobError> {
    let n = rng.gen_range(2..=3);
    let (phi, x, p) = match which {
        Inequality::E36 => (None, smooth_vector(rng, grid, 1)?, None),
        Inequality::E38 => (Some(scalar(grid, decreasing(rng))?), scalar(grid, positive(rng))?, None),
        Inequality::E39 => (Some(scalar(grid, increasing(rng))?), scalar(grid, positive(rng))?, None),
        Inequality::E40 => {
            let phis: Vec<_> = (0..n).map(|_| decreasing(rng)).collect();
            let xs: Vec<_> = (0..n).map(|_| positive(rng)).collect();
            let phi = grid.trajectory(n, |t| phis.iter().map(|f| f(t)).collect())?;
            let x = grid.trajectory(n, |t| xs.iter().map(|f| f(t)).collect())?;
            (Some(phi), x, None)
        }
        Inequality::E41 => (Some(scalar(grid, decreasing(rng))?), smooth_vector(rng, grid, 1)?, None),
        Inequality::E42 => {
            let phi = scalar(grid, decreasing(rng))?;
            (Some(phi), smooth_vector(rng, grid, n)?, Some(random_spd(rng, n)))
        }
        Inequality::E43 => (None, smooth_vector(rng, grid, n)?, Some(random_spd(rng, n))),
    };
    Ok(inequality_suite(phi.as_ref(), &x, p.as_ref(), ord, which)?)
}

fn comparison_job(ord: FractionalOrder, grid: &Grid, rng: &mut ChaCha8Rng) -> Result<CheckReport, JobError> {
    let base = Smooth::random(rng);
    let r = ramp(rng);
    let y = scalar(grid, |t| base.eval(t))?;
    let x = scalar(grid, |t| base.eval(t) + r(t))?;
    Ok(check_comparison(&x, &y, ord)?)
}

/// f(x) = M·x + s·tanh(N·x) with κ = ‖M‖ + |s|·‖N‖ scaled below B/(1−α).
fn growth_job(ord: FractionalOrder, grid: &Grid, rng: &mut ChaCha8Rng) -> Result<CheckReport, JobError> {
    let n = 2;
    let mut m = Matrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    let nn = Matrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    let mut s = rng.gen_range(-1.0..1.0_f64);
    let mut kappa = spectral_norm(&m) + s.abs() * spectral_norm(&nn);
    let limit = 0.9 * ord.b() / (1.0 - ord.alpha());
    if kappa > limit {
        let f = limit / kappa;
        m *= f;
        s *= f;
        kappa = limit;
    }
    let x0: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let field = FnField::new(n, move |_t: f64, x: &[f64], out: &mut [f64]| {
        for i in 0..n {
            let lin: f64 = (0..n).map(|j| m[(i, j)] * x[j]).sum();
            let inner: f64 = (0..n).map(|j| nn[(i, j)] * x[j]).sum();
            out[i] = lin + s * inner.tanh();
        }
    });
    let x0_norm = x0.iter().map(|v| v * v).sum::<f64>().sqrt();
    let ivp = Ivp {
        x0,
        ord,
        t0: grid.t0,
        t_end: grid.t_end,
        dt: grid.dt,
    };
    let sol = integrate(&field, &ivp, &SolverOptions::default(), None)?;
    let env = growth_envelope(kappa, x0_norm, ord)?;
    let mut report = check_ml_bound(&sol.trajectory, &env, GROWTH_TOL)?;
    report.check = "growth_bound".into();
    Ok(report.with_detail("kappa", kappa))
}

fn relaxation_job(ord: FractionalOrder, grid: &Grid, rng: &mut ChaCha8Rng) -> Result<CheckReport, JobError> {
    let lambda = rng.gen_range(0.5..2.0);
    let x0 = rng.gen_range(0.5..2.0);
    let ivp = Ivp {
        x0: vec![x0],
        ord,
        t0: grid.t0,
        t_end: grid.t_end,
        dt: grid.dt,
    };
    let field = LinearField {
        a: Matrix::from_element(1, 1, -lambda),
    };
    let sol = integrate(&field, &ivp, &SolverOptions::default(), None)?;
    let x = sol.trajectory.values()?;
    let mut margins = Vec::with_capacity(x.len() - 1);
    for (k, &v) in x.iter().enumerate().skip(1) {
        let exact = relaxation_closed_form(ord, lambda, x0, k as f64 * grid.dt).map_err(|e| JobError::Failure(e.to_string()))?;
        margins.push((v - exact).abs() / exact.abs());
    }
    let times = &sol.trajectory.times()[1..];
    Ok(CheckReport::from_margins("relaxation", times, &margins, RELAXATION_TOL).with_detail("lambda", lambda))
}

fn suite_job(check: &str, ord: FractionalOrder, grid: &Grid, rng: &mut ChaCha8Rng) -> Result<CheckReport, JobError> {
    let dim = rng.gen_range(1..=2);
    match check {
        "newton_leibniz" => Ok(check_newton_leibniz(&smooth_vector(rng, grid, dim)?, ord)?),
        "abr_relation" => Ok(check_abr_relation(&smooth_vector(rng, grid, dim)?, ord)?),
        "lemma2" => {
            let s = Smooth::random(rng);
            let c = rng.gen_range(0.0..1.0);
            let s0 = s.eval(0.0);
            Ok(check_lemma2_inequality(&scalar(grid, |t| s.eval(t) - s0 + c)?, ord)?)
        }
        "integral_norm" => Ok(check_integral_norm_inequality(&smooth_vector(rng, grid, 2)?, ord)?),
        "comparison" => comparison_job(ord, grid, rng),
        "growth" => growth_job(ord, grid, rng),
        "relaxation" => relaxation_job(ord, grid, rng),
        other => match other.parse::<Inequality>() {
            Ok(which) => inequality_job(which, ord, grid, rng),
            Err(_) => Err(JobError::Input(format!("unknown check '{other}'"))),
        },
    }
}

/// Runs every (check, α, trajectory) job in parallel; output order is
/// check-major and independent of scheduling.
pub fn run_suite(settings: &SuiteSettings) -> Vec<Outcome> {
    let mut jobs = Vec::new();
    for check in &settings.checks {
        for (ai, &alpha) in settings.alphas.iter().enumerate() {
            for i in 0..settings.trajectories {
                jobs.push((check.as_str(), ai, alpha, i));
            }
        }
    }
    jobs.par_iter()
        .map(|&(check, ai, alpha, i)| {
            let result = FractionalOrder::new(alpha, settings.b)
                .map_err(JobError::from)
                .and_then(|ord| {
                    let mut rng = ChaCha8Rng::seed_from_u64(job_seed(settings.seed, check, ai, i));
                    suite_job(check, ord, &settings.grid, &mut rng)
                });
            outcome(check, alpha, i, result)
        })
        .collect()
}

fn sample(exprs: &[Expr], grid: &Grid) -> Result<Trajectory, FracError> {
    Trajectory::from_fn(grid.t0, grid.dt, grid.len(), exprs.len(), |t| {
        let env = Env::new(&[], &[], t);
        exprs.iter().map(|e| e.eval(&env)).collect()
    })
}

fn signal(c: &CaseConfig, grid: &Grid, name: &str) -> Result<Trajectory, JobError> {
    let exprs = match name {
        "x" => &c.x,
        "y" => &c.y,
        "phi" => &c.phi,
        _ => &c.v,
    };
    match exprs {
        Some(e) => Ok(sample(e, grid)?),
        None => Err(JobError::Input(format!("case '{}' needs {name}", c.check))),
    }
}

fn case_job(c: &CaseConfig, ord: FractionalOrder, grid: &Grid) -> Result<CheckReport, JobError> {
    let x = || signal(c, grid, "x");
    match c.check.as_str() {
        "newton_leibniz" => Ok(check_newton_leibniz(&x()?, ord)?),
        "lemma2" => Ok(check_lemma2_inequality(&x()?, ord)?),
        "integral_norm" => Ok(check_integral_norm_inequality(&x()?, ord)?),
        "comparison" => Ok(check_comparison(&x()?, &signal(c, grid, "y")?, ord)?),
        "lyapunov_monitor" => {
            let gamma3 = c.gamma3.ok_or_else(|| JobError::Input("lyapunov_monitor needs gamma3".into()))?;
            let op = if c.abr { Derivative::Abr } else { Derivative::Abc };
            Ok(lyapunov_monitor(&signal(c, grid, "v")?, &x()?, &gamma3, ord, op)?)
        }
        "ml_bound" => {
            let (env, tol) = c.envelope.ok_or_else(|| JobError::Input("ml_bound needs an envelope".into()))?;
            Ok(check_ml_bound(&x()?, &env, tol)?)
        }
        other => {
            let which: Inequality = other.parse()?;
            let phi = if which.needs_phi() { Some(signal(c, grid, "phi")?) } else { None };
            Ok(inequality_suite(phi.as_ref(), &x()?, c.p.as_ref(), ord, which)?)
        }
    }
}

/// Runs explicit cases on the scenario grid.
pub fn run_cases(cases: &[CaseConfig], ord: FractionalOrder, grid: &Grid) -> Vec<Outcome> {
    cases
        .par_iter()
        .enumerate()
        .map(|(i, c)| outcome(&c.check, ord.alpha(), i, case_job(c, ord, grid)))
        .collect()
}
