use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use super::{parse, Decomposition, Drift, Expr, OutputMap, Region, Scope, SystemDef};
use crate::fracops::FractionalOrder;
use crate::linalg::{from_rows, Matrix};
use crate::observers::ObserverFamily;
use crate::stability::{ClassK, Envelope};

/// Names accepted in `checks.suite`.
pub const SUITE_CHECKS: &[&str] = &[
    "newton_leibniz",
    "abr_relation",
    "lemma2",
    "integral_norm",
    "E36",
    "E38",
    "E39",
    "E40",
    "E41",
    "E42",
    "E43",
    "comparison",
    "growth",
    "relaxation",
];

/// Names accepted in `checks.cases[].check`.
pub const CASE_CHECKS: &[&str] = &[
    "newton_leibniz",
    "lemma2",
    "integral_norm",
    "E36",
    "E38",
    "E39",
    "E40",
    "E41",
    "E42",
    "E43",
    "comparison",
    "lyapunov_monitor",
    "ml_bound",
];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed scenario: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid scenario:\n  {}", .0.join("\n  "))]
    Invalid(Vec<String>),
}

type Rows = Vec<Vec<f64>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    alpha: f64,
    #[serde(rename = "B", default = "one")]
    b: f64,
    #[serde(default)]
    t0: f64,
    #[serde(rename = "T")]
    t_end: f64,
    dt: f64,
    #[serde(default)]
    seed: u64,
    system: Option<RawSystem>,
    observer: Option<RawObserver>,
    checks: Option<RawChecks>,
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    #[serde(rename = "A")]
    a: Option<Rows>,
    f: Option<Vec<String>>,
    #[serde(rename = "B")]
    b: Option<Rows>,
    #[serde(default)]
    inputs: Vec<String>,
    phi: Option<Vec<String>>,
    phi1: Option<Vec<String>>,
    phi2: Option<Vec<String>>,
    phi3: Option<Vec<String>>,
    #[serde(rename = "C")]
    c: Option<Rows>,
    h: Option<Vec<String>>,
    x0: Vec<f64>,
    lipschitz: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObserver {
    family: ObserverFamily,
    #[serde(rename = "K")]
    k: Option<Rows>,
    sigma: Option<f64>,
    #[serde(rename = "Q")]
    q: Option<Rows>,
    #[serde(rename = "P")]
    p: Option<Rows>,
    theta: Option<f64>,
    kappa_phi: Option<f64>,
    xhat0: Vec<f64>,
    region: Option<Region>,
    samples: Option<usize>,
    tol: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChecks {
    suite: Option<Vec<String>>,
    alphas: Option<Vec<f64>>,
    trajectories: Option<usize>,
    #[serde(default)]
    cases: Vec<RawCase>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    check: String,
    x: Option<Vec<String>>,
    y: Option<Vec<String>>,
    phi: Option<Vec<String>>,
    v: Option<Vec<String>>,
    #[serde(rename = "P")]
    p: Option<Rows>,
    gamma3: Option<ClassK>,
    envelope: Option<RawEnvelope>,
    #[serde(default)]
    abr: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEnvelope {
    coeff: f64,
    rate: f64,
    #[serde(default = "one")]
    power: f64,
    #[serde(default = "default_bound_tol")]
    tol: f64,
}

fn default_bound_tol() -> f64 {
    1e-2
}

/// Plant block: system, initial state and optional Lipschitz constant.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantConfig {
    pub system: SystemDef,
    pub x0: Vec<f64>,
    pub lipschitz: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObserverConfig {
    pub family: ObserverFamily,
    pub gain: Option<Matrix>,
    pub sigma: Option<f64>,
    pub q: Option<Matrix>,
    pub p: Option<Matrix>,
    pub theta: Option<f64>,
    pub kappa_phi: Option<f64>,
    pub xhat0: Vec<f64>,
    pub region: Option<Region>,
    pub samples: usize,
    /// Relative tolerance of the envelope check.
    pub tol: f64,
}

/// One explicit verification case; signals are expressions of t sampled on
/// the scenario grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseConfig {
    pub check: String,
    pub x: Option<Vec<Expr>>,
    pub y: Option<Vec<Expr>>,
    pub phi: Option<Vec<Expr>>,
    pub v: Option<Vec<Expr>>,
    pub p: Option<Matrix>,
    pub gamma3: Option<ClassK>,
    pub envelope: Option<(Envelope, f64)>,
    pub abr: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChecksConfig {
    pub suite: Vec<String>,
    pub alphas: Vec<f64>,
    pub trajectories: usize,
    pub cases: Vec<CaseConfig>,
}

/// A validated scenario file.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub ord: FractionalOrder,
    pub t0: f64,
    pub t_end: f64,
    pub dt: f64,
    pub seed: u64,
    pub plant: Option<PlantConfig>,
    pub observer: Option<ObserverConfig>,
    pub checks: Option<ChecksConfig>,
}

/// Reads and validates a scenario file.
pub fn load_config(path: &Path) -> Result<ScenarioConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config(&text)
}

/// Validates a scenario from JSON text, reporting every violation found.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigError> {
    let raw: RawScenario = serde_json::from_str(text)?;
    let mut v = Validator::default();
    let ord = match FractionalOrder::new(raw.alpha, raw.b) {
        Ok(o) => Some(o),
        Err(e) => {
            v.push("alpha/B", e.to_string());
            None
        }
    };
    if !(raw.dt > 0.0 && raw.dt.is_finite()) {
        v.push("dt", format!("must be positive, got {}", raw.dt));
    }
    if !raw.t0.is_finite() || !(raw.t_end > raw.t0) || !raw.t_end.is_finite() {
        v.push("T", format!("must be finite and exceed t0 = {}, got {}", raw.t0, raw.t_end));
    }
    let plant = raw.system.as_ref().and_then(|s| v.system(s));
    let observer = raw.observer.as_ref().and_then(|o| match &raw.system {
        Some(s) => v.observer(o, s, plant.as_ref()),
        None => {
            v.push("observer", "requires a system block".into());
            None
        }
    });
    let checks = raw.checks.as_ref().map(|c| v.checks(c, raw.alpha));
    if !v.errors.is_empty() {
        return Err(ConfigError::Invalid(v.errors));
    }
    Ok(ScenarioConfig {
        ord: ord.expect("validated"),
        t0: raw.t0,
        t_end: raw.t_end,
        dt: raw.dt,
        seed: raw.seed,
        plant,
        observer,
        checks,
    })
}

#[derive(Default)]
struct Validator {
    errors: Vec<String>,
}

impl Validator {
    fn push(&mut self, at: &str, msg: String) {
        self.errors.push(format!("{at}: {msg}"));
    }

    fn matrix(&mut self, at: &str, rows: &Rows, shape: (Option<usize>, Option<usize>)) -> Option<Matrix> {
        let m = match from_rows(rows) {
            Ok(m) => m,
            Err(e) => {
                self.push(at, e.to_string());
                return None;
            }
        };
        if m.iter().any(|v| !v.is_finite()) {
            self.push(at, "entries must be finite".into());
            return None;
        }
        let (r, c) = shape;
        if r.is_some_and(|r| r != m.nrows()) || c.is_some_and(|c| c != m.ncols()) {
            let want = |d: Option<usize>| d.map_or("any".to_string(), |d| d.to_string());
            self.push(
                at,
                format!("expected {}x{}, got {}x{}", want(r), want(c), m.nrows(), m.ncols()),
            );
            return None;
        }
        Some(m)
    }

    fn exprs(&mut self, at: &str, src: &[String], scope: &Scope, len: Option<usize>) -> Option<Vec<Expr>> {
        if let Some(n) = len {
            if src.len() != n {
                self.push(at, format!("expected {n} expressions, got {}", src.len()));
                return None;
            }
        }
        let mut out = Vec::with_capacity(src.len());
        let mut ok = true;
        for (i, s) in src.iter().enumerate() {
            match parse(s, scope) {
                Ok(e) => out.push(e),
                Err(e) => {
                    self.push(&format!("{at}[{i}]"), e.to_string());
                    ok = false;
                }
            }
        }
        ok.then_some(out)
    }

    fn system(&mut self, s: &RawSystem) -> Option<PlantConfig> {
        let before = self.errors.len();
        let inputs = self.exprs("system.inputs", &s.inputs, &Scope::default(), None);
        let m = s.inputs.len();
        let (drift, n) = match (&s.a, &s.f) {
            (Some(a), None) => {
                let a = self.matrix("system.A", a, (None, None));
                match a {
                    Some(a) if a.nrows() != a.ncols() => {
                        self.push("system.A", format!("must be square, got {}x{}", a.nrows(), a.ncols()));
                        (None, a.nrows())
                    }
                    Some(a) => {
                        let n = a.nrows();
                        (Some(Drift::Linear(a)), n)
                    }
                    None => (None, s.x0.len()),
                }
            }
            (None, Some(f)) => {
                let n = f.len();
                let e = self.exprs("system.f", f, &Scope::new(n, m, 0), None);
                (e.map(Drift::Exprs), n)
            }
            _ => {
                self.push("system", "exactly one of A and f is required".into());
                (None, s.x0.len())
            }
        };
        if n == 0 {
            self.push("system", "state dimension must be at least 1".into());
        }
        if s.x0.len() != n {
            self.push("system.x0", format!("has dimension {}, plant has {n}", s.x0.len()));
        }
        if s.x0.iter().any(|v| !v.is_finite()) {
            self.push("system.x0", "entries must be finite".into());
        }
        let input_matrix = match &s.b {
            Some(b) if m == 0 => {
                self.push("system.B", "given without inputs".into());
                let _ = b;
                None
            }
            Some(b) => self.matrix("system.B", b, (Some(n), Some(m))),
            None => None,
        };
        let phi = s.phi.as_ref().and_then(|p| self.exprs("system.phi", p, &Scope::new(n, m, 0), Some(n)));
        let output = match (&s.c, &s.h) {
            (Some(c), None) => self.matrix("system.C", c, (None, Some(n))).map(OutputMap::Linear),
            (None, Some(h)) => self.exprs("system.h", h, &Scope::new(n, m, 0), None).map(OutputMap::Exprs),
            (None, None) => Some(OutputMap::Linear(Matrix::identity(n, n))),
            _ => {
                self.push("system", "at most one of C and h may be given".into());
                None
            }
        };
        let outputs = match &output {
            Some(OutputMap::Linear(c)) => c.nrows(),
            Some(OutputMap::Exprs(h)) => h.len(),
            None => 0,
        };
        let decomposition = if s.phi1.is_some() || s.phi2.is_some() || s.phi3.is_some() {
            if s.a.is_none() || s.c.is_none() {
                self.push("system", "phi1/phi2/phi3 require linear A and C".into());
            }
            if s.phi.is_some() {
                self.push("system", "phi cannot be combined with phi1/phi2/phi3".into());
            }
            let zeros = vec!["0".to_string(); n];
            let y_scope = Scope::new(0, 0, outputs);
            let p1 = self.exprs("system.phi1", s.phi1.as_ref().unwrap_or(&zeros), &y_scope, Some(n));
            let p2 = self.exprs("system.phi2", s.phi2.as_ref().unwrap_or(&zeros), &y_scope, Some(n));
            let p3 = self.exprs("system.phi3", s.phi3.as_ref().unwrap_or(&zeros), &Scope::new(n, 0, 0), Some(n));
            match (p1, p2, p3) {
                (Some(phi1), Some(phi2), Some(phi3)) => Some(Decomposition { phi1, phi2, phi3 }),
                _ => None,
            }
        } else {
            None
        };
        if let Some(k) = s.lipschitz {
            if !(k >= 0.0 && k.is_finite()) {
                self.push("system.lipschitz", format!("must be nonnegative, got {k}"));
            }
        }
        if self.errors.len() > before {
            return None;
        }
        Some(PlantConfig {
            system: SystemDef {
                dim: n,
                drift: drift?,
                input_matrix,
                inputs: inputs?,
                phi,
                decomposition,
                output: output?,
            },
            x0: s.x0.clone(),
            lipschitz: s.lipschitz,
        })
    }

    fn observer(&mut self, o: &RawObserver, s: &RawSystem, plant: Option<&PlantConfig>) -> Option<ObserverConfig> {
        let before = self.errors.len();
        // dimensions come from the raw block so mismatches are reported even
        // when the system itself is invalid
        let n = s
            .a
            .as_ref()
            .map(|a| a.len())
            .or(s.f.as_ref().map(|f| f.len()))
            .unwrap_or(s.x0.len());
        let p = plant.map_or_else(
            || s.c.as_ref().map_or_else(|| s.h.as_ref().map_or(n, |h| h.len()), |c| c.len()),
            |pl| pl.system.output_dim(),
        );
        if o.xhat0.len() != n {
            self.push("observer.xhat0", format!("has dimension {}, plant has {n}", o.xhat0.len()));
        }
        if o.xhat0.iter().any(|v| !v.is_finite()) {
            self.push("observer.xhat0", "entries must be finite".into());
        }
        let gain = o.k.as_ref().and_then(|k| self.matrix("observer.K", k, (Some(n), Some(p))));
        let q = o.q.as_ref().and_then(|q| self.matrix("observer.Q", q, (Some(n), Some(n))));
        let pm = o.p.as_ref().and_then(|q| self.matrix("observer.P", q, (Some(n), Some(n))));
        match o.family {
            ObserverFamily::Linear => {
                if o.k.is_some() == o.sigma.is_some() {
                    self.push("observer", "linear family needs exactly one of K and sigma".into());
                }
                if s.a.is_none() || s.c.is_none() {
                    self.push("observer", "linear family needs a plant with A and C".into());
                }
            }
            ObserverFamily::HighGain => {
                if o.k.is_none() {
                    self.push("observer.K", "required for the high_gain family".into());
                }
                match o.theta {
                    Some(th) if th > 0.0 && th.is_finite() => {}
                    Some(th) => self.push("observer.theta", format!("must be positive, got {th}")),
                    None => self.push("observer.theta", "required for the high_gain family".into()),
                }
            }
            ObserverFamily::Lipschitz => {
                if o.k.is_none() {
                    self.push("observer.K", "required for the lipschitz family".into());
                }
                if s.a.is_none() || s.c.is_none() {
                    self.push("observer", "lipschitz family needs a plant with A and C".into());
                }
            }
        }
        if let Some(r) = &o.region {
            if let Err(e) = Region::new(r.lo.clone(), r.hi.clone()) {
                self.push("observer.region", e.to_string());
            } else if r.lo.len() != n {
                self.push("observer.region", format!("has dimension {}, plant has {n}", r.lo.len()));
            }
        }
        let samples = o.samples.unwrap_or(2000);
        if samples < super::MIN_SAMPLES {
            self.push("observer.samples", format!("must be at least {}, got {samples}", super::MIN_SAMPLES));
        }
        let tol = o.tol.unwrap_or(2e-2);
        if !(tol > 0.0 && tol.is_finite()) {
            self.push("observer.tol", format!("must be positive, got {tol}"));
        }
        if let Some(k) = o.kappa_phi {
            if !(k >= 0.0 && k.is_finite()) {
                self.push("observer.kappa_phi", format!("must be nonnegative, got {k}"));
            }
        }
        if let Some(sg) = o.sigma {
            if !sg.is_finite() {
                self.push("observer.sigma", "must be finite".into());
            }
        }
        if self.errors.len() > before {
            return None;
        }
        Some(ObserverConfig {
            family: o.family,
            gain,
            sigma: o.sigma,
            q,
            p: pm,
            theta: o.theta,
            kappa_phi: o.kappa_phi,
            xhat0: o.xhat0.clone(),
            region: o.region.clone(),
            samples,
            tol,
        })
    }

    fn checks(&mut self, c: &RawChecks, alpha: f64) -> ChecksConfig {
        let suite = c
            .suite
            .clone()
            .unwrap_or_else(|| SUITE_CHECKS.iter().map(|s| s.to_string()).collect());
        for name in &suite {
            if !SUITE_CHECKS.contains(&name.as_str()) {
                self.push("checks.suite", format!("unknown check '{name}'"));
            }
        }
        let alphas = c.alphas.clone().unwrap_or_else(|| vec![alpha]);
        for a in &alphas {
            if !(*a > 0.0 && *a < 1.0) {
                self.push("checks.alphas", format!("alpha must lie in (0, 1), got {a}"));
            }
        }
        let trajectories = c.trajectories.unwrap_or(20);
        if trajectories == 0 {
            self.push("checks.trajectories", "must be at least 1".into());
        }
        let cases = c
            .cases
            .iter()
            .enumerate()
            .filter_map(|(i, raw)| self.case(&format!("checks.cases[{i}]"), raw, alpha))
            .collect();
        ChecksConfig {
            suite,
            alphas,
            trajectories,
            cases,
        }
    }

    fn case(&mut self, at: &str, c: &RawCase, alpha: f64) -> Option<CaseConfig> {
        if !CASE_CHECKS.contains(&c.check.as_str()) {
            self.push(&format!("{at}.check"), format!("unknown check '{}'", c.check));
            return None;
        }
        let scope = Scope::default();
        let mut sig = |name: &str, src: &Option<Vec<String>>| {
            src.as_ref().and_then(|s| self.exprs(&format!("{at}.{name}"), s, &scope, None))
        };
        let x = sig("x", &c.x);
        let y = sig("y", &c.y);
        let phi = sig("phi", &c.phi);
        let v = sig("v", &c.v);
        let p = c.p.as_ref().and_then(|p| self.matrix(&format!("{at}.P"), p, (None, None)));
        if x.is_none() && c.x.is_none() && c.check != "ml_bound" {
            self.push(&format!("{at}.x"), "required".into());
        }
        let envelope = match &c.envelope {
            Some(e) => match Envelope::new(e.coeff, e.rate, e.power, alpha.clamp(1e-6, 1.0 - 1e-6)) {
                Ok(env) => Some((env, e.tol)),
                Err(err) => {
                    self.push(&format!("{at}.envelope"), err.to_string());
                    None
                }
            },
            None => None,
        };
        if c.check == "ml_bound" && (c.envelope.is_none() || c.x.is_none()) {
            self.push(at, "ml_bound needs x (the error signal) and envelope".into());
        }
        if c.check == "lyapunov_monitor" && (c.v.is_none() || c.gamma3.is_none()) {
            self.push(at, "lyapunov_monitor needs v and gamma3".into());
        }
        if c.check == "comparison" && c.y.is_none() {
            self.push(at, "comparison needs y".into());
        }
        if let Some(g) = &c.gamma3 {
            if let Err(e) = ClassK::new(g.c, g.p) {
                self.push(&format!("{at}.gamma3"), e.to_string());
            }
        }
        Some(CaseConfig {
            check: c.check.clone(),
            x,
            y,
            phi,
            v,
            p,
            gamma3: c.gamma3,
            envelope,
            abr: c.abr,
        })
    }
}
