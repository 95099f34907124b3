use abfrac::fracops::{FracError, FractionalOrder};
use abfrac::linalg::{
    eigenvalues, is_hurwitz, matignon_margin, observability_rank, solve_lyapunov, to_rows, LinalgError, Matrix,
};
use abfrac::mlf::{ml_two, MlError};
use abfrac::observers::{
    build_high_gain, build_lipschitz, design_linear, high_gain_condition, lipschitz_condition, physical_estimate,
    simulate_high_gain, simulate_linear, simulate_lipschitz, GainChoice, ObserverError, ObserverFamily, ObserverReport,
    ObserverSpec, Sampling, SimulationOptions,
};
use abfrac::report::CheckReport;
use abfrac::solver::{integrate, Ivp, SolverError, SolverOptions};
use abfrac::stability::StabilityError;
use abfrac::sysdsl::{lipschitz_estimate, load_config, ConfigError, DslError, ObserverConfig, PlantConfig, Region, ScenarioConfig};
use serde::Serialize;
use serde_json::json;

use crate::output::{columns, Manifest, OutputSet, Table};
use crate::suite::{run_cases, run_suite, Grid, Outcome, Summary, SuiteSettings};
use crate::{Cli, CliError, Command, MlEvalArgs, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MlError> for CliError {
    fn from(e: MlError) -> Self {
        match e {
            MlError::InvalidParameter { .. } | MlError::GammaPole(_) | MlError::OutOfRange { .. } => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<FracError> for CliError {
    fn from(e: FracError) -> Self {
        match e {
            FracError::Ml(m) => m.into(),
            FracError::Io(_) | FracError::Csv(_) => CliError::Runtime(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::InvalidProblem(_) => CliError::Input(e.to_string()),
            SolverError::Frac(f) => f.into(),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<StabilityError> for CliError {
    fn from(e: StabilityError) -> Self {
        match e {
            StabilityError::Frac(f) => f.into(),
            StabilityError::Ml(m) => m.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        match e {
            DslError::NonFinite(_) => CliError::Runtime(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ObserverError> for CliError {
    fn from(e: ObserverError) -> Self {
        match e {
            ObserverError::Linalg(e) => e.into(),
            ObserverError::Solver(e) => e.into(),
            ObserverError::Stability(e) => e.into(),
            ObserverError::Frac(e) => e.into(),
            ObserverError::Dsl(e) => e.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub(crate) fn dispatch(cli: &Cli, args: &[String]) -> Result<i32, CliError> {
    match &cli.command {
        Command::MlEval(a) => ml_eval(cli, args, a),
        Command::Simulate => simulate(cli, args),
        Command::Observe => observe(cli, args),
        Command::Verify => verify(cli, args),
        Command::Design => design(cli, args),
    }
}

fn require_config(cli: &Cli, command: &str) -> Result<ScenarioConfig, CliError> {
    match &cli.config {
        Some(p) => Ok(load_config(p)?),
        None => Err(CliError::Input(format!("{command} requires --config <FILE>"))),
    }
}

fn require_plant<'a>(cfg: &'a ScenarioConfig, command: &str) -> Result<&'a PlantConfig, CliError> {
    cfg.plant
        .as_ref()
        .ok_or_else(|| CliError::Input(format!("{command} requires a system block")))
}

fn require_observer<'a>(cfg: &'a ScenarioConfig, command: &str) -> Result<(&'a PlantConfig, &'a ObserverConfig), CliError> {
    let plant = require_plant(cfg, command)?;
    let obs = cfg
        .observer
        .as_ref()
        .ok_or_else(|| CliError::Input(format!("{command} requires an observer block")))?;
    Ok((plant, obs))
}

fn seed_of(cli: &Cli, cfg: Option<&ScenarioConfig>) -> u64 {
    cli.seed.or(cfg.map(|c| c.seed)).unwrap_or(0)
}

fn manifest(cli: &Cli, command: &str, args: &[String], seed: u64) -> Manifest {
    Manifest::new(command, args, cli.config.as_deref(), seed)
}

fn ml_eval(cli: &Cli, args: &[String], a: &MlEvalArgs) -> Result<i32, CliError> {
    let zs: Vec<f64> = match (a.z, a.z_min, a.z_max, a.points) {
        (Some(z), ..) => vec![z],
        (None, Some(lo), Some(hi), Some(n)) => {
            if n == 0 || !(lo.is_finite() && hi.is_finite()) || (n > 1 && !(hi > lo)) {
                return Err(CliError::Input(format!(
                    "grid needs points >= 1 and z-min < z-max, got {n} points on [{lo}, {hi}]"
                )));
            }
            if n == 1 {
                vec![lo]
            } else {
                (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
            }
        }
        _ => return Err(CliError::Input("give either --z or --z-min, --z-max and --points".into())),
    };
    let mut table = Table::new(vec!["z".into(), "value".into()]);
    for &z in &zs {
        table.rows.push(vec![z, ml_two(a.alpha, a.beta, z)?]);
    }
    if a.z.is_some() {
        println!("{}", table.rows[0][1]);
    } else {
        print!("{}", String::from_utf8_lossy(&table.to_csv()?));
        let mut out = OutputSet::create(&cli.out)?;
        out.write_table("ml_eval.csv", &table)?;
        out.finish(manifest(cli, "ml-eval", args, seed_of(cli, None)))?;
    }
    Ok(EXIT_PASS)
}

fn simulate(cli: &Cli, args: &[String]) -> Result<i32, CliError> {
    let cfg = require_config(cli, "simulate")?;
    let plant = require_plant(&cfg, "simulate")?;
    let sys = &plant.system;
    let ivp = Ivp {
        x0: sys.to_internal(cfg.t0, &plant.x0),
        ord: cfg.ord,
        t0: cfg.t0,
        t_end: cfg.t_end,
        dt: cfg.dt,
    };
    let sol = integrate(sys, &ivp, &SolverOptions::default(), None)?;
    let traj = &sol.trajectory;
    let mut table = Table::new(
        std::iter::once("t".to_string())
            .chain(columns("x", sys.dim))
            .chain(columns("y", sys.output_dim()))
            .collect(),
    );
    for k in 0..traj.len() {
        let t = traj.time(k);
        let (x, y) = sys.to_physical(t, traj.sample(k));
        table.rows.push(std::iter::once(t).chain(x).chain(y).collect());
    }
    let x0_plus = sys.to_physical(cfg.t0, &sol.x0_plus).0;
    let summary = json!({
        "alpha": cfg.ord.alpha(),
        "B": cfg.ord.b(),
        "t0": cfg.t0,
        "T": cfg.t_end,
        "dt": cfg.dt,
        "steps": traj.len() - 1,
        "points": traj.len(),
        "x0": plant.x0,
        "x0_plus": x0_plus,
        "warnings": sol.warnings.iter().map(|w| format!("{w:?}")).collect::<Vec<_>>(),
    });
    let mut out = OutputSet::create(&cli.out)?;
    out.write_table("trajectory.csv", &table)?;
    out.write_json("simulation.json", &summary)?;
    out.finish(manifest(cli, "simulate", args, seed_of(cli, Some(&cfg))))?;
    Ok(EXIT_PASS)
}

/// Box around the initial states used when the scenario gives no region.
fn default_region(n: usize, plant: &PlantConfig, obs: &ObserverConfig) -> Result<Region, CliError> {
    let r = plant.x0.iter().chain(&obs.xhat0).fold(1.0_f64, |m, v| m.max(2.0 * v.abs()));
    Ok(Region::cube(n, r)?)
}

fn sampling(plant: &PlantConfig, obs: &ObserverConfig, seed: u64) -> Result<Sampling, CliError> {
    let region = match &obs.region {
        Some(r) => r.clone(),
        None => default_region(plant.system.dim, plant, obs)?,
    };
    Ok(Sampling {
        region,
        samples: obs.samples,
        seed,
    })
}

/// κ_φ from the observer block, the plant block, or a sampled estimate.
fn kappa_phi(plant: &PlantConfig, obs: &ObserverConfig, seed: u64) -> Result<(f64, &'static str), CliError> {
    if let Some(k) = obs.kappa_phi {
        return Ok((k, "observer.kappa_phi"));
    }
    if let Some(k) = plant.lipschitz {
        return Ok((k, "system.lipschitz"));
    }
    match &plant.system.phi {
        None => Ok((0.0, "no phi")),
        Some(phi) => {
            let s = sampling(plant, obs, seed)?;
            Ok((lipschitz_estimate(phi, &s.region, s.samples, s.seed)?, "sampled estimate"))
        }
    }
}

fn linear_parts(plant: &PlantConfig) -> Result<(&Matrix, &Matrix), CliError> {
    let sys = &plant.system;
    match (sys.state_matrix(), sys.output_matrix()) {
        (Some(a), Some(c)) => Ok((a, c)),
        _ => Err(CliError::Input("observer needs a plant with A and C".into())),
    }
}

struct Built {
    spec: ObserverSpec,
    condition: Option<CheckReport>,
    kappa: Option<(f64, &'static str)>,
    sampling: Option<Sampling>,
}

fn build_spec(cfg: &ScenarioConfig, plant: &PlantConfig, obs: &ObserverConfig, seed: u64) -> Result<Built, CliError> {
    let sys = &plant.system;
    let n = sys.dim;
    let identity = Matrix::identity(n, n);
    match obs.family {
        ObserverFamily::Linear => {
            let (a, c) = linear_parts(plant)?;
            let gain = match (&obs.gain, obs.sigma) {
                (Some(k), _) => GainChoice::Given(k.clone()),
                (None, Some(s)) => GainChoice::Shift(s),
                (None, None) => return Err(CliError::Input("linear observer needs K or sigma".into())),
            };
            let spec = design_linear(a, c, gain, obs.q.as_ref().unwrap_or(&identity))?.with_initial(obs.xhat0.clone())?;
            Ok(Built {
                spec,
                condition: None,
                kappa: None,
                sampling: None,
            })
        }
        ObserverFamily::HighGain => {
            let k = obs.gain.as_ref().ok_or_else(|| CliError::Input("high_gain observer needs K".into()))?;
            let theta = obs.theta.ok_or_else(|| CliError::Input("high_gain observer needs theta".into()))?;
            let spec = build_high_gain(sys, k, theta)?.with_initial(obs.xhat0.clone())?;
            let kappa = kappa_phi(plant, obs, seed)?;
            let condition = high_gain_condition(theta, &spec.q, kappa.0, n)?;
            Ok(Built {
                spec,
                condition: Some(condition),
                kappa: Some(kappa),
                sampling: None,
            })
        }
        ObserverFamily::Lipschitz => {
            let (a, c) = linear_parts(plant)?;
            let k = obs.gain.as_ref().ok_or_else(|| CliError::Input("lipschitz observer needs K".into()))?;
            let d = sys
                .decomposition
                .clone()
                .ok_or_else(|| CliError::Input("lipschitz observer needs phi1/phi2/phi3 in the system".into()))?;
            let p = obs.p.clone().unwrap_or_else(|| identity.clone());
            let q = match &obs.q {
                Some(q) => q.clone(),
                None => solve_lyapunov(&(a - k * c), &p)?,
            };
            // the observer estimates z = x − φ2(y); shift by the measured y(t0)
            let y0 = sys.output(cfg.t0, &plant.x0);
            let env = abfrac::sysdsl::Env::new(&[], &[], cfg.t0).with_outputs(&y0);
            let zhat0: Vec<f64> = obs.xhat0.iter().zip(&d.phi2).map(|(x, e)| x - e.eval(&env)).collect();
            let phi3 = d.phi3.clone();
            let spec = build_lipschitz(a, c, d, k, &p, &q)?.with_initial(zhat0)?;
            let s = sampling(plant, obs, seed)?;
            let condition = lipschitz_condition(&phi3, &spec.p, &spec.q, &s)?;
            Ok(Built {
                spec,
                condition: Some(condition),
                kappa: None,
                sampling: Some(s),
            })
        }
    }
}

fn error_table(report: &ObserverReport) -> Result<Table, CliError> {
    let e = &report.error;
    let mut table = Table::new(
        std::iter::once("t".to_string())
            .chain(columns("e", e.dim()))
            .chain(["norm".to_string(), "envelope".to_string()])
            .collect(),
    );
    for k in 0..e.len() {
        let t = e.time(k);
        let s = e.sample(k);
        let norm = s.iter().map(|v| v * v).sum::<f64>().sqrt();
        let env = report.fit.envelope.eval(t - e.t0())?;
        table.rows.push(std::iter::once(t).chain(s.iter().copied()).chain([norm, env]).collect());
    }
    Ok(table)
}

fn trajectory_table(plant: &PlantConfig, spec: &ObserverSpec, report: &ObserverReport) -> Table {
    let sys = &plant.system;
    let n = sys.dim;
    let estimate = physical_estimate(sys, spec, report);
    let mut table = Table::new(
        std::iter::once("t".to_string())
            .chain(columns("x", n))
            .chain(columns("xhat", n))
            .collect(),
    );
    for k in 0..report.plant.len() {
        let t = report.plant.time(k);
        let (x, _) = sys.to_physical(t, report.plant.sample(k));
        table.rows.push(std::iter::once(t).chain(x).chain(estimate.sample(k).iter().copied()).collect());
    }
    table
}

fn observe(cli: &Cli, args: &[String]) -> Result<i32, CliError> {
    let cfg = require_config(cli, "observe")?;
    let (plant, obs) = require_observer(&cfg, "observe")?;
    let seed = seed_of(cli, Some(&cfg));
    let built = build_spec(&cfg, plant, obs, seed)?;
    let mut opts = SimulationOptions::new(cfg.ord, cfg.t0, cfg.t_end, cfg.dt);
    opts.envelope_tol = obs.tol;
    let sys = &plant.system;
    let mut report = match obs.family {
        ObserverFamily::Linear => simulate_linear(sys, &built.spec, &plant.x0, &opts)?,
        ObserverFamily::HighGain => {
            let (kappa, _) = built.kappa.expect("high-gain build resolves kappa");
            simulate_high_gain(sys, &built.spec, &plant.x0, kappa, &opts)?
        }
        ObserverFamily::Lipschitz => {
            let s = built.sampling.as_ref().expect("lipschitz build has sampling");
            simulate_lipschitz(sys, &built.spec, &plant.x0, s, &opts)?
        }
    };
    if let Some((k, source)) = built.kappa {
        if let Some(c) = report.condition.take() {
            report.condition = Some(c.with_detail("kappa_phi_source", source).with_detail("kappa_phi", k));
        }
    }
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let envelope = json!({
        "fit": report.fit,
        "certified": report.certified,
        "envelope_check": report.envelope_check,
        "certified_check": report.certified_check,
    });
    let mut out = OutputSet::create(&cli.out)?;
    out.write_table("errors.csv", &error_table(&report)?)?;
    out.write_table("trajectories.csv", &trajectory_table(plant, &built.spec, &report))?;
    out.write_json("envelope.json", &envelope)?;
    out.write_json("verdict.json", &report)?;
    out.finish(manifest(cli, "observe", args, seed))?;
    Ok(if report.verdict { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct VerifyBundle<'a> {
    seed: u64,
    grid: GridInfo,
    alphas: &'a [f64],
    trajectories: usize,
    checks: &'a [String],
    summary: Summary,
    all_pass: bool,
    suite: &'a [Outcome],
    cases: &'a [Outcome],
}

#[derive(Serialize)]
struct GridInfo {
    t0: f64,
    t_end: f64,
    dt: f64,
    b: f64,
}

fn verify(cli: &Cli, args: &[String]) -> Result<i32, CliError> {
    let cfg = match &cli.config {
        Some(p) => Some(load_config(p)?),
        None => None,
    };
    let seed = seed_of(cli, cfg.as_ref());
    let mut settings = SuiteSettings {
        seed,
        ..SuiteSettings::default()
    };
    let mut cases = Vec::new();
    let mut case_ord = FractionalOrder::new(0.5, 1.0)?;
    if let Some(cfg) = &cfg {
        settings.grid = Grid {
            t0: cfg.t0,
            t_end: cfg.t_end,
            dt: cfg.dt,
        };
        settings.b = cfg.ord.b();
        case_ord = cfg.ord;
        if let Some(ch) = &cfg.checks {
            settings.checks = ch.suite.clone();
            settings.alphas = ch.alphas.clone();
            settings.trajectories = ch.trajectories;
            cases = ch.cases.clone();
        }
    }
    let suite = run_suite(&settings);
    let cases = run_cases(&cases, case_ord, &settings.grid);
    let all: Vec<Outcome> = suite.iter().chain(&cases).cloned().collect();
    let summary = Summary::of(&all);
    let bundle = VerifyBundle {
        seed,
        grid: GridInfo {
            t0: settings.grid.t0,
            t_end: settings.grid.t_end,
            dt: settings.grid.dt,
            b: settings.b,
        },
        alphas: &settings.alphas,
        trajectories: settings.trajectories,
        checks: &settings.checks,
        summary,
        all_pass: summary.passed == summary.total,
        suite: &suite,
        cases: &cases,
    };
    let mut out = OutputSet::create(&cli.out)?;
    out.write_json("verdicts.json", &bundle)?;
    out.finish(manifest(cli, "verify", args, seed))?;
    eprintln!(
        "verify: {} checks, {} passed, {} failed, {} input errors",
        summary.total, summary.passed, summary.failed, summary.input_errors
    );
    for o in all.iter().filter(|o| o.status != crate::suite::Status::Pass) {
        let why = o.error.clone().unwrap_or_else(|| {
            o.report.as_ref().map_or(String::new(), |r| format!("worst margin {} > tol {}", r.worst_margin, r.tol))
        });
        eprintln!("  {:?} {} alpha={} #{}: {why}", o.status, o.check, o.alpha, o.index);
    }
    Ok(if summary.input_errors > 0 {
        EXIT_INPUT
    } else if summary.failed > 0 {
        EXIT_FAIL
    } else {
        EXIT_PASS
    })
}

fn design(cli: &Cli, args: &[String]) -> Result<i32, CliError> {
    let cfg = require_config(cli, "design")?;
    let (plant, obs) = require_observer(&cfg, "design")?;
    let seed = seed_of(cli, Some(&cfg));
    let built = build_spec(&cfg, plant, obs, seed)?;
    let spec = &built.spec;
    let abar = spec.closed_loop();
    let eig: Vec<[f64; 2]> = eigenvalues(&abar)?.iter().map(|z| [z.re, z.im]).collect();
    let hurwitz = is_hurwitz(&abar, 0.0)?;
    let alpha = cfg.ord.alpha();
    let matignon = if alpha < 1.0 { Some(matignon_margin(&abar, alpha)?) } else { None };
    let rank = observability_rank(&spec.a, &spec.c)?;
    let condition = match (built.condition.clone(), built.kappa) {
        (Some(c), Some((k, source))) => Some(c.with_detail("kappa_phi_source", source).with_detail("kappa_phi", k)),
        (c, _) => c,
    };
    let pass = hurwitz.hurwitz && condition.as_ref().map_or(true, |c| c.pass);
    let doc = json!({
        "family": spec.family,
        "gain": to_rows(&spec.gain),
        "injection": to_rows(&spec.injection),
        "closed_loop": to_rows(&abar),
        "eigenvalues": eig,
        "hurwitz": hurwitz.hurwitz,
        "spectral_abscissa": hurwitz.abscissa,
        "matignon_margin": matignon,
        "observability_rank": rank,
        "P": to_rows(&spec.p),
        "Q": to_rows(&spec.q),
        "Pi": spec.pi.as_ref().map(to_rows),
        "condition": condition,
        "pass": pass,
    });
    let mut out = OutputSet::create(&cli.out)?;
    out.write_json("design.json", &doc)?;
    out.finish(manifest(cli, "design", args, seed))?;
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}
