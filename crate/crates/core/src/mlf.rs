//! Gamma and Mittag-Leffler functions on the real line.
//!
//! E_{α,β}(z) = Σ_{k≥0} z^k / Γ(αk + β)
//!
//! Small arguments are summed directly (Kahan-compensated). Everything else
//! goes through numerical inversion of the Laplace transform
//! s^{α-β} / (s^α - z) at t = 1 on a parabolic contour. The complex plane is
//! partitioned by the singularities of the transform (the branch point at the
//! origin and the poles s^α = z on the principal sheet); the contour is placed
//! in whichever region needs the fewest nodes and the residues of the poles
//! left outside it are added back.
//!
//! Far out on the negative axis (z < −[`Z_MAX`], α ≤ 1) the algebraic
//! asymptotic expansion −Σ_k z^{-k}/Γ(β − αk) is used instead; there the
//! transform's poles contribute nothing representable.
//!
//! Validated range: 0 < α ≤ 2, 0 < β ≤ 10, real z with |z| ≤ [`Z_MAX`], plus
//! every z < −[`Z_MAX`] when α ≤ 1. Results that overflow `f64` are reported
//! as errors.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

/// Largest |z| handled by series/contour; beyond it only the negative axis
/// with α ≤ 1 is supported.
pub const Z_MAX: f64 = 1000.0;

/// Upper limit on β for which accuracy is validated.
pub const BETA_MAX: f64 = 10.0;

const SERIES_MAX_TERMS: usize = 1200;
const CONTOUR_MAX_NODES: usize = 200;
/// Loosest tolerance the contour may fall back to before giving up.
const CONTOUR_LOOSEST_LOG_EPS: f64 = -25.328436022934504; // ln(1e-11)

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MlError {
    #[error("gamma has a pole at {0}")]
    GammaPole(f64),
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("argument z = {z} outside the validated range |z| <= {max}")]
    OutOfRange { z: f64, max: f64 },
    #[error("evaluation did not converge for alpha = {alpha}, beta = {beta}, z = {z}")]
    NonConvergence { alpha: f64, beta: f64, z: f64 },
    #[error("E_{{{alpha},{beta}}}({z}) overflows f64")]
    Overflow { alpha: f64, beta: f64, z: f64 },
}

/// Parameters of the two-parameter Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlParams {
    alpha: f64,
    beta: f64,
}

impl MlParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, MlError> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(MlError::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be positive",
            });
        }
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(MlError::InvalidParameter {
                name: "beta",
                value: beta,
                reason: "must be positive",
            });
        }
        Ok(Self { alpha, beta })
    }

    /// One-parameter function E_α = E_{α,1}.
    pub fn one(alpha: f64) -> Result<Self, MlError> {
        Self::new(alpha, 1.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Evaluation strategy knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlConfig {
    /// Arguments with |z| up to this value are tried with the power series
    /// first; the series is abandoned when cancellation would cost accuracy.
    pub z_switch: f64,
}

impl Default for MlConfig {
    fn default() -> Self {
        Self { z_switch: 5.0 }
    }
}

/// Γ(z) for real z.
pub fn gamma(z: f64) -> Result<f64, MlError> {
    if z.is_nan() {
        return Ok(f64::NAN);
    }
    if z <= 0.0 && z == z.floor() {
        return Err(MlError::GammaPole(z));
    }
    if z == z.floor() && z <= 21.0 {
        // exact factorials
        return Ok((1..z as u64).map(|k| k as f64).product());
    }
    Ok(statrs::function::gamma::gamma(z))
}

/// One-parameter Mittag-Leffler function E_α(z), 0 < α ≤ 2.
pub fn ml_one(alpha: f64, z: f64) -> Result<f64, MlError> {
    if alpha > 2.0 {
        return Err(MlError::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "the one-parameter evaluator is validated on (0, 2]",
        });
    }
    ml_two(alpha, 1.0, z)
}

/// Two-parameter Mittag-Leffler function E_{α,β}(z).
pub fn ml_two(alpha: f64, beta: f64, z: f64) -> Result<f64, MlError> {
    mittag_leffler(MlParams::new(alpha, beta)?, z, &MlConfig::default())
}

/// E_{α,β}(z) with an explicit evaluation configuration.
pub fn mittag_leffler(params: MlParams, z: f64, cfg: &MlConfig) -> Result<f64, MlError> {
    let MlParams { alpha, beta } = params;
    if z.is_nan() {
        return Ok(f64::NAN);
    }
    if z < -Z_MAX && alpha <= 1.0 {
        return finite(asymptotic(alpha, beta, z), params, z);
    }
    if z.abs() > Z_MAX {
        return Err(MlError::OutOfRange { z, max: Z_MAX });
    }
    if z.abs() < 1e-15 {
        return Ok(1.0 / gamma(beta)?);
    }
    if alpha == 1.0 && beta == 1.0 {
        return finite(z.exp(), params, z);
    }
    if z.abs() <= cfg.z_switch {
        if let Some(v) = series(alpha, beta, z) {
            return finite(v, params, z);
        }
    }
    let v = contour(alpha, beta, z).ok_or(MlError::NonConvergence { alpha, beta, z })?;
    finite(v, params, z)
}

fn finite(v: f64, params: MlParams, z: f64) -> Result<f64, MlError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(MlError::Overflow {
            alpha: params.alpha,
            beta: params.beta,
            z,
        })
    }
}

/// Algebraic expansion for large negative z, α ≤ 1.
fn asymptotic(alpha: f64, beta: f64, z: f64) -> f64 {
    let inv = 1.0 / z;
    let mut pow = 1.0;
    let mut sum = 0.0;
    for k in 1..=60 {
        pow *= inv;
        let term = -pow * rgamma(beta - alpha * k as f64);
        sum += term;
        // terms vanish at poles of Γ, so a zero term says nothing about the tail
        if term != 0.0 && term.abs() <= 1e-17 * sum.abs() && k > 2 {
            break;
        }
    }
    sum
}

/// 1/Γ(x), zero at the poles.
fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x < 0.5 {
        // reflection: 1/Γ(x) = Γ(1 − x)·sin(πx)/π
        return statrs::function::gamma::gamma(1.0 - x) * (PI * x).sin() / PI;
    }
    1.0 / statrs::function::gamma::gamma(x)
}

/// Compensated power series. Returns `None` when the sum either fails to
/// converge within the term budget or loses more than ~3 digits to
/// cancellation.
fn series(alpha: f64, beta: f64, z: f64) -> Option<f64> {
    let ln_abs_z = z.abs().ln();
    let negative = z < 0.0;
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    let mut abs_sum = 0.0_f64;
    let mut prev_abs = f64::INFINITY;
    for k in 0..SERIES_MAX_TERMS {
        let arg = alpha * k as f64 + beta;
        let mag = if arg < 170.0 {
            (k as f64 * ln_abs_z).exp() / statrs::function::gamma::gamma(arg)
        } else {
            (k as f64 * ln_abs_z - statrs::function::gamma::ln_gamma(arg)).exp()
        };
        let term = if negative && k % 2 == 1 { -mag } else { mag };
        // Kahan summation
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        abs_sum += mag;
        // terms are eventually monotone; stop once two in a row are negligible
        if k > 2 && mag <= 1e-17 * sum.abs() && prev_abs <= 1e-16 * sum.abs() {
            let cancellation = abs_sum / sum.abs();
            return (cancellation < 1e3).then_some(sum);
        }
        prev_abs = mag;
    }
    None
}

/// Laplace-transform inversion of s^{α-β}/(s^α - z) at t = 1.
fn contour(alpha: f64, beta: f64, z: f64) -> Option<f64> {
    let log_eps_machine = f64::EPSILON.ln();
    let mut log_eps = (1e-15_f64).ln();

    // poles of the transform on the principal sheet
    let theta = if z < 0.0 { PI } else { 0.0 };
    let kmin = (-alpha / 2.0 - theta / (2.0 * PI)).ceil() as i64;
    let kmax = (alpha / 2.0 - theta / (2.0 * PI)).floor() as i64;
    let radius = z.abs().powf(1.0 / alpha);
    let mut poles: Vec<(f64, Complex64)> = (kmin..=kmax)
        .map(|k| {
            let s = Complex64::from_polar(radius, (theta + 2.0 * PI * k as f64) / alpha);
            (parabola_level(s), s)
        })
        .filter(|(phi, _)| *phi > 1e-15)
        .collect();
    poles.sort_by(|a, b| a.0.total_cmp(&b.0));

    // singularities: origin first, then poles, sorted by contour level
    let mut phi: Vec<f64> = std::iter::once(0.0).chain(poles.iter().map(|p| p.0)).collect();
    let j1 = phi.len();
    let mut p = vec![1.0; j1];
    p[0] = f64::max(0.0, -2.0 * (alpha - beta + 1.0));
    let mut q = vec![1.0; j1];
    q[j1 - 1] = f64::INFINITY;
    phi.push(f64::INFINITY);

    let admissible: Vec<usize> = (0..j1)
        .filter(|&j| phi[j] < (log_eps - log_eps_machine) && phi[j] < phi[j + 1])
        .collect();
    if admissible.is_empty() {
        return None;
    }

    let (mu, h, n, region) = loop {
        let mut best: Option<(f64, f64, f64, usize)> = None;
        for &j in &admissible {
            let (mu, h, n) = if j + 1 < j1 {
                optimal_param_bounded(phi[j], phi[j + 1], p[j], q[j], log_eps)
            } else {
                optimal_param_unbounded(phi[j], p[j], log_eps)
            };
            if best.map_or(true, |b| n < b.2) {
                best = Some((mu, h, n, j));
            }
        }
        let best = best?;
        if best.2 > CONTOUR_MAX_NODES as f64 {
            log_eps += 10f64.ln();
            if log_eps > CONTOUR_LOOSEST_LOG_EPS {
                return None;
            }
        } else {
            break best;
        }
    };
    let n = n as usize;

    // trapezoidal rule on s(u) = mu (1 + iu)^2; the integrand satisfies
    // S(-u) = -conj(S(u)) for real z, so only u >= 0 is summed
    let integrand = |u: f64| -> f64 {
        let s = mu * Complex64::new(1.0, u).powi(2);
        let ds = Complex64::new(-2.0 * mu * u, 2.0 * mu);
        let f = s.powf(alpha - beta) / (s.powf(alpha) - z) * ds;
        (s.exp() * f).im
    };
    let mut acc = 0.5 * integrand(0.0);
    for k in 1..=n {
        acc += integrand(h * k as f64);
    }
    let integral = h * acc / PI;

    // residues of the poles lying outside the contour
    let residues: f64 = poles[region..]
        .iter()
        .map(|(_, s)| (s.powf(1.0 - beta) * s.exp()).re / alpha)
        .sum();
    Some(integral + residues)
}

/// Level of s in parabolic coordinates: the mu for which the parabola
/// mu (1 + iu)^2 passes through s.
fn parabola_level(s: Complex64) -> f64 {
    let r = s.norm();
    if s.re >= 0.0 {
        0.5 * (s.re + r)
    } else {
        // avoids cancellation near the negative real axis
        0.5 * s.im * s.im / (r - s.re)
    }
}

/// Optimal contour parameters for a region bounded by two singularities.
fn optimal_param_bounded(
    phi_j: f64,
    phi_j1: f64,
    pj: f64,
    qj: f64,
    mut log_eps: f64,
) -> (f64, f64, f64) {
    let log_eps_machine = f64::EPSILON.ln();
    let fac = 1.01;
    let f_max = (log_eps - log_eps_machine).exp();

    let sq_phi_j = phi_j.sqrt();
    let threshold = 2.0 * (log_eps - log_eps_machine).sqrt();
    let sq_phi_j1 = phi_j1.sqrt().min(threshold - sq_phi_j);

    let small = 1.0e-14;
    let (sq_bar_j, sq_bar_j1, f_bar) = if pj < small && qj < small {
        (sq_phi_j, sq_phi_j1, 1.0)
    } else if pj < small {
        let f_min = if sq_phi_j > 0.0 {
            fac * (sq_phi_j / (sq_phi_j1 - sq_phi_j)).powf(qj)
        } else {
            fac
        };
        if f_min >= f_max {
            return (0.0, 0.0, f64::INFINITY);
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fq = f_bar.powf(-1.0 / qj);
        (
            sq_phi_j,
            (2.0 * sq_phi_j1 - fq * sq_phi_j) / (2.0 + fq),
            f_bar,
        )
    } else if qj < small {
        let f_min = fac * (sq_phi_j1 / (sq_phi_j1 - sq_phi_j)).powf(pj);
        if f_min >= f_max {
            return (0.0, 0.0, f64::INFINITY);
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        (
            (2.0 * sq_phi_j + fp * sq_phi_j1) / (2.0 - fp),
            sq_phi_j1,
            f_bar,
        )
    } else {
        let f_min = fac * (sq_phi_j + sq_phi_j1) / (sq_phi_j1 - sq_phi_j).powf(pj.max(qj));
        if f_min >= f_max {
            return (0.0, 0.0, f64::INFINITY);
        }
        let f_min = f_min.max(1.5);
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        let fq = f_bar.powf(-1.0 / qj);
        let w = -phi_j1 / log_eps;
        let den = 2.0 + w - (1.0 + w) * fp + fq;
        (
            ((2.0 + w + fq) * sq_phi_j + fp * sq_phi_j1) / den,
            (-(1.0 + w) * fq * sq_phi_j + (2.0 + w - (1.0 + w) * fp) * sq_phi_j1) / den,
            f_bar,
        )
    };

    log_eps -= f_bar.ln();
    let w = -sq_bar_j1 * sq_bar_j1 / log_eps;
    let mu = (((1.0 + w) * sq_bar_j + sq_bar_j1) / (2.0 + w)).powi(2);
    let h = -2.0 * PI / log_eps * (sq_bar_j1 - sq_bar_j) / ((1.0 + w) * sq_bar_j + sq_bar_j1);
    let n = ((1.0 - log_eps / mu).sqrt() / h).ceil();
    if !(mu > 0.0 && h > 0.0 && n.is_finite()) {
        return (0.0, 0.0, f64::INFINITY);
    }
    (mu, h, n)
}

/// Optimal contour parameters for the unbounded region beyond the last
/// singularity.
fn optimal_param_unbounded(phi_j: f64, pj: f64, log_eps: f64) -> (f64, f64, f64) {
    let sq_phi_j = phi_j.sqrt();
    let mut phi_bar = if phi_j > 0.0 { phi_j * 1.01 } else { 0.01 };
    let mut sq_phi_bar = phi_bar.sqrt();

    let (f_min, f_max, f_tar) = (1.0, 10.0, 5.0_f64);
    let (mut n, mut a, mut sq_mu);
    let mut iterations = 0;
    loop {
        let log_eps_phi = log_eps / phi_bar;
        n = (phi_bar / PI * (1.0 - 1.5 * log_eps_phi + (1.0 - 2.0 * log_eps_phi).sqrt())).ceil();
        a = PI * n / phi_bar;
        sq_mu = sq_phi_bar * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
        let f_bar = ((sq_phi_bar - sq_phi_j) / sq_mu).powf(-pj);
        iterations += 1;
        if pj < 1.0e-14 || (f_min < f_bar && f_bar < f_max) || iterations > 100 {
            break;
        }
        sq_phi_bar = f_tar.powf(-1.0 / pj) * sq_mu + sq_phi_j;
        phi_bar = sq_phi_bar * sq_phi_bar;
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / n;

    // keep round-off under control
    let log_eps_machine = f64::EPSILON.ln();
    let threshold = log_eps - log_eps_machine;
    if mu > threshold {
        let qv = if pj.abs() < 1.0e-14 {
            0.0
        } else {
            f_tar.powf(-1.0 / pj) * mu.sqrt()
        };
        let phi_bar = (qv + phi_j.sqrt()).powi(2);
        if phi_bar < threshold {
            let w = (log_eps_machine / (log_eps_machine - log_eps)).sqrt();
            let u = (-phi_bar / log_eps_machine).sqrt();
            mu = threshold;
            n = (w * log_eps / 2.0 / PI / (u * w - 1.0)).ceil();
            h = w / n;
        } else {
            return (0.0, 0.0, f64::INFINITY);
        }
    }
    (mu, h, n)
}
