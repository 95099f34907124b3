use nalgebra::{DMatrix, DVector};

use super::{FracError, FractionalOrder};
use crate::mlf::{self, MlParams};

/// Upper bound on the number of non-integer exponents corrected by
/// starting weights; the moment systems become too ill-conditioned beyond.
pub const MAX_STARTING_EXPONENTS: usize = 6;

/// Non-integer exponents σ = offset + i + jα (i ≥ 0, j ≥ 1) with
/// σ + α < `order`, smallest first, at most [`MAX_STARTING_EXPONENTS`].
///
/// A product rule applied to t^σ converges like dt^{σ+α}; correcting these
/// terms leaves an observed order of at least `order` (capped at 2) for data
/// with expansions in t^{i+jα}.
pub fn singular_exponents(alpha: f64, offset: f64, order: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for i in 0..3 {
        for j in 1.. {
            let sigma = offset + i as f64 + j as f64 * alpha;
            if sigma + alpha >= order {
                break;
            }
            let near_integer = (sigma - sigma.round()).abs() < 1e-9;
            if !near_integer && out.iter().all(|&e| (e - sigma).abs() > 1e-9) {
                out.push(sigma);
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out.truncate(MAX_STARTING_EXPONENTS);
    out
}

/// Product-integration weights for the Riemann–Liouville integral
/// (1/Γ(α)) ∫_{t0}^{t_k} (t_k − τ)^{α−1} f(τ) dτ on a uniform grid.
///
/// The trapezoid weights integrate the kernel exactly against the
/// piecewise-linear interpolant of f; the rectangle weights do the same for
/// the piecewise-constant (left endpoint) interpolant.
#[derive(Debug, Clone)]
pub struct RlWeights {
    alpha: f64,
    dt: f64,
    trap_scale: f64,
    rect_scale: f64,
    /// a_{0,k}, indexed by k.
    endpoint: Vec<f64>,
    /// a_{j,k} for 0 < j < k, indexed by m = k − j.
    inner: Vec<f64>,
    /// b_{j,k}, indexed by m = k − j ≥ 1.
    rect: Vec<f64>,
    start: Option<StartingWeights>,
}

/// Lubich-type starting weights w_{k,j}, j < s, added to the trapezoid sum
/// so that the rule becomes exact for 1, t and t^σ for every σ in a given
/// exponent set. The nodes are j = 0..s−1 with s = |set| + 2; for k < s−1
/// this reaches ahead of t_k.
#[derive(Debug, Clone)]
pub struct StartingWeights {
    exponents: Vec<f64>,
    nodes: usize,
    /// Row k holds w_{k,0..s}, already multiplied by dt^α.
    table: Vec<f64>,
}

impl StartingWeights {
    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn row(&self, k: usize) -> &[f64] {
        &self.table[k * self.nodes..(k + 1) * self.nodes]
    }
}

impl RlWeights {
    /// Tables for grids of up to `len` points.
    pub fn new(alpha: f64, dt: f64, len: usize) -> Result<Self, FracError> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(FracError::InvalidOrder(format!("alpha must be positive, got {alpha}")));
        }
        let p = alpha + 1.0;
        let mut endpoint = vec![0.0; len];
        let mut inner = vec![0.0; len];
        let mut rect = vec![0.0; len];
        for k in 1..len {
            let kf = k as f64;
            endpoint[k] = (kf - 1.0).powf(p) - (kf - 1.0 - alpha) * kf.powf(alpha);
            // (m+1)^p − 2m^p + (m−1)^p without the cancellation of the naive form
            inner[k] = kf.powf(p) * ((p * (1.0 / kf).ln_1p()).exp_m1() + (p * (-1.0 / kf).ln_1p()).exp_m1());
            rect[k] = kf.powf(alpha) - (kf - 1.0).powf(alpha);
        }
        Ok(Self {
            alpha,
            dt,
            trap_scale: dt.powf(alpha) / mlf::gamma(alpha + 2.0)?,
            rect_scale: dt.powf(alpha) / mlf::gamma(alpha + 1.0)?,
            endpoint,
            inner,
            rect,
            start: None,
        })
    }

    /// Trapezoid tables with starting weights for `exponents`. Without
    /// enough grid points for the starting nodes the plain rule is kept.
    pub fn with_starting_weights(alpha: f64, dt: f64, len: usize, exponents: &[f64]) -> Result<Self, FracError> {
        let mut w = Self::new(alpha, dt, len)?;
        let nodes = exponents.len() + 2;
        if exponents.is_empty() || len < nodes {
            return Ok(w);
        }
        let mut sigmas = vec![0.0, 1.0];
        sigmas.extend_from_slice(exponents);
        // moment matrix V[i][j] = j^σ_i
        let v = DMatrix::from_fn(nodes, nodes, |i, j| {
            if j == 0 {
                if sigmas[i] == 0.0 { 1.0 } else { 0.0 }
            } else {
                (j as f64).powf(sigmas[i])
            }
        });
        let lu = v.lu();
        let g2 = mlf::gamma(alpha + 2.0)?;
        let mut exact_coef = Vec::with_capacity(nodes);
        let mut powers = Vec::with_capacity(nodes);
        for &sg in &sigmas {
            exact_coef.push(mlf::gamma(sg + 1.0)? / mlf::gamma(sg + 1.0 + alpha)?);
            powers.push((0..len).map(|j| if j == 0 { if sg == 0.0 { 1.0 } else { 0.0 } } else { (j as f64).powf(sg) }).collect::<Vec<_>>());
        }
        let scale = dt.powf(alpha);
        let mut table = vec![0.0; len * nodes];
        for k in 1..len {
            // moment defects of the plain rule at unit spacing
            let rhs = DVector::from_fn(nodes, |i, _| {
                if i < 2 {
                    return 0.0;
                }
                let p = &powers[i];
                let mut q = w.endpoint[k] * p[0] + p[k];
                for j in 1..k {
                    q += w.inner[k - j] * p[j];
                }
                exact_coef[i] * (k as f64).powf(sigmas[i] + alpha) - q / g2
            });
            let sol = lu.solve(&rhs).ok_or_else(|| {
                FracError::InvalidOrder("singular starting-weight system".into())
            })?;
            for j in 0..nodes {
                table[k * nodes + j] = scale * sol[j];
            }
        }
        w.start = Some(StartingWeights {
            exponents: exponents.to_vec(),
            nodes,
            table,
        });
        Ok(w)
    }

    pub fn starting(&self) -> Option<&StartingWeights> {
        self.start.as_ref()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn capacity(&self) -> usize {
        self.inner.len()
    }

    /// Weight of f_k in the trapezoid sum at step k (a_{k,k} times scale).
    pub fn trapezoid_diagonal(&self) -> f64 {
        self.trap_scale
    }

    /// Σ_{j<k} a_{j,k} f_j·scale for rows f_j of `history` (row-major, `dim`
    /// values per row). Adds into `out`.
    pub fn trapezoid_lagged(&self, k: usize, history: &[f64], dim: usize, out: &mut [f64]) {
        if k == 0 {
            return;
        }
        let s = self.trap_scale;
        for (o, &f) in out.iter_mut().zip(&history[..dim]) {
            *o += s * self.endpoint[k] * f;
        }
        for j in 1..k {
            let w = s * self.inner[k - j];
            let row = &history[j * dim..(j + 1) * dim];
            for (o, &f) in out.iter_mut().zip(row) {
                *o += w * f;
            }
        }
    }

    /// Full trapezoid value at step k, starting weights included. Needs rows
    /// up to max(k, s−1) in `data`. Adds into `out`.
    pub fn trapezoid_at(&self, k: usize, data: &[f64], dim: usize, out: &mut [f64]) {
        if k == 0 {
            return;
        }
        self.trapezoid_lagged(k, data, dim, out);
        for (o, &f) in out.iter_mut().zip(&data[k * dim..(k + 1) * dim]) {
            *o += self.trap_scale * f;
        }
        self.starting_correction(k, data, dim, out);
    }

    /// Coefficient of f_j in [`RlWeights::trapezoid_at`] at step k.
    pub fn trapezoid_coefficient(&self, k: usize, j: usize) -> f64 {
        let plain = match j {
            _ if k == 0 || j > k => 0.0,
            0 => self.trap_scale * self.endpoint[k],
            _ if j == k => self.trap_scale,
            _ => self.trap_scale * self.inner[k - j],
        };
        let start = match &self.start {
            Some(st) if j < st.nodes => st.row(k)[j],
            _ => 0.0,
        };
        plain + start
    }

    /// Σ_j w_{k,j} f_j over the starting nodes, if any. Adds into `out`.
    pub fn starting_correction(&self, k: usize, data: &[f64], dim: usize, out: &mut [f64]) {
        if let Some(st) = &self.start {
            for (j, &w) in st.row(k).iter().enumerate() {
                for (o, &f) in out.iter_mut().zip(&data[j * dim..(j + 1) * dim]) {
                    *o += w * f;
                }
            }
        }
    }

    /// Σ_{j<k} b_{j,k} f_j·scale (product rectangle). Adds into `out`.
    pub fn rectangle(&self, k: usize, history: &[f64], dim: usize, out: &mut [f64]) {
        for j in 0..k {
            let w = self.rect_scale * self.rect[k - j];
            let row = &history[j * dim..(j + 1) * dim];
            for (o, &f) in out.iter_mut().zip(row) {
                *o += w * f;
            }
        }
    }
}

/// Weights for the Mittag-Leffler-kernel convolution of the ABC derivative.
///
/// With x replaced by its piecewise-linear interpolant, x′ is constant on
/// each cell and the kernel K(r) = E_α(−α/(1−α)·r^α) integrates in closed
/// form: ∫_0^s K = s·E_{α,2}(−α/(1−α)·s^α) =: Φ(s). The weight of cell
/// [t_j, t_{j+1}] at step k is Φ((k−j)dt) − Φ((k−j−1)dt) > 0, which grows
/// toward t_k because K is decreasing.
#[derive(Debug, Clone)]
pub struct AbcWeights {
    ord: FractionalOrder,
    dt: f64,
    /// Indexed by m = k − j ≥ 1.
    cell: Vec<f64>,
    /// K(m·dt), m ≥ 0.
    kernel: Vec<f64>,
}

impl AbcWeights {
    pub fn new(ord: FractionalOrder, dt: f64, len: usize) -> Result<Self, FracError> {
        let alpha = ord.alpha();
        let c = ord.kernel_rate();
        let e2 = MlParams::new(alpha, 2.0)?;
        let cfg = mlf::MlConfig::default();
        let mut phi = vec![0.0; len];
        let mut kernel = vec![1.0; len];
        for m in 1..len {
            let s = m as f64 * dt;
            let z = -c * s.powf(alpha);
            phi[m] = s * mlf::mittag_leffler(e2, z, &cfg)?;
            kernel[m] = mlf::ml_one(alpha, z)?;
        }
        let mut cell = vec![0.0; len];
        for m in 1..len {
            cell[m] = phi[m] - phi[m - 1];
        }
        Ok(Self { ord, dt, cell, kernel })
    }

    pub fn order(&self) -> FractionalOrder {
        self.ord
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn capacity(&self) -> usize {
        self.kernel.len()
    }

    /// ∫ of the kernel over the m-th cell back from the evaluation point.
    pub fn cell_weights(&self) -> &[f64] {
        &self.cell[1..]
    }

    /// Kernel samples K(m·dt), m = 0, 1, ...
    pub fn kernel(&self) -> &[f64] {
        &self.kernel
    }

    /// ABC derivative at step k from rows x_0..x_k. Adds into `out`.
    pub fn derivative_at(&self, k: usize, x: &[f64], dim: usize, out: &mut [f64]) {
        let s = self.ord.b() / (1.0 - self.ord.alpha()) / self.dt;
        for j in 0..k {
            let w = s * self.cell[k - j];
            let (a, b) = (&x[j * dim..(j + 1) * dim], &x[(j + 1) * dim..(j + 2) * dim]);
            for i in 0..dim {
                out[i] += w * (b[i] - a[i]);
            }
        }
    }
}
