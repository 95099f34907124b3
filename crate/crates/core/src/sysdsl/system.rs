use nalgebra::{DMatrix, DVector};

use super::{Env, Expr};
use crate::linalg::Matrix;
use crate::solver::VectorField;

/// Unforced part of the dynamics.
#[derive(Debug, Clone, PartialEq)]
pub enum Drift {
    Linear(Matrix),
    Exprs(Vec<Expr>),
}

/// y = C·x or y = h(x, u, t).
#[derive(Debug, Clone, PartialEq)]
pub enum OutputMap {
    Linear(Matrix),
    Exprs(Vec<Expr>),
}

/// φ = φ1(y) + ∇φ2(y)·ABC-D y + φ3(x), with φ1 and φ2 written in y1..ym
/// and φ3 in x1..xn.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub phi1: Vec<Expr>,
    pub phi2: Vec<Expr>,
    pub phi3: Vec<Expr>,
}

/// Plant ABC-D x = drift(x) + B·u(t) + φ(x, u) with output map.
///
/// With a [`Decomposition`] the plant is integrated in z = x − φ2(y),
/// where ABC-D z = A·z + φ1(y) + A·φ2(y) + φ3(z + φ2(y)) needs no
/// derivative of the output; y solves y = C·(z + φ2(y)).
#[derive(Debug, Clone, PartialEq)]
pub struct SystemDef {
    pub dim: usize,
    pub drift: Drift,
    pub input_matrix: Option<Matrix>,
    /// u(t) as expressions of t.
    pub inputs: Vec<Expr>,
    pub phi: Option<Vec<Expr>>,
    pub decomposition: Option<Decomposition>,
    pub output: OutputMap,
}

impl SystemDef {
    /// ABC-D x = A·x, y = C·x.
    pub fn linear(a: Matrix, c: Matrix) -> Self {
        Self {
            dim: a.nrows(),
            drift: Drift::Linear(a),
            input_matrix: None,
            inputs: Vec::new(),
            phi: None,
            decomposition: None,
            output: OutputMap::Linear(c),
        }
    }

    pub fn input_at(&self, t: f64) -> Vec<f64> {
        self.inputs.iter().map(|e| e.eval(&Env::new(&[], &[], t))).collect()
    }

    pub fn state_matrix(&self) -> Option<&Matrix> {
        match &self.drift {
            Drift::Linear(a) => Some(a),
            Drift::Exprs(_) => None,
        }
    }

    pub fn output_matrix(&self) -> Option<&Matrix> {
        match &self.output {
            OutputMap::Linear(c) => Some(c),
            OutputMap::Exprs(_) => None,
        }
    }

    pub fn output_dim(&self) -> usize {
        match &self.output {
            OutputMap::Linear(c) => c.nrows(),
            OutputMap::Exprs(h) => h.len(),
        }
    }

    /// y(t) for the physical state x.
    pub fn output(&self, t: f64, x: &[f64]) -> Vec<f64> {
        match &self.output {
            OutputMap::Linear(c) => mat_vec(c, x),
            OutputMap::Exprs(h) => {
                let u = self.input_at(t);
                h.iter().map(|e| e.eval(&Env::new(x, &u, t))).collect()
            }
        }
    }

    /// Right-hand side in physical coordinates, φ decomposition excluded.
    pub fn eval_physical(&self, t: f64, x: &[f64], out: &mut [f64]) {
        let u = self.input_at(t);
        match &self.drift {
            Drift::Linear(a) => {
                for (i, o) in out.iter_mut().enumerate() {
                    *o = (0..self.dim).map(|j| a[(i, j)] * x[j]).sum();
                }
            }
            Drift::Exprs(f) => {
                let env = Env::new(x, &u, t);
                for (o, e) in out.iter_mut().zip(f) {
                    *o = e.eval(&env);
                }
            }
        }
        if let Some(b) = &self.input_matrix {
            for (o, bu) in out.iter_mut().zip(mat_vec(b, &u)) {
                *o += bu;
            }
        }
        if let Some(phi) = &self.phi {
            let env = Env::new(x, &u, t);
            for (o, e) in out.iter_mut().zip(phi) {
                *o += e.eval(&env);
            }
        }
    }

    /// Integration state for the physical initial state x0.
    pub fn to_internal(&self, t0: f64, x0: &[f64]) -> Vec<f64> {
        match &self.decomposition {
            Some(d) => {
                let y = self.output(t0, x0);
                let shift = eval_outputs(&d.phi2, &y);
                x0.iter().zip(shift).map(|(x, s)| x - s).collect()
            }
            None => x0.to_vec(),
        }
    }

    /// Physical state and output for an integration state.
    pub fn to_physical(&self, t: f64, state: &[f64]) -> (Vec<f64>, Vec<f64>) {
        match &self.decomposition {
            Some(d) => {
                let c = self.output_matrix().expect("decomposition requires a linear output");
                let y = solve_output(c, &d.phi2, state);
                let x = state.iter().zip(eval_outputs(&d.phi2, &y)).map(|(z, s)| z + s).collect();
                (x, y)
            }
            None => {
                let y = self.output(t, state);
                (state.to_vec(), y)
            }
        }
    }
}

impl VectorField for SystemDef {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, t: f64, state: &[f64], out: &mut [f64]) {
        let Some(d) = &self.decomposition else {
            return self.eval_physical(t, state, out);
        };
        let a = self.state_matrix().expect("decomposition requires a linear drift");
        let (x, y) = self.to_physical(t, state);
        let shift = eval_outputs(&d.phi2, &y);
        let p1 = eval_outputs(&d.phi1, &y);
        let p3: Vec<f64> = d.phi3.iter().map(|e| e.eval(&Env::new(&x, &[], t))).collect();
        let az = mat_vec(a, state);
        let ashift = mat_vec(a, &shift);
        for i in 0..self.dim {
            out[i] = az[i] + p1[i] + ashift[i] + p3[i];
        }
    }
}

pub(crate) fn mat_vec(m: &Matrix, v: &[f64]) -> Vec<f64> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)] * v[j]).sum()).collect()
}

/// Evaluates expressions written in the output variables y1..ym.
pub(crate) fn eval_outputs(exprs: &[Expr], y: &[f64]) -> Vec<f64> {
    let env = Env::new(&[], &[], 0.0).with_outputs(y);
    exprs.iter().map(|e| e.eval(&env)).collect()
}

/// Newton solve of y = C·(z + φ2(y)); NaN when it does not converge.
fn solve_output(c: &Matrix, phi2: &[Expr], z: &[f64]) -> Vec<f64> {
    let m = c.nrows();
    let cz = mat_vec(c, z);
    let residual = |y: &[f64]| -> Vec<f64> {
        let cs = mat_vec(c, &eval_outputs(phi2, y));
        (0..m).map(|i| y[i] - cz[i] - cs[i]).collect()
    };
    let mut y = cz.clone();
    for _ in 0..50 {
        let r = residual(&y);
        let size = r.iter().fold(0.0_f64, |s, v| s.max(v.abs()));
        let scale = y.iter().fold(1.0_f64, |s, v| s.max(v.abs()));
        if size <= 1e-14 * scale {
            return y;
        }
        if !size.is_finite() {
            break;
        }
        let mut jac = DMatrix::zeros(m, m);
        for j in 0..m {
            let h = 1e-7 * y[j].abs().max(1.0);
            let mut yp = y.clone();
            yp[j] += h;
            let rp = residual(&yp);
            for i in 0..m {
                jac[(i, j)] = (rp[i] - r[i]) / h;
            }
        }
        match jac.lu().solve(&DVector::from_vec(r)) {
            Some(step) => y.iter_mut().zip(step.iter()).for_each(|(v, s)| *v -= s),
            None => break,
        }
    }
    vec![f64::NAN; m]
}
