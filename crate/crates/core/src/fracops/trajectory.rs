use std::io::{Read, Write};
use std::path::Path;

use super::FracError;

/// Uniformly sampled vector signal t_k = t0 + k·dt, k = 0..N−1.
///
/// Samples are stored row-major, one row of `dim` values per time point.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    t0: f64,
    dt: f64,
    dim: usize,
    data: Vec<f64>,
}

impl Trajectory {
    pub fn new(t0: f64, dt: f64, samples: Vec<Vec<f64>>) -> Result<Self, FracError> {
        let dim = samples.first().map_or(0, Vec::len);
        if samples.iter().any(|s| s.len() != dim) {
            return Err(FracError::Invalid(
                "all samples must share one dimension".into(),
            ));
        }
        Self::from_flat(t0, dt, dim, samples.concat())
    }

    /// Row-major flat storage; `data.len()` must be a multiple of `dim`.
    pub fn from_flat(t0: f64, dt: f64, dim: usize, data: Vec<f64>) -> Result<Self, FracError> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(FracError::Invalid(format!("dt must be positive, got {dt}")));
        }
        if !t0.is_finite() {
            return Err(FracError::Invalid(format!("t0 must be finite, got {t0}")));
        }
        if dim == 0 {
            return Err(FracError::Invalid("dimension must be at least 1".into()));
        }
        if data.len() % dim != 0 {
            return Err(FracError::Invalid(format!(
                "{} values do not split into rows of {dim}",
                data.len()
            )));
        }
        let len = data.len() / dim;
        if len < 2 {
            return Err(FracError::TooShort { need: 2, got: len });
        }
        Ok(Self { t0, dt, dim, data })
    }

    pub fn scalar(t0: f64, dt: f64, values: Vec<f64>) -> Result<Self, FracError> {
        Self::from_flat(t0, dt, 1, values)
    }

    /// Samples `f` at `len` grid points.
    pub fn from_fn(
        t0: f64,
        dt: f64,
        len: usize,
        dim: usize,
        mut f: impl FnMut(f64) -> Vec<f64>,
    ) -> Result<Self, FracError> {
        let mut data = Vec::with_capacity(len * dim);
        for k in 0..len {
            let s = f(t0 + k as f64 * dt);
            if s.len() != dim {
                return Err(FracError::Invalid(format!(
                    "sample {k} has dimension {}, expected {dim}",
                    s.len()
                )));
            }
            data.extend(s);
        }
        Self::from_flat(t0, dt, dim, data)
    }

    pub fn scalar_fn(t0: f64, dt: f64, len: usize, f: impl Fn(f64) -> f64) -> Result<Self, FracError> {
        Self::scalar(t0, dt, (0..len).map(|k| f(t0 + k as f64 * dt)).collect())
    }

    /// All-zero trajectory on a given grid.
    pub fn zeros(t0: f64, dt: f64, len: usize, dim: usize) -> Result<Self, FracError> {
        Self::from_flat(t0, dt, dim, vec![0.0; len * dim])
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    /// Always false; trajectories hold at least two samples.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Last grid time t0 + (N−1)·dt.
    pub fn t_end(&self) -> f64 {
        self.time(self.len() - 1)
    }

    pub fn time(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.time(k)).collect()
    }

    pub fn sample(&self, k: usize) -> &[f64] {
        &self.data[k * self.dim..(k + 1) * self.dim]
    }

    pub fn sample_mut(&mut self, k: usize) -> &mut [f64] {
        &mut self.data[k * self.dim..(k + 1) * self.dim]
    }

    pub fn samples(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.data
    }

    /// Values of component `j` (0-based) over the grid.
    pub fn component(&self, j: usize) -> Vec<f64> {
        self.samples().map(|s| s[j]).collect()
    }

    /// The single component of a scalar trajectory.
    pub fn values(&self) -> Result<Vec<f64>, FracError> {
        self.require_scalar()?;
        Ok(self.data.clone())
    }

    pub fn require_scalar(&self) -> Result<(), FracError> {
        if self.dim != 1 {
            return Err(FracError::Precondition(format!(
                "expected a scalar trajectory, got dimension {}",
                self.dim
            )));
        }
        Ok(())
    }

    /// Pointwise Euclidean norm as a scalar trajectory.
    pub fn norms(&self) -> Trajectory {
        self.map(1, |s| vec![s.iter().map(|v| v * v).sum::<f64>().sqrt()])
    }

    /// Same grid, samples transformed by `f` into dimension `dim`.
    pub fn map(&self, dim: usize, mut f: impl FnMut(&[f64]) -> Vec<f64>) -> Trajectory {
        let data: Vec<f64> = self.samples().flat_map(&mut f).collect();
        assert_eq!(data.len(), dim * self.len(), "map produced inconsistent dimension");
        Trajectory {
            t0: self.t0,
            dt: self.dt,
            dim,
            data,
        }
    }

    /// Same grid, samples transformed together with their time.
    pub fn map_timed(&self, dim: usize, mut f: impl FnMut(f64, &[f64]) -> Vec<f64>) -> Trajectory {
        let data: Vec<f64> = (0..self.len())
            .flat_map(|k| f(self.time(k), self.sample(k)))
            .collect();
        assert_eq!(data.len(), dim * self.len(), "map produced inconsistent dimension");
        Trajectory {
            t0: self.t0,
            dt: self.dt,
            dim,
            data,
        }
    }

    pub fn same_grid(&self, other: &Trajectory) -> bool {
        self.len() == other.len()
            && self.t0 == other.t0
            && (self.dt - other.dt).abs() <= 1e-12 * self.dt
    }

    pub fn require_same_grid(&self, other: &Trajectory) -> Result<(), FracError> {
        if !self.same_grid(other) {
            return Err(FracError::GridMismatch {
                left: (self.t0, self.dt, self.len()),
                right: (other.t0, other.dt, other.len()),
            });
        }
        Ok(())
    }

    /// Pointwise binary combination on a shared grid and dimension.
    pub fn zip_with(&self, other: &Trajectory, f: impl Fn(f64, f64) -> f64) -> Result<Trajectory, FracError> {
        self.require_same_grid(other)?;
        if self.dim != other.dim {
            return Err(FracError::Invalid(format!(
                "dimension mismatch: {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(Trajectory {
            t0: self.t0,
            dt: self.dt,
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn sub(&self, other: &Trajectory) -> Result<Trajectory, FracError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn add(&self, other: &Trajectory) -> Result<Trajectory, FracError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scale(&self, c: f64) -> Trajectory {
        self.map(self.dim, |s| s.iter().map(|v| c * v).collect())
    }

    /// Every `step`-th sample, on the coarser grid with spacing step·dt.
    pub fn decimate(&self, step: usize) -> Result<Trajectory, FracError> {
        assert!(step >= 1);
        let rows: Vec<f64> = self
            .samples()
            .step_by(step)
            .flatten()
            .copied()
            .collect();
        Trajectory::from_flat(self.t0, self.dt * step as f64, self.dim, rows)
    }

    /// First `len` samples.
    pub fn truncate(&self, len: usize) -> Result<Trajectory, FracError> {
        let len = len.min(self.len());
        Trajectory::from_flat(self.t0, self.dt, self.dim, self.data[..len * self.dim].to_vec())
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Writes CSV with header `t,x1,...,xn`, shortest round-trip formatting.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), FracError> {
        let mut out = csv::Writer::from_writer(w);
        let mut header = vec!["t".to_string()];
        header.extend((1..=self.dim).map(|i| format!("x{i}")));
        out.write_record(&header).map_err(csv_err)?;
        for k in 0..self.len() {
            let mut row = vec![self.time(k).to_string()];
            row.extend(self.sample(k).iter().map(f64::to_string));
            out.write_record(&row).map_err(csv_err)?;
        }
        out.flush()?;
        Ok(())
    }

    /// Reads the layout written by [`Trajectory::write_csv`]. The time
    /// column must be uniformly spaced.
    pub fn read_csv<R: Read>(r: R) -> Result<Trajectory, FracError> {
        let mut rdr = csv::Reader::from_reader(r);
        let header = rdr.headers().map_err(csv_err)?.clone();
        if header.get(0) != Some("t") || header.len() < 2 {
            return Err(FracError::Csv("header must be t,x1,...,xn".into()));
        }
        let dim = header.len() - 1;
        let mut times = Vec::new();
        let mut data = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(csv_err)?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| FracError::Csv(format!("row {}: {e}", i + 1)))
            };
            times.push(parse(&rec[0])?);
            for j in 1..=dim {
                data.push(parse(&rec[j])?);
            }
        }
        if times.len() < 2 {
            return Err(FracError::TooShort { need: 2, got: times.len() });
        }
        let t0 = times[0];
        let dt = (times[times.len() - 1] - t0) / (times.len() - 1) as f64;
        for (k, &t) in times.iter().enumerate() {
            if (t - (t0 + k as f64 * dt)).abs() > 1e-9 * dt.max(t.abs()) {
                return Err(FracError::Csv(format!("time column is not uniform at row {}", k + 1)));
            }
        }
        Trajectory::from_flat(t0, dt, dim, data)
    }

    pub fn save_csv(&self, path: &Path) -> Result<(), FracError> {
        self.write_csv(std::fs::File::create(path)?)
    }

    pub fn load_csv(path: &Path) -> Result<Trajectory, FracError> {
        Trajectory::read_csv(std::fs::File::open(path)?)
    }
}

fn csv_err(e: csv::Error) -> FracError {
    FracError::Csv(e.to_string())
}
