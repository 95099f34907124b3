//! Machine-readable verdicts shared by every numerical check.

use serde::{Deserialize, Serialize};

/// Outcome of one check.
///
/// `worst_margin` is check-specific but always oriented so that the check
/// passes while `worst_margin <= tol`, except where a check documents
/// otherwise. `worst_time` is where the worst margin occurred.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    pub worst_margin: f64,
    pub worst_time: f64,
    pub tol: f64,
    /// Times of grid points that violated the check.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<f64>,
    /// Free-form diagnostics (estimated constants, observed orders, ...).
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub details: serde_json::Map<String, serde_json::Value>,
}

impl CheckReport {
    /// Report for `margins[k] <= tol` at every `times[k]`.
    pub fn from_margins(check: impl Into<String>, times: &[f64], margins: &[f64], tol: f64) -> Self {
        let mut worst_margin = if margins.is_empty() { 0.0 } else { f64::NEG_INFINITY };
        let mut worst_time = times.first().copied().unwrap_or(0.0);
        let mut violations = Vec::new();
        for (&t, &m) in times.iter().zip(margins) {
            // a NaN margin is always the worst point; the first one sticks
            if !worst_margin.is_nan() && (m.is_nan() || m > worst_margin) {
                worst_margin = m;
                worst_time = t;
            }
            if !(m <= tol) {
                violations.push(t);
            }
        }
        Self {
            check: check.into(),
            pass: violations.is_empty(),
            worst_margin,
            worst_time,
            tol,
            violations,
            details: serde_json::Map::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
