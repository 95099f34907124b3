//! Expression language for vector fields, outputs and nonlinearities.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?        right associative
//! primary := number | var | func '(' expr ')' | '(' expr ')'
//! var     := 'x'k | 'u'k | 'y'k | 't'     k = 1, 2, ...
//! func    := sin | cos | tanh | exp | sqrt | abs
//! ```
//!
//! Domain errors such as `sqrt(-1)` evaluate to NaN; the solver turns NaN
//! states into a divergence error. Scenario files are JSON; see
//! [`load_config`].

mod analysis;
mod config;
mod expr;
mod system;

pub use analysis::{jacobian_fd, lipschitz_estimate, sup_jacobian_norm, Region, LIPSCHITZ_SAFETY, MIN_SAMPLES};
pub use config::{
    load_config, parse_config, CaseConfig, ChecksConfig, ConfigError, ObserverConfig, PlantConfig, ScenarioConfig,
    CASE_CHECKS, SUITE_CHECKS,
};
pub use expr::{dependencies, parse, BinOp, Dependencies, Env, Expr, Func, ParseError, ParseErrorKind, Scope, Var};
pub use system::{Decomposition, Drift, OutputMap, SystemDef};
pub(crate) use system::{eval_outputs, mat_vec};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DslError {
    #[error("expression {index}: {source}")]
    Parse { index: usize, source: ParseError },
    #[error("non-finite derivative: {0}")]
    NonFinite(String),
    #[error("{0}")]
    Invalid(String),
}

/// Parses a list of expressions sharing one scope.
pub fn parse_list<S: AsRef<str>>(sources: &[S], scope: &Scope) -> Result<Vec<Expr>, DslError> {
    sources
        .iter()
        .enumerate()
        .map(|(index, s)| parse(s.as_ref(), scope).map_err(|source| DslError::Parse { index, source }))
        .collect()
}

/// Evaluates a list of expressions into a vector.
pub fn eval_all(exprs: &[Expr], env: &Env) -> Vec<f64> {
    exprs.iter().map(|e| e.eval(env)).collect()
}
