//! Atangana–Baleanu fractional calculus: Mittag-Leffler functions, AB
//! integrals and derivatives on sampled trajectories, a predictor–corrector
//! integrator, Mittag-Leffler stability checks and three observer families.

pub mod fracops;
pub mod linalg;
pub mod mlf;
pub mod observers;
pub mod report;
pub mod solver;
pub mod stability;
pub mod sysdsl;
