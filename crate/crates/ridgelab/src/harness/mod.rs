//! Experiment orchestration: sup-error estimation, rate fitting, the
//! closed-form complexity bounds, tractability classification, and
//! serialized experiment reports. Everything here is f64 and deterministic
//! given (config, seed).

mod complexity;
mod error_estimate;
mod experiment;
mod rates;
mod tractability;

pub use complexity::{
    complexity_lower, complexity_upper, curse_bound, quasi_poly_bound, BoundConstants,
    LowerBoundValue,
};
pub use error_estimate::{sup_error_estimate, ErrorEstimate, FieldRef};
pub use experiment::{
    run_experiment, CellResult, DirectionRule, ExperimentConfig, ExperimentReport, SamplerKind,
};
pub use rates::{rate_fit, RateFit};
pub use tractability::{tractability_classify, TractabilityLabel, TractabilityVerdict};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("too few positive (n, error) pairs: need ≥ 3, got {0}")]
    TooFewPairs(usize),
    #[error("config error at `{path}`: {message}")]
    ConfigError { path: String, message: String },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error(transparent)]
    Class(#[from] crate::classes::ClassError),
    #[error(transparent)]
    Algo(#[from] crate::algorithms::AlgoError),
    #[error(transparent)]
    Geom(#[from] crate::geometry::GeomError),
    #[error(transparent)]
    Adv(#[from] crate::adversary::AdvError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
