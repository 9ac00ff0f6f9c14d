//! Adaptive sampling algorithms as query protocols: cover-based piecewise
//! approximation, Taylor models from finite differences, ridge-direction
//! recovery, the two-step sampler, and the Taylor-at-zero C^∞ sampler.

mod approximant;
mod cover_sampler;
mod oracle;
mod taylor;
mod taylor_zero;
mod two_step;
mod univariate;

pub use approximant::{Approximant, PiecewisePoly};
pub use cover_sampler::{
    cover_sampler, cover_sampler_with_budget, taylor_cover_sampler,
    taylor_cover_sampler_with_budget, CoverSampler, TaylorCoverSampler,
};
pub use oracle::{BudgetedOracle, QueryLog};
pub use taylor::{taylor_coeffs_fd, TaylorModel};
pub use taylor_zero::{taylor_at_zero_sampler, SmoothnessRule, TaylorAtZeroSampler};
pub use two_step::{recover_direction, two_step_sampler, RecoveryParams, TwoStepSampler};
pub use univariate::univariate_sampler;

use crate::classes::ClassError;
use crate::geometry::GeomError;
use crate::real::Real;
use thiserror::Error;

pub const DEFAULT_FD_STEP: f64 = 1e-4;

#[derive(Debug, Error)]
pub enum AlgoError {
    #[error("query budget of {0} exhausted")]
    BudgetExceeded(usize),
    #[error("query point outside the unit ball (‖x‖₂ = {0})")]
    OutOfDomain(f64),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("first-order differences vanished; the profile violates the derivative floor")]
    DegenerateGradient,
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A deterministic sampling algorithm: emits at most `budget()` queries through
/// the oracle, possibly adaptively, and reconstructs an approximant.
///
/// All-zero answers must reconstruct to the zero approximant.
pub trait AdaptiveSampler<T: Real> {
    fn budget(&self) -> usize;
    fn name(&self) -> &'static str;
    fn run(&self, oracle: &mut BudgetedOracle<'_, T>) -> Result<Approximant<T>, AlgoError>;
}

/// An executed sampler: the approximant plus the query transcript.
#[derive(Debug, Clone)]
pub struct SamplerRun<T> {
    pub approximant: Approximant<T>,
    pub log: QueryLog<T>,
}

/// Run a sampler against a plain evaluation closure.
pub fn run_sampler<T: Real>(
    sampler: &dyn AdaptiveSampler<T>,
    f: &dyn Fn(&[T]) -> T,
) -> Result<SamplerRun<T>, AlgoError> {
    let mut oracle = BudgetedOracle::new(f, sampler.budget());
    let approximant = sampler.run(&mut oracle)?;
    Ok(SamplerRun {
        approximant,
        log: oracle.into_log(),
    })
}
