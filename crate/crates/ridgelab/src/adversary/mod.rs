//! Lower-bound constructions: fooling ridge functions over bad-direction
//! sets, orthogonal escape directions, the univariate sine-plus-bump
//! adversary, the multivariate bump family, and certificates that replay
//! samplers against them.

mod bumps;
mod certify;
mod directions;
mod fooling;
mod univariate;

pub use bumps::{lipschitz_bump_adversary, BumpAdversary, RadialBumpSum};
pub use certify::{certify_lower_bound, default_certificate_eps, CertStatus, Certificate};
pub use directions::{DirectionKind, DirectionSet};
pub use fooling::{fooling_ridge, orthogonal_direction};
pub use univariate::{univariate_fooling, UnivariateFooling};

use crate::algorithms::AlgoError;
use crate::classes::ClassError;
use crate::geometry::GeomError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AdvError {
    #[error("the class has kappa > 0; fooling profiles have g'(0) = 0 and lie outside it")]
    ClassMismatch,
    #[error("sample points span the whole space; no orthogonal direction exists")]
    PointsSpanSpace,
    #[error("all {0} candidate cells contain sample coordinates")]
    NoFreeInterval(usize),
    #[error("bump packing is empty; eps is too large")]
    EmptyPacking,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Algo(#[from] AlgoError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
