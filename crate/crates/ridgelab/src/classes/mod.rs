//! Ridge function classes on the closed Euclidean unit ball: class parameters,
//! profiles with closed-form derivatives, and membership checking.

mod catalog;
mod membership;
mod profile;
mod ridge;
mod seminorm;

pub use catalog::{
    catalog_profile, comb_constant, default_profiles, parse_profile_id, profile_id, ProfileKind,
};
pub use membership::{membership_check, MembershipReport, Witness};
pub use profile::{trig_max_on_bump_window, Profile};
pub use ridge::{ridge_eval, RidgeFunction, SmoothField};
pub use seminorm::{seminorm_estimate, DEFAULT_SEMINORM_GRID};

pub(crate) use membership::sample_ball;
pub(crate) use profile::{BUMP_WINDOW_LEFT, BUMP_WINDOW_WIDTH};
pub(crate) use ridge::DOMAIN_TOL;

use crate::real::{real, Real};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassError {
    #[error("unknown profile kind `{0}`")]
    UnknownKind(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("no fooling profile exists for infinite smoothness")]
    FoolingInfiniteAlpha,
    #[error("derivative of order {0} unavailable for this profile")]
    DerivativeUnavailable(usize),
    #[error("point lies outside the unit ball (‖x‖₂ = {0})")]
    OutsideDomain(f64),
    #[error("profile kind `{0}` is not admissible for this class")]
    NotAdmissible(String),
}

/// Smoothness order: finite α > 0 or the C^∞ flag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Alpha<T> {
    Finite(T),
    Infinite,
}

impl<T: Real> Alpha<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Alpha::Finite(_))
    }

    /// The largest integer strictly less than α (so s = α−1 for integer α).
    pub fn strict_floor(&self) -> Option<usize> {
        match *self {
            Alpha::Finite(a) => {
                let f = a.to_f64().unwrap();
                if f.fract() == 0.0 {
                    Some(f as usize - 1)
                } else {
                    Some(f.floor() as usize)
                }
            }
            Alpha::Infinite => None,
        }
    }

    /// β = α − s ∈ (0, 1] for finite α.
    pub fn holder_order(&self) -> Option<T> {
        match *self {
            Alpha::Finite(a) => {
                let s = self.strict_floor().unwrap();
                Some(a - real::<T>(s as f64))
            }
            Alpha::Infinite => None,
        }
    }

    pub fn value(&self) -> Option<T> {
        match *self {
            Alpha::Finite(a) => Some(a),
            Alpha::Infinite => None,
        }
    }
}

/// Parameters of the class R^{α,p} / R^{α,p,κ} in dimension d.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassSpec<T> {
    pub alpha: Alpha<T>,
    pub p: T,
    pub kappa: T,
    pub d: usize,
}

impl<T: Real> ClassSpec<T> {
    pub fn new(alpha: Alpha<T>, p: T, kappa: T, d: usize) -> Result<Self, ClassError> {
        if let Alpha::Finite(a) = alpha {
            if a <= T::zero() {
                return Err(ClassError::ParamOutOfRange("alpha must be positive".into()));
            }
        }
        if p <= T::zero() || p > real(2.0) {
            return Err(ClassError::ParamOutOfRange("p must lie in (0, 2]".into()));
        }
        if kappa < T::zero() || kappa > T::one() {
            return Err(ClassError::ParamOutOfRange("kappa must lie in [0, 1]".into()));
        }
        if kappa > T::zero() {
            match alpha {
                Alpha::Finite(a) if a <= T::one() => {
                    return Err(ClassError::ParamOutOfRange(
                        "kappa > 0 requires alpha > 1".into(),
                    ))
                }
                _ => {}
            }
        }
        if d == 0 {
            return Err(ClassError::ParamOutOfRange("d must be at least 1".into()));
        }
        Ok(ClassSpec { alpha, p, kappa, d })
    }

    /// Highest derivative order bounded by the class (None for C^∞).
    pub fn s(&self) -> Option<usize> {
        self.alpha.strict_floor()
    }

    pub fn beta(&self) -> Option<T> {
        self.alpha.holder_order()
    }

    /// Dual exponent p′ with 1/max{p,1} + 1/p′ = 1 (∞ for p ≤ 1).
    pub fn p_prime(&self) -> T {
        if self.p <= T::one() {
            T::infinity()
        } else {
            self.p / (self.p - T::one())
        }
    }
}
