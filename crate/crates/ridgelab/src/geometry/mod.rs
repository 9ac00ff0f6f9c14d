//! Quasi-norms, ε-covers and packings of ℓp balls and spheres, numerical
//! entropy-number brackets, and the closed-form entropy envelopes they are
//! compared against.

mod bounds;
mod cover;
mod entropy;
mod norms;
mod packing;

pub use bounds::{ball_entropy_envelope, sphere_entropy_envelope};
pub use cover::{audit_cover, greedy_set_cover, grid_cover, DEFAULT_CELL_BUDGET};
pub use entropy::{entropy_estimate, entropy_series, EntropyEstimate};
pub use norms::{p_norm, p_norm_unchecked};
pub use packing::{
    farthest_point_packing, greedy_packing, sparse_sphere_packing, target_candidates,
    SparsePacking,
};

use crate::real::{real, Real};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("empty vector")]
    EmptyVector,
    #[error("norm exponent must be positive (or infinity)")]
    BadExponent,
    #[error("eps must be positive (got {0})")]
    BadEps(f64),
    #[error("cell budget exceeded: more than {0} centers")]
    BudgetExceeded(usize),
    #[error("requires p ≤ q")]
    ExponentOrder,
    #[error("dimension must be ≥ {0}")]
    DimensionTooSmall(usize),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("unsupported target for this operation")]
    UnsupportedTarget,
}

/// ℓp norm tag; `p` may be `T::infinity()`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormSpec<T> {
    pub p: T,
}

impl<T: Real> NormSpec<T> {
    pub fn new(p: T) -> Result<Self, GeomError> {
        if p <= T::zero() {
            return Err(GeomError::BadExponent);
        }
        Ok(NormSpec { p })
    }

    pub fn l2() -> Self {
        NormSpec { p: real(2.0) }
    }

    pub fn linf() -> Self {
        NormSpec { p: T::infinity() }
    }

    pub fn dist(&self, x: &[T], y: &[T]) -> T {
        let diff: Vec<T> = x.iter().zip(y).map(|(&a, &b)| a - b).collect();
        p_norm_unchecked(&diff, self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NetRole {
    Cover,
    Packing,
}

/// What a net covers or packs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Target<T> {
    /// B̄_p^d of the given radius.
    Ball { p: T, radius: T, d: usize },
    /// Unit sphere of ℓp.
    Sphere { p: T, d: usize },
    /// m-sparse vectors of the unit ℓp sphere.
    SparseSphere { m: usize, p: T, d: usize },
    /// An explicit finite point set.
    Finite { points: Vec<Vec<T>> },
}

impl<T: Real> Target<T> {
    pub fn unit_ball(d: usize) -> Self {
        Target::Ball {
            p: real(2.0),
            radius: T::one(),
            d,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Target::Ball { d, .. } | Target::Sphere { d, .. } | Target::SparseSphere { d, .. } => {
                *d
            }
            Target::Finite { points } => points.first().map_or(0, |p| p.len()),
        }
    }

    /// sup over the target of the ℓq norm.
    pub fn circumradius(&self, q: T) -> T {
        match self {
            Target::Ball { p, radius, d } => {
                let exponent = (T::one() / q - T::one() / *p).max(T::zero());
                *radius * real::<T>(*d as f64).powf(exponent)
            }
            Target::Sphere { p, d } => {
                let exponent = (T::one() / q - T::one() / *p).max(T::zero());
                real::<T>(*d as f64).powf(exponent)
            }
            Target::SparseSphere { m, p, d: _ } => {
                let exponent = (T::one() / q - T::one() / *p).max(T::zero());
                real::<T>(*m as f64).powf(exponent)
            }
            Target::Finite { points } => points
                .iter()
                .map(|x| p_norm_unchecked(x, q))
                .fold(T::zero(), T::max),
        }
    }
}

/// A finite point set serving as ε-cover or ε-packing of a target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Net<T> {
    pub centers: Vec<Vec<T>>,
    pub radius: T,
    pub norm: NormSpec<T>,
    pub role: NetRole,
    pub target: Target<T>,
}

impl<T: Real> Net<T> {
    /// Index of the nearest center (ties broken by lowest index).
    pub fn assign(&self, x: &[T]) -> usize {
        let mut best = 0usize;
        let mut best_dist = T::infinity();
        for (i, c) in self.centers.iter().enumerate() {
            let d = self.norm.dist(x, c);
            if d < best_dist {
                best_dist = d;
                best = i;
            }
        }
        best
    }

    /// Smallest pairwise distance between centers (∞ for fewer than 2).
    pub fn min_separation(&self) -> T {
        let mut best = T::infinity();
        for i in 0..self.centers.len() {
            for j in (i + 1)..self.centers.len() {
                best = best.min(self.norm.dist(&self.centers[i], &self.centers[j]));
            }
        }
        best
    }
}
