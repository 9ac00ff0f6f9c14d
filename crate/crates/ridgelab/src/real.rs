//! Scalar abstraction for the numeric core.
//!
//! Everything in `classes`, `geometry`, `algorithms` and `adversary` is generic
//! over [`Real`]; the experiment harness and CLI pin `f64`.

use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};
use std::fmt::{Debug, Display};
use std::ops::AddAssign;

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + AddAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Draw from the standard normal distribution.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Draw uniformly from `[lo, hi)`.
    fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: Self, hi: Self) -> Self;

    /// Draw from Gamma(shape, 1). Used for cone-measure sampling on ℓp spheres.
    fn gamma_sample<R: Rng + ?Sized>(rng: &mut R, shape: f64) -> Self;
}

impl Real for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
    fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: Self, hi: Self) -> Self {
        rng.gen_range(lo..hi)
    }
    fn gamma_sample<R: Rng + ?Sized>(rng: &mut R, shape: f64) -> Self {
        Gamma::new(shape, 1.0).expect("gamma shape > 0").sample(rng)
    }
}

impl Real for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
    fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: Self, hi: Self) -> Self {
        rng.gen_range(lo..hi)
    }
    fn gamma_sample<R: Rng + ?Sized>(rng: &mut R, shape: f64) -> Self {
        Gamma::new(shape as f32, 1.0).expect("gamma shape > 0").sample(rng)
    }
}

/// Shorthand for pulling an `f64` constant into the generic scalar type.
#[inline]
pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}
