//! Closed-form entropy-number envelopes for ℓp balls and spheres in ℓq.
//! Base-2 logarithms throughout; regime boundaries are closed on the left.

use super::GeomError;
use crate::real::{real, Real};

/// Three-regime envelope for e_k(B̄_p^d, ℓ_q^d):
/// 1 below k = log₂ d, (log₂(1+d/k)/k)^{1/p−1/q} up to k = d, and
/// 2^{−k/d}·d^{1/q−1/p} beyond.
pub fn ball_entropy_envelope<T: Real>(p: T, q: T, k: usize, d: usize) -> Result<T, GeomError> {
    check_exponents(p, q)?;
    if k == 0 || d == 0 {
        return Err(GeomError::ParamOutOfRange("k and d must be ≥ 1".into()));
    }
    let kf = real::<T>(k as f64);
    let df = real::<T>(d as f64);
    let log_d = real::<T>((d as f64).log2());
    let diff = recip(p) - recip(q);
    if kf < log_d {
        return Ok(T::one());
    }
    if kf < df {
        let ratio = real::<T>((1.0 + d as f64 / k as f64).log2()) / kf;
        return Ok(ratio.powf(diff));
    }
    Ok(real::<T>(2.0).powf(-kf / df) * df.powf(-diff))
}

/// Lower/upper envelopes for e_k(S^{d−1}_p, ℓ_q^d).
///
/// For k ≥ d: 2^{−k/(d−1)}·d^{1/q−1/p} and 2^{−k/(d−p̄)}·d^{1/q−1/p} with
/// p̄ = min{1, p} (the two coincide for p ≥ 1). Below d both envelopes follow
/// the two-regime ball shape.
pub fn sphere_entropy_envelope<T: Real>(
    p: T,
    q: T,
    k: usize,
    d: usize,
) -> Result<(T, T), GeomError> {
    check_exponents(p, q)?;
    if d < 2 {
        return Err(GeomError::DimensionTooSmall(2));
    }
    if k == 0 {
        return Err(GeomError::ParamOutOfRange("k must be ≥ 1".into()));
    }
    let kf = real::<T>(k as f64);
    let df = real::<T>(d as f64);
    let log_d = real::<T>((d as f64).log2());
    let diff = recip(p) - recip(q);
    if kf < log_d {
        return Ok((T::one(), T::one()));
    }
    if kf < df {
        let ratio = real::<T>((1.0 + d as f64 / k as f64).log2()) / kf;
        let v = ratio.powf(diff);
        return Ok((v, v));
    }
    let p_bar = p.min(T::one());
    let dim_factor = df.powf(-diff);
    let lower = real::<T>(2.0).powf(-kf / (df - T::one())) * dim_factor;
    let upper = real::<T>(2.0).powf(-kf / (df - p_bar)) * dim_factor;
    Ok((lower, upper))
}

fn check_exponents<T: Real>(p: T, q: T) -> Result<(), GeomError> {
    if p <= T::zero() || q <= T::zero() {
        return Err(GeomError::BadExponent);
    }
    if p > q {
        return Err(GeomError::ExponentOrder);
    }
    Ok(())
}

fn recip<T: Real>(p: T) -> T {
    if p.is_infinite() {
        T::zero()
    } else {
        T::one() / p
    }
}
