//! ℓp norms and quasi-norms.

use super::GeomError;
use crate::real::Real;

/// (Σ|x_i|^p)^{1/p}; max|x_i| for p = ∞. A norm for p ≥ 1, a quasi-norm below.
pub fn p_norm<T: Real>(x: &[T], p: T) -> Result<T, GeomError> {
    if x.is_empty() {
        return Err(GeomError::EmptyVector);
    }
    if !(p > T::zero()) {
        return Err(GeomError::BadExponent);
    }
    Ok(p_norm_unchecked(x, p))
}

pub fn p_norm_unchecked<T: Real>(x: &[T], p: T) -> T {
    if p.is_infinite() {
        return x.iter().fold(T::zero(), |acc, &v| acc.max(v.abs()));
    }
    let two = T::one() + T::one();
    if p == two {
        return x.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
    }
    if p == T::one() {
        return x.iter().fold(T::zero(), |acc, &v| acc + v.abs());
    }
    let sum = x
        .iter()
        .fold(T::zero(), |acc, &v| acc + v.abs().powf(p));
    sum.powf(T::one() / p)
}
