//! Dense-grid lower estimates of the Lipschitz seminorm
//! max{ ‖g‖_{C^s}, |g^{(s)}|_β } on [−1, 1], with the Hölder quotient
//! |f(x)−f(y)| / (2·min{1, |x−y|}^β).

use super::{ClassError, Profile};
use crate::real::{real, Real};

pub const DEFAULT_SEMINORM_GRID: usize = 100_000;

/// Lower estimate of the Lip_α seminorm of `g`, maximizing over grid pairs.
///
/// Converges to the seminorm from below as `grid_size` grows. Every lag ≤ 64
/// plus a 5%-geometric lag family is scanned, which is exhaustive for grids of
/// ≤ 2048 points and covers all pair separations asymptotically otherwise.
pub fn seminorm_estimate<T: Real>(g: &Profile<T>, grid_size: usize) -> Result<T, ClassError> {
    if grid_size < 2 {
        return Err(ClassError::ParamOutOfRange("grid_size must be ≥ 2".into()));
    }
    let s = match g.alpha.strict_floor() {
        Some(s) => s,
        None => {
            return Err(ClassError::ParamOutOfRange(
                "seminorm estimation requires finite alpha; C^∞ entries carry analytic bounds"
                    .into(),
            ))
        }
    };
    let beta = g.alpha.holder_order().unwrap();

    let n = grid_size;
    let step = real::<T>(2.0 / (n - 1) as f64);
    let grid: Vec<T> = (0..n).map(|i| -T::one() + step * real(i as f64)).collect();

    let mut sup_part = T::zero();
    let mut top_deriv = Vec::with_capacity(n);
    for order in 0..=s {
        let mut vals = Vec::with_capacity(n);
        for &t in &grid {
            vals.push(g.deriv(order, t)?);
        }
        for &v in &vals {
            sup_part = sup_part.max(v.abs());
        }
        if order == s {
            top_deriv = vals;
        }
    }

    let mut holder = T::zero();
    let two = real::<T>(2.0);
    for lag in pair_lags(n) {
        let dist = step * real::<T>(lag as f64);
        let denom = two * dist.min(T::one()).powf(beta);
        for i in 0..n - lag {
            let q = (top_deriv[i] - top_deriv[i + lag]).abs() / denom;
            holder = holder.max(q);
        }
    }

    Ok(sup_part.max(holder))
}

fn pair_lags(n: usize) -> Vec<usize> {
    if n <= 2048 {
        return (1..n).collect();
    }
    let mut lags: Vec<usize> = (1..=64).collect();
    let mut lag = 64f64;
    while (lag * 1.05) < (n - 1) as f64 {
        lag *= 1.05;
        lags.push(lag as usize);
    }
    lags.push(n - 1);
    lags.dedup();
    lags
}
