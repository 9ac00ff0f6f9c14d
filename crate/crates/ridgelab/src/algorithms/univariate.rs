//! Univariate sampling on [−1, 1] by piecewise polynomial interpolation on a
//! uniform grid.

use super::approximant::PiecewisePoly;
use super::AlgoError;
use crate::real::{real, Real};

/// Interpolate a univariate function from `k` uniform nodes with local
/// polynomial pieces of the given degree.
///
/// For targets with Lipschitz smoothness α = degree + β and seminorm ≤ 1 the
/// sup error decays like k^{−α} (constant governed by the local Lebesgue
/// constant, ≤ 2^α(1 + Λ_degree)).
pub fn univariate_sampler<T: Real, F>(
    mut g: F,
    k: usize,
    degree: usize,
) -> Result<PiecewisePoly<T>, AlgoError>
where
    F: FnMut(T) -> Result<T, AlgoError>,
{
    if k < degree + 1 {
        return Err(AlgoError::BadParams(format!(
            "need at least degree+1 = {} nodes, got {k}",
            degree + 1
        )));
    }
    let nodes: Vec<T> = if k == 1 {
        vec![T::zero()]
    } else {
        let step = real::<T>(2.0 / (k - 1) as f64);
        (0..k).map(|i| -T::one() + step * real(i as f64)).collect()
    };
    let mut values = Vec::with_capacity(k);
    for &t in &nodes {
        values.push(g(t)?);
    }
    Ok(PiecewisePoly::new(nodes, values, degree))
}
