//! Non-adaptive cover samplers: piecewise-constant interpolation on the cells
//! of an ℓ_{p'} lattice cover of the ball, and its piecewise-Taylor upgrade.

use super::approximant::Approximant;
use super::oracle::BudgetedOracle;
use super::taylor::taylor_coeffs_fd;
use super::{AdaptiveSampler, AlgoError, DEFAULT_FD_STEP};
use crate::classes::ClassSpec;
use crate::geometry::{grid_cover, p_norm_unchecked, Net, NormSpec, Target};
use crate::index::stencil_point_count;
use crate::real::{real, Real};

/// Piecewise-constant interpolation on cover cells: Sf = Σ f(x_i)·1_{U_i}.
///
/// Query points are the cell centers projected onto the ball (metric
/// projection onto a convex set is 1-Lipschitz in ℓ₂, so for p = 2 every cell
/// point stays within eps of its queried point and the worst-case error over
/// the class is eps^α; for p < 2 the constant inflates by 1 + d^{1/2−1/p'}).
#[derive(Debug, Clone)]
pub struct CoverSampler<T> {
    net: Net<T>,
    query_points: Vec<Vec<T>>,
}

pub fn cover_sampler<T: Real>(
    spec: &ClassSpec<T>,
    eps: T,
    max_cells: usize,
) -> Result<CoverSampler<T>, AlgoError> {
    match spec.alpha.value() {
        Some(a) if a <= T::one() => {}
        _ => {
            return Err(AlgoError::BadParams(
                "cover sampler requires finite alpha ≤ 1".into(),
            ))
        }
    }
    let net = cover_net(spec, eps, max_cells)?;
    let query_points = project_centers(&net);
    Ok(CoverSampler { net, query_points })
}

impl<T: Real> CoverSampler<T> {
    pub fn net(&self) -> &Net<T> {
        &self.net
    }
}

impl<T: Real> AdaptiveSampler<T> for CoverSampler<T> {
    fn budget(&self) -> usize {
        self.query_points.len()
    }

    fn name(&self) -> &'static str {
        "cover"
    }

    fn run(&self, oracle: &mut BudgetedOracle<'_, T>) -> Result<Approximant<T>, AlgoError> {
        let mut values = Vec::with_capacity(self.query_points.len());
        for x in &self.query_points {
            values.push(oracle.query(x)?);
        }
        if values.iter().all(|v| *v == T::zero()) {
            return Ok(Approximant::Zero {
                dim: self.net.target.dim(),
            });
        }
        Ok(Approximant::PiecewiseConstant {
            net: self.net.clone(),
            values,
        })
    }
}

/// Piecewise Taylor models of order s on cover cells.
///
/// Taylor centers are pulled inward so the whole difference stencil stays in
/// the ball. At alpha = 1 the order is 0 and the sampler coincides with
/// piecewise-constant interpolation.
#[derive(Debug, Clone)]
pub struct TaylorCoverSampler<T> {
    net: Net<T>,
    taylor_centers: Vec<Vec<T>>,
    s: usize,
    fd_step: T,
}

pub fn taylor_cover_sampler<T: Real>(
    spec: &ClassSpec<T>,
    eps: T,
    fd_step: T,
    max_cells: usize,
) -> Result<TaylorCoverSampler<T>, AlgoError> {
    let s = match spec.alpha.value() {
        Some(a) if a >= T::one() => spec.s().unwrap(),
        _ => {
            return Err(AlgoError::BadParams(
                "taylor cover sampler requires finite alpha ≥ 1".into(),
            ))
        }
    };
    if fd_step <= T::zero() {
        return Err(AlgoError::BadParams("fd_step must be positive".into()));
    }
    let net = cover_net(spec, eps, max_cells)?;
    // margin: the stencil reaches at most (s/2)·fd_step from the center in ℓ₂
    let margin = real::<T>(s as f64 / 2.0) * fd_step + real(1e-12);
    let cap = T::one() - margin;
    let taylor_centers = net
        .centers
        .iter()
        .map(|c| scale_into_ball(c, cap))
        .collect();
    Ok(TaylorCoverSampler {
        net,
        taylor_centers,
        s,
        fd_step,
    })
}

impl<T: Real> TaylorCoverSampler<T> {
    pub fn net(&self) -> &Net<T> {
        &self.net
    }

    pub fn order(&self) -> usize {
        self.s
    }
}

impl<T: Real> AdaptiveSampler<T> for TaylorCoverSampler<T> {
    fn budget(&self) -> usize {
        let d = self.net.target.dim();
        self.net.centers.len() * stencil_point_count(d, self.s)
    }

    fn name(&self) -> &'static str {
        "taylor-cover"
    }

    fn run(&self, oracle: &mut BudgetedOracle<'_, T>) -> Result<Approximant<T>, AlgoError> {
        let mut models = Vec::with_capacity(self.taylor_centers.len());
        for center in &self.taylor_centers {
            models.push(taylor_coeffs_fd(oracle, center, self.s, self.fd_step)?);
        }
        if oracle.log().all_zero() {
            return Ok(Approximant::Zero {
                dim: self.net.target.dim(),
            });
        }
        Ok(Approximant::PiecewiseTaylor {
            net: self.net.clone(),
            models,
        })
    }
}

/// Largest-eps-first search for a cover sampler using at most `n` queries.
pub fn cover_sampler_with_budget<T: Real>(
    spec: &ClassSpec<T>,
    n: usize,
) -> Result<(CoverSampler<T>, T), AlgoError> {
    let eps = fit_eps(spec, n, 1)?;
    Ok((cover_sampler(spec, eps, n)?, eps))
}

/// Same search for the Taylor variant: cells × stencil points ≤ n.
pub fn taylor_cover_sampler_with_budget<T: Real>(
    spec: &ClassSpec<T>,
    n: usize,
) -> Result<(TaylorCoverSampler<T>, T), AlgoError> {
    let s = spec.s().ok_or_else(|| {
        AlgoError::BadParams("taylor cover sampler requires finite alpha".into())
    })?;
    let per_cell = stencil_point_count(spec.d, s);
    if per_cell > n {
        return Err(AlgoError::BadParams(format!(
            "budget {n} below one stencil of {per_cell} points"
        )));
    }
    let eps = fit_eps(spec, n / per_cell, per_cell)?;
    let sampler = taylor_cover_sampler(spec, eps, real(DEFAULT_FD_STEP), n / per_cell)?;
    Ok((sampler, eps))
}

fn cover_net<T: Real>(
    spec: &ClassSpec<T>,
    eps: T,
    max_cells: usize,
) -> Result<Net<T>, AlgoError> {
    let norm = NormSpec::new(spec.p_prime())?;
    Ok(grid_cover(
        &Target::unit_ball(spec.d),
        eps,
        norm,
        max_cells,
    )?)
}

fn project_centers<T: Real>(net: &Net<T>) -> Vec<Vec<T>> {
    net.centers
        .iter()
        .map(|c| scale_into_ball(c, T::one()))
        .collect()
}

fn scale_into_ball<T: Real>(c: &[T], cap: T) -> Vec<T> {
    let norm = p_norm_unchecked(c, real(2.0));
    if norm <= cap {
        c.to_vec()
    } else {
        c.iter().map(|&v| v * (cap / norm)).collect()
    }
}

/// Bisect the largest cover radius whose cell count fits the budget.
fn fit_eps<T: Real>(spec: &ClassSpec<T>, max_cells: usize, _per: usize) -> Result<T, AlgoError> {
    if max_cells == 0 {
        return Err(AlgoError::BadParams("budget too small for any cover".into()));
    }
    let norm = NormSpec::new(spec.p_prime())?;
    let target = Target::unit_ball(spec.d);
    let feasible = |eps: T| -> bool {
        grid_cover(&target, eps, norm, max_cells).is_ok()
    };
    let mut hi = target.circumradius(norm.p);
    if !feasible(hi) {
        return Err(AlgoError::BadParams("no feasible cover radius".into()));
    }
    let mut lo = T::zero();
    for _ in 0..40 {
        if hi - lo <= real::<T>(1e-3) * hi {
            break;
        }
        let mid = (lo + hi) / real(2.0);
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
