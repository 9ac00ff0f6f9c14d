//! Lower-bound certificates: extract a sampler's zero-function trajectory,
//! build a fooling ridge that vanishes on it, and replay the sampler on ±f.

use super::directions::DirectionSet;
use super::fooling::fooling_ridge;
use super::AdvError;
use crate::algorithms::{AdaptiveSampler, BudgetedOracle};
use crate::classes::{ClassSpec, RidgeFunction};
use crate::geometry::{farthest_point_packing, p_norm_unchecked, NormSpec};
use crate::real::{real, Real};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertStatus {
    Pass,
    Fail,
    /// No qualifying direction (or no usable separation) — nothing certified.
    Inconclusive,
}

/// Outcome of replaying a sampler against a fooling pair (f, −f).
#[derive(Debug, Clone, Serialize)]
pub struct Certificate<T> {
    pub status: CertStatus,
    /// ε used for the vanishing criterion.
    pub eps: T,
    /// max of the measured sup errors on f and −f.
    pub achieved: T,
    /// c_α‖a‖₂^α ε^{2α} with c_α = 2^{−α}·θ_α.
    pub floor: T,
    pub direction: Option<Vec<T>>,
    pub queried_values_zero: bool,
    /// S(f) and S(−f) reconstructed bitwise-identically.
    pub replay_identical: bool,
    pub queries: usize,
}

/// Default ε: the packing lower bracket of e_k over the normalized direction
/// pool at k = ⌈log₂ n⌉ + 1.
pub fn default_certificate_eps<T: Real>(dirs: &DirectionSet<T>, n: usize) -> Option<T> {
    let k = (n.max(1) as f64).log2().ceil() as usize + 1;
    let cap = 1usize.checked_shl(k as u32 - 1)?;
    let psi = dirs.normalized();
    if psi.len() <= cap {
        return None;
    }
    let (chosen, sep) = farthest_point_packing(&psi, cap + 1, NormSpec::l2());
    if chosen.len() <= cap || !sep.is_finite() {
        return None;
    }
    // fooling profiles need ε < 1; antipodal pools would give exactly 1
    Some((sep / real(2.0)).min(real(0.999)))
}

/// Run the certificate protocol at tolerance `tol` on the achieved-vs-floor
/// comparison. `eps` defaults to the packing bracket of the direction pool.
pub fn certify_lower_bound<T: Real>(
    sampler: &dyn AdaptiveSampler<T>,
    dirs: &DirectionSet<T>,
    spec: &ClassSpec<T>,
    eps: Option<T>,
    seed: u64,
    tol: T,
) -> Result<Certificate<T>, AdvError> {
    if spec.kappa > T::zero() {
        return Err(AdvError::ClassMismatch);
    }
    let alpha = spec
        .alpha
        .value()
        .ok_or(AdvError::ParamOutOfRange("fooling needs finite alpha".into()))?;

    // trajectory on the zero function
    let zero = |_: &[T]| T::zero();
    let mut oracle = BudgetedOracle::new(&zero, sampler.budget());
    let zero_output = sampler.run(&mut oracle).map_err(AdvError::Algo)?;
    debug_assert!(zero_output.is_zero());
    let trajectory = oracle.into_log();

    let eps = match eps.or_else(|| default_certificate_eps(dirs, sampler.budget())) {
        Some(e) => e,
        None => {
            return Ok(inconclusive(T::zero(), trajectory.len()));
        }
    };

    let f = match fooling_ridge(&trajectory.points, dirs, eps, spec)? {
        Some(f) => f,
        None => return Ok(inconclusive(eps, trajectory.len())),
    };

    let pos = |x: &[T]| f.eval_unchecked(x);
    let neg = |x: &[T]| -f.eval_unchecked(x);
    let mut oracle_pos = BudgetedOracle::new(&pos, sampler.budget());
    let out_pos = sampler.run(&mut oracle_pos).map_err(AdvError::Algo)?;
    let mut oracle_neg = BudgetedOracle::new(&neg, sampler.budget());
    let out_neg = sampler.run(&mut oracle_neg).map_err(AdvError::Algo)?;

    let queried_values_zero =
        oracle_pos.log().all_zero() && oracle_neg.log().all_zero();
    let replay_identical = out_pos == out_neg;
    let queries = oracle_pos.log().len();

    let mut achieved = T::zero();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = spec.d;
    let psi: Vec<T> = {
        let norm = p_norm_unchecked(&f.direction, real(2.0));
        f.direction.iter().map(|&v| v / norm).collect()
    };
    let mut audit = Vec::with_capacity(4001 + 2000);
    for i in 0..=4000 {
        let t = -T::one() + real::<T>(2.0 * i as f64 / 4000.0);
        audit.push(psi.iter().map(|&v| v * t).collect::<Vec<T>>());
    }
    for _ in 0..2000 {
        audit.push(crate::classes::sample_ball(d, &mut rng));
    }
    for x in &audit {
        let e_pos = (pos(x) - out_pos.eval(x)).abs();
        let e_neg = (neg(x) - out_neg.eval(x)).abs();
        achieved = achieved.max(e_pos).max(e_neg);
    }

    let floor = certificate_floor(&f, alpha, eps);
    let pass = queried_values_zero && achieved >= floor - tol;
    Ok(Certificate {
        status: if pass { CertStatus::Pass } else { CertStatus::Fail },
        eps,
        achieved,
        floor,
        direction: Some(f.direction.clone()),
        queried_values_zero,
        replay_identical,
        queries,
    })
}

fn certificate_floor<T: Real>(f: &RidgeFunction<T>, alpha: T, eps: T) -> T {
    let a_norm = p_norm_unchecked(&f.direction, real(2.0));
    let theta = f.profile.normalizer;
    real::<T>(2.0).powf(-alpha) * theta * a_norm.powf(alpha) * eps.powf(real::<T>(2.0) * alpha)
}

fn inconclusive<T: Real>(eps: T, queries: usize) -> Certificate<T> {
    Certificate {
        status: CertStatus::Inconclusive,
        eps,
        achieved: T::zero(),
        floor: T::zero(),
        direction: None,
        queried_values_zero: true,
        replay_identical: true,
        queries,
    }
}
