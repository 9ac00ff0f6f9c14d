//! Global Taylor polynomial at the origin for infinitely smooth classes.

use super::approximant::Approximant;
use super::oracle::BudgetedOracle;
use super::taylor::taylor_coeffs_fd;
use super::{AdaptiveSampler, AlgoError};
use crate::classes::ClassSpec;
use crate::index::stencil_point_count;
use crate::real::{real, Real};

/// Which remainder bound selects the Taylor order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothnessRule {
    /// smallest s with 2/s! ≤ ε (ridge classes)
    Ridge,
    /// smallest s with 2·d^{s/2}/(s−1)! ≤ ε (general C^∞ fields)
    General,
}

#[derive(Debug, Clone)]
pub struct TaylorAtZeroSampler<T> {
    d: usize,
    s: usize,
    fd_step: T,
    rule: SmoothnessRule,
}

/// Build the order from the target accuracy and the chosen remainder rule.
///
/// The difference step balances O(h²) truncation against 2^s·ulp/h^s roundoff
/// in the order-s stencils: h = 10^{−16/(s+2)}.
pub fn taylor_at_zero_sampler<T: Real>(
    spec: &ClassSpec<T>,
    eps: T,
    rule: SmoothnessRule,
) -> Result<TaylorAtZeroSampler<T>, AlgoError> {
    if spec.alpha.is_finite() {
        return Err(AlgoError::BadParams(
            "taylor-at-zero sampler requires the C^∞ class".into(),
        ));
    }
    if eps <= T::zero() || eps > T::one() {
        return Err(AlgoError::BadParams("eps must lie in (0, 1]".into()));
    }
    let eps_f = eps.to_f64().unwrap();
    let d = spec.d;
    let mut s = 1usize;
    loop {
        let remainder = match rule {
            SmoothnessRule::Ridge => 2.0 / crate::index::factorial(s),
            SmoothnessRule::General => {
                2.0 * (d as f64).powf(s as f64 / 2.0) / crate::index::factorial(s - 1)
            }
        };
        if remainder <= eps_f {
            break;
        }
        s += 1;
        if s > 60 {
            return Err(AlgoError::BadParams(
                "no Taylor order satisfies the requested accuracy".into(),
            ));
        }
    }
    let fd_step = real(10f64.powf(-16.0 / (s as f64 + 2.0)));
    Ok(TaylorAtZeroSampler {
        d,
        s,
        fd_step,
        rule,
    })
}

impl<T: Real> TaylorAtZeroSampler<T> {
    pub fn order(&self) -> usize {
        self.s
    }

    pub fn rule(&self) -> SmoothnessRule {
        self.rule
    }

    pub fn fd_step(&self) -> T {
        self.fd_step
    }
}

impl<T: Real> AdaptiveSampler<T> for TaylorAtZeroSampler<T> {
    fn budget(&self) -> usize {
        stencil_point_count(self.d, self.s)
    }

    fn name(&self) -> &'static str {
        "taylor-zero"
    }

    fn run(&self, oracle: &mut BudgetedOracle<'_, T>) -> Result<Approximant<T>, AlgoError> {
        let center = vec![T::zero(); self.d];
        let model = taylor_coeffs_fd(oracle, &center, self.s, self.fd_step)?;
        if oracle.log().all_zero() {
            return Ok(Approximant::Zero { dim: self.d });
        }
        Ok(Approximant::TaylorPolynomial { model })
    }
}
