//! Multivariate Taylor models and their recovery from point evaluations by
//! tensorized central differences.

use super::oracle::BudgetedOracle;
use super::AlgoError;
use crate::index::{multi_factorial, multi_indices_up_to, MultiIndex};
use crate::real::{real, Real};

/// T_{s,x⁰}f(x) = Σ_{|γ| ≤ s} D^γ f(x⁰)/γ! · (x−x⁰)^γ
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorModel<T> {
    pub center: Vec<T>,
    pub order: usize,
    /// (γ, D^γ f(center)/γ!) pairs, grouped by increasing |γ|.
    pub terms: Vec<(MultiIndex, T)>,
}

impl<T: Real> TaylorModel<T> {
    /// Build from exact derivative access (coefficient count binom(d+s, s)).
    pub fn from_derivatives<F>(center: Vec<T>, order: usize, mut derivative: F) -> Self
    where
        F: FnMut(&[usize]) -> T,
    {
        let terms = multi_indices_up_to(center.len(), order)
            .into_iter()
            .map(|gamma| {
                let coeff = derivative(&gamma) / real(multi_factorial(&gamma));
                (gamma, coeff)
            })
            .collect();
        TaylorModel {
            center,
            order,
            terms,
        }
    }

    pub fn eval(&self, x: &[T]) -> T {
        let diff: Vec<T> = x
            .iter()
            .zip(&self.center)
            .map(|(&xi, &ci)| xi - ci)
            .collect();
        let mut acc = T::zero();
        for (gamma, coeff) in &self.terms {
            let mono = gamma
                .iter()
                .zip(&diff)
                .fold(T::one(), |m, (&g, &d)| m * d.powi(g as i32));
            acc = acc + *coeff * mono;
        }
        acc
    }

    /// D^γ f(center)/γ! for a stored multi-index.
    pub fn coefficient(&self, gamma: &[usize]) -> Option<T> {
        self.terms
            .iter()
            .find(|(g, _)| g == gamma)
            .map(|(_, c)| *c)
    }
}

/// Recover all D^γ f(center) with |γ| ≤ s by tensor products of central
/// differences with step `fd_step`, querying through the oracle.
///
/// Each coordinate factor of order m uses the m-point rule with offsets
/// (m/2 − j)·h, j = 0..m, giving O(h²) accuracy per coefficient for C^{s+2}
/// integrands. Across all coefficients the distinct stencil points are the
/// lattice {v ∈ Z^d : ‖v‖₁ ≤ s} scaled by h/2; repeats are free.
pub fn taylor_coeffs_fd<T: Real>(
    oracle: &mut BudgetedOracle<'_, T>,
    center: &[T],
    s: usize,
    fd_step: T,
) -> Result<TaylorModel<T>, AlgoError> {
    if fd_step <= T::zero() {
        return Err(AlgoError::BadParams("fd_step must be positive".into()));
    }
    let d = center.len();
    let half = fd_step / real(2.0);
    let mut terms = Vec::new();
    for gamma in multi_indices_up_to(d, s) {
        let order: usize = gamma.iter().sum();
        let mut value = T::zero();
        let mut point = center.to_vec();
        // odometer over j_i ∈ 0..=γ_i
        let mut js = vec![0usize; d];
        loop {
            let mut weight = T::one();
            for i in 0..d {
                if gamma[i] > 0 {
                    let sign = if js[i] % 2 == 0 { T::one() } else { -T::one() };
                    weight = weight * sign * real(crate::index::binomial(gamma[i], js[i]));
                    // integer half-step index keeps shared stencil points
                    // bit-identical across multi-indices, so memoization hits
                    let v = gamma[i] as i64 - 2 * js[i] as i64;
                    point[i] = center[i] + real::<T>(v as f64) * half;
                } else {
                    point[i] = center[i];
                }
            }
            value = value + weight * oracle.query(&point)?;
            // advance
            let mut axis = 0;
            loop {
                if axis == d {
                    break;
                }
                if gamma[axis] == 0 {
                    axis += 1;
                    continue;
                }
                js[axis] += 1;
                if js[axis] <= gamma[axis] {
                    break;
                }
                js[axis] = 0;
                axis += 1;
            }
            if axis == d {
                break;
            }
        }
        let deriv = value / fd_step.powi(order as i32);
        terms.push((gamma.clone(), deriv / real(multi_factorial(&gamma))));
    }
    Ok(TaylorModel {
        center: center.to_vec(),
        order: s,
        terms,
    })
}
