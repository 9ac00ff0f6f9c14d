//! Direction recovery by first-order differences and the two-step sampler:
//! recover the ridge direction from d+1 queries, then sample the profile
//! along it.

use super::approximant::Approximant;
use super::oracle::BudgetedOracle;
use super::univariate::univariate_sampler;
use super::{AdaptiveSampler, AlgoError};
use crate::classes::ClassSpec;
use crate::real::{real, Real};

/// Parameters of the difference scheme: δ = ε·κ/(2+ε) and h = (δ/2)^{1/β}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecoveryParams<T> {
    pub eps: T,
    pub kappa: T,
    pub beta: T,
    pub delta: T,
    pub h: T,
}

impl<T: Real> RecoveryParams<T> {
    pub fn new(eps: T, kappa: T, beta: T) -> Result<Self, AlgoError> {
        if eps <= T::zero() {
            return Err(AlgoError::BadParams("eps must be positive".into()));
        }
        if kappa <= T::zero() || kappa > T::one() {
            return Err(AlgoError::BadParams("kappa must lie in (0, 1]".into()));
        }
        if beta <= T::zero() || beta > T::one() {
            return Err(AlgoError::BadParams("beta must lie in (0, 1]".into()));
        }
        let delta = eps * kappa / (real::<T>(2.0) + eps);
        let h = (delta / real(2.0)).powf(T::one() / beta);
        debug_assert!(delta < kappa);
        debug_assert!(h > T::zero() && h <= T::one());
        Ok(RecoveryParams {
            eps,
            kappa,
            beta,
            delta,
            h,
        })
    }
}

/// Estimate the normalized ridge direction from first-order differences at the
/// scaled canonical basis: ã_i = (f(h·e_i) − f(0))/h, â = ã/‖ã‖₂.
///
/// Uses exactly d+1 queries. For f = g(a·x) with g in the Lip_{1+β} ball,
/// |g'(0)| ≥ κ and ‖a‖₂ ≤ 1, the output satisfies
/// ‖sign(g'(0))·â − a/‖a‖₂‖₂ ≤ ε.
pub fn recover_direction<T: Real>(
    oracle: &mut BudgetedOracle<'_, T>,
    params: &RecoveryParams<T>,
    d: usize,
) -> Result<(Vec<T>, usize), AlgoError> {
    let start = oracle.queries_used();
    let origin = vec![T::zero(); d];
    let f0 = oracle.query(&origin)?;
    let mut tilde = Vec::with_capacity(d);
    let mut point = origin;
    for i in 0..d {
        point[i] = params.h;
        tilde.push((oracle.query(&point)? - f0) / params.h);
        point[i] = T::zero();
    }
    let norm = tilde
        .iter()
        .fold(T::zero(), |acc, &v| acc + v * v)
        .sqrt();
    if norm == T::zero() {
        return Err(AlgoError::DegenerateGradient);
    }
    let hat = tilde.into_iter().map(|v| v / norm).collect();
    Ok((hat, oracle.queries_used() - start))
}

/// Two-step sampler on R^{α,p,κ}: d+1 queries recover the direction with
/// target accuracy (n−d)^{−α}, the remaining n−d−1 nodes interpolate the
/// profile along it with pieces of degree s.
#[derive(Debug, Clone)]
pub struct TwoStepSampler<T> {
    d: usize,
    n: usize,
    degree: usize,
    params: RecoveryParams<T>,
}

pub fn two_step_sampler<T: Real>(
    spec: &ClassSpec<T>,
    n: usize,
) -> Result<TwoStepSampler<T>, AlgoError> {
    let alpha = match spec.alpha.value() {
        Some(a) if a > T::one() => a,
        _ => {
            return Err(AlgoError::BadParams(
                "two-step sampler requires finite alpha > 1".into(),
            ))
        }
    };
    if spec.kappa <= T::zero() {
        return Err(AlgoError::BadParams(
            "two-step sampler requires kappa > 0".into(),
        ));
    }
    let s = spec.s().unwrap();
    let d = spec.d;
    if n < d + s + 2 {
        return Err(AlgoError::BadParams(format!(
            "budget {n} below d + s + 2 = {}",
            d + s + 2
        )));
    }
    // direction accuracy matched to the interpolation error order
    let eps_dir = real::<T>((n - d) as f64)
        .powf(-alpha)
        .max(real(1e-12))
        .min(real(0.99));
    let beta_rec = (alpha - T::one()).min(T::one());
    let params = RecoveryParams::new(eps_dir, spec.kappa, beta_rec)?;
    Ok(TwoStepSampler {
        d,
        n,
        degree: s,
        params,
    })
}

impl<T: Real> TwoStepSampler<T> {
    pub fn recovery_params(&self) -> &RecoveryParams<T> {
        &self.params
    }

    pub fn profile_nodes(&self) -> usize {
        self.n - self.d - 1
    }
}

impl<T: Real> AdaptiveSampler<T> for TwoStepSampler<T> {
    fn budget(&self) -> usize {
        self.n
    }

    fn name(&self) -> &'static str {
        "two-step"
    }

    fn run(&self, oracle: &mut BudgetedOracle<'_, T>) -> Result<Approximant<T>, AlgoError> {
        let hat = match recover_direction(oracle, &self.params, self.d) {
            Ok((hat, _)) => hat,
            // the zero function answers zero everywhere; reconstruct zero
            Err(AlgoError::DegenerateGradient) if oracle.log().all_zero() => {
                return Ok(Approximant::Zero { dim: self.d })
            }
            Err(e) => return Err(e),
        };
        let k = self.profile_nodes();
        let profile = univariate_sampler(
            |t| {
                let x: Vec<T> = hat.iter().map(|&a| a * t).collect();
                oracle.query(&x)
            },
            k,
            self.degree,
        )?;
        if oracle.log().all_zero() {
            return Ok(Approximant::Zero { dim: self.d });
        }
        Ok(Approximant::Ridge {
            direction: hat,
            profile,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::run_sampler;
    use super::*;
    use crate::classes::{catalog_profile, Alpha, ClassSpec, ProfileKind, RidgeFunction};

    fn kappa_spec(alpha: f64, d: usize) -> ClassSpec<f64> {
        ClassSpec::new(Alpha::Finite(alpha), 2.0, 1.0, d).unwrap()
    }

    #[test]
    fn linear_profile_recovers_direction_exactly() {
        let f = |x: &[f64]| 0.6 * x[0] + 0.8 * x[1];
        let params = RecoveryParams::new(0.1, 1.0, 1.0).unwrap();
        let mut oracle = BudgetedOracle::new(&f, 10);
        let (hat, used) = recover_direction(&mut oracle, &params, 2).unwrap();
        assert_eq!(used, 3);
        assert!((hat[0] - 0.6).abs() < 1e-12);
        assert!((hat[1] - 0.8).abs() < 1e-12);
    }

    #[test]
    fn negated_profile_flips_sign() {
        let f = |x: &[f64]| -(0.6 * x[0] + 0.8 * x[1]);
        let params = RecoveryParams::new(0.1, 1.0, 1.0).unwrap();
        let mut oracle = BudgetedOracle::new(&f, 10);
        let (hat, _) = recover_direction(&mut oracle, &params, 2).unwrap();
        // sign(g'(0))·â = a/‖a‖₂ with g'(0) = −1
        assert!((-hat[0] - 0.6).abs() < 1e-12);
        assert!((-hat[1] - 0.8).abs() < 1e-12);
    }

    #[test]
    fn sine_profile_meets_the_stated_accuracy() {
        let params = RecoveryParams::<f64>::new(0.1, 1.0, 1.0).unwrap();
        assert!((params.delta - 0.1 / 2.1).abs() < 1e-12);
        assert!((params.h - 0.1 / 4.2).abs() < 1e-12);
        let f = |x: &[f64]| x[0].sin();
        let mut oracle = BudgetedOracle::new(&f, 10);
        let (hat, used) = recover_direction(&mut oracle, &params, 3).unwrap();
        assert_eq!(used, 4);
        let err = ((hat[0] - 1.0).powi(2) + hat[1].powi(2) + hat[2].powi(2)).sqrt();
        assert!(err <= 0.1, "{err}");
    }

    #[test]
    fn two_step_on_linear_ridge_is_nearly_exact() {
        let spec = kappa_spec(2.0, 3);
        let sampler = two_step_sampler(&spec, 20).unwrap();
        let g = catalog_profile(&ProfileKind::Linear, &spec).unwrap();
        let ridge = RidgeFunction::validated(vec![0.48, 0.6, 0.64], g, &spec).unwrap();
        let f = move |x: &[f64]| ridge.eval_unchecked(x);
        let run = run_sampler(&sampler, &f).unwrap();
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let x = crate::classes::sample_ball(3, &mut rng);
            assert!((f(&x) - run.approximant.eval(&x)).abs() < 1e-8);
        }
        assert!(run.log.len() <= 20);
    }

    #[test]
    fn budget_below_minimum_rejected() {
        let spec = kappa_spec(2.0, 5);
        assert!(two_step_sampler(&spec, 7).is_err());
        assert!(two_step_sampler(&spec, 8).is_ok());
    }

    #[test]
    fn zero_oracle_yields_zero_approximant() {
        let spec = kappa_spec(2.0, 4);
        let sampler = two_step_sampler(&spec, 30).unwrap();
        let run = run_sampler(&sampler, &|_: &[f64]| 0.0).unwrap();
        assert!(run.approximant.is_zero());
        assert_eq!(run.log.len(), 5, "stops after the degenerate differences");
    }

    #[test]
    fn error_splits_into_profile_and_direction_terms() {
        let spec = kappa_spec(2.0, 4);
        let sampler = two_step_sampler(&spec, 60).unwrap();
        let g = catalog_profile(&ProfileKind::Sine, &spec).unwrap();
        let a = vec![0.5, 0.5, 0.5, 0.5];
        let ridge = RidgeFunction::validated(a.clone(), g, &spec).unwrap();
        let f = move |x: &[f64]| ridge.eval_unchecked(x);
        let run = run_sampler(&sampler, &f).unwrap();
        let hat = run.approximant.ridge_direction().unwrap().to_vec();
        let profile = match &run.approximant {
            Approximant::Ridge { profile, .. } => profile.clone(),
            other => panic!("unexpected approximant {other:?}"),
        };
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let x = crate::classes::sample_ball(4, &mut rng);
            let t: f64 = hat.iter().zip(&x).map(|(a, b)| a * b).sum();
            let tilde_at = f(&hat.iter().map(|&h| h * t).collect::<Vec<_>>());
            let e1 = (profile.eval(t) - tilde_at).abs();
            let e2 = (tilde_at - f(&x)).abs();
            let total = (run.approximant.eval(&x) - f(&x)).abs();
            assert!(total <= e1 + e2 + 1e-12);
        }
    }
}
