//! Ridge functions g(a·x) on the closed Euclidean unit ball.

use super::{ClassError, ClassSpec, Profile};
use crate::geometry::p_norm_unchecked;
use crate::real::{real, Real};

pub(crate) const DOMAIN_TOL: f64 = 1e-9;

/// A multivariate function on Ω = B̄₂^d with partial-derivative access.
pub trait SmoothField<T: Real> {
    fn dim(&self) -> usize;
    fn value(&self, x: &[T]) -> T;
    /// D^γ f(x) for a multi-index γ.
    fn partial(&self, gamma: &[usize], x: &[T]) -> Result<T, ClassError>;
}

/// f(x) = g(a·x) with direction a and profile g.
#[derive(Debug, Clone, PartialEq)]
pub struct RidgeFunction<T> {
    pub direction: Vec<T>,
    pub profile: Profile<T>,
}

impl<T: Real> RidgeFunction<T> {
    pub fn new(direction: Vec<T>, profile: Profile<T>) -> Self {
        RidgeFunction { direction, profile }
    }

    /// Checks the direction against the class's ℓp constraint.
    pub fn validated(
        direction: Vec<T>,
        profile: Profile<T>,
        spec: &ClassSpec<T>,
    ) -> Result<Self, ClassError> {
        let norm = p_norm_unchecked(&direction, spec.p);
        if norm > T::one() + real(DOMAIN_TOL) {
            return Err(ClassError::ParamOutOfRange(format!(
                "direction has ℓp norm {norm} > 1"
            )));
        }
        if direction.len() != spec.d {
            return Err(ClassError::ParamOutOfRange(
                "direction dimension disagrees with class dimension".into(),
            ));
        }
        Ok(RidgeFunction { direction, profile })
    }

    pub fn dot(&self, x: &[T]) -> T {
        self.direction
            .iter()
            .zip(x)
            .fold(T::zero(), |acc, (&a, &xi)| acc + a * xi)
    }

    /// Evaluate without a domain check.
    pub fn eval_unchecked(&self, x: &[T]) -> T {
        self.profile.value(self.dot(x))
    }
}

impl<T: Real> SmoothField<T> for RidgeFunction<T> {
    fn dim(&self) -> usize {
        self.direction.len()
    }

    fn value(&self, x: &[T]) -> T {
        self.eval_unchecked(x)
    }

    // D^γ f(x) = g^{(|γ|)}(a·x) · a^γ
    fn partial(&self, gamma: &[usize], x: &[T]) -> Result<T, ClassError> {
        let order: usize = gamma.iter().sum();
        let g_deriv = self.profile.deriv(order, self.dot(x))?;
        let mono = gamma
            .iter()
            .zip(&self.direction)
            .fold(T::one(), |acc, (&g, &a)| acc * a.powi(g as i32));
        Ok(g_deriv * mono)
    }
}

/// Evaluate f at x, enforcing ‖x‖₂ ≤ 1 up to tolerance.
pub fn ridge_eval<T: Real>(f: &RidgeFunction<T>, x: &[T]) -> Result<T, ClassError> {
    let norm = p_norm_unchecked(x, real(2.0));
    if norm > T::one() + real(DOMAIN_TOL) {
        return Err(ClassError::OutsideDomain(norm.to_f64().unwrap()));
    }
    Ok(f.eval_unchecked(x))
}

#[cfg(test)]
mod tests {
    use super::super::{catalog_profile, Alpha, ClassSpec, ProfileKind};
    use super::*;

    fn spec(d: usize) -> ClassSpec<f64> {
        ClassSpec::new(Alpha::Finite(1.0), 2.0, 0.0, d).unwrap()
    }

    #[test]
    fn linear_profile_on_its_own_direction() {
        let s = spec(2);
        let g = catalog_profile(&ProfileKind::Linear, &s).unwrap();
        let f = RidgeFunction::validated(vec![0.6, 0.8], g, &s).unwrap();
        assert!((ridge_eval(&f, &[0.6, 0.8]).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn constant_along_perpendicular_lines() {
        let s = spec(2);
        let g = catalog_profile(&ProfileKind::Sine, &s).unwrap();
        let f = RidgeFunction::validated(vec![1.0, 0.0], g, &s).unwrap();
        let v0 = ridge_eval(&f, &[0.0, 0.0]).unwrap();
        for &y in &[-0.9, -0.3, 0.4, 0.8] {
            assert_eq!(ridge_eval(&f, &[0.0, y]).unwrap(), v0);
        }
    }

    #[test]
    fn sine_spot_check() {
        let s = spec(3);
        let g = catalog_profile(&ProfileKind::Sine, &s).unwrap();
        let f = RidgeFunction::validated(vec![1.0, 0.0, 0.0], g, &s).unwrap();
        let v = ridge_eval(&f, &[0.5, 0.1, 0.2]).unwrap();
        assert!((v - 0.479_425_538_604_203f64).abs() < 1e-12);
    }

    #[test]
    fn rejects_points_outside_domain() {
        let s = spec(2);
        let g = catalog_profile(&ProfileKind::Linear, &s).unwrap();
        let f = RidgeFunction::validated(vec![1.0, 0.0], g, &s).unwrap();
        assert!(ridge_eval(&f, &[1.2, 0.3]).is_err());
    }

    #[test]
    fn rejects_oversized_direction() {
        let s = ClassSpec::new(Alpha::Finite(1.0), 1.0, 0.0, 2).unwrap();
        let g = catalog_profile(&ProfileKind::Linear, &s).unwrap();
        // ℓ1 norm 1.4 > 1
        assert!(RidgeFunction::validated(vec![0.7, 0.7], g, &s).is_err());
    }

    #[test]
    fn partials_match_chain_rule() {
        let s = ClassSpec::new(Alpha::Finite(3.0), 2.0, 0.0, 2).unwrap();
        let g = catalog_profile(&ProfileKind::Sine, &s).unwrap();
        let f = RidgeFunction::validated(vec![0.6, 0.8], g, &s).unwrap();
        let x = [0.1, 0.2];
        let t: f64 = 0.6 * 0.1 + 0.8 * 0.2;
        // D^{(1,1)} f = g''(a·x) a₁ a₂
        let v = f.partial(&[1, 1], &x).unwrap();
        assert!((v - (-t.sin()) * 0.6 * 0.8).abs() < 1e-14);
    }
}
