//! Minimal dense univariate polynomials, used for closed-form derivatives of
//! the standard bump e^{-1/(1-x²)}.
//!
//! The n-th derivative of the bump is P_n(x)/(1-x²)^{2n} · e^{-1/(1-x²)} with
//! an integer-coefficient polynomial P_n obeying
//!
//!   P_{n+1} = P_n'·(1-x²)² + 4n·x·(1-x²)·P_n − 2x·P_n,   P_0 = 1.

use std::sync::{Mutex, OnceLock};

/// Dense polynomial, ascending coefficients.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Poly {
    pub coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Poly { coeffs }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::new(vec![0.0]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Poly::new(coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[i] += a;
        }
        for (i, &b) in other.coeffs.iter().enumerate() {
            coeffs[i] += b;
        }
        Poly::new(coeffs)
    }

}

fn bump_numerators() -> &'static Mutex<Vec<Poly>> {
    static CACHE: OnceLock<Mutex<Vec<Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Poly::new(vec![1.0])]))
}

/// Numerator polynomial P_n of the n-th bump derivative.
pub(crate) fn bump_numerator(n: usize) -> Poly {
    let cache = bump_numerators();
    let mut cache = cache.lock().expect("bump numerator cache");
    while cache.len() <= n {
        let m = cache.len() - 1;
        let p = &cache[m];
        // (1-x²)² , 4m·x·(1-x²) , -2x
        let q2 = Poly::new(vec![1.0, 0.0, -2.0, 0.0, 1.0]);
        let mid = Poly::new(vec![0.0, 4.0 * m as f64, 0.0, -4.0 * m as f64]);
        let tail = Poly::new(vec![0.0, -2.0]);
        let next = p
            .derivative()
            .mul(&q2)
            .add(&p.mul(&mid))
            .add(&p.mul(&tail));
        cache.push(next);
    }
    cache[n].clone()
}

/// n-th derivative of the standard bump φ(x) = e^{-1/(1-x²)} (0 outside (-1,1)).
///
/// Evaluated in f64; callers convert. The bump underflows to exactly 0 well
/// before the rational prefactor overflows, so the zero guard keeps the
/// product finite.
pub(crate) fn bump_derivative_f64(n: usize, x: f64) -> f64 {
    let one_minus = 1.0 - x * x;
    if one_minus <= 0.0 {
        return 0.0;
    }
    let phi = (-1.0 / one_minus).exp();
    if phi == 0.0 {
        return 0.0;
    }
    if n == 0 {
        return phi;
    }
    let p = bump_numerator(n);
    p.eval(x) / one_minus.powi(2 * n as i32) * phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_value_at_zero() {
        assert!((bump_derivative_f64(0, 0.0) - (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn bump_vanishes_outside_support() {
        for n in 0..5 {
            assert_eq!(bump_derivative_f64(n, 1.0), 0.0);
            assert_eq!(bump_derivative_f64(n, -1.3), 0.0);
        }
    }

    #[test]
    fn first_derivative_matches_finite_difference() {
        let h = 1e-6;
        for &x in &[-0.7, -0.2, 0.0, 0.3, 0.55, 0.9] {
            let fd = (bump_derivative_f64(0, x + h) - bump_derivative_f64(0, x - h)) / (2.0 * h);
            let an = bump_derivative_f64(1, x);
            assert!((fd - an).abs() < 1e-7, "x={x}: {fd} vs {an}");
        }
    }

    #[test]
    fn higher_derivatives_match_finite_difference() {
        let h = 1e-5;
        for n in 1..4usize {
            for &x in &[-0.5, 0.1, 0.4] {
                let fd = (bump_derivative_f64(n - 1, x + h) - bump_derivative_f64(n - 1, x - h))
                    / (2.0 * h);
                let an = bump_derivative_f64(n, x);
                assert!((fd - an).abs() < 1e-4 * (1.0 + an.abs()), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn near_boundary_is_finite_and_tiny() {
        for n in 0..6 {
            let v = bump_derivative_f64(n, 0.999_999);
            assert!(v.is_finite());
            assert!(v.abs() < 1e-100);
        }
    }
}
