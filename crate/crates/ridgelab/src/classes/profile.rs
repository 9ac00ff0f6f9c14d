//! Univariate profiles with closed-form derivative evaluators.

use super::{Alpha, ClassError};
use crate::index::factorial;
use crate::poly::bump_derivative_f64;
use crate::real::{real, Real};

/// Weight of the cubic term in the `cubic_sine` profile. Chosen so that
/// sup|g| ≤ 1, sup|g'| = g'(0) = 1 and the first derivative stays 1-Hölder
/// with constant ≤ 1 on [-1, 1].
pub(crate) const CUBIC_COEFF: f64 = 0.15;

/// Left endpoint and width of the window I carrying the bump combs.
pub(crate) const BUMP_WINDOW_LEFT: f64 = std::f64::consts::FRAC_PI_4 - 0.2;
pub(crate) const BUMP_WINDOW_WIDTH: f64 = 0.4;

/// max over the bump window of max{cos, sin}; strictly below 1, attained at
/// both window endpoints.
pub fn trig_max_on_bump_window() -> f64 {
    BUMP_WINDOW_LEFT.cos()
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Shape<T> {
    Zero,
    /// g(t) = t
    Linear,
    /// g(t) = sin t
    Sine,
    /// g(t) = t^j / j!
    Monomial { j: usize },
    /// g(t) = sin t + 0.15 t³ (still |g'(0)| = 1, seminorm ≤ 1)
    CubicSine,
    /// g(t) = φ(t) / c with φ the standard bump; c = max(1, seminorm of φ)
    Bump { norm_const: T },
    /// g(t) = c_α φ(5k(t−b)) / k^α
    ScaledBump { k: usize, b: T, c_alpha: T },
    /// g(t) = sin t + (1−γ) Σ θ_j ψ_{k,b_j}, θ_j ∈ {−1,0,1}
    SineBumps {
        k: usize,
        theta: Vec<i8>,
        damping: T,
        c_alpha: T,
    },
    /// g(t) = θ · [(t − kink)_+]^α
    Fooling { kink: T, theta: T },
}

/// A univariate profile together with its smoothness metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile<T> {
    pub(crate) shape: Shape<T>,
    pub alpha: Alpha<T>,
    /// Extra scaling on top of the catalog normalization (1 for catalog members).
    pub scale: T,
    /// Certified (analytic or dense-grid) upper bound on the Lipschitz seminorm.
    pub lip_bound: T,
    /// g'(0) where defined.
    pub g0_deriv: Option<T>,
    /// The normalization constant applied at construction.
    pub normalizer: T,
}

impl<T: Real> Profile<T> {
    /// Evaluate g(t) for t ∈ [−1, 1].
    pub fn value(&self, t: T) -> T {
        self.scale * self.raw(0, t)
    }

    /// Evaluate the j-th derivative where a closed form exists.
    pub fn deriv(&self, j: usize, t: T) -> Result<T, ClassError> {
        if j == 0 {
            return Ok(self.value(t));
        }
        if let Shape::Fooling { .. } = self.shape {
            // The positive-part power is only C^s across the kink.
            let s = self.alpha.strict_floor().unwrap_or(usize::MAX);
            if j > s {
                return Err(ClassError::DerivativeUnavailable(j));
            }
        }
        Ok(self.scale * self.raw(j, t))
    }

    /// Same profile scaled by `c` (used to build deliberate non-members).
    pub fn with_scale(&self, c: T) -> Profile<T> {
        let mut p = self.clone();
        p.scale = p.scale * c;
        p.lip_bound = p.lip_bound * c.abs();
        p.g0_deriv = p.g0_deriv.map(|g| g * c);
        p
    }

    fn raw(&self, j: usize, t: T) -> T {
        match &self.shape {
            Shape::Zero => T::zero(),
            Shape::Linear => match j {
                0 => t,
                1 => T::one(),
                _ => T::zero(),
            },
            Shape::Sine => sine_derivative(j, t),
            Shape::Monomial { j: deg } => {
                if j > *deg {
                    T::zero()
                } else {
                    let power = (*deg - j) as i32;
                    t.powi(power) / real(factorial(*deg - j))
                }
            }
            Shape::CubicSine => {
                let cubic = real::<T>(CUBIC_COEFF);
                let c = match j {
                    0 => cubic * t * t * t,
                    1 => real::<T>(3.0) * cubic * t * t,
                    2 => real::<T>(6.0) * cubic * t,
                    3 => real::<T>(6.0) * cubic,
                    _ => T::zero(),
                };
                sine_derivative(j, t) + c
            }
            Shape::Bump { norm_const } => {
                let v = bump_derivative_f64(j, t.to_f64().unwrap());
                real::<T>(v) / *norm_const
            }
            Shape::ScaledBump { k, b, c_alpha } => {
                scaled_bump_deriv(*k, *b, *c_alpha, self.alpha, j, t)
            }
            Shape::SineBumps {
                k,
                theta,
                damping,
                c_alpha,
            } => {
                let mut acc = sine_derivative(j, t);
                for (idx, &th) in theta.iter().enumerate() {
                    if th == 0 {
                        continue;
                    }
                    let b = bump_comb_center::<T>(*k, idx + 1);
                    let psi = scaled_bump_deriv(*k, b, *c_alpha, self.alpha, j, t);
                    let sign = real::<T>(th as f64);
                    acc = acc + *damping * sign * psi;
                }
                acc
            }
            Shape::Fooling { kink, theta } => {
                let alpha = self.alpha.value().expect("fooling requires finite alpha");
                let diff = t - *kink;
                if diff <= T::zero() {
                    return T::zero();
                }
                let mut coeff = T::one();
                for i in 0..j {
                    coeff = coeff * (alpha - real(i as f64));
                }
                *theta * coeff * diff.powf(alpha - real(j as f64))
            }
        }
    }
}

/// Center b_j = a + (2j−1)/(5k) of the j-th cell of the bump comb (1-based).
pub(crate) fn bump_comb_center<T: Real>(k: usize, j: usize) -> T {
    real::<T>(BUMP_WINDOW_LEFT) + real::<T>((2 * j - 1) as f64 / (5.0 * k as f64))
}

fn sine_derivative<T: Real>(j: usize, t: T) -> T {
    match j % 4 {
        0 => t.sin(),
        1 => t.cos(),
        2 => -t.sin(),
        _ => -t.cos(),
    }
}

fn scaled_bump_deriv<T: Real>(k: usize, b: T, c_alpha: T, alpha: Alpha<T>, j: usize, t: T) -> T {
    let a = alpha.value().expect("scaled bump requires finite alpha");
    let k_real = real::<T>(k as f64);
    let arg = real::<T>(5.0) * k_real * (t - b);
    let inner = real::<T>(bump_derivative_f64(j, arg.to_f64().unwrap()));
    let chain = (real::<T>(5.0) * k_real).powi(j as i32);
    c_alpha * chain * inner * k_real.powf(-a)
}
