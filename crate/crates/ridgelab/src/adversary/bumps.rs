//! The multivariate adversary: a 2^n family of disjoint radial bumps placed
//! at the points of a separated packing of the ball.

use super::AdvError;
use crate::classes::{ClassError, SmoothField};
use crate::geometry::{greedy_packing, target_candidates, NormSpec, Target};
use crate::index::{multi_indices_of_order, multi_indices_up_to};
use crate::real::{real, Real};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Derivatives of h(u) = e^{−1/(1−u)} via v = −(1−u)^{−1},
/// v^{(m)} = −m!·(1−u)^{−(m+1)} and the complete Bell polynomials.
fn radial_h_derivs(u: f64) -> [f64; 4] {
    let one_minus = 1.0 - u;
    if one_minus <= 0.0 {
        return [0.0; 4];
    }
    let h = (-1.0 / one_minus).exp();
    if h == 0.0 {
        return [0.0; 4];
    }
    let w = 1.0 / one_minus;
    let v1 = -w * w;
    let v2 = -2.0 * w * w * w;
    let v3 = -6.0 * w * w * w * w;
    [
        h,
        v1 * h,
        (v2 + v1 * v1) * h,
        (v3 + 3.0 * v1 * v2 + v1 * v1 * v1) * h,
    ]
}

/// D^γ of the radial bump φ(x) = h(‖x‖²) for |γ| ≤ 3.
fn radial_bump_partial(gamma: &[usize], x: &[f64]) -> Result<f64, ClassError> {
    let order: usize = gamma.iter().sum();
    if order > 3 {
        return Err(ClassError::DerivativeUnavailable(order));
    }
    let u: f64 = x.iter().map(|v| v * v).sum();
    let h = radial_h_derivs(u);
    let active: Vec<usize> = (0..gamma.len()).filter(|&i| gamma[i] > 0).collect();
    Ok(match order {
        0 => h[0],
        1 => {
            let i = active[0];
            2.0 * x[i] * h[1]
        }
        2 => {
            if active.len() == 1 {
                let i = active[0];
                2.0 * h[1] + 4.0 * x[i] * x[i] * h[2]
            } else {
                let (i, j) = (active[0], active[1]);
                4.0 * x[i] * x[j] * h[2]
            }
        }
        _ => match active.len() {
            1 => {
                let i = active[0];
                12.0 * x[i] * h[2] + 8.0 * x[i] * x[i] * x[i] * h[3]
            }
            2 => {
                let (i, j) = if gamma[active[0]] == 2 {
                    (active[0], active[1])
                } else {
                    (active[1], active[0])
                };
                4.0 * x[j] * h[2] + 8.0 * x[i] * x[i] * x[j] * h[3]
            }
            _ => {
                let (i, j, k) = (active[0], active[1], active[2]);
                8.0 * x[i] * x[j] * x[k] * h[3]
            }
        },
    })
}

/// f(x) = Σ θ_j · c·ε^α · φ((x − x_j)/ε) with disjoint supports.
#[derive(Debug, Clone)]
pub struct RadialBumpSum<T> {
    pub centers: Vec<Vec<T>>,
    pub theta: Vec<i8>,
    pub eps: T,
    pub alpha: T,
    pub scale: T,
}

impl<T: Real> SmoothField<T> for RadialBumpSum<T> {
    fn dim(&self) -> usize {
        self.centers.first().map_or(0, |c| c.len())
    }

    fn value(&self, x: &[T]) -> T {
        let mut acc = T::zero();
        for (c, &th) in self.centers.iter().zip(&self.theta) {
            if th == 0 {
                continue;
            }
            let u: Vec<f64> = x
                .iter()
                .zip(c)
                .map(|(&xi, &ci)| ((xi - ci) / self.eps).to_f64().unwrap())
                .collect();
            let v = radial_h_derivs(u.iter().map(|a| a * a).sum())[0];
            acc = acc + real::<T>(th as f64 * v) * self.scale * self.eps.powf(self.alpha);
        }
        acc
    }

    fn partial(&self, gamma: &[usize], x: &[T]) -> Result<T, ClassError> {
        let order: usize = gamma.iter().sum();
        let mut acc = T::zero();
        for (c, &th) in self.centers.iter().zip(&self.theta) {
            if th == 0 {
                continue;
            }
            let u: Vec<f64> = x
                .iter()
                .zip(c)
                .map(|(&xi, &ci)| ((xi - ci) / self.eps).to_f64().unwrap())
                .collect();
            let d = radial_bump_partial(gamma, &u)?;
            let chain = self.eps.powf(self.alpha - real(order as f64));
            acc = acc + real::<T>(th as f64 * d) * self.scale * chain;
        }
        Ok(acc)
    }
}

/// The 2^n family over a 2ε-separated packing of bump centers.
#[derive(Debug, Clone)]
pub struct BumpAdversary<T> {
    pub centers: Vec<Vec<T>>,
    pub eps: T,
    pub alpha: T,
    /// 1/‖φ‖_{Lip_α(Ω)} for the radial bump in this dimension.
    pub c_alpha: T,
}

impl<T: Real> BumpAdversary<T> {
    pub fn member(&self, theta: &[i8]) -> Result<RadialBumpSum<T>, AdvError> {
        if theta.len() != self.centers.len() {
            return Err(AdvError::ParamOutOfRange(format!(
                "theta length {} vs {} centers",
                theta.len(),
                self.centers.len()
            )));
        }
        Ok(RadialBumpSum {
            centers: self.centers.clone(),
            theta: theta.to_vec(),
            eps: self.eps,
            alpha: self.alpha,
            scale: self.c_alpha,
        })
    }

    /// Guaranteed sup distance of two members differing in some coordinate:
    /// the peak c_α·e^{−1}·ε^α of a single bump.
    pub fn pairwise_separation(&self) -> T {
        self.c_alpha * real((-1.0f64).exp()) * self.eps.powf(self.alpha)
    }

    pub fn family_size_log2(&self) -> usize {
        self.centers.len()
    }
}

/// Pack 2ε-separated bump centers in the ball and return the family generator.
pub fn lipschitz_bump_adversary<T: Real>(
    d: usize,
    alpha: f64,
    eps: T,
    seed: u64,
) -> Result<BumpAdversary<T>, AdvError> {
    if alpha <= 0.0 {
        return Err(AdvError::ParamOutOfRange("alpha must be positive".into()));
    }
    if !(eps > T::zero() && eps < T::one()) {
        return Err(AdvError::ParamOutOfRange("eps must lie in (0, 1)".into()));
    }
    let target = Target::unit_ball(d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<Vec<T>> = target_candidates(&target, &mut rng)
        .take(200_000)
        .collect();
    let net = greedy_packing(
        candidates,
        real::<T>(2.0) * eps,
        NormSpec::l2(),
        5_000,
        4_096,
        target,
    );
    if net.centers.len() < 2 {
        return Err(AdvError::EmptyPacking);
    }
    let c_alpha = real(1.0 / multivariate_bump_seminorm(alpha, d));
    Ok(BumpAdversary {
        centers: net.centers,
        eps,
        alpha: real(alpha),
        c_alpha,
    })
}

/// Randomized dense estimate of ‖φ‖_{Lip_α(Ω)} for the radial bump in
/// dimension d, cached per (α, d). A lower estimate, like every seminorm
/// estimate here.
pub fn multivariate_bump_seminorm(alpha: f64, d: usize) -> f64 {
    static CACHE: OnceLock<Mutex<HashMap<(u64, usize), f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (alpha.to_bits(), d);
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }

    let s = if alpha.fract() == 0.0 {
        alpha as usize - 1
    } else {
        alpha.floor() as usize
    };
    assert!(s <= 3, "radial bump derivatives are closed-form up to order 3");
    let beta = alpha - s as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b9);
    let sup_indices = multi_indices_up_to(d, s);
    let top_indices = multi_indices_of_order(d, s);

    let mut estimate = 0.0f64;
    // axis scan catches the radial extremes exactly
    let mut points: Vec<Vec<f64>> = (0..4001)
        .map(|i| {
            let mut x = vec![0.0; d];
            x[0] = -1.0 + 2.0 * i as f64 / 4000.0;
            x
        })
        .collect();
    for _ in 0..30_000 {
        points.push(crate::classes::sample_ball(d, &mut rng));
    }
    for x in &points {
        for gamma in &sup_indices {
            estimate = estimate.max(radial_bump_partial(gamma, x).unwrap().abs());
        }
    }
    // Hölder quotients of the order-s derivatives over near and far pairs
    for i in 0..20_000 {
        let x = crate::classes::sample_ball(d, &mut rng);
        let y = if i % 2 == 0 {
            crate::classes::sample_ball(d, &mut rng)
        } else {
            let scale = 10f64.powf(rand::Rng::gen_range(&mut rng, -4.0..0.0));
            loop {
                let cand: Vec<f64> = x
                    .iter()
                    .map(|&v| v + scale * rand::Rng::gen_range(&mut rng, -1.0..1.0))
                    .collect();
                if cand.iter().map(|v| v * v).sum::<f64>() <= 1.0 {
                    break cand;
                }
            }
        };
        let l1: f64 = x.iter().zip(&y).map(|(a, b)| (a - b).abs()).sum();
        if l1 == 0.0 {
            continue;
        }
        let denom = 2.0 * l1.min(1.0).powf(beta);
        for gamma in &top_indices {
            let q = (radial_bump_partial(gamma, &x).unwrap()
                - radial_bump_partial(gamma, &y).unwrap())
            .abs()
                / denom;
            estimate = estimate.max(q);
        }
    }
    cache.lock().unwrap().insert(key, estimate);
    estimate
}
