//! Randomized membership audit: derivative sups and Hölder quotients of a
//! smooth field against the unit ball of Lip_α(Ω).

use super::ridge::SmoothField;
use super::{ClassError, ClassSpec};
use crate::index::{multi_indices_of_order, multi_indices_up_to};
use crate::real::{real, Real};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derivative orders audited for C^∞ classes (all orders cannot be enumerated).
const INFTY_ORDER_CAP: usize = 6;

#[derive(Debug, Clone)]
pub struct Witness<T> {
    pub gamma: Vec<usize>,
    pub x: Vec<T>,
    pub y: Option<Vec<T>>,
    pub quantity: T,
}

#[derive(Debug, Clone)]
pub struct MembershipReport<T> {
    pub pass: bool,
    pub trials: usize,
    pub tolerance: T,
    /// Largest |D^γ f| seen and where.
    pub worst_sup: Option<Witness<T>>,
    /// Largest Hölder quotient seen and where.
    pub worst_holder: Option<Witness<T>>,
}

/// Audit `f` against the class: |D^γ f| ≤ 1 for |γ| ≤ s and the order-s
/// Hölder bound |D^γ f(x) − D^γ f(y)| ≤ 2 min{1, ‖x−y‖₁}^β, on `trials`
/// random pairs in Ω.
pub fn membership_check<T: Real>(
    f: &dyn SmoothField<T>,
    spec: &ClassSpec<T>,
    trials: usize,
    seed: u64,
    tol: T,
) -> Result<MembershipReport<T>, ClassError> {
    if trials == 0 {
        return Err(ClassError::ParamOutOfRange("trials must be ≥ 1".into()));
    }
    let d = f.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = T::one();

    let (sup_orders, holder_order) = match spec.s() {
        Some(s) => (s, Some(s)),
        None => (INFTY_ORDER_CAP, None),
    };
    let sup_indices = multi_indices_up_to(d, sup_orders);
    let top_indices = holder_order.map(|s| multi_indices_of_order(d, s));
    let beta = spec.beta();

    let mut worst_sup: Option<Witness<T>> = None;
    let mut worst_holder: Option<Witness<T>> = None;
    let mut pass = true;

    for trial in 0..trials {
        let x = sample_ball(d, &mut rng);
        // alternate far pairs and near pairs; near pairs probe the Hölder quotient
        let y = if trial % 2 == 0 {
            sample_ball(d, &mut rng)
        } else {
            perturb_in_ball(&x, &mut rng)
        };

        for gamma in &sup_indices {
            for point in [&x, &y] {
                let v = f.partial(gamma, point)?.abs();
                if worst_sup.as_ref().map_or(true, |w| v > w.quantity) {
                    worst_sup = Some(Witness {
                        gamma: gamma.clone(),
                        x: point.clone(),
                        y: None,
                        quantity: v,
                    });
                }
                if v > one + tol {
                    pass = false;
                }
            }
        }

        if let (Some(top), Some(beta)) = (&top_indices, beta) {
            let l1 = x
                .iter()
                .zip(&y)
                .fold(T::zero(), |acc, (&a, &b)| acc + (a - b).abs());
            if l1 == T::zero() {
                continue;
            }
            let denom = real::<T>(2.0) * l1.min(one).powf(beta);
            for gamma in top {
                let q = (f.partial(gamma, &x)? - f.partial(gamma, &y)?).abs() / denom;
                if worst_holder.as_ref().map_or(true, |w| q > w.quantity) {
                    worst_holder = Some(Witness {
                        gamma: gamma.clone(),
                        x: x.clone(),
                        y: Some(y.clone()),
                        quantity: q,
                    });
                }
                if q > one + tol {
                    pass = false;
                }
            }
        }
    }

    Ok(MembershipReport {
        pass,
        trials,
        tolerance: tol,
        worst_sup,
        worst_holder,
    })
}

pub(crate) fn sample_ball<T: Real>(d: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    loop {
        let dir: Vec<T> = (0..d).map(|_| T::standard_normal(rng)).collect();
        let norm = dir
            .iter()
            .fold(T::zero(), |acc, &v| acc + v * v)
            .sqrt();
        if norm == T::zero() {
            continue;
        }
        let u: T = T::uniform(rng, T::zero(), T::one());
        let radius = u.powf(T::one() / real(d as f64));
        return dir.into_iter().map(|v| v / norm * radius).collect();
    }
}

fn perturb_in_ball<T: Real>(x: &[T], rng: &mut ChaCha8Rng) -> Vec<T> {
    let exponent = T::uniform(rng, real(-4.0), T::zero());
    let scale = real::<T>(10.0).powf(exponent);
    loop {
        let y: Vec<T> = x
            .iter()
            .map(|&xi| xi + scale * T::standard_normal(rng))
            .collect();
        let norm = y.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
        if norm <= T::one() {
            return y;
        }
    }
}
