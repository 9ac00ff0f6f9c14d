//! Greedy randomized packings and deterministic farthest-point packings.

use super::{GeomError, Net, NetRole, NormSpec, Target};
use crate::real::{real, Real};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Greedy packing from a candidate stream: keep every candidate at distance
/// strictly greater than `eps` from all kept points; stop after `reject_budget`
/// consecutive rejections, when the stream ends, or on reaching `max_points`.
///
/// Deterministic given a deterministic candidate source. Maximality is only
/// heuristic.
pub fn greedy_packing<T: Real, I>(
    candidates: I,
    eps: T,
    norm: NormSpec<T>,
    reject_budget: usize,
    max_points: usize,
    target: Target<T>,
) -> Net<T>
where
    I: IntoIterator<Item = Vec<T>>,
{
    let mut kept: Vec<Vec<T>> = Vec::new();
    let mut consecutive_rejections = 0usize;
    for cand in candidates {
        if kept.len() >= max_points {
            break;
        }
        let ok = kept.iter().all(|k| norm.dist(k, &cand) > eps);
        if ok {
            kept.push(cand);
            consecutive_rejections = 0;
        } else {
            consecutive_rejections += 1;
            if consecutive_rejections >= reject_budget {
                break;
            }
        }
    }
    Net {
        centers: kept,
        radius: eps,
        norm,
        role: NetRole::Packing,
        target,
    }
}

/// Deterministic candidate stream for a target.
///
/// Continuous targets yield seeded random points (a fine deterministic grid in
/// dimension one); finite targets yield their points in order.
pub fn target_candidates<'a, T: Real>(
    target: &'a Target<T>,
    rng: &'a mut ChaCha8Rng,
) -> Box<dyn Iterator<Item = Vec<T>> + 'a> {
    match target {
        Target::Finite { points } => Box::new(points.iter().cloned()),
        Target::Ball { p, radius, d } if *d == 1 => {
            let r = *radius;
            let n = 20_001usize;
            let _ = p;
            Box::new((0..n).map(move |i| {
                vec![-r + real::<T>(2.0) * r * real::<T>(i as f64 / (n - 1) as f64)]
            }))
        }
        Target::Ball { p, radius, d } => {
            let (p, radius, d) = (*p, *radius, *d);
            Box::new(std::iter::repeat_with(move || {
                let x = sample_lp_sphere(d, p, rng);
                let u: T = T::uniform(rng, T::zero(), T::one());
                let scale = radius * u.powf(T::one() / real(d as f64));
                x.into_iter().map(|v| v * scale).collect()
            }))
        }
        Target::Sphere { p, d } => {
            let (p, d) = (*p, *d);
            Box::new(std::iter::repeat_with(move || sample_lp_sphere(d, p, rng)))
        }
        Target::SparseSphere { m, p, d } => {
            let (m, p, d) = (*m, *p, *d);
            Box::new(std::iter::repeat_with(move || {
                sample_sparse_sign_vector(d, m, p, rng)
            }))
        }
    }
}

/// Cone-measure point on the unit ℓp sphere (exact for p = 2 by rotation
/// invariance; adequate as a candidate source otherwise).
fn sample_lp_sphere<T: Real>(d: usize, p: T, rng: &mut ChaCha8Rng) -> Vec<T> {
    loop {
        let x: Vec<T> = if p.is_infinite() {
            (0..d)
                .map(|_| T::uniform(rng, -T::one(), T::one()))
                .collect()
        } else if p == real(2.0) {
            (0..d).map(|_| T::standard_normal(rng)).collect()
        } else {
            let shape = 1.0 / p.to_f64().unwrap();
            (0..d)
                .map(|_| {
                    let mag: T = T::gamma_sample(rng, shape).powf(T::one() / p);
                    if rng.gen::<bool>() {
                        mag
                    } else {
                        -mag
                    }
                })
                .collect()
        };
        let norm = super::p_norm_unchecked(&x, p);
        if norm > T::zero() && norm.is_finite() {
            return x.into_iter().map(|v| v / norm).collect();
        }
    }
}

/// Random m-sparse sign vector on the unit ℓp sphere.
fn sample_sparse_sign_vector<T: Real>(d: usize, m: usize, p: T, rng: &mut ChaCha8Rng) -> Vec<T> {
    let mut support: Vec<usize> = (0..d).collect();
    support.shuffle(rng);
    support.truncate(m);
    let magnitude = if p.is_infinite() {
        T::one()
    } else {
        real::<T>(m as f64).powf(-T::one() / p)
    };
    let mut x = vec![T::zero(); d];
    for &i in &support {
        x[i] = if rng.gen::<bool>() { magnitude } else { -magnitude };
    }
    x
}

/// Deterministic farthest-point packing of a finite set: start at index 0 and
/// repeatedly add the point maximizing its minimum distance to the chosen set.
///
/// Returns the chosen indices and the minimum pairwise distance among them.
pub fn farthest_point_packing<T: Real>(
    points: &[Vec<T>],
    count: usize,
    norm: NormSpec<T>,
) -> (Vec<usize>, T) {
    if points.is_empty() || count == 0 {
        return (Vec::new(), T::infinity());
    }
    let mut chosen = vec![0usize];
    let mut min_dist: Vec<T> = points.iter().map(|p| norm.dist(p, &points[0])).collect();
    while chosen.len() < count.min(points.len()) {
        let (best, best_d) = min_dist
            .iter()
            .enumerate()
            .fold((0usize, T::neg_infinity()), |(bi, bd), (i, &d)| {
                if d > bd {
                    (i, d)
                } else {
                    (bi, bd)
                }
            });
        if best_d <= T::zero() {
            break;
        }
        chosen.push(best);
        for (i, md) in min_dist.iter_mut().enumerate() {
            *md = md.min(norm.dist(&points[i], &points[best]));
        }
    }
    let mut sep = T::infinity();
    for i in 0..chosen.len() {
        for j in (i + 1)..chosen.len() {
            sep = sep.min(norm.dist(&points[chosen[i]], &points[chosen[j]]));
        }
    }
    (chosen, sep)
}

/// Result of the sparse-sphere packing search.
#[derive(Debug, Clone)]
pub struct SparsePacking<T> {
    /// ℓ₂-normalized m-sparse sign vectors, pairwise ℓ₂ distance > 1/√2.
    pub net: Net<T>,
    /// (d/(4m))^{m/2}, the cardinality the packing aims for.
    pub target_size: f64,
    pub achieved: usize,
}

impl<T> SparsePacking<T> {
    pub fn reached_target(&self) -> bool {
        self.achieved as f64 >= self.target_size
    }
}

/// Packing of the ℓ₂-normalized m-sparse sign vectors with pairwise distance
/// > 1/√2, aiming for (d/(4m))^{m/2} members.
///
/// For m = 1 the full set {±e_i} is returned outright.
pub fn sparse_sphere_packing<T: Real>(
    d: usize,
    m: usize,
    p: T,
    seed: u64,
    budget: usize,
) -> Result<SparsePacking<T>, GeomError> {
    if m == 0 || m > d {
        return Err(GeomError::ParamOutOfRange("need 1 ≤ m ≤ d".into()));
    }
    let target = Target::SparseSphere { m, p, d };
    let target_size = (d as f64 / (4.0 * m as f64)).powf(m as f64 / 2.0);
    let separation = real::<T>(1.0 / 2f64.sqrt());

    if m == 1 {
        let mut centers = Vec::with_capacity(2 * d);
        for i in 0..d {
            for sign in [T::one(), -T::one()] {
                let mut e = vec![T::zero(); d];
                e[i] = sign;
                centers.push(e);
            }
        }
        let achieved = centers.len();
        return Ok(SparsePacking {
            net: Net {
                centers,
                radius: separation,
                norm: NormSpec::l2(),
                role: NetRole::Packing,
                target,
            },
            target_size,
            achieved,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = real::<T>(2.0);
    let l2 = NormSpec::l2();
    let candidates = std::iter::repeat_with(|| {
        // Euclidean normalization of the p-sphere vector: ±1/√m entries
        let mut x = sample_sparse_sign_vector(d, m, two, &mut rng);
        let norm = super::p_norm_unchecked(&x, two);
        for v in &mut x {
            *v = *v / norm;
        }
        x
    })
    .take(budget);
    let net = greedy_packing(
        candidates,
        separation,
        l2,
        budget / 4 + 64,
        target_size.ceil() as usize + 64,
        target,
    );
    let achieved = net.centers.len();
    Ok(SparsePacking {
        net,
        target_size,
        achieved,
    })
}
