//! Fooling ridge functions vanishing at all sample points, and orthogonal
//! escape directions for underdetermined sample sets.

use super::directions::DirectionSet;
use super::AdvError;
use crate::classes::{catalog_profile, ClassSpec, ProfileKind, RidgeFunction};
use crate::geometry::p_norm_unchecked;
use crate::real::{real, Real};

/// Find a direction in the pool whose normalization stays more than `eps`
/// away (ℓ₂) from every sample point, and return the ridge function that rises
/// only past ‖a‖₂(1−ε²/2) along it — zero at every sample by construction.
///
/// Among qualifying directions the one maximizing the minimal distance wins,
/// ties to the lowest index. None when no member qualifies.
pub fn fooling_ridge<T: Real>(
    points: &[Vec<T>],
    dirs: &DirectionSet<T>,
    eps: T,
    spec: &ClassSpec<T>,
) -> Result<Option<RidgeFunction<T>>, AdvError> {
    if !(eps > T::zero() && eps < T::one()) {
        return Err(AdvError::ParamOutOfRange("eps must lie in (0, 1)".into()));
    }
    if spec.kappa > T::zero() {
        return Err(AdvError::ClassMismatch);
    }
    let mut best: Option<(usize, T)> = None;
    for (i, psi) in dirs.normalized().iter().enumerate() {
        let min_dist = points
            .iter()
            .map(|x| {
                let diff: Vec<T> = x.iter().zip(psi).map(|(&a, &b)| a - b).collect();
                p_norm_unchecked(&diff, real(2.0))
            })
            .fold(T::infinity(), T::min);
        if min_dist > eps && best.map_or(true, |(_, d)| min_dist > d) {
            best = Some((i, min_dist));
        }
    }
    let (idx, _) = match best {
        Some(b) => b,
        None => return Ok(None),
    };
    let a = dirs.members[idx].clone();
    let a_norm = p_norm_unchecked(&a, real(2.0)).to_f64().unwrap();
    let profile = catalog_profile(
        &ProfileKind::Fooling {
            a_norm,
            eps: eps.to_f64().unwrap(),
        },
        spec,
    )?;
    let f = RidgeFunction::validated(a, profile, spec)?;
    for x in points {
        debug_assert_eq!(f.eval_unchecked(x), T::zero());
    }
    Ok(Some(f))
}

/// A unit vector orthogonal to the span of the given points (n < d).
///
/// The span is orthonormalized; the canonical basis vector with the largest
/// residual (ties to the lowest index) is projected out and normalized.
pub fn orthogonal_direction<T: Real>(points: &[Vec<T>], d: usize) -> Result<Vec<T>, AdvError> {
    let tol = real::<T>(1e-10);
    let mut basis: Vec<Vec<T>> = Vec::new();
    for x in points {
        let mut r = x.clone();
        for q in &basis {
            let proj = dot(&r, q);
            for (ri, qi) in r.iter_mut().zip(q) {
                *ri = *ri - proj * *qi;
            }
        }
        let norm = p_norm_unchecked(&r, real(2.0));
        if norm > tol {
            basis.push(r.into_iter().map(|v| v / norm).collect());
        }
    }
    if basis.len() >= d {
        return Err(AdvError::PointsSpanSpace);
    }
    let mut best: Option<(Vec<T>, T)> = None;
    for j in 0..d {
        let mut r = vec![T::zero(); d];
        r[j] = T::one();
        for q in &basis {
            let proj = dot(&r, q);
            for (ri, qi) in r.iter_mut().zip(q) {
                *ri = *ri - proj * *qi;
            }
        }
        let norm = p_norm_unchecked(&r, real(2.0));
        if best.as_ref().map_or(true, |(_, n)| norm > *n) {
            best = Some((r.into_iter().map(|v| v / norm).collect(), norm));
        }
    }
    let (dir, norm) = best.expect("d ≥ 1");
    if norm <= tol {
        return Err(AdvError::PointsSpanSpace);
    }
    Ok(dir)
}

fn dot<T: Real>(x: &[T], y: &[T]) -> T {
    x.iter()
        .zip(y)
        .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
}
