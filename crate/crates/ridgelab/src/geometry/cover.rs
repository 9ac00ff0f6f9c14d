//! Deterministic lattice covers with disjoint cell assignment.

use super::packing::target_candidates;
use super::{GeomError, Net, NetRole, NormSpec, Target};
use crate::real::{real, Real};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_CELL_BUDGET: usize = 100_000_000;

/// Axis-aligned lattice cover of a ball or sphere target at radius `eps` in
/// the given norm.
///
/// The lattice pitch is 2·eps/d^{1/q}, which makes the ℓq circumradius of each
/// cell exactly eps; cells are kept when their box intersects the target, so
/// every target point is within eps of its own cell center. When a single
/// center at the origin already covers the target, that one-point cover is
/// returned.
pub fn grid_cover<T: Real>(
    target: &Target<T>,
    eps: T,
    norm: NormSpec<T>,
    max_centers: usize,
) -> Result<Net<T>, GeomError> {
    if eps <= T::zero() {
        return Err(GeomError::BadEps(eps.to_f64().unwrap()));
    }
    let d = target.dim();
    if d == 0 {
        return Err(GeomError::DimensionTooSmall(1));
    }
    let (target_p, target_r, shell) = match target {
        Target::Ball { p, radius, .. } => (*p, *radius, false),
        Target::Sphere { p, .. } => (*p, T::one(), true),
        _ => return Err(GeomError::UnsupportedTarget),
    };

    // a single center at the origin reaches everything within the circumradius
    if target.circumradius(norm.p) <= eps {
        return Ok(Net {
            centers: vec![vec![T::zero(); d]],
            radius: eps,
            norm,
            role: NetRole::Cover,
            target: target.clone(),
        });
    }

    let q = norm.p;
    let half = eps / real::<T>(d as f64).powf(T::one() / q);
    let m_max = ((target_r / half).to_f64().unwrap() / 2.0 + 1.0).ceil() as i64;

    let mut centers: Vec<Vec<T>> = Vec::new();
    let mut coords: Vec<T> = vec![T::zero(); d];
    enumerate_cells(
        d,
        0,
        m_max,
        half,
        target_p,
        target_r,
        shell,
        T::zero(),
        &mut coords,
        &mut centers,
        max_centers,
    )?;

    Ok(Net {
        centers,
        radius: eps,
        norm,
        role: NetRole::Cover,
        target: target.clone(),
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate_cells<T: Real>(
    d: usize,
    axis: usize,
    m_max: i64,
    half: T,
    target_p: T,
    target_r: T,
    shell: bool,
    min_prefix: T,
    coords: &mut Vec<T>,
    centers: &mut Vec<Vec<T>>,
    max_centers: usize,
) -> Result<(), GeomError> {
    if axis == d {
        if shell {
            // the box must also reach out to the sphere
            let far: T = coords
                .iter()
                .map(|&c| c.abs() + half)
                .fold(T::zero(), |acc, v| accumulate(acc, v, target_p));
            if finish(far, target_p) < target_r {
                return Ok(());
            }
        }
        if centers.len() >= max_centers {
            return Err(GeomError::BudgetExceeded(max_centers));
        }
        centers.push(coords.clone());
        return Ok(());
    }
    for m in -m_max..=m_max {
        let c = (real::<T>(2.0) * real::<T>(m as f64) + T::one()) * half;
        let near = (c.abs() - half).max(T::zero());
        let prefix = accumulate(min_prefix, near, target_p);
        // Prune boxes that cannot reach the target. For ball targets the
        // boundary case is pruned too: a box meeting the ball only on a shared
        // lattice face is redundant, its inward neighbor holds those points.
        let reach = finish(prefix, target_p);
        if reach > target_r || (!shell && reach == target_r) {
            continue;
        }
        coords[axis] = c;
        enumerate_cells(
            d,
            axis + 1,
            m_max,
            half,
            target_p,
            target_r,
            shell,
            prefix,
            coords,
            centers,
            max_centers,
        )?;
    }
    coords[axis] = T::zero();
    Ok(())
}

fn accumulate<T: Real>(acc: T, v: T, p: T) -> T {
    if p.is_infinite() {
        acc.max(v)
    } else {
        acc + v.powf(p)
    }
}

fn finish<T: Real>(acc: T, p: T) -> T {
    if p.is_infinite() {
        acc
    } else {
        acc.powf(T::one() / p)
    }
}

/// Greedy set-centered cover of a finite point list: scan in order, opening a
/// new center at any point not yet within eps of one.
pub fn greedy_set_cover<T: Real>(points: &[Vec<T>], eps: T, norm: NormSpec<T>) -> Vec<usize> {
    let mut centers: Vec<usize> = Vec::new();
    'outer: for (i, x) in points.iter().enumerate() {
        for &c in &centers {
            if norm.dist(x, &points[c]) <= eps {
                continue 'outer;
            }
        }
        centers.push(i);
    }
    centers
}

/// Randomized cover audit: max distance from sampled target points to the
/// nearest center. A valid cover keeps this ≤ the net radius.
pub fn audit_cover<T: Real>(net: &Net<T>, samples: usize, seed: u64) -> T {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = T::zero();
    let mut produced = 0usize;
    for x in target_candidates(&net.target, &mut rng) {
        if produced >= samples {
            break;
        }
        produced += 1;
        let i = net.assign(&x);
        worst = worst.max(net.norm.dist(&x, &net.centers[i]));
    }
    worst
}
