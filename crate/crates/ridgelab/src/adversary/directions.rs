//! Candidate direction sets for lower-bound constructions.

use super::AdvError;
use crate::geometry::{p_norm_unchecked, sparse_sphere_packing};
use crate::real::{real, Real};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectionKind {
    /// ±e_i
    Canonical,
    /// m-sparse sign vectors on the ℓp sphere
    SparseSphere { m: usize },
    /// seeded pool on the full ℓp sphere
    FullSphere,
    Explicit,
}

/// A finite, deterministically ordered pool of candidate ridge directions
/// inside B̄_p^d \ {0}.
#[derive(Debug, Clone)]
pub struct DirectionSet<T> {
    pub kind: DirectionKind,
    pub members: Vec<Vec<T>>,
    pub p: T,
    /// Known pairwise ℓ₂ separation of the normalized members, when one is
    /// guaranteed by construction.
    pub separation: Option<T>,
}

impl<T: Real> DirectionSet<T> {
    /// The 2d signed canonical vectors, pairwise ℓ₂ distance ≥ √2.
    pub fn canonical(d: usize, p: T) -> Self {
        let mut members = Vec::with_capacity(2 * d);
        for i in 0..d {
            for sign in [T::one(), -T::one()] {
                let mut e = vec![T::zero(); d];
                e[i] = sign;
                members.push(e);
            }
        }
        DirectionSet {
            kind: DirectionKind::Canonical,
            members,
            p,
            separation: Some(real(2f64.sqrt())),
        }
    }

    /// m-sparse directions on the ℓp sphere whose normalizations are pairwise
    /// more than 1/√2 apart.
    pub fn sparse(d: usize, m: usize, p: T, seed: u64, budget: usize) -> Result<Self, AdvError> {
        let packing = sparse_sphere_packing(d, m, p, seed, budget)?;
        // packing members live on the Euclidean sphere; rescale onto the ℓp sphere
        let scale = real::<T>(m as f64).powf(T::one() / real::<T>(2.0) - T::one() / p);
        let members = packing
            .net
            .centers
            .iter()
            .map(|c| c.iter().map(|&v| v * scale).collect())
            .collect();
        Ok(DirectionSet {
            kind: DirectionKind::SparseSphere { m },
            members,
            p,
            separation: Some(real(1.0 / 2f64.sqrt())),
        })
    }

    /// A seeded random pool on the full ℓp sphere.
    pub fn full_sphere(d: usize, p: T, pool: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let target = crate::geometry::Target::Sphere { p, d };
        let members: Vec<Vec<T>> = crate::geometry::target_candidates(&target, &mut rng)
            .take(pool)
            .collect();
        DirectionSet {
            kind: DirectionKind::FullSphere,
            members,
            p,
            separation: None,
        }
    }

    pub fn explicit(members: Vec<Vec<T>>, p: T) -> Result<Self, AdvError> {
        for a in &members {
            let norm = p_norm_unchecked(a, p);
            if norm == T::zero() {
                return Err(AdvError::ParamOutOfRange("zero direction".into()));
            }
            if norm > T::one() + real(1e-9) {
                return Err(AdvError::ParamOutOfRange(format!(
                    "direction has ℓp norm {norm} > 1"
                )));
            }
        }
        Ok(DirectionSet {
            kind: DirectionKind::Explicit,
            members,
            p,
            separation: None,
        })
    }

    /// ℓ₂-normalized members (the image under x ↦ x/‖x‖₂).
    pub fn normalized(&self) -> Vec<Vec<T>> {
        self.members
            .iter()
            .map(|a| {
                let norm = p_norm_unchecked(a, real(2.0));
                a.iter().map(|&v| v / norm).collect()
            })
            .collect()
    }
}
