//! Reconstructed approximants: evaluable everywhere on the ball, immutable,
//! and structurally comparable (fooling certificates check S(f) == S(−f)).

use super::taylor::TaylorModel;
use crate::geometry::Net;
use crate::real::{real, Real};

/// Piecewise polynomial interpolant of fixed degree on a uniform grid over
/// [−1, 1], evaluated by local Lagrange interpolation on a sliding window.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePoly<T> {
    pub nodes: Vec<T>,
    pub values: Vec<T>,
    pub degree: usize,
}

impl<T: Real> PiecewisePoly<T> {
    pub(crate) fn new(nodes: Vec<T>, values: Vec<T>, degree: usize) -> Self {
        debug_assert_eq!(nodes.len(), values.len());
        debug_assert!(nodes.len() > degree);
        PiecewisePoly {
            nodes,
            values,
            degree,
        }
    }

    pub fn eval(&self, t: T) -> T {
        let n = self.nodes.len();
        if n == 1 {
            return self.values[0];
        }
        let t = t.max(-T::one()).min(T::one());
        let h = (self.nodes[n - 1] - self.nodes[0]) / real((n - 1) as f64);
        let seg = ((t - self.nodes[0]) / h)
            .floor()
            .to_f64()
            .unwrap()
            .max(0.0) as usize;
        let seg = seg.min(n - 2);
        // center the interpolation window on the segment
        let lo = seg
            .saturating_sub(self.degree / 2)
            .min(n - 1 - self.degree);
        let hi = lo + self.degree;
        let mut acc = T::zero();
        for i in lo..=hi {
            let mut weight = T::one();
            for j in lo..=hi {
                if i != j {
                    weight = weight * (t - self.nodes[j]) / (self.nodes[i] - self.nodes[j]);
                }
            }
            acc = acc + weight * self.values[i];
        }
        acc
    }
}

/// Output of a sampling algorithm.
#[derive(Debug, Clone, PartialEq)]
pub enum Approximant<T> {
    /// The φ(0) = 0 normalization: all-zero answers reconstruct to zero.
    Zero { dim: usize },
    /// Σ f(x_i)·1_{U_i} on the cover cells.
    PiecewiseConstant { net: Net<T>, values: Vec<T> },
    /// A Taylor model per cover cell.
    PiecewiseTaylor {
        net: Net<T>,
        models: Vec<TaylorModel<T>>,
    },
    /// ĝ(â·x) from direction recovery plus univariate interpolation.
    Ridge {
        direction: Vec<T>,
        profile: PiecewisePoly<T>,
    },
    /// A single Taylor polynomial centered at the origin.
    TaylorPolynomial { model: TaylorModel<T> },
}

impl<T: Real> Approximant<T> {
    pub fn eval(&self, x: &[T]) -> T {
        match self {
            Approximant::Zero { .. } => T::zero(),
            Approximant::PiecewiseConstant { net, values } => values[net.assign(x)],
            Approximant::PiecewiseTaylor { net, models } => models[net.assign(x)].eval(x),
            Approximant::Ridge { direction, profile } => {
                let t = direction
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (&a, &xi)| acc + a * xi);
                profile.eval(t)
            }
            Approximant::TaylorPolynomial { model } => model.eval(x),
        }
    }

    /// The recovered ridge direction, when the structure carries one.
    pub fn ridge_direction(&self) -> Option<&[T]> {
        match self {
            Approximant::Ridge { direction, .. } => Some(direction),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Approximant::Zero { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_is_constant() {
        let p = PiecewisePoly::new(vec![0.0], vec![0.7], 0);
        assert_eq!(p.eval(-0.9), 0.7);
        assert_eq!(p.eval(0.4), 0.7);
    }

    #[test]
    fn linear_interpolation_reproduces_affine() {
        let nodes: Vec<f64> = (0..9).map(|i| -1.0 + 0.25 * i as f64).collect();
        let values: Vec<f64> = nodes.iter().map(|t| 2.0 * t - 0.3).collect();
        let p = PiecewisePoly::new(nodes, values, 1);
        for &t in &[-0.97, -0.5, 0.0, 0.31, 0.99] {
            assert!((p.eval(t) - (2.0 * t - 0.3)).abs() < 1e-12);
        }
    }

    #[test]
    fn window_stays_in_range_at_boundaries() {
        let nodes: Vec<f64> = (0..5).map(|i| -1.0 + 0.5 * i as f64).collect();
        let values: Vec<f64> = nodes.iter().map(|t| t * t).collect();
        let p = PiecewisePoly::new(nodes, values, 2);
        // evaluable at and slightly beyond the endpoints (clamped)
        assert!(p.eval(-1.0).is_finite());
        assert!(p.eval(1.0).is_finite());
        assert!((p.eval(1.2) - p.eval(1.0)).abs() < 1e-12);
    }
}
