//! Closed-form bounds on log₂ n(ε, d) for p < 2, and the quasi-polynomial /
//! curse reference envelopes. The multiplicative constants are existential;
//! they default to 1 and are configurable, and reports always echo them.

use super::HarnessError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BoundConstants {
    /// additive constant C₀ (c₀)
    pub c0: f64,
    /// multiplicative constant C₁ (c₁)
    pub c1: f64,
    /// the threshold shape constant C_{p,α} (c_{p,α})
    pub c_shape: f64,
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants {
            c0: 1.0,
            c1: 1.0,
            c_shape: 1.0,
        }
    }
}

/// Three-branch upper bound on log₂ n(ε, d), selected by comparing ε against
/// ε₁ = C[log₂(1+d/log₂d)/log₂d]^η and ε₂ = C·d^{−η} with
/// η = α(1/max{1,p} − 1/2).
pub fn complexity_upper(
    eps: f64,
    d: usize,
    alpha: f64,
    p: f64,
    constants: &BoundConstants,
) -> Result<f64, HarnessError> {
    validate(eps, d, alpha, p)?;
    if p >= 2.0 {
        return Err(HarnessError::ParamOutOfRange(
            "no finite upper formula at p = 2".into(),
        ));
    }
    let eta = alpha * (1.0 / p.max(1.0) - 0.5);
    let log_d = (d as f64).log2();
    let eps1 = constants.c_shape * ((1.0 + d as f64 / log_d).log2() / log_d).powf(eta);
    let eps2 = constants.c_shape * (d as f64).powf(-eta);
    let branch = if eps >= eps1 {
        log_d
    } else if eps >= eps2 {
        log_d * (1.0 / eps).powf(1.0 / eta)
    } else {
        (1.0 / eps).log2() * (1.0 / eps).powf(1.0 / eta)
    };
    Ok(constants.c0 + constants.c1 * branch)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct LowerBoundValue {
    pub value: f64,
    /// true when ε lies in the validity window [ε₃, ε₁).
    pub binding: bool,
}

/// Lower bound c₀ + c₁·(1/ε)^{1/(α(1/p−1/2))} on log₂ n(ε, d), flagged
/// non-binding outside its validity window.
pub fn complexity_lower(
    eps: f64,
    d: usize,
    alpha: f64,
    p: f64,
    constants: &BoundConstants,
) -> Result<LowerBoundValue, HarnessError> {
    validate(eps, d, alpha, p)?;
    if p >= 2.0 {
        return Err(HarnessError::ParamOutOfRange(
            "the displayed lower bound needs p < 2".into(),
        ));
    }
    let gamma = alpha * (1.0 / p - 0.5);
    let log_d = (d as f64).log2();
    let eps1 = constants.c_shape * ((1.0 + d as f64 / log_d).log2() / log_d).powf(gamma);
    let eps2 = constants.c_shape * (d as f64).powf(-gamma);
    let eps3 = 4f64.powf(-alpha) * eps2;
    let value = constants.c0 + constants.c1 * (1.0 / eps).powf(1.0 / gamma);
    Ok(LowerBoundValue {
        value,
        binding: eps >= eps3 && eps < eps1,
    })
}

/// Quasi-polynomial envelope C·exp(t(1+ln(1/ε))(1+ln d)).
pub fn quasi_poly_bound(eps: f64, d: usize, c: f64, t: f64) -> f64 {
    c * (t * (1.0 + (1.0 / eps).ln()) * (1.0 + (d as f64).ln())).exp()
}

/// Curse envelope c·(1+γ)^d.
pub fn curse_bound(d: usize, c: f64, gamma: f64) -> f64 {
    c * (1.0 + gamma).powi(d as i32)
}

fn validate(eps: f64, d: usize, alpha: f64, p: f64) -> Result<(), HarnessError> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(HarnessError::ParamOutOfRange("eps must lie in (0, 1]".into()));
    }
    if d < 2 {
        return Err(HarnessError::ParamOutOfRange(
            "the bound formulas need d ≥ 2".into(),
        ));
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(HarnessError::ParamOutOfRange(
            "alpha must be positive and finite".into(),
        ));
    }
    if !(p > 0.0 && p <= 2.0) {
        return Err(HarnessError::ParamOutOfRange("p must lie in (0, 2]".into()));
    }
    Ok(())
}
