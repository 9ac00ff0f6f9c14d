//! Tractability classification of ridge function sampling from (α, p, κ).

use super::HarnessError;
use crate::classes::Alpha;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TractabilityLabel {
    Curse,
    Intractable,
    WeaklyTractable,
    QuasiPolynomiallyTractable,
    PolynomiallyTractable,
    UnknownGap,
}

#[derive(Debug, Clone, Serialize)]
pub struct TractabilityVerdict {
    /// None encodes α = ∞.
    pub alpha: Option<f64>,
    pub p: f64,
    pub kappa: f64,
    pub label: TractabilityLabel,
    pub clause: String,
}

/// Total, deterministic classifier; depends on nothing but (α, p, κ).
///
/// Order of precedence: the derivative floor wins, then infinite smoothness,
/// then the p = 2 curse, then the p < 2 threshold comparisons, with the
/// quasi-norm region between the two thresholds left open.
pub fn tractability_classify(
    alpha: Alpha<f64>,
    p: f64,
    kappa: f64,
) -> Result<TractabilityVerdict, HarnessError> {
    if !(p > 0.0 && p <= 2.0) {
        return Err(HarnessError::ParamOutOfRange("p must lie in (0, 2]".into()));
    }
    if !(0.0..=1.0).contains(&kappa) {
        return Err(HarnessError::ParamOutOfRange(
            "kappa must lie in [0, 1]".into(),
        ));
    }
    if let Alpha::Finite(a) = alpha {
        if !(a > 0.0) {
            return Err(HarnessError::ParamOutOfRange("alpha must be positive".into()));
        }
        if kappa > 0.0 && a <= 1.0 {
            return Err(HarnessError::ParamOutOfRange(
                "kappa > 0 requires alpha > 1".into(),
            ));
        }
    }

    let alpha_value = alpha.value();
    let (label, clause) = if kappa > 0.0 {
        (
            TractabilityLabel::PolynomiallyTractable,
            "first derivatives bounded away from zero at the origin: polynomially tractable for every alpha and p".into(),
        )
    } else if alpha_value.is_none() {
        (
            TractabilityLabel::QuasiPolynomiallyTractable,
            "infinitely smooth profiles: quasi-polynomially tractable".into(),
        )
    } else if p == 2.0 {
        (
            TractabilityLabel::Curse,
            "p = 2 with finite smoothness: curse of dimensionality".into(),
        )
    } else {
        let a = alpha_value.unwrap();
        let hard_threshold = 1.0 / (1.0 / p - 0.5);
        let easy_threshold = 1.0 / (1.0 / p.max(1.0) - 0.5);
        if a <= hard_threshold {
            (
                TractabilityLabel::Intractable,
                format!("p < 2 and alpha ≤ 1/(1/p − 1/2) = {hard_threshold}: intractable"),
            )
        } else if a > easy_threshold {
            (
                TractabilityLabel::WeaklyTractable,
                format!("p < 2 and alpha > 1/(1/max{{1,p}} − 1/2) = {easy_threshold}: weakly tractable"),
            )
        } else {
            (
                TractabilityLabel::UnknownGap,
                format!(
                    "quasi-norm gap: alpha in ({hard_threshold}, {easy_threshold}] is not classified"
                ),
            )
        }
    };

    Ok(TractabilityVerdict {
        alpha: alpha_value,
        p,
        kappa,
        label,
        clause,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(alpha: Alpha<f64>, p: f64, kappa: f64) -> TractabilityLabel {
        tractability_classify(alpha, p, kappa).unwrap().label
    }

    #[test]
    fn spot_checks_against_the_clause_table() {
        use TractabilityLabel::*;
        assert_eq!(label(Alpha::Finite(2.0), 2.0, 0.0), Curse);
        assert_eq!(label(Alpha::Infinite, 2.0, 0.0), QuasiPolynomiallyTractable);
        assert_eq!(label(Alpha::Finite(1.5), 1.0, 0.0), Intractable);
        assert_eq!(label(Alpha::Finite(2.0), 0.5, 0.0), UnknownGap);
        assert_eq!(label(Alpha::Finite(3.0), 1.0, 0.0), WeaklyTractable);
        assert_eq!(label(Alpha::Finite(2.0), 2.0, 1.0), PolynomiallyTractable);
        assert_eq!(label(Alpha::Infinite, 0.5, 0.5), PolynomiallyTractable);
    }

    #[test]
    fn boundary_alpha_is_intractable() {
        // α exactly at the threshold 1/(1/p − 1/2)
        assert_eq!(
            label(Alpha::Finite(2.0), 1.0, 0.0),
            TractabilityLabel::Intractable
        );
    }

    #[test]
    fn verdict_depends_only_on_inputs() {
        let a = tractability_classify(Alpha::Finite(1.5), 1.0, 0.0).unwrap();
        let b = tractability_classify(Alpha::Finite(1.5), 1.0, 0.0).unwrap();
        assert_eq!(a.label, b.label);
        assert_eq!(a.clause, b.clause);
    }

    #[test]
    fn rejects_invalid_ranges() {
        assert!(tractability_classify(Alpha::Finite(0.0), 1.0, 0.0).is_err());
        assert!(tractability_classify(Alpha::Finite(1.0), 2.5, 0.0).is_err());
        assert!(tractability_classify(Alpha::Finite(1.0), 1.0, 0.5).is_err());
        assert!(tractability_classify(Alpha::Finite(1.0), 1.0, 2.0).is_err());
    }
}
