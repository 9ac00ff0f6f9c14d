//! Empirical rate fitting: least squares on (log n, log e).

use super::HarnessError;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RateFit {
    pub slope: f64,
    pub intercept: f64,
    /// RMS residual of the fit in log space.
    pub residual: f64,
    pub pairs_used: usize,
}

/// Ordinary least squares on the logs of the positive pairs.
pub fn rate_fit(pairs: &[(f64, f64)]) -> Result<RateFit, HarnessError> {
    let logs: Vec<(f64, f64)> = pairs
        .iter()
        .filter(|(n, e)| *n > 0.0 && *e > 0.0 && n.is_finite() && e.is_finite())
        .map(|(n, e)| (n.ln(), e.ln()))
        .collect();
    if logs.len() < 3 {
        return Err(HarnessError::TooFewPairs(logs.len()));
    }
    let m = logs.len() as f64;
    let sx: f64 = logs.iter().map(|(x, _)| x).sum();
    let sy: f64 = logs.iter().map(|(_, y)| y).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = logs.iter().map(|(x, y)| x * y).sum();
    let denom = m * sxx - sx * sx;
    if denom == 0.0 {
        return Err(HarnessError::ParamOutOfRange(
            "degenerate abscissae in rate fit".into(),
        ));
    }
    let slope = (m * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / m;
    let residual = (logs
        .iter()
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum::<f64>()
        / m)
        .sqrt();
    Ok(RateFit {
        slope,
        intercept,
        residual,
        pairs_used: logs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_quadratic_decay() {
        let pairs: Vec<(f64, f64)> = (1..=6)
            .map(|i| {
                let n = (8 << i) as f64;
                (n, n.powf(-2.0))
            })
            .collect();
        let fit = rate_fit(&pairs).unwrap();
        assert!((fit.slope + 2.0).abs() < 1e-10);
        assert!(fit.residual < 1e-10);
    }

    #[test]
    fn constant_errors_fit_zero_slope() {
        let pairs = vec![(8.0, 0.5), (16.0, 0.5), (32.0, 0.5), (64.0, 0.5)];
        let fit = rate_fit(&pairs).unwrap();
        assert!(fit.slope.abs() < 1e-12);
    }

    #[test]
    fn noisy_quadratic_within_tenth() {
        let pairs: Vec<(f64, f64)> = (3..=9)
            .map(|i| {
                let n = 2f64.powi(i);
                (n, n.powf(-2.0) * (1.0 + 0.05 * n.sin()))
            })
            .collect();
        let fit = rate_fit(&pairs).unwrap();
        assert!((fit.slope + 2.0).abs() < 0.1, "{}", fit.slope);
    }

    #[test]
    fn nonpositive_pairs_are_filtered() {
        let pairs = vec![(8.0, 0.0), (16.0, -1.0), (32.0, 0.1), (64.0, 0.05)];
        assert!(matches!(
            rate_fit(&pairs),
            Err(HarnessError::TooFewPairs(2))
        ));
    }
}
