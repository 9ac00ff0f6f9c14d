//! Experiment runner: one cell per (budget, profile), catalog worst-case
//! aggregation, rate fit, reference curves, and CSV/JSON serialization.
//! Outputs are bit-identical for identical (config, seed).

use super::complexity::{complexity_lower, complexity_upper, BoundConstants};
use super::error_estimate::{sup_error_estimate, FieldRef};
use super::rates::{rate_fit, RateFit};
use super::tractability::{tractability_classify, TractabilityVerdict};
use super::HarnessError;
use crate::algorithms::{
    cover_sampler_with_budget, run_sampler, taylor_at_zero_sampler,
    taylor_cover_sampler_with_budget, two_step_sampler, AdaptiveSampler, SmoothnessRule,
};
use crate::classes::{
    catalog_profile, default_profiles, parse_profile_id, profile_id, Alpha, ClassSpec,
    RidgeFunction,
};
use crate::geometry::{ball_entropy_envelope, p_norm_unchecked};
use crate::index::{binomial, coefficient_count};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplerKind {
    Cover,
    Taylor,
    TwoStep,
    TaylorZero,
}

impl SamplerKind {
    pub fn parse(s: &str) -> Result<Self, HarnessError> {
        match s {
            "cover" => Ok(SamplerKind::Cover),
            "taylor" => Ok(SamplerKind::Taylor),
            "two-step" => Ok(SamplerKind::TwoStep),
            "taylor-zero" => Ok(SamplerKind::TaylorZero),
            other => Err(HarnessError::ConfigError {
                path: "sampler".into(),
                message: format!("unknown sampler `{other}`"),
            }),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SamplerKind::Cover => "cover",
            SamplerKind::Taylor => "taylor",
            SamplerKind::TwoStep => "two-step",
            SamplerKind::TaylorZero => "taylor-zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DirectionRule {
    /// the first canonical basis vector
    E1,
    /// a seeded random direction on the ℓp sphere, fixed per profile
    Random,
}

impl Default for DirectionRule {
    fn default() -> Self {
        DirectionRule::E1
    }
}

fn default_grid_budget() -> usize {
    2000
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub sampler: SamplerKind,
    /// None encodes α = ∞.
    pub alpha: Option<f64>,
    pub p: f64,
    #[serde(default)]
    pub kappa: f64,
    pub d: usize,
    /// query budgets for cover / taylor / two-step
    #[serde(default)]
    pub schedule: Vec<usize>,
    /// accuracies for taylor-zero
    #[serde(default)]
    pub eps_schedule: Vec<f64>,
    /// catalog ids; empty = the class's default profile set
    #[serde(default)]
    pub profiles: Vec<String>,
    #[serde(default)]
    pub direction: DirectionRule,
    #[serde(default = "default_grid_budget")]
    pub grid_budget: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub constants: BoundConstants,
}

impl ExperimentConfig {
    pub fn class_spec(&self) -> Result<ClassSpec<f64>, HarnessError> {
        let alpha = match self.alpha {
            Some(a) => Alpha::Finite(a),
            None => Alpha::Infinite,
        };
        ClassSpec::new(alpha, self.p, self.kappa, self.d).map_err(|e| HarnessError::ConfigError {
            path: "alpha/p/kappa/d".into(),
            message: e.to_string(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellResult {
    pub n: usize,
    pub d: usize,
    pub alpha: String,
    pub p: f64,
    pub kappa: f64,
    pub profile_id: String,
    pub queries: usize,
    pub error: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReferencePoint {
    pub n: usize,
    /// e_{k−Δ}(B̄₂, ℓ_{p'})^α envelope behind the cover guarantee
    pub cover_envelope: Option<f64>,
    pub log2n_upper: Option<f64>,
    pub log2n_lower: Option<f64>,
    pub lower_binding: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    /// finite profile sets stand in for the class supremum
    pub aggregation: String,
    pub sampler: String,
    pub d: usize,
    pub alpha: String,
    pub p: f64,
    pub kappa: f64,
    pub seed: u64,
    pub constants: BoundConstants,
    pub cells: Vec<CellResult>,
    pub worst_per_n: Vec<(usize, f64)>,
    /// abscissa of the rate fit: "n", or "n-d" for the two-step sampler
    pub fit_x: String,
    pub fit: Option<RateFit>,
    pub reference: Vec<ReferencePoint>,
    pub verdict: TractabilityVerdict,
}

impl ExperimentReport {
    /// CSV with schema `n,d,alpha,p,kappa,profile_id,queries,error,seed`.
    pub fn csv_bytes(&self) -> Result<Vec<u8>, HarnessError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n",
            "d",
            "alpha",
            "p",
            "kappa",
            "profile_id",
            "queries",
            "error",
            "seed",
        ])?;
        for c in &self.cells {
            w.write_record([
                c.n.to_string(),
                c.d.to_string(),
                c.alpha.clone(),
                c.p.to_string(),
                c.kappa.to_string(),
                c.profile_id.clone(),
                c.queries.to_string(),
                c.error.to_string(),
                c.seed.to_string(),
            ])?;
        }
        Ok(w.into_inner().expect("csv into_inner"))
    }

    pub fn json_bytes(&self) -> Result<Vec<u8>, HarnessError> {
        let mut bytes = serde_json::to_vec_pretty(self)?;
        bytes.push(b'\n');
        Ok(bytes)
    }
}

fn alpha_label(alpha: Option<f64>) -> String {
    match alpha {
        Some(a) => format!("{a}"),
        None => "inf".into(),
    }
}

/// Run the full schedule × profile grid.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let spec = config.class_spec()?;
    let profiles: Vec<(String, crate::classes::Profile<f64>)> = if config.profiles.is_empty() {
        default_profiles(&spec)?
    } else {
        config
            .profiles
            .iter()
            .map(|id| {
                let kind = parse_profile_id(id, &spec)?;
                Ok((profile_id(&kind), catalog_profile(&kind, &spec)?))
            })
            .collect::<Result<_, crate::classes::ClassError>>()?
    };
    if profiles.is_empty() {
        return Err(HarnessError::ConfigError {
            path: "profiles".into(),
            message: "no profiles to run".into(),
        });
    }

    // one budget entry per report row group
    let budgets: Vec<BudgetEntry> = match config.sampler {
        SamplerKind::TaylorZero => {
            if config.eps_schedule.is_empty() {
                return Err(HarnessError::ConfigError {
                    path: "eps_schedule".into(),
                    message: "taylor-zero needs an eps schedule".into(),
                });
            }
            config
                .eps_schedule
                .iter()
                .map(|&e| BudgetEntry::Accuracy(e))
                .collect()
        }
        _ => {
            if config.schedule.is_empty() {
                return Err(HarnessError::ConfigError {
                    path: "schedule".into(),
                    message: "this sampler needs a budget schedule".into(),
                });
            }
            config.schedule.iter().map(|&n| BudgetEntry::Budget(n)).collect()
        }
    };

    let directions: Vec<Vec<f64>> = profiles
        .iter()
        .enumerate()
        .map(|(idx, _)| direction_for(config, &spec, idx))
        .collect();

    let mut cells: Vec<CellResult> = Vec::new();
    for entry in &budgets {
        let sampler = build_sampler(config, &spec, entry)?;
        for ((id, profile), dir) in profiles.iter().zip(&directions) {
            let ridge = RidgeFunction::validated(dir.clone(), profile.clone(), &spec)
                .map_err(HarnessError::Class)?;
            let eval = |x: &[f64]| ridge.eval_unchecked(x);
            let run = run_sampler(sampler.as_ref(), &eval)?;
            let approx = run.approximant;
            let approx_eval = |x: &[f64]| approx.eval(x);
            let mut f_dirs = vec![FieldRef::direction_of(&ridge)];
            f_dirs.extend(FieldRef::directions_of(&approx));
            let estimate = sup_error_estimate(
                &FieldRef::with_directions(&eval, f_dirs),
                &FieldRef::plain(&approx_eval),
                spec.d,
                config.grid_budget,
                config.seed.wrapping_add(cells.len() as u64),
            );
            cells.push(CellResult {
                n: sampler.budget(),
                d: spec.d,
                alpha: alpha_label(config.alpha),
                p: config.p,
                kappa: config.kappa,
                profile_id: id.clone(),
                queries: run.log.len(),
                error: estimate.value,
                seed: config.seed,
            });
        }
    }
    cells.sort_by(|a, b| a.n.cmp(&b.n).then_with(|| a.profile_id.cmp(&b.profile_id)));

    let mut worst_per_n: Vec<(usize, f64)> = Vec::new();
    for c in &cells {
        match worst_per_n.last_mut() {
            Some((n, worst)) if *n == c.n => *worst = worst.max(c.error),
            _ => worst_per_n.push((c.n, c.error)),
        }
    }

    let fit_x = match config.sampler {
        SamplerKind::TwoStep => "n-d",
        _ => "n",
    };
    let fit_pairs: Vec<(f64, f64)> = worst_per_n
        .iter()
        .filter(|(n, _)| fit_x == "n" || *n > spec.d)
        .map(|(n, e)| {
            let x = if fit_x == "n-d" {
                (*n - spec.d) as f64
            } else {
                *n as f64
            };
            (x, *e)
        })
        .collect();
    let fit = rate_fit(&fit_pairs).ok();

    let reference = worst_per_n
        .iter()
        .map(|&(n, err)| reference_point(&spec, config, n, err))
        .collect();

    let verdict = tractability_classify(
        match config.alpha {
            Some(a) => Alpha::Finite(a),
            None => Alpha::Infinite,
        },
        config.p,
        config.kappa,
    )?;

    Ok(ExperimentReport {
        aggregation: "catalog worst-case".into(),
        sampler: config.sampler.as_str().into(),
        d: spec.d,
        alpha: alpha_label(config.alpha),
        p: config.p,
        kappa: config.kappa,
        seed: config.seed,
        constants: config.constants,
        cells,
        worst_per_n,
        fit_x: fit_x.into(),
        fit,
        reference,
        verdict,
    })
}

enum BudgetEntry {
    Budget(usize),
    Accuracy(f64),
}

fn build_sampler(
    config: &ExperimentConfig,
    spec: &ClassSpec<f64>,
    entry: &BudgetEntry,
) -> Result<Box<dyn AdaptiveSampler<f64>>, HarnessError> {
    Ok(match (config.sampler, entry) {
        (SamplerKind::Cover, BudgetEntry::Budget(n)) => {
            Box::new(cover_sampler_with_budget(spec, *n)?.0)
        }
        (SamplerKind::Taylor, BudgetEntry::Budget(n)) => {
            Box::new(taylor_cover_sampler_with_budget(spec, *n)?.0)
        }
        (SamplerKind::TwoStep, BudgetEntry::Budget(n)) => Box::new(two_step_sampler(spec, *n)?),
        (SamplerKind::TaylorZero, BudgetEntry::Accuracy(eps)) => {
            Box::new(taylor_at_zero_sampler(spec, *eps, SmoothnessRule::Ridge)?)
        }
        _ => {
            return Err(HarnessError::ConfigError {
                path: "schedule".into(),
                message: "schedule kind does not match the sampler".into(),
            })
        }
    })
}

fn direction_for(config: &ExperimentConfig, spec: &ClassSpec<f64>, idx: usize) -> Vec<f64> {
    match config.direction {
        DirectionRule::E1 => {
            let mut e = vec![0.0; spec.d];
            e[0] = 1.0;
            e
        }
        DirectionRule::Random => {
            let mut rng =
                ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x100001b3).wrapping_add(idx as u64));
            loop {
                let g: Vec<f64> = (0..spec.d)
                    .map(|_| <f64 as crate::Real>::standard_normal(&mut rng))
                    .collect();
                let norm = p_norm_unchecked(&g, spec.p);
                if norm > 0.0 && norm.is_finite() {
                    return g.into_iter().map(|v| v / norm).collect();
                }
            }
        }
    }
}

fn reference_point(
    spec: &ClassSpec<f64>,
    config: &ExperimentConfig,
    n: usize,
    err: f64,
) -> ReferencePoint {
    let cover_envelope = spec.alpha.value().and_then(|alpha| {
        let s = spec.s().unwrap();
        let k = (n as f64).log2().floor() as i64 + 2;
        let delta = 1 + (binomial(spec.d + s, s).log2().ceil() as i64).max(0);
        let k_eff = k - delta;
        if k_eff < 1 {
            return None;
        }
        let _ = coefficient_count(spec.d, s);
        ball_entropy_envelope(2.0, spec.p_prime(), k_eff as usize, spec.d)
            .ok()
            .map(|e| e.powf(alpha))
    });
    let (log2n_upper, log2n_lower, lower_binding) = match (config.alpha, config.p < 2.0) {
        (Some(alpha), true) if err > 0.0 && err <= 1.0 && spec.d >= 2 => {
            let up = complexity_upper(err, spec.d, alpha, config.p, &config.constants).ok();
            let lo = complexity_lower(err, spec.d, alpha, config.p, &config.constants).ok();
            (
                up,
                lo.map(|l| l.value),
                lo.map(|l| l.binding),
            )
        }
        _ => (None, None, None),
    };
    ReferencePoint {
        n,
        cover_envelope,
        log2n_upper,
        log2n_lower,
        lower_binding,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> ExperimentConfig {
        ExperimentConfig {
            sampler: SamplerKind::Cover,
            alpha: Some(1.0),
            p: 2.0,
            kappa: 0.0,
            d: 2,
            schedule: vec![30],
            eps_schedule: vec![],
            profiles: vec!["zero".into()],
            direction: DirectionRule::E1,
            grid_budget: 300,
            seed: 7,
            constants: BoundConstants::default(),
        }
    }

    #[test]
    fn zero_profile_has_zero_error() {
        let report = run_experiment(&base_config()).unwrap();
        assert_eq!(report.cells.len(), 1);
        assert_eq!(report.cells[0].error, 0.0);
    }

    #[test]
    fn identical_config_gives_identical_bytes() {
        let mut config = base_config();
        config.profiles = vec![];
        config.schedule = vec![12, 30];
        config.direction = DirectionRule::Random;
        let a = run_experiment(&config).unwrap();
        let b = run_experiment(&config).unwrap();
        assert_eq!(a.csv_bytes().unwrap(), b.csv_bytes().unwrap());
        assert_eq!(a.json_bytes().unwrap(), b.json_bytes().unwrap());
    }

    #[test]
    fn rows_sorted_by_budget_then_profile() {
        let mut config = base_config();
        config.profiles = vec!["sine".into(), "linear".into(), "bump".into()];
        config.schedule = vec![30, 12];
        let report = run_experiment(&config).unwrap();
        let keys: Vec<(usize, String)> = report
            .cells
            .iter()
            .map(|c| (c.n, c.profile_id.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn two_step_smoke_fits_a_negative_slope() {
        let config = ExperimentConfig {
            sampler: SamplerKind::TwoStep,
            alpha: Some(2.0),
            p: 2.0,
            kappa: 1.0,
            d: 4,
            schedule: vec![20, 36, 68, 132],
            eps_schedule: vec![],
            profiles: vec!["sine".into()],
            direction: DirectionRule::Random,
            grid_budget: 400,
            seed: 3,
            constants: BoundConstants::default(),
        };
        let report = run_experiment(&config).unwrap();
        let fit = report.fit.expect("enough pairs");
        assert!(fit.slope < -1.5, "slope {}", fit.slope);
        assert_eq!(report.fit_x, "n-d");
    }

    #[test]
    fn config_round_trips_through_json() {
        let config = base_config();
        let text = serde_json::to_string(&config).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back.sampler, config.sampler);
        assert_eq!(back.schedule, config.schedule);
    }
}
