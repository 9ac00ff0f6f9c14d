//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ridgelab::adversary::{
    certify_lower_bound, default_certificate_eps, univariate_fooling, CertStatus, DirectionSet,
};
use ridgelab::algorithms::{
    cover_sampler, recover_direction, run_sampler, taylor_at_zero_sampler,
    taylor_cover_sampler_with_budget, AdaptiveSampler, BudgetedOracle, RecoveryParams,
    SmoothnessRule, TaylorModel,
};
use ridgelab::classes::{
    catalog_profile, comb_constant, default_profiles, membership_check, seminorm_estimate,
    trig_max_on_bump_window, Alpha, ClassSpec, ProfileKind, RidgeFunction,
};
use ridgelab::geometry::{entropy_series, p_norm, NormSpec, Target, DEFAULT_CELL_BUDGET};
use ridgelab::harness::{
    run_experiment, sup_error_estimate, tractability_classify, BoundConstants, DirectionRule,
    ExperimentConfig, FieldRef, SamplerKind, TractabilityLabel,
};
use ridgelab::index::stencil_point_count;
use std::time::Instant;

fn spec(alpha: f64, p: f64, kappa: f64, d: usize) -> ClassSpec<f64> {
    ClassSpec::new(Alpha::Finite(alpha), p, kappa, d).unwrap()
}

fn random_unit_l2(d: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let g: Vec<f64> = (0..d)
            .map(|_| <f64 as ridgelab::Real>::standard_normal(rng))
            .collect();
        let norm: f64 = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-9 {
            return g.into_iter().map(|v| v / norm).collect();
        }
    }
}

/// Criterion 1: two-step sampler reproduces the (n−d)^{−α} rate at α = 2.
#[test]
fn c01_two_step_rate() {
    let started = Instant::now();
    let config = ExperimentConfig {
        sampler: SamplerKind::TwoStep,
        alpha: Some(2.0),
        p: 2.0,
        kappa: 1.0,
        d: 8,
        schedule: vec![24, 40, 72, 136, 264, 520],
        eps_schedule: vec![],
        profiles: vec!["sine".into(), "cubic_sine".into()],
        direction: DirectionRule::Random,
        grid_budget: 1500,
        seed: 2024,
        constants: BoundConstants::default(),
    };
    let report = run_experiment(&config).unwrap();
    let slope = report.fit.as_ref().expect("six budgets fitted").slope;
    let elapsed = started.elapsed();
    let pass = (-2.3..=-1.7).contains(&slope) && elapsed.as_secs() < 60;
    println!(
        "ACCEPTANCE C1 two-step rate: {} — slope {slope:.3} in [-2.3, -1.7], {:.1?} < 1 min",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    assert!(pass, "slope {slope}, elapsed {elapsed:?}");
}

/// Criterion 2: direction recovery within eps on 100 seeded random triples,
/// exactly d+1 queries each.
#[test]
fn c02_direction_recovery() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let eps_choices = [0.2, 0.1, 0.05];
    let kinds = [ProfileKind::Sine, ProfileKind::Linear, ProfileKind::CubicSine];
    let mut successes = 0;
    for trial in 0..100 {
        let eps = eps_choices[trial % 3];
        let kind = &kinds[trial % kinds.len()];
        let d = 2 + (trial % 9);
        let kappa = rng.gen_range(0.3..=1.0);
        let scale = rng.gen_range(0.5..=1.0);
        let a: Vec<f64> = random_unit_l2(d, &mut rng)
            .into_iter()
            .map(|v| v * scale)
            .collect();
        let class = spec(2.0, 2.0, kappa, d);
        let profile = catalog_profile(kind, &class).unwrap();
        let ridge = RidgeFunction::validated(a.clone(), profile, &class).unwrap();
        let eval = |x: &[f64]| ridge.eval_unchecked(x);
        let params = RecoveryParams::new(eps, kappa, 1.0).unwrap();
        let mut oracle = BudgetedOracle::new(&eval, d + 1);
        let (hat, used) = recover_direction(&mut oracle, &params, d).unwrap();
        assert_eq!(used, d + 1, "trial {trial}");
        let norm: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
        let err: f64 = hat
            .iter()
            .zip(&a)
            .map(|(h, ai)| (h - ai / norm).powi(2))
            .sum::<f64>()
            .sqrt();
        if err <= eps {
            successes += 1;
        } else {
            println!("trial {trial}: err {err} > eps {eps}");
        }
    }
    println!(
        "ACCEPTANCE C2 direction recovery: {} — {successes}/100 within eps, d+1 queries each",
        if successes == 100 { "PASS" } else { "FAIL" }
    );
    assert_eq!(successes, 100);
}

/// Criterion 3: fooling certificate at d=10, n=8, canonical directions, α=1,
/// for both cover-type samplers.
#[test]
fn c03_fooling_certificate() {
    let class = spec(1.0, 2.0, 0.0, 10);
    let dirs = DirectionSet::canonical(10, 2.0);
    let eps = default_certificate_eps(&dirs, 8).unwrap();
    assert!((eps - 2f64.sqrt() / 2.0).abs() < 1e-12);
    let theta = catalog_profile(
        &ProfileKind::Fooling {
            a_norm: 1.0,
            eps,
        },
        &class,
    )
    .unwrap()
    .normalizer;
    let floor = theta * 0.5 * (2f64.sqrt() / 2.0).powi(2);

    let samplers: Vec<(&str, Box<dyn AdaptiveSampler<f64>>)> = vec![
        (
            "cover",
            Box::new(ridgelab::algorithms::cover_sampler_with_budget(&class, 8).unwrap().0),
        ),
        (
            "taylor-cover",
            Box::new(taylor_cover_sampler_with_budget(&class, 8).unwrap().0),
        ),
    ];
    let mut all_pass = true;
    for (name, sampler) in &samplers {
        let cert =
            certify_lower_bound(sampler.as_ref(), &dirs, &class, Some(eps), 7, 1e-3).unwrap();
        let ok = cert.status == CertStatus::Pass
            && cert.queried_values_zero
            && cert.replay_identical
            && cert.achieved >= floor - 1e-3;
        println!(
            "  {name}: achieved {:.6} vs floor {floor:.6}, zeros={} replay={}",
            cert.achieved, cert.queried_values_zero, cert.replay_identical
        );
        all_pass &= ok;
    }
    println!(
        "ACCEPTANCE C3 fooling certificate: {} — floor θ₁·2⁻¹·(√2/2)² = {floor:.4}",
        if all_pass { "PASS" } else { "FAIL" }
    );
    assert!(all_pass);
}

/// Criterion 4: the ridge Taylor remainder bound 2/s!·‖x−x⁰‖_{p'}^α holds with
/// zero violations over 10⁴ random triples with exact-derivative models.
#[test]
fn c04_taylor_remainder() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alphas = [1.5, 2.0, 3.0];
    let ps = [0.5, 1.0, 2.0];
    let dims = [2usize, 3, 5];
    let kinds = [
        ProfileKind::Linear,
        ProfileKind::Sine,
        ProfileKind::CubicSine,
        ProfileKind::Monomial { j: 4 },
    ];
    let mut violations = 0usize;
    for trial in 0..10_000 {
        let alpha = alphas[trial % alphas.len()];
        let p = ps[(trial / 3) % ps.len()];
        let d = dims[(trial / 9) % dims.len()];
        let kind = &kinds[(trial / 27) % kinds.len()];
        let class = spec(alpha, p, 0.0, d);
        let s = class.s().unwrap();
        let profile = catalog_profile(kind, &class).unwrap();
        // random direction on the ℓp sphere, scaled inward
        let mut a = random_unit_l2(d, &mut rng);
        let pa = p_norm(&a, p).unwrap();
        let shrink = rng.gen_range(0.2..=1.0);
        for v in &mut a {
            *v = *v / pa * shrink;
        }
        let ridge = RidgeFunction::validated(a, profile, &class).unwrap();

        let x = scaled_ball_point(d, 0.999, &mut rng);
        let x0 = scaled_ball_point(d, 0.999, &mut rng);
        let model = TaylorModel::from_derivatives(x0.clone(), s, |gamma| {
            ridgelab::classes::SmoothField::partial(&ridge, gamma, &x0).unwrap()
        });
        let remainder = (ridge.eval_unchecked(&x) - model.eval(&x)).abs();
        let diff: Vec<f64> = x.iter().zip(&x0).map(|(a, b)| a - b).collect();
        let bound = 2.0 / ridgelab::index::factorial(s)
            * p_norm(&diff, class.p_prime()).unwrap().powf(alpha)
            + 1e-10;
        if remainder > bound {
            violations += 1;
        }
    }
    println!(
        "ACCEPTANCE C4 taylor remainder: {} — {violations}/10000 violations",
        if violations == 0 { "PASS" } else { "FAIL" }
    );
    assert_eq!(violations, 0);
}

fn scaled_ball_point(d: usize, radius: f64, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let dir = random_unit_l2(d, rng);
    let r = radius * rng.gen_range(0.0f64..1.0).powf(1.0 / d as f64);
    dir.into_iter().map(|v| v * r).collect()
}

/// Criterion 5: entropy brackets contain a single fitted multiple of 2^{−k/d}
/// per dimension, are monotone in k, and match the exact dyadic values in
/// dimension one.
#[test]
fn c05_entropy_brackets() {
    // d = 1: exact covering oracle gives e_k = 2^{1−k}
    let interval = Target::Ball {
        p: f64::INFINITY,
        radius: 1.0,
        d: 1,
    };
    let ks1: Vec<usize> = (2..=6).collect();
    let series1 = entropy_series(&interval, &ks1, NormSpec::linf(), 5).unwrap();
    let mut pass = true;
    for est in &series1 {
        let exact = 2f64.powi(1 - est.k as i32);
        pass &= est.lower <= exact + 1e-12 && exact <= est.upper + 1e-12;
        pass &= (est.upper - exact).abs() <= 0.03 * exact;
        pass &= (est.lower - exact).abs() <= 0.12 * exact;
    }

    for d in [2usize, 3, 4] {
        let ks: Vec<usize> = (d..=3 * d).collect();
        let series = entropy_series(&Target::<f64>::unit_ball(d), &ks, NormSpec::l2(), 9).unwrap();
        // single fitted constant per d from the bracket midpoints
        let log_c: f64 = series
            .iter()
            .map(|e| {
                let mid: f64 = (e.lower * e.upper).sqrt();
                (mid / 2f64.powf(-(e.k as f64) / d as f64)).ln()
            })
            .sum::<f64>()
            / series.len() as f64;
        let c = log_c.exp();
        for est in &series {
            let reference = c * 2f64.powf(-(est.k as f64) / d as f64);
            let contained = est.lower <= reference + 1e-12 && reference <= est.upper + 1e-12;
            if !contained {
                println!(
                    "  d={d} k={}: c·2^(-k/d) = {reference:.4} outside [{:.4}, {:.4}]",
                    est.k, est.lower, est.upper
                );
            }
            pass &= contained;
        }
        for w in series.windows(2) {
            pass &= w[1].upper <= w[0].upper + 1e-12 && w[1].lower <= w[0].lower + 1e-12;
        }
    }
    println!(
        "ACCEPTANCE C5 entropy brackets: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// Criterion 6: the cover sampler meets its eps guarantee on every default
/// catalog profile at α = 1, p = 2.
#[test]
fn c06_cover_guarantee() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut pass = true;
    for d in [2usize, 3] {
        for eps in [0.5, 0.25] {
            let class = spec(1.0, 2.0, 0.0, d);
            let sampler = cover_sampler(&class, eps, DEFAULT_CELL_BUDGET).unwrap();
            for (id, profile) in default_profiles(&class).unwrap() {
                for a in [canonical_e1(d), random_unit_l2(d, &mut rng)] {
                    let ridge =
                        RidgeFunction::validated(a, profile.clone(), &class).unwrap();
                    let eval = |x: &[f64]| ridge.eval_unchecked(x);
                    let run = run_sampler(&sampler, &eval).unwrap();
                    let approx = run.approximant;
                    let approx_eval = |x: &[f64]| approx.eval(x);
                    let est = sup_error_estimate(
                        &FieldRef::with_directions(&eval, vec![FieldRef::direction_of(&ridge)]),
                        &FieldRef::plain(&approx_eval),
                        d,
                        4000,
                        77,
                    );
                    if est.value > eps {
                        println!("  d={d} eps={eps} {id}: measured {} > eps", est.value);
                        pass = false;
                    }
                }
            }
        }
    }
    println!(
        "ACCEPTANCE C6 cover-sampler guarantee: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

fn canonical_e1(d: usize) -> Vec<f64> {
    let mut e = vec![0.0; d];
    e[0] = 1.0;
    e
}

/// Criterion 7: the classifier reproduces all six clauses on a 30-point grid
/// including boundaries; the quasi-norm gap never receives a clause label.
#[test]
fn c07_tractability_table() {
    use TractabilityLabel::*;
    let inf = Alpha::<f64>::Infinite;
    let fin = Alpha::Finite;
    let grid: Vec<(Alpha<f64>, f64, f64, TractabilityLabel)> = vec![
        // curse: p = 2, finite alpha, kappa = 0
        (fin(1.0), 2.0, 0.0, Curse),
        (fin(2.0), 2.0, 0.0, Curse),
        (fin(0.5), 2.0, 0.0, Curse),
        (fin(3.5), 2.0, 0.0, Curse),
        (fin(17.0), 2.0, 0.0, Curse),
        // quasi-polynomial: infinite smoothness
        (inf, 2.0, 0.0, QuasiPolynomiallyTractable),
        (inf, 1.0, 0.0, QuasiPolynomiallyTractable),
        (inf, 0.5, 0.0, QuasiPolynomiallyTractable),
        // polynomial: derivative floor
        (fin(2.0), 2.0, 1.0, PolynomiallyTractable),
        (fin(1.5), 1.0, 0.5, PolynomiallyTractable),
        (inf, 2.0, 0.7, PolynomiallyTractable),
        (fin(4.0), 0.5, 0.01, PolynomiallyTractable),
        (fin(1.1), 2.0, 1.0, PolynomiallyTractable),
        // intractable: alpha at or below 1/(1/p − 1/2)
        (fin(2.0), 1.0, 0.0, Intractable),
        (fin(1.0), 1.0, 0.0, Intractable),
        (fin(0.5), 1.0, 0.0, Intractable),
        (fin(6.0), 1.5, 0.0, Intractable),
        (fin(0.6), 0.5, 0.0, Intractable),
        (fin(5.9), 1.5, 0.0, Intractable),
        (fin(1.5), 0.9, 0.0, Intractable),
        // weakly tractable: alpha above 1/(1/max{1,p} − 1/2)
        (fin(2.1), 1.0, 0.0, WeaklyTractable),
        (fin(3.0), 1.0, 0.0, WeaklyTractable),
        (fin(6.1), 1.5, 0.0, WeaklyTractable),
        (fin(3.1), 1.2, 0.0, WeaklyTractable),
        (fin(2.0001), 1.0, 0.0, WeaklyTractable),
        // the p < 1 gap
        (fin(1.0), 0.5, 0.0, UnknownGap),
        (fin(2.0), 0.5, 0.0, UnknownGap),
        (fin(0.7), 0.5, 0.0, UnknownGap),
        (fin(1.7), 0.9, 0.0, UnknownGap),
        (fin(1.9), 0.8, 0.0, UnknownGap),
    ];
    assert_eq!(grid.len(), 30);
    let mut pass = true;
    for (alpha, p, kappa, expected) in &grid {
        let verdict = tractability_classify(*alpha, *p, *kappa).unwrap();
        if verdict.label != *expected {
            println!(
                "  ({alpha:?}, {p}, {kappa}): got {:?}, expected {expected:?}",
                verdict.label
            );
            pass = false;
        }
        if *p < 1.0 && *kappa == 0.0 {
            // gap points must never receive a clause label when inside the gap
            if let Alpha::Finite(a) = alpha {
                let hard = 1.0 / (1.0 / p - 0.5);
                if *a > hard && *a <= 2.0 {
                    pass &= verdict.label == UnknownGap;
                }
            }
        }
    }
    println!(
        "ACCEPTANCE C7 tractability table: {} — 30 grid points",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// Criterion 8: the univariate adversary triple agrees on the sampled
/// coordinates, both perturbations are class members, and the separation
/// matches 2(1−γ)c_α e^{−1}(2n)^{−α} to 10⁻⁶.
#[test]
fn c08_univariate_adversary() {
    let alpha = 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pass = true;
    for n in [4usize, 16, 64] {
        let coords: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let triple = univariate_fooling(&coords, alpha, 1.0).unwrap();
        for &t in &coords {
            pass &= triple.plus.value(t) == triple.base.value(t);
            pass &= triple.minus.value(t) == triple.base.value(t);
        }
        // measured sup of f₊ − f₋ over a dense grid plus the exact peak
        let mut measured = triple.separation();
        for i in 0..=20_000 {
            let t = -1.0 + 2.0 * i as f64 / 20_000.0;
            measured = measured.max((triple.plus.value(t) - triple.minus.value(t)).abs());
        }
        let formula = 2.0
            * (1.0 - trig_max_on_bump_window())
            * comb_constant(alpha)
            * (-1.0f64).exp()
            * (2.0 * n as f64).powf(-alpha);
        if (measured - formula).abs() >= 1e-6 {
            println!("  n={n}: measured {measured} vs formula {formula}");
            pass = false;
        }
        // membership of the lifted perturbations in R^{α,2,κ}
        let class = spec(alpha, 2.0, 1.0, 3);
        for profile in [triple.plus.clone(), triple.minus.clone()] {
            let ridge =
                RidgeFunction::validated(canonical_e1(3), profile, &class).unwrap();
            let report = membership_check(&ridge, &class, 4000, 13, 1e-3).unwrap();
            if !report.pass {
                println!("  n={n}: membership failed");
                pass = false;
            }
        }
    }
    println!(
        "ACCEPTANCE C8 univariate adversary: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// Criterion 9 lives in tests/cli.rs (byte-identical CLI reruns); this test
/// pins the library-level determinism contract it relies on.
#[test]
fn c09_experiment_determinism() {
    let config = ExperimentConfig {
        sampler: SamplerKind::Cover,
        alpha: Some(1.0),
        p: 2.0,
        kappa: 0.0,
        d: 2,
        schedule: vec![12, 40],
        eps_schedule: vec![],
        profiles: vec![],
        direction: DirectionRule::Random,
        grid_budget: 400,
        seed: 99,
        constants: BoundConstants::default(),
    };
    let a = run_experiment(&config).unwrap();
    let b = run_experiment(&config).unwrap();
    let pass = a.csv_bytes().unwrap() == b.csv_bytes().unwrap()
        && a.json_bytes().unwrap() == b.json_bytes().unwrap();
    println!(
        "ACCEPTANCE C9 determinism (library half; CLI half in tests/cli.rs): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// Criterion 10: the Taylor-at-zero sampler meets eps with the predicted
/// stencil query count at the order chosen by the 2/s! rule.
#[test]
fn c10_taylor_at_zero() {
    let mut pass = true;
    for d in [2usize, 4, 8] {
        for eps in [0.1, 0.01] {
            let class = ClassSpec::new(Alpha::<f64>::Infinite, 2.0, 0.0, d).unwrap();
            let sampler = taylor_at_zero_sampler(&class, eps, SmoothnessRule::Ridge).unwrap();
            let s = sampler.order();
            // smallest s with 2/s! ≤ eps
            let expected_s = (1..)
                .find(|&s| 2.0 / ridgelab::index::factorial(s) <= eps)
                .unwrap();
            pass &= s == expected_s;

            let profile = catalog_profile(&ProfileKind::Sine, &class).unwrap();
            let ridge = RidgeFunction::validated(canonical_e1(d), profile, &class).unwrap();
            let eval = |x: &[f64]| ridge.eval_unchecked(x);
            let run = run_sampler(&sampler, &eval).unwrap();
            let expected_queries = stencil_point_count(d, s);
            if run.log.len() != expected_queries {
                println!(
                    "  d={d} eps={eps}: {} queries vs stencil count {expected_queries}",
                    run.log.len()
                );
                pass = false;
            }
            let approx = run.approximant;
            let approx_eval = |x: &[f64]| approx.eval(x);
            let est = sup_error_estimate(
                &FieldRef::with_directions(&eval, vec![FieldRef::direction_of(&ridge)]),
                &FieldRef::plain(&approx_eval),
                d,
                2000,
                3,
            );
            if est.value > eps + 1e-4 {
                println!("  d={d} eps={eps}: measured {} > eps + 1e-4", est.value);
                pass = false;
            }
        }
    }
    println!(
        "ACCEPTANCE C10 C^∞ sampler: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// The seminorm oracle behind the normalizer computations stays consistent
/// with catalog certification (supporting check for C3/C8 constants).
#[test]
fn normalizer_consistency() {
    let class = spec(1.0, 2.0, 0.0, 2);
    let g = catalog_profile(
        &ProfileKind::Fooling {
            a_norm: 1.0,
            eps: 2f64.sqrt() / 2.0,
        },
        &class,
    )
    .unwrap();
    let est = seminorm_estimate(&g, 100_000).unwrap();
    assert!(est <= 1.0 + 1e-9, "normalized profile estimate {est}");
    assert!(est >= 1.0 - 1e-4, "normalization is tight: {est}");
}
