//! Cross-cutting protocol laws: every sampler respects its budget, keeps
//! queries inside the ball, and maps all-zero answers to the zero approximant.

use proptest::prelude::*;
use ridgelab::algorithms::{
    cover_sampler_with_budget, run_sampler, taylor_at_zero_sampler,
    taylor_cover_sampler_with_budget, two_step_sampler, AdaptiveSampler, SmoothnessRule,
};
use ridgelab::classes::{catalog_profile, Alpha, ClassSpec, ProfileKind, RidgeFunction};

fn all_samplers(d: usize, n: usize) -> Vec<Box<dyn AdaptiveSampler<f64>>> {
    let lip = ClassSpec::new(Alpha::Finite(1.0), 2.0, 0.0, d).unwrap();
    let smooth = ClassSpec::new(Alpha::Finite(2.0), 2.0, 0.5, d).unwrap();
    let infinite = ClassSpec::new(Alpha::<f64>::Infinite, 2.0, 0.0, d).unwrap();
    vec![
        Box::new(cover_sampler_with_budget(&lip, n).unwrap().0),
        Box::new(taylor_cover_sampler_with_budget(&lip, n).unwrap().0),
        Box::new(two_step_sampler(&smooth, n.max(d + 3)).unwrap()),
        Box::new(taylor_at_zero_sampler(&infinite, 0.5, SmoothnessRule::Ridge).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn budget_domain_and_zero_map_laws(d in 2usize..5, n in 8usize..60, shift in -0.3f64..0.3) {
        let class = ClassSpec::new(Alpha::Finite(2.0), 2.0, 0.0, d).unwrap();
        let profile = catalog_profile(&ProfileKind::Sine, &class).unwrap();
        let mut a = vec![0.0; d];
        a[0] = (0.7f64 + shift).min(1.0);
        a[d - 1] = (1.0 - a[0] * a[0]).sqrt() * 0.5;
        let ridge = RidgeFunction::new(a, profile);

        for sampler in all_samplers(d, n) {
            // budget law and domain law on a real profile
            let eval = |x: &[f64]| ridge.eval_unchecked(x);
            let run = run_sampler(sampler.as_ref(), &eval).unwrap();
            prop_assert!(run.log.len() <= sampler.budget(), "{}", sampler.name());
            for point in &run.log.points {
                let norm: f64 = point.iter().map(|v| v * v).sum::<f64>().sqrt();
                prop_assert!(norm <= 1.0 + 1e-9, "{} escaped the ball", sampler.name());
            }
            // zero-map law
            let zero_run = run_sampler(sampler.as_ref(), &|_: &[f64]| 0.0).unwrap();
            prop_assert!(zero_run.approximant.is_zero(), "{}", sampler.name());
            for x in &run.log.points {
                prop_assert_eq!(zero_run.approximant.eval(x), 0.0);
            }
        }
    }
}

// the numeric core is scalar-generic; exercise an f32 instantiation end to end
#[test]
fn two_step_runs_in_f32() {
    let class = ClassSpec::new(Alpha::Finite(2.0f32), 2.0, 1.0, 3).unwrap();
    let profile = catalog_profile(&ProfileKind::Sine, &class).unwrap();
    let ridge = RidgeFunction::validated(vec![0.6f32, 0.0, 0.8], profile, &class).unwrap();
    let sampler = two_step_sampler(&class, 40).unwrap();
    let eval = |x: &[f32]| ridge.eval_unchecked(x);
    let run = run_sampler(&sampler, &eval).unwrap();
    let mut worst = 0.0f32;
    for i in 0..200 {
        let t = -1.0 + i as f32 / 100.0;
        let x = [0.6 * t, 0.0, 0.8 * t];
        worst = worst.max((ridge.eval_unchecked(&x) - run.approximant.eval(&x)).abs());
    }
    assert!(worst < 1e-2, "f32 two-step error {worst}");
}
