use proptest::prelude::*;
use see_core::confidence::radius_unchecked;
use see_core::hardness::{kl_bernoulli, lower_bound_negative, profile};
use see_core::see::{run_see_with_state, SeeConfig, Unobserved};
use see_core::{BanditInstance, NoiseModel};

fn gaussian(means: Vec<f64>, mu0: f64) -> BanditInstance {
    BanditInstance::new(means, mu0, NoiseModel::GaussianUnit, "").unwrap()
}

proptest! {
    #[test]
    fn radius_decreasing_within_bracket(j in 1u32..20, off in 0u64..1000, delta in 1e-6f64..0.99) {
        let lo = (1u64 << (j - 1)) + 1;
        let hi = 1u64 << j;
        let t = lo + off % (hi - lo + 1);
        if t < hi {
            prop_assert!(radius_unchecked(t + 1, delta) < radius_unchecked(t, delta));
        }
    }

    #[test]
    fn radius_halves_at_most_every_doubling(t in 1u64..1 << 20, delta in 1e-6f64..0.5) {
        prop_assert!(radius_unchecked(2 * t, delta) <= radius_unchecked(t, delta));
    }

    #[test]
    fn radius_decreasing_in_delta(t in 1u64..1 << 20, d in 1e-6f64..0.5, f in 1.01f64..10.0) {
        prop_assert!(radius_unchecked(t, (d * f).min(0.999)) < radius_unchecked(t, d));
    }

    #[test]
    fn profile_is_permutation_invariant(
        means in prop::collection::vec(-1.0f64..1.0, 1..12),
        rot in 0usize..12,
    ) {
        let mu0 = 0.0123;
        let mut shuffled = means.clone();
        let n = shuffled.len();
        shuffled.rotate_left(rot % n);
        shuffled.reverse();
        let (a, b) = (profile(&gaussian(means, mu0)), profile(&gaussian(shuffled, mu0)));
        for (x, y) in [(a.h, b.h), (a.h0, b.h0), (a.h1_neg, b.h1_neg), (a.h1_pos, b.h1_pos), (a.h1_low, b.h1_low)] {
            prop_assert!(x == y || (x - y).abs() <= 1e-9 * x.abs());
        }
    }

    #[test]
    fn h1_pos_dominates(means in prop::collection::vec(-1.0f64..1.0, 1..12)) {
        let p = profile(&gaussian(means.clone(), 0.0123));
        prop_assert!(p.h1_pos >= p.h * (1.0 - 1e-12));
        // max(D0, D1) <= 2 for means in [-1, 1]
        prop_assert!(p.h1_pos >= means.len() as f64 / 2.0);
    }

    #[test]
    fn negative_bound_monotone_in_delta(
        means in prop::collection::vec(-1.0f64..-0.01, 1..8),
        d in 1e-6f64..0.49,
    ) {
        let inst = gaussian(means, 0.0);
        let tight = lower_bound_negative(&inst, d).unwrap();
        let loose = lower_bound_negative(&inst, (d * 1.5).min(0.5)).unwrap();
        prop_assert!(tight >= loose);
        prop_assert!(kl_bernoulli(d).unwrap() >= 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exploration_samples_form_one_sequence(
        means in prop::collection::vec(0.0f64..1.0, 1..6),
        seed in any::<u64>(),
    ) {
        let inst = gaussian(means, 0.5);
        let cfg = SeeConfig { retain_samples: true, ..SeeConfig::paper() };
        let (rec, state) = run_see_with_state(&inst, 0.1, &cfg, seed, &mut Unobserved).unwrap();
        prop_assert!(state.q.len() <= inst.num_arms());
        prop_assert_eq!(state.q.len() as u64 + state.history_size(), state.tau_ee);
        prop_assert_eq!(rec.pulls_total, state.tau_ee + state.tau_et);
        for a in 0..inst.num_arms() {
            let mut seq = state.hee[a].samples().unwrap().to_vec();
            seq.extend(state.q.get(a));
            prop_assert_eq!(seq.as_slice(), state.fresh_draws(a).unwrap());
        }
    }

    #[test]
    fn runs_are_deterministic(means in prop::collection::vec(0.0f64..1.0, 1..6), seed in any::<u64>()) {
        let inst = gaussian(means, 0.5);
        let cfg = SeeConfig::paper();
        let a = see_core::see::run_see(&inst, 0.1, &cfg, seed).unwrap();
        let b = see_core::see::run_see(&inst, 0.1, &cfg, seed).unwrap();
        prop_assert_eq!(a, b);
    }
}
