use num_bigint::BigInt;
use proptest::prelude::*;

use indel_bounds::combinatorics::{binomial, hamming_ball_volume, insertion_ball_size};
use indel_bounds::lower_bounds::{improved_lower, improved_lower_closed_form, levenshtein_lower};
use indel_bounds::oracle::codes::{greedy_code, GreedyStrategy};
use indel_bounds::upper_bounds::{
    best_upper, elias_t_admissible, elias_type_upper, elias_type_upper_at_t, zero_rate_threshold,
};
use indel_bounds::{evaluate_rate, CodeParams, RateMethod};

fn params(max_q: u32, max_n: u32) -> impl Strategy<Value = CodeParams> {
    (2..=max_q, 1..=max_n)
        .prop_flat_map(|(q, n)| (Just(q), Just(n), 1..=n))
        .prop_map(|(q, n, half)| CodeParams::new(q, n, 2 * half).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lower_bounds_chain_below_upper(p in params(6, 60)) {
        let upper = best_upper(p).unwrap().value;
        let lev = levenshtein_lower(p).unwrap().value;
        prop_assert!(lev >= BigInt::from(0));
        prop_assert!(lev <= upper);
        if p.d >= 4 {
            let cor3 = improved_lower_closed_form(p).unwrap().value;
            let thm4 = improved_lower(p).unwrap().value;
            prop_assert!(lev <= cor3);
            prop_assert!(cor3 <= thm4);
            prop_assert!(thm4 <= upper);
        }
    }

    #[test]
    fn elias_type_minimum_is_reported_with_its_t(p in params(5, 50)) {
        prop_assume!(p.d < 2 * p.n);
        let best = elias_type_upper(p).unwrap();
        let t = best.aux_u32("t").unwrap();
        prop_assert_eq!(&elias_type_upper_at_t(p, t).unwrap().value, &best.value);
        let mut s = 0;
        while elias_t_admissible(&p, s) {
            let v = elias_type_upper_at_t(p, s).unwrap().value;
            prop_assert!(v > best.value || (v == best.value && s >= t));
            s += 1;
        }
    }

    #[test]
    fn insertion_ball_is_a_hamming_ball(q in 2u32..8, n in 0u32..60, t in 0u32..15) {
        prop_assert_eq!(insertion_ball_size(q, n, t), hamming_ball_volume(q, n + t, t));
    }

    #[test]
    fn binomial_symmetry(n in 0u64..200, k in 0i64..200) {
        prop_assume!(k as u64 <= n);
        prop_assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
    }

    #[test]
    fn rates_lie_in_unit_interval_and_upper_curves_decrease(
        q in 2u32..9,
        a in 0.0f64..1.0,
        b in 0.0f64..1.0,
    ) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        for m in RateMethod::ALL {
            let r_lo = evaluate_rate(m, q, lo).unwrap().rate;
            let r_hi = evaluate_rate(m, q, hi).unwrap().rate;
            prop_assert!((0.0..=1.0).contains(&r_lo));
            if m.is_upper() {
                prop_assert!(r_hi <= r_lo + 1e-12, "{:?} q={} {} -> {}, {} -> {}", m, q, lo, r_lo, hi, r_hi);
                if hi >= zero_rate_threshold(q) {
                    prop_assert_eq!(r_hi, 0.0);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn greedy_codes_are_codes(q in 2u32..5, n in 1u32..9, half in 1u32..5) {
        prop_assume!(2 * half <= 2 * n && u64::from(q).pow(n) <= 1 << 12);
        for s in [GreedyStrategy::Lex, GreedyStrategy::MinDegree] {
            let code = greedy_code(q, n, 2 * half, s, 12).unwrap();
            prop_assert!(!code.is_empty());
            if let Some(d) = code.min_distance() {
                prop_assert!(d >= 2 * half as usize);
            }
        }
    }
}
