//! Exact optima against every finite bound, for the sizes where exact
//! search finishes in seconds.

use indel_bounds::oracle::codes::EXACT_GUARD_BITS;
use indel_bounds::oracle::verify::verify_sandwich;

#[test]
fn exact_optimum_lies_between_the_bounds() {
    let cases = (2..=8).map(|n| (n, 4)).chain((3..=10).map(|n| (n, 6)));
    for (n, d) in cases {
        let r = verify_sandwich(2, n, d, EXACT_GUARD_BITS).unwrap();
        assert!(r.passed, "{}: {:?}", r.name, r.counterexample);
    }
}

#[test]
fn small_ternary_and_quaternary_alphabets() {
    for (q, n, d) in [(3, 4, 4), (3, 5, 6), (3, 6, 6), (4, 3, 4), (4, 4, 6)] {
        let r = verify_sandwich(q, n, d, EXACT_GUARD_BITS).unwrap();
        assert!(r.passed, "{}: {:?}", r.name, r.counterexample);
    }
}
