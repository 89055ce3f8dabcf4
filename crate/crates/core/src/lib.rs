//! Exact bounds on the maximum size `A_q(n,d)` of a `q`-ary code of length
//! `n` whose codewords are pairwise at insertion/deletion distance at least
//! `d`, plus a brute-force oracle to check them against.
//!
//! Finite bounds are exact integers; floating point only appears in the
//! asymptotic rate functions.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod lower_bounds;
pub mod oracle;
pub mod params;
pub mod upper_bounds;

pub use error::{Error, Result};
pub use params::{BoundResult, CodeParams, Direction, Method, RateMethod, RatePoint};

/// Arbitrary-precision integer used for every finite bound.
pub type ExactInt = num_bigint::BigInt;
/// Reduced fraction with positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Evaluates one method at `params`. The exact and greedy methods enumerate
/// `Σ^n` and refuse spaces above `2^guard_bits` (defaults: 14 and 20 bits).
pub fn evaluate(method: Method, params: CodeParams, guard_bits: Option<u32>) -> Result<BoundResult> {
    use oracle::codes::{
        exact_max_code_size, greedy_code, GreedyStrategy, EXACT_GUARD_BITS, GREEDY_GUARD_BITS,
    };
    match method {
        Method::SpherePacking => upper_bounds::sphere_packing_upper(params),
        Method::EliasType => upper_bounds::elias_type_upper(params),
        Method::LevLB => lower_bounds::levenshtein_lower(params),
        Method::Cor3LB => lower_bounds::improved_lower_closed_form(params),
        Method::Thm4LB => lower_bounds::improved_lower(params),
        Method::Exact => {
            let guard = guard_bits.unwrap_or(EXACT_GUARD_BITS);
            let found = exact_max_code_size(params.q, params.n, params.d, guard)?;
            Ok(BoundResult::new(method, params, found.size)
                .with_aux("nodes", found.stats.nodes)
                .with_aux("code", &found.code))
        }
        Method::Greedy => {
            let guard = guard_bits.unwrap_or(GREEDY_GUARD_BITS);
            let code = greedy_code(params.q, params.n, params.d, GreedyStrategy::MinDegree, guard)?;
            Ok(BoundResult::new(method, params, ExactInt::from(code.len()))
                .with_aux("strategy", "min_degree"))
        }
    }
}

/// Evaluates one asymptotic rate bound at normalized distance `delta`.
pub fn evaluate_rate(method: RateMethod, q: u32, delta: f64) -> Result<RatePoint> {
    match method {
        RateMethod::Cor1 => upper_bounds::rate_upper_cor1(q, delta),
        RateMethod::Cor2 => upper_bounds::rate_upper_cor2(q, delta),
        RateMethod::EliasH => upper_bounds::rate_upper_elias_hamming(q, delta),
        RateMethod::Mrrw => upper_bounds::rate_upper_mrrw(q, delta),
        RateMethod::GvTypeLB => lower_bounds::rate_lower_gv_type(q, delta),
    }
}
