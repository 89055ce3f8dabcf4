//! Lower bounds on `A_q(n,d)` from the average size of the indel balls
//! `L_{t,t}(x)`.
//!
//! Every bound here is `floor(q^n / V)` where `V` upper-bounds the average
//! ball size. Levenshtein's classical bound uses `V = q^-t I_q(n-t,t)^2`;
//! the improved bounds subtract the overlap forced by words with many
//! index-disjoint distinct adjacent pairs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::{count_words_by_pair_number, insertion_ball_size, pow};
use crate::params::{BoundResult, CodeParams, Method, RateMethod, RatePoint};
use crate::upper_bounds::entropy_clamped;
use crate::{Error, ExactInt, Result};

/// The maximizing choice in the overlap term
/// `(2^p' - 1) I_q(n-t+p', t-p')` over `0 <= p' <= min(p, t, n-t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTildeChoice {
    pub n: u32,
    pub q: u32,
    pub t: u32,
    pub p: u32,
    pub p_tilde: u32,
    pub objective: ExactInt,
}

/// Overlap term for a fixed `p'`.
pub fn overlap_term(n: u32, q: u32, t: u32, p_prime: u32) -> ExactInt {
    let factor = (BigInt::one() << p_prime) - 1u32;
    factor * insertion_ball_size(q, n - t + p_prime, t - p_prime)
}

/// Best `p'` for a word with `p` disjoint distinct adjacent pairs. Ties go
/// to the smallest `p'`.
pub fn best_p_tilde(n: u32, q: u32, t: u32, p: u32) -> Result<PTildeChoice> {
    if t > n {
        return Err(Error::Precondition(format!("t = {t} exceeds n = {n}")));
    }
    let upper = p.min(t).min(n - t);
    let mut best = PTildeChoice {
        n,
        q,
        t,
        p,
        p_tilde: 0,
        objective: BigInt::zero(),
    };
    for p_prime in 1..=upper {
        let objective = overlap_term(n, q, t, p_prime);
        if objective > best.objective {
            best.p_tilde = p_prime;
            best.objective = objective;
        }
    }
    Ok(best)
}

fn lower_params(params: CodeParams) -> Result<(CodeParams, u32)> {
    let params = CodeParams::new(params.q, params.n, params.d)?;
    let t = params.radius();
    if t > params.n {
        return Err(Error::Precondition(format!("t = d/2-1 = {t} exceeds n for {params}")));
    }
    Ok((params, t))
}

fn require_positive_radius(method: &'static str, params: &CodeParams) -> Result<()> {
    if params.d < 4 {
        return Err(Error::Inapplicable {
            method,
            reason: "requires t = d/2 - 1 > 0, i.e. d >= 4 (use lev for d = 2)".to_owned(),
        });
    }
    Ok(())
}

/// `floor(q^(n+t) / I_q(n-t,t)^2)` with `t = d/2 - 1`.
pub fn levenshtein_lower(params: CodeParams) -> Result<BoundResult> {
    let (params, t) = lower_params(params)?;
    let ball = insertion_ball_size(params.q, params.n - t, t);
    let value = pow(u64::from(params.q), params.n + t).div_floor(&(&ball * &ball));
    Ok(BoundResult::new(Method::LevLB, params, value).with_aux("t", t))
}

/// The overlap sum `sum_p N_{n,q}(p) (2^p~ - 1) I_q(n-t+p~, t-p~)` together
/// with the `p~` chosen for each `p`.
pub fn overlap_sum(n: u32, q: u32, t: u32) -> Result<(ExactInt, Vec<PTildeChoice>)> {
    let choices = (0..=n / 2)
        .map(|p| best_p_tilde(n, q, t, p))
        .collect::<Result<Vec<_>>>()?;
    let sum = choices
        .iter()
        .map(|c| count_words_by_pair_number(n, q, i64::from(c.p)) * &c.objective)
        .sum();
    Ok((sum, choices))
}

/// Floors `q^n / (q^-t A - q^-n S)` where `A = I_q(n-t,t)^2`, computed as
/// `q^2n / (q^(n-t) A - S)`.
fn floor_with_subtraction(params: &CodeParams, t: u32, subtracted: &ExactInt) -> ExactInt {
    let q = u64::from(params.q);
    let ball = insertion_ball_size(params.q, params.n - t, t);
    let scaled_average = pow(q, params.n - t) * &ball * &ball;
    assert!(
        subtracted <= &scaled_average,
        "overlap exceeds the Levenshtein average for {params}"
    );
    let denominator = scaled_average - subtracted;
    assert!(
        denominator > BigInt::zero(),
        "non-positive average ball size for {params}"
    );
    pow(q, 2 * params.n).div_floor(&denominator)
}

/// Improved lower bound with the optimal `p~` for every pair number.
pub fn improved_lower(params: CodeParams) -> Result<BoundResult> {
    let (params, t) = lower_params(params)?;
    require_positive_radius("thm4", &params)?;
    let (sum, choices) = overlap_sum(params.n, params.q, t)?;
    let value = floor_with_subtraction(&params, t, &sum);
    let p_tilde = choices
        .iter()
        .map(|c| c.p_tilde.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    Ok(BoundResult::new(Method::Thm4LB, params, value)
        .with_aux("t", t)
        .with_aux("p_tilde", p_tilde))
}

/// Closed form obtained by fixing `p~ = 1` for every word except the `q`
/// constant words.
pub fn improved_lower_closed_form(params: CodeParams) -> Result<BoundResult> {
    let (params, t) = lower_params(params)?;
    require_positive_radius("cor3", &params)?;
    let q = u64::from(params.q);
    let subtracted = (pow(q, params.n) - q) * insertion_ball_size(params.q, params.n - t + 1, t - 1);
    let value = floor_with_subtraction(&params, t, &subtracted);
    Ok(BoundResult::new(Method::Cor3LB, params, value).with_aux("t", t))
}

/// Asymptotic form of Levenshtein's lower bound: `max(0, 1 + δ - 2 H_q(δ))`.
pub fn rate_lower_gv_type(q: u32, delta: f64) -> Result<RatePoint> {
    if q < 2 {
        return Err(Error::Precondition(format!("alphabet size q = {q} < 2")));
    }
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::Domain {
            value: delta,
            domain: "[0, 1]",
        });
    }
    // Beyond 1 - 1/q the entropy term decreases again; the bound is vacuous.
    if delta >= crate::upper_bounds::zero_rate_threshold(q) {
        return Ok(RatePoint {
            delta,
            rate: 0.0,
            method: RateMethod::GvTypeLB,
        });
    }
    let rate = 1.0 + delta - 2.0 * entropy_clamped(q, delta)?;
    Ok(RatePoint {
        delta,
        rate: rate.clamp(0.0, 1.0),
        method: RateMethod::GvTypeLB,
    })
}
