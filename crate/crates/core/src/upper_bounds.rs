//! Upper bounds on `A_q(n,d)`: the supersequence sphere-packing bound, the
//! Elias-type bound built on the insertion list-size limit, and the
//! asymptotic rate upper bounds.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::combinatorics::{insertion_ball_size, insertion_ball_sizes, pow, q_ary_entropy};
use crate::params::{BoundResult, CodeParams, Method, RateMethod, RatePoint};
use crate::{Error, Result};

/// `floor(q^(n+t) / I_q(n,t))` with `t = d/2 - 1`.
pub fn sphere_packing_upper(params: CodeParams) -> Result<BoundResult> {
    let params = CodeParams::new(params.q, params.n, params.d)?;
    let t = params.radius();
    let space = pow(u64::from(params.q), params.n + t);
    let value = space / insertion_ball_size(params.q, params.n, t);
    Ok(BoundResult::new(Method::SpherePacking, params, value).with_aux("t", t))
}

/// Whether `t` satisfies `t < nd / (2n - d)`. Requires `d < 2n`.
pub fn elias_t_admissible(params: &CodeParams, t: u32) -> bool {
    let (n, d, t) = (u64::from(params.n), u64::from(params.d), u64::from(t));
    d < 2 * n && t * (2 * n - d) < n * d
}

/// Largest admissible `t` for the Elias-type bound, if `d < 2n`.
pub fn elias_t_max(params: &CodeParams) -> Option<u32> {
    let (n, d) = (u64::from(params.n), u64::from(params.d));
    if d >= 2 * n {
        return None;
    }
    // largest t with t(2n-d) < nd
    let t = (n * d - 1) / (2 * n - d);
    Some(t as u32)
}

fn elias_applicable(params: &CodeParams) -> Result<()> {
    if params.d >= 2 * params.n {
        return Err(Error::Inapplicable {
            method: "thm2",
            reason: format!("requires d < 2n, got d = 2n = {}", params.d),
        });
    }
    Ok(())
}

/// The list-size limit `(n+t)d / ((n+t)d - 2nt)` as `(numerator, denominator)`.
pub fn list_size_ratio(n: u32, d: u32, t: u32) -> (u64, u64) {
    let (n, d, t) = (u64::from(n), u64::from(d), u64::from(t));
    let num = (n + t) * d;
    (num, num - 2 * n * t)
}

/// The Elias-type bound at a single admissible `t`:
/// `floor( (n+t)d / ((n+t)d - 2nt) * q^(n+t) / I_q(n,t) )`, evaluated as one
/// exact quotient.
pub fn elias_type_upper_at_t(params: CodeParams, t: u32) -> Result<BoundResult> {
    let params = CodeParams::new(params.q, params.n, params.d)?;
    elias_applicable(&params)?;
    if !elias_t_admissible(&params, t) {
        return Err(Error::Precondition(format!(
            "t = {t} violates t < nd/(2n-d) = {}/{} for {params}",
            params.n * params.d,
            2 * params.n - params.d
        )));
    }
    let (num, den) = list_size_ratio(params.n, params.d, t);
    let numerator = BigInt::from(num) * pow(u64::from(params.q), params.n + t);
    let denominator = BigInt::from(den) * insertion_ball_size(params.q, params.n, t);
    let value = numerator.div_floor(&denominator);
    Ok(BoundResult::new(Method::EliasType, params, value).with_aux("t", t))
}

/// The Elias-type bound minimized over every admissible `t`; the smallest
/// minimizing `t` is recorded in `aux`.
pub fn elias_type_upper(params: CodeParams) -> Result<BoundResult> {
    let params = CodeParams::new(params.q, params.n, params.d)?;
    elias_applicable(&params)?;
    let t_max = elias_t_max(&params).expect("d < 2n checked above");
    let q = u64::from(params.q);
    let mut space = pow(q, params.n);
    let mut best: Option<(BigInt, u32)> = None;
    for (t, ball) in (0..).zip(insertion_ball_sizes(params.q, params.n, t_max)) {
        let (num, den) = list_size_ratio(params.n, params.d, t);
        let value = (BigInt::from(num) * &space).div_floor(&(BigInt::from(den) * ball));
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, t));
        }
        space *= q;
    }
    let (value, t) = best.expect("t = 0 is always admissible");
    Ok(BoundResult::new(Method::EliasType, params, value).with_aux("t", t))
}

/// Minimum of the applicable upper bounds. On a tie the sphere-packing bound
/// is reported. `aux["winner"]` names the method that attained the minimum.
pub fn best_upper(params: CodeParams) -> Result<BoundResult> {
    let sphere = sphere_packing_upper(params)?;
    let best = match elias_type_upper(params) {
        Ok(elias) if elias.value < sphere.value => elias,
        Ok(_) | Err(Error::Inapplicable { .. }) => sphere,
        Err(e) => return Err(e),
    };
    let winner = best.method.tag();
    Ok(best.with_aux("winner", winner))
}

/// `1 - 1/q`, the normalized distance beyond which the rate is zero.
pub fn zero_rate_threshold(q: u32) -> f64 {
    1.0 - 1.0 / f64::from(q)
}

fn check_delta(delta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&delta) {
        Ok(())
    } else {
        Err(Error::Domain {
            value: delta,
            domain: "[0, 1]",
        })
    }
}

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::Precondition(format!("alphabet size q = {q} < 2")));
    }
    Ok(())
}

const CLAMP_SLACK: f64 = 1e-12;

/// Entropy of an argument that may have drifted just outside `[0, 1]`
/// through round-off.
pub(crate) fn entropy_clamped(q: u32, x: f64) -> Result<f64> {
    let x = if (-CLAMP_SLACK..0.0).contains(&x) {
        0.0
    } else if x > 1.0 && x <= 1.0 + CLAMP_SLACK {
        1.0
    } else {
        x
    };
    q_ary_entropy(q, x)
}

fn point(method: RateMethod, delta: f64, rate: f64) -> RatePoint {
    RatePoint {
        delta,
        rate: rate.clamp(0.0, 1.0),
        method,
    }
}

/// Asymptotic form of the sphere-packing bound:
/// `(1 + δ)(1 - H_q(δ / (1 + δ)))`.
pub fn rate_upper_cor1(q: u32, delta: f64) -> Result<RatePoint> {
    check_q(q)?;
    check_delta(delta)?;
    if delta >= zero_rate_threshold(q) {
        return Ok(point(RateMethod::Cor1, delta, 0.0));
    }
    let h = entropy_clamped(q, delta / (1.0 + delta))?;
    Ok(point(RateMethod::Cor1, delta, (1.0 + delta) * (1.0 - h)))
}

/// Asymptotic form of the Elias-type bound: `(1 - H_q(δ)) / (1 - δ)`.
pub fn rate_upper_cor2(q: u32, delta: f64) -> Result<RatePoint> {
    check_q(q)?;
    check_delta(delta)?;
    if delta >= zero_rate_threshold(q) {
        return Ok(point(RateMethod::Cor2, delta, 0.0));
    }
    let h = entropy_clamped(q, delta)?;
    Ok(point(RateMethod::Cor2, delta, (1.0 - h) / (1.0 - delta)))
}

/// Hamming-metric Elias bound reused in the Levenshtein metric:
/// `1 - H_q(θ - sqrt(θ(θ - δ)))` with `θ = 1 - 1/q`.
pub fn rate_upper_elias_hamming(q: u32, delta: f64) -> Result<RatePoint> {
    check_q(q)?;
    check_delta(delta)?;
    let theta = zero_rate_threshold(q);
    if delta >= theta {
        return Ok(point(RateMethod::EliasH, delta, 0.0));
    }
    let h = entropy_clamped(q, theta - (theta * (theta - delta)).sqrt())?;
    Ok(point(RateMethod::EliasH, delta, 1.0 - h))
}

/// Hamming-metric MRRW bound reused in the Levenshtein metric.
pub fn rate_upper_mrrw(q: u32, delta: f64) -> Result<RatePoint> {
    check_q(q)?;
    check_delta(delta)?;
    if delta >= zero_rate_threshold(q) {
        return Ok(point(RateMethod::Mrrw, delta, 0.0));
    }
    let qf = f64::from(q);
    let arg = (qf - 1.0 - (qf - 2.0) * delta - 2.0 * (delta * (1.0 - delta) * (qf - 1.0)).sqrt())
        / qf;
    let h = entropy_clamped(q, arg)?;
    Ok(point(RateMethod::Mrrw, delta, h))
}

/// `1 - 2 / (q + sqrt(q))`, the normalized distance up to which
/// positive-rate codes are known to exist. Drawn as a marker on rate plots.
pub fn bgh_zero_rate_threshold(q: u32) -> f64 {
    let qf = f64::from(q);
    1.0 - 2.0 / (qf + qf.sqrt())
}
