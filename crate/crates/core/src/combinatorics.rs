//! Exact combinatorial primitives: binomials, ball sizes, the q-ary entropy
//! and the distinct-adjacent-pair word counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::{Error, ExactInt, Result};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc * (n - i) is always divisible by (i + 1) after the multiply.
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp` as an exact integer.
pub fn pow(base: u64, exp: u32) -> ExactInt {
    Pow::pow(BigInt::from(base), exp)
}

/// Number of supersequences of length `n + t` of any word of length `n`
/// over a `q`-ary alphabet: `sum_{i=0}^{t} C(n+t, i) (q-1)^i`.
pub fn insertion_ball_size(q: u32, n: u32, t: u32) -> ExactInt {
    hamming_ball_volume(q, n + t, t)
}

/// Volume of the Hamming ball of radius `radius` in `q`-ary space of length `n`.
pub fn hamming_ball_volume(q: u32, n: u32, radius: u32) -> ExactInt {
    let top = radius.min(n);
    let mut sum = BigInt::zero();
    // term = C(n, i) (q-1)^i
    let mut term = BigInt::one();
    for i in 0..=top {
        sum += &term;
        term *= u64::from(n - i) * u64::from(q - 1);
        term /= u64::from(i) + 1;
    }
    sum
}

/// `I_q(n,t)` for `t = 0..=t_max`, via
/// `I_q(n,t+1) = q I_q(n,t) + (q-1)^(t+1) C(n+t, t+1)`.
pub fn insertion_ball_sizes(q: u32, n: u32, t_max: u32) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(t_max as usize + 1);
    let mut size = BigInt::one();
    let mut power = BigInt::one();
    // C(n+t, t+1)
    let mut choose = BigInt::from(n);
    for t in 0..=t_max {
        out.push(size.clone());
        power *= q - 1;
        size = &size * q + &power * &choose;
        let t = u64::from(t);
        choose *= u64::from(n) + t + 1;
        choose /= t + 2;
    }
    out
}

/// The q-ary entropy function, with `H_q(0) = 0` and `H_q(1) = log_q(q-1)`.
pub fn q_ary_entropy(q: u32, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) || q < 2 {
        return Err(Error::Domain {
            value: x,
            domain: "[0, 1]",
        });
    }
    let q = f64::from(q);
    let xlogx = |v: f64| if v == 0.0 { 0.0 } else { v * v.ln() };
    let nats = -xlogx(x) - xlogx(1.0 - x) + x * (q - 1.0).ln();
    Ok(nats / q.ln())
}

/// Number of words `x` in `Σ^n` whose maximum number of index-disjoint
/// distinct adjacent pairs is exactly `p`. Zero outside `0 <= p <= n/2`.
pub fn count_words_by_pair_number(n: u32, q: u32, p: i64) -> ExactInt {
    if n == 0 || p < 0 || 2 * p > i64::from(n) {
        return BigInt::zero();
    }
    let p32 = p as u32;
    let n_minus_p = u64::from(n - p32);
    let numerator = binomial(n_minus_p, p)
        * pow(u64::from(q), p32)
        * pow(u64::from(q - 1), p32)
        * (u64::from(p32) + u64::from(q) * u64::from(n - 2 * p32));
    let (quot, rem) = numerator.div_rem(&BigInt::from(n_minus_p));
    assert!(rem.is_zero(), "N_{{{n},{q}}}({p}) is not an integer");
    quot
}
