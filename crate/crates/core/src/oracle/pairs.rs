//! Distinct adjacent pairs: `p(x)`, the leftmost maximum disjoint pair set,
//! the pair-number histogram and the `2^p` subsequence family.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::balls::levenshtein_distance;
use super::word::{check_guard, decode_into, Word};
use crate::{Error, ExactInt, Result};

/// Position pairs `(i, i+1)` (0-based) of the leftmost maximum set of
/// index-disjoint distinct adjacent pairs. Its length is `p(x)`.
pub fn max_disjoint_pairs(x: &Word) -> (usize, Vec<(usize, usize)>) {
    let pairs = leftmost_pairs(x.symbols());
    (pairs.len(), pairs)
}

fn leftmost_pairs(s: &[u8]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    let mut i = 0;
    while i + 1 < s.len() {
        if s[i] != s[i + 1] {
            pairs.push((i, i + 1));
            i += 2;
        } else {
            i += 1;
        }
    }
    pairs
}

fn pair_number(s: &[u8]) -> usize {
    let mut count = 0;
    let mut i = 0;
    while i + 1 < s.len() {
        if s[i] != s[i + 1] {
            count += 1;
            i += 2;
        } else {
            i += 1;
        }
    }
    count
}

/// Number of words of length `n` with each pair number `p`, by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairHistogram {
    pub n: u32,
    pub q: u32,
    pub counts: BTreeMap<u32, ExactInt>,
}

impl PairHistogram {
    pub fn total(&self) -> ExactInt {
        self.counts.values().sum()
    }
}

pub fn pair_histogram(n: u32, q: u32, guard_bits: u32) -> Result<PairHistogram> {
    let size = check_guard(q, n as usize, guard_bits, "lower n or raise the guard")?;
    let len = n as usize;
    let counts = (0..size)
        .into_par_iter()
        .fold(
            || (vec![0u64; len / 2 + 1], vec![0u8; len]),
            |(mut hist, mut buf), idx| {
                decode_into(q, idx, &mut buf);
                hist[pair_number(&buf)] += 1;
                (hist, buf)
            },
        )
        .map(|(hist, _)| hist)
        .reduce(
            || vec![0u64; len / 2 + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let counts = counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(p, c)| (p as u32, BigInt::from(c)))
        .collect();
    Ok(PairHistogram { n, q, counts })
}

/// The `2^p` deletion family: starting from `x`, delete `t - p` symbols at
/// positions outside the first `p` pairs of the leftmost maximum disjoint
/// set (the leftmost such positions), giving `y` of length `n - t + p`; then
/// delete one symbol of each of the `p` pairs in every possible way.
///
/// Returns `y` and the `2^p` resulting words, in pattern order.
pub fn pair_deletion_family(x: &Word, t: usize, p: usize) -> Result<(Word, Vec<Word>)> {
    let n = x.len();
    let (p_x, pairs) = max_disjoint_pairs(x);
    if p > p_x || p > t || t > n || p > n - t {
        return Err(Error::Precondition(format!(
            "need p <= p(x) = {p_x} and p <= min(t, n-t) (p={p}, t={t}, n={n})"
        )));
    }
    let chosen = &pairs[..p];
    let in_pair = |i: usize| chosen.iter().any(|&(a, b)| a == i || b == i);
    let drop: Vec<usize> = (0..n).filter(|&i| !in_pair(i)).take(t - p).collect();
    debug_assert_eq!(drop.len(), t - p);

    // positions of y and where each chosen pair lands in y
    let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let y_symbols: Vec<u8> = keep.iter().map(|&i| x.symbols()[i]).collect();
    let pair_pos: Vec<usize> = chosen
        .iter()
        .map(|&(a, _)| keep.iter().position(|&k| k == a).expect("pair kept"))
        .collect();

    let family = (0u64..1 << p)
        .map(|pattern| {
            let mut skip = vec![false; y_symbols.len()];
            for (j, &pos) in pair_pos.iter().enumerate() {
                skip[pos + (pattern >> j & 1) as usize] = true;
            }
            let symbols = y_symbols
                .iter()
                .zip(&skip)
                .filter(|(_, &s)| !s)
                .map(|(&c, _)| c)
                .collect();
            Word::from_raw(x.q(), symbols)
        })
        .collect();
    Ok((Word::from_raw(x.q(), y_symbols), family))
}

/// Largest pairwise Levenshtein distance within a family of words.
pub fn family_diameter(words: &[Word]) -> usize {
    let mut max = 0;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            max = max.max(levenshtein_distance(a, b).expect("same alphabet"));
        }
    }
    max
}
