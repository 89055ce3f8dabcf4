//! Levenshtein distance and the insertion, deletion and indel balls.
//!
//! Balls come in two flavours: the public set-valued functions on [`Word`],
//! and `*_codes` variants working on lexicographic indices for the bulk
//! enumeration loops. Both are plain brute force.

use std::collections::HashSet;

use super::word::{decode_into, encode, Word};
use crate::{Error, Result};

/// Length of a longest common subsequence.
pub fn lcs_length(a: &[u8], b: &[u8]) -> usize {
    let mut row = vec![0usize; b.len() + 1];
    for &x in a {
        let mut diag = 0;
        for (j, &y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[b.len()]
}

/// Insertion/deletion distance: `|x| + |y| - 2 LCS(x, y)`.
pub fn levenshtein_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.q() != y.q() {
        return Err(Error::AlphabetMismatch(x.q(), y.q()));
    }
    Ok(x.len() + y.len() - 2 * lcs_length(x.symbols(), y.symbols()))
}

fn delete_one(level: &HashSet<Vec<u8>>) -> HashSet<Vec<u8>> {
    let mut next = HashSet::new();
    for w in level {
        for i in 0..w.len() {
            let mut v = w.clone();
            v.remove(i);
            next.insert(v);
        }
    }
    next
}

fn insert_one(level: &HashSet<Vec<u8>>, q: u32) -> HashSet<Vec<u8>> {
    let mut next = HashSet::new();
    for w in level {
        for i in 0..=w.len() {
            for s in 0..q {
                let mut v = w.clone();
                v.insert(i, s as u8);
                next.insert(v);
            }
        }
    }
    next
}

fn to_words(q: u32, set: HashSet<Vec<u8>>) -> HashSet<Word> {
    set.into_iter().map(|s| Word::from_raw(q, s)).collect()
}

/// All distinct subsequences of `x` of length `|x| - t`.
pub fn deletion_ball(x: &Word, t: usize) -> Result<HashSet<Word>> {
    if t > x.len() {
        return Err(Error::Precondition(format!(
            "cannot delete {t} symbols from a word of length {}",
            x.len()
        )));
    }
    let mut level = HashSet::from([x.symbols().to_vec()]);
    for _ in 0..t {
        level = delete_one(&level);
    }
    Ok(to_words(x.q(), level))
}

/// All distinct supersequences of `x` of length `|x| + t`.
pub fn insertion_ball(x: &Word, t: usize) -> HashSet<Word> {
    let mut level = HashSet::from([x.symbols().to_vec()]);
    for _ in 0..t {
        level = insert_one(&level, x.q());
    }
    to_words(x.q(), level)
}

/// Words reachable from `x` by deleting `t` symbols and then inserting `s`:
/// the union of `I_s(z)` over `z` in `D_t(x)`.
pub fn indel_ball(x: &Word, t: usize, s: usize) -> Result<HashSet<Word>> {
    if t > x.len() {
        return Err(Error::Precondition(format!(
            "cannot delete {t} symbols from a word of length {}",
            x.len()
        )));
    }
    let mut level = HashSet::from([x.symbols().to_vec()]);
    for _ in 0..t {
        level = delete_one(&level);
    }
    for _ in 0..s {
        level = insert_one(&level, x.q());
    }
    Ok(to_words(x.q(), level))
}

fn sort_dedup(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v.dedup();
    v
}

/// One round of single-symbol deletions over a set of codes of length `len`.
fn delete_codes(q: u32, len: usize, level: &[u64], buf: &mut Vec<u8>) -> Vec<u64> {
    let mut out = Vec::with_capacity(level.len() * len);
    buf.resize(len, 0);
    for &c in level {
        decode_into(q, c, buf);
        for i in 0..len {
            let skip = |j: &usize| *j != i;
            let code = (0..len)
                .filter(skip)
                .fold(0u64, |acc, j| acc * u64::from(q) + u64::from(buf[j]));
            out.push(code);
        }
    }
    sort_dedup(out)
}

/// One round of single-symbol insertions over a set of codes of length `len`.
fn insert_codes(q: u32, len: usize, level: &[u64], buf: &mut Vec<u8>) -> Vec<u64> {
    let qq = u64::from(q);
    let mut out = Vec::with_capacity(level.len() * (len + 1) * q as usize);
    buf.resize(len, 0);
    for &c in level {
        decode_into(q, c, buf);
        let mut prefix = 0u64;
        let mut suffix_scale = qq.pow(len as u32);
        for pos in 0..=len {
            // code = prefix * q^(len-pos+1) + s * q^(len-pos) + suffix
            let suffix = c % suffix_scale;
            let head = prefix * suffix_scale * qq;
            for s in 0..qq {
                out.push(head + s * suffix_scale + suffix);
            }
            if pos < len {
                prefix = prefix * qq + u64::from(buf[pos]);
                suffix_scale /= qq;
            }
        }
    }
    sort_dedup(out)
}

/// Sorted codes of `D_t(x)` for `x` given as a code of length `len`.
pub(crate) fn deletion_ball_codes(q: u32, len: usize, x: u64, t: usize) -> Vec<u64> {
    let mut buf = Vec::new();
    let mut level = vec![x];
    for k in 0..t {
        level = delete_codes(q, len - k, &level, &mut buf);
    }
    level
}

/// Sorted codes of `I_t(x)`.
pub(crate) fn insertion_ball_codes(q: u32, len: usize, x: u64, t: usize) -> Vec<u64> {
    let mut buf = Vec::new();
    let mut level = vec![x];
    for k in 0..t {
        level = insert_codes(q, len + k, &level, &mut buf);
    }
    level
}

/// Sorted codes of `L_{t,s}(x)`.
pub(crate) fn indel_ball_codes(q: u32, len: usize, x: u64, t: usize, s: usize) -> Vec<u64> {
    let mut buf = Vec::new();
    let mut level = vec![x];
    for k in 0..t {
        level = delete_codes(q, len - k, &level, &mut buf);
    }
    for k in 0..s {
        level = insert_codes(q, len - t + k, &level, &mut buf);
    }
    level
}

#[allow(dead_code)]
pub(crate) fn code_of(w: &Word) -> u64 {
    encode(w.q(), w.symbols())
}
