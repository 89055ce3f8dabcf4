use std::fmt;

use crate::{Error, Result};

/// A word over the alphabet `{0, ..., q-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    q: u32,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(q: u32, symbols: Vec<u8>) -> Result<Self> {
        if !(2..=256).contains(&q) {
            return Err(Error::Precondition(format!("alphabet size {q} outside 2..=256")));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| u32::from(s) >= q) {
            return Err(Error::Precondition(format!("symbol {bad} not below q = {q}")));
        }
        Ok(Self { q, symbols })
    }

    /// Parses a word written as a digit string, e.g. `"01101"`.
    pub fn parse(q: u32, text: &str) -> Result<Self> {
        let symbols = text
            .chars()
            .map(|c| {
                c.to_digit(36)
                    .and_then(|v| u8::try_from(v).ok())
                    .ok_or_else(|| Error::Precondition(format!("bad symbol {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, symbols)
    }

    pub(crate) fn from_raw(q: u32, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| u32::from(s) < q));
        Self { q, symbols }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Position of this word in the lexicographic enumeration of `Σ^len`.
    pub fn index(&self) -> u64 {
        encode(self.q, &self.symbols)
    }

    /// The word of length `len` at lexicographic position `index`.
    pub fn from_index(q: u32, len: usize, index: u64) -> Self {
        let mut symbols = vec![0u8; len];
        decode_into(q, index, &mut symbols);
        Self { q, symbols }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            let c = char::from_digit(u32::from(s), 36).unwrap_or('?');
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Big-endian base-`q` value of `symbols`; lexicographic order equals
/// numeric order for a fixed length.
pub(crate) fn encode(q: u32, symbols: &[u8]) -> u64 {
    symbols
        .iter()
        .fold(0u64, |acc, &s| acc * u64::from(q) + u64::from(s))
}

pub(crate) fn decode_into(q: u32, mut index: u64, out: &mut [u8]) {
    let q = u64::from(q);
    for slot in out.iter_mut().rev() {
        *slot = (index % q) as u8;
        index /= q;
    }
}

/// `q^len`, if it fits in 64 bits.
pub(crate) fn space_size(q: u32, len: usize) -> Option<u64> {
    u64::from(q).checked_pow(u32::try_from(len).ok()?)
}

/// Fails unless `q^len <= 2^guard_bits`.
pub(crate) fn check_guard(q: u32, len: usize, guard_bits: u32, hint: &'static str) -> Result<u64> {
    let limit = 1u64.checked_shl(guard_bits).unwrap_or(u64::MAX);
    match space_size(q, len) {
        Some(size) if size <= limit => Ok(size),
        _ => Err(Error::GuardExceeded {
            space: format!("{q}^{len}"),
            guard_bits,
            hint,
        }),
    }
}

/// Every word of `Σ^len` in lexicographic order.
pub fn all_words(q: u32, len: usize) -> impl Iterator<Item = Word> {
    let size = space_size(q, len).expect("space too large to enumerate");
    (0..size).map(move |i| Word::from_index(q, len, i))
}
