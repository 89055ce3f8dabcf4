//! Query parameters and result records shared by every bound.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, ExactInt, Result};

/// A bound query: alphabet size `q`, word length `n` and minimum
/// Levenshtein distance `d`.
///
/// Distances between equal-length words are always even, so only even
/// `d` with `2 <= d <= 2n` are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: u32,
    pub n: u32,
    pub d: u32,
}

impl CodeParams {
    pub fn new(q: u32, n: u32, d: u32) -> Result<Self> {
        let err = |reason| Err(Error::InvalidParams { q, n, d, reason });
        if q < 2 {
            return err("alphabet size q must be at least 2");
        }
        if n < 1 {
            return err("length n must be at least 1");
        }
        if d % 2 != 0 {
            return err("d must be even (equal-length words are at even distance)");
        }
        if d < 2 {
            return err("d must be at least 2");
        }
        if d > 2 * n {
            return err("d must not exceed 2n");
        }
        Ok(Self { q, n, d })
    }

    /// Number of correctable edits, `d/2 - 1`.
    pub fn radius(&self) -> u32 {
        self.d / 2 - 1
    }

    /// Normalized distance `d / 2n`.
    pub fn delta(&self) -> f64 {
        f64::from(self.d) / (2.0 * f64::from(self.n))
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(q={}, n={}, d={})", self.q, self.n, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    SpherePacking,
    EliasType,
    LevLB,
    Cor3LB,
    Thm4LB,
    Exact,
    Greedy,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::SpherePacking,
        Method::EliasType,
        Method::LevLB,
        Method::Cor3LB,
        Method::Thm4LB,
        Method::Exact,
        Method::Greedy,
    ];

    /// Short tag used on the command line and in CSV/JSON output.
    pub fn tag(self) -> &'static str {
        match self {
            Method::SpherePacking => "thm1",
            Method::EliasType => "thm2",
            Method::LevLB => "lev",
            Method::Cor3LB => "cor3",
            Method::Thm4LB => "thm4",
            Method::Exact => "exact",
            Method::Greedy => "greedy",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Method> {
        Self::ALL.into_iter().find(|m| m.tag() == tag)
    }

    pub fn direction(self) -> Direction {
        match self {
            Method::SpherePacking | Method::EliasType => Direction::Upper,
            Method::LevLB | Method::Cor3LB | Method::Thm4LB | Method::Greedy => Direction::Lower,
            Method::Exact => Direction::Exact,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
    Exact,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
            Direction::Exact => "exact",
        })
    }
}

/// An exact bound on `A_q(n,d)` together with the parameters it was
/// optimized over (`aux`), so every value can be recomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub method: Method,
    pub direction: Direction,
    pub value: ExactInt,
    pub aux: BTreeMap<String, String>,
    pub params: CodeParams,
}

impl BoundResult {
    pub(crate) fn new(method: Method, params: CodeParams, value: ExactInt) -> Self {
        Self {
            method,
            direction: method.direction(),
            value,
            aux: BTreeMap::new(),
            params,
        }
    }

    pub(crate) fn with_aux(mut self, key: &str, value: impl ToString) -> Self {
        self.aux.insert(key.to_owned(), value.to_string());
        self
    }

    /// Looks up an auxiliary integer parameter such as the chosen `t`.
    pub fn aux_u32(&self, key: &str) -> Option<u32> {
        self.aux.get(key).and_then(|v| v.parse().ok())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RateMethod {
    Cor1,
    Cor2,
    EliasH,
    Mrrw,
    GvTypeLB,
}

impl RateMethod {
    pub const ALL: [RateMethod; 5] = [
        RateMethod::Cor1,
        RateMethod::Cor2,
        RateMethod::EliasH,
        RateMethod::Mrrw,
        RateMethod::GvTypeLB,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RateMethod::Cor1 => "cor1",
            RateMethod::Cor2 => "cor2",
            RateMethod::EliasH => "elias",
            RateMethod::Mrrw => "mrrw",
            RateMethod::GvTypeLB => "gv_lb",
        }
    }

    pub fn from_tag(tag: &str) -> Option<RateMethod> {
        Self::ALL.into_iter().find(|m| m.tag() == tag)
    }

    pub fn is_upper(self) -> bool {
        !matches!(self, RateMethod::GvTypeLB)
    }
}

impl fmt::Display for RateMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One sample `(delta, rate)` of an asymptotic rate function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePoint {
    pub delta: f64,
    pub rate: f64,
    pub method: RateMethod,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_params() {
        assert!(CodeParams::new(2, 20, 10).is_ok());
        assert!(CodeParams::new(2, 20, 40).is_ok());
        assert!(CodeParams::new(1, 20, 10).is_err());
        assert!(CodeParams::new(2, 0, 2).is_err());
        assert!(CodeParams::new(2, 20, 9).is_err());
        assert!(CodeParams::new(2, 20, 0).is_err());
        assert!(CodeParams::new(2, 20, 42).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for m in Method::ALL {
            assert_eq!(Method::from_tag(m.tag()), Some(m));
        }
        for m in RateMethod::ALL {
            assert_eq!(RateMethod::from_tag(m.tag()), Some(m));
        }
    }
}
