use thiserror::Error;

/// Everything that can go wrong when evaluating a bound or running the oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters (q={q}, n={n}, d={d}): {reason}")]
    InvalidParams {
        q: u32,
        n: u32,
        d: u32,
        reason: &'static str,
    },
    #[error("method {method} is not applicable: {reason}")]
    Inapplicable {
        method: &'static str,
        reason: String,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("value {value} is outside the domain {domain}")]
    Domain { value: f64, domain: &'static str },
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(u32, u32),
    #[error("exact search gave up after {nodes} nodes; best code found has {best_found} words")]
    SearchBudget { nodes: u64, best_found: u64 },
    #[error("enumeration of {space} words exceeds the guard of 2^{guard_bits}; {hint}")]
    GuardExceeded {
        space: String,
        guard_bits: u32,
        hint: &'static str,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
