//! Verification suites run by `verify`. Each suite expands into a list of
//! oracle checks over a parameter grid.

use clap::ValueEnum;

use crate::oracle::codes::{
    exact_max_code_size_budgeted, greedy_code, GreedyStrategy, EXACT_GUARD_BITS,
    GREEDY_GUARD_BITS,
};
use crate::oracle::verify::{
    verify_double_counting, verify_insertion_ball_sizes, verify_list_size_bound,
    verify_pair_histogram, verify_sandwich_budgeted, verify_unique_decoding, Report,
    ENUMERATION_GUARD_BITS,
};
use crate::upper_bounds::elias_t_admissible;
use crate::{CodeParams, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Suite {
    Balls,
    DoubleCounting,
    Histogram,
    ListSize,
    Sandwich,
    UniqueDecoding,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Balls,
        Suite::DoubleCounting,
        Suite::Histogram,
        Suite::ListSize,
        Suite::Sandwich,
        Suite::UniqueDecoding,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::Balls => "balls",
            Suite::DoubleCounting => "double_counting",
            Suite::Histogram => "histogram",
            Suite::ListSize => "list_size",
            Suite::Sandwich => "sandwich",
            Suite::UniqueDecoding => "unique_decoding",
            Suite::All => "all",
        }
    }
}

/// Knobs shared by all suites. `None` means the per-suite default.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub q: Option<u32>,
    pub max_n: Option<u32>,
    pub d: Option<u32>,
    pub max_t: Option<u32>,
    pub guard_bits: Option<u32>,
    pub node_budget: Option<u64>,
}

/// Default node budget for exact searches inside `verify`: roughly a couple
/// of minutes on one core.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

impl SuiteOptions {
    fn alphabets(&self, default: &[u32]) -> Vec<u32> {
        self.q.map_or_else(|| default.to_vec(), |q| vec![q])
    }

    fn distances(&self, default: &[u32]) -> Vec<u32> {
        self.d.map_or_else(|| default.to_vec(), |d| vec![d])
    }

    fn enumeration_guard(&self) -> u32 {
        self.guard_bits.unwrap_or(ENUMERATION_GUARD_BITS)
    }

    fn exact_guard(&self) -> u32 {
        self.guard_bits.unwrap_or(EXACT_GUARD_BITS)
    }

    fn greedy_guard(&self) -> u32 {
        self.guard_bits.unwrap_or(GREEDY_GUARD_BITS)
    }

    fn budget(&self) -> u64 {
        self.node_budget.unwrap_or(DEFAULT_NODE_BUDGET)
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<(Suite, Report)>> {
    let one = |s: Suite, reports: Result<Vec<Report>>| -> Result<Vec<(Suite, Report)>> {
        Ok(reports?.into_iter().map(|r| (s, r)).collect())
    };
    match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                all.extend(run_suite(s, opts)?);
            }
            Ok(all)
        }
        Suite::Balls => one(suite, balls(opts)),
        Suite::DoubleCounting => one(suite, double_counting(opts)),
        Suite::Histogram => one(suite, histogram(opts)),
        Suite::ListSize => one(suite, list_size(opts)),
        Suite::Sandwich => one(suite, sandwich(opts)),
        Suite::UniqueDecoding => one(suite, unique_decoding(opts)),
    }
}

fn balls(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for q in opts.alphabets(&[2, 3]) {
        for n in 1..=opts.max_n.unwrap_or(8) {
            for t in 0..=opts.max_t.unwrap_or(3) {
                out.push(verify_insertion_ball_sizes(q, n, t, opts.enumeration_guard())?);
            }
        }
    }
    Ok(out)
}

fn double_counting(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for q in opts.alphabets(&[2]) {
        for n in 1..=opts.max_n.unwrap_or(10) {
            for t in 0..=opts.max_t.unwrap_or(3) {
                out.push(verify_double_counting(q, n, t, opts.enumeration_guard())?);
            }
        }
    }
    Ok(out)
}

fn histogram(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let defaults = [(2, 14), (3, 9), (4, 7)];
    let plan: Vec<(u32, u32)> = match opts.q {
        Some(q) => {
            let cap = defaults.iter().find(|(dq, _)| *dq == q).map_or(6, |&(_, m)| m);
            vec![(q, opts.max_n.unwrap_or(cap))]
        }
        None => defaults
            .iter()
            .map(|&(q, m)| (q, opts.max_n.unwrap_or(m)))
            .collect(),
    };
    for (q, max_n) in plan {
        for n in 1..=max_n {
            out.push(verify_pair_histogram(n, q, opts.enumeration_guard())?);
        }
    }
    Ok(out)
}

/// Codes for the list-size and unique-decoding suites: the exact optimum
/// (when the search finishes within budget) and both greedy codes.
fn codes_for(q: u32, n: u32, d: u32, opts: &SuiteOptions) -> Result<Vec<crate::oracle::Code>> {
    let mut codes = Vec::new();
    match exact_max_code_size_budgeted(q, n, d, opts.exact_guard(), opts.budget()) {
        Ok(e) => codes.push(e.code),
        Err(Error::SearchBudget { .. } | Error::GuardExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    for strategy in [GreedyStrategy::Lex, GreedyStrategy::MinDegree] {
        let c = greedy_code(q, n, d, strategy, opts.greedy_guard())?;
        if !codes.contains(&c) {
            codes.push(c);
        }
    }
    Ok(codes)
}

fn list_size(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for q in opts.alphabets(&[2]) {
        for d in opts.distances(&[4, 6]) {
            for n in (d / 2 + 1)..=opts.max_n.unwrap_or(8) {
                let params = CodeParams::new(q, n, d)?;
                for code in codes_for(q, n, d, opts)? {
                    let mut t = 0;
                    while elias_t_admissible(&params, t) {
                        out.push(verify_list_size_bound(&code, t, opts.enumeration_guard())?);
                        t += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sandwich(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for q in opts.alphabets(&[2]) {
        for d in opts.distances(&[4]) {
            for n in (d / 2).max(1)..=opts.max_n.unwrap_or(8) {
                out.push(verify_sandwich_budgeted(q, n, d, opts.exact_guard(), opts.budget())?);
            }
        }
    }
    Ok(out)
}

fn unique_decoding(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for q in opts.alphabets(&[2]) {
        for d in opts.distances(&[4, 6]) {
            let r = d / 2 - 1;
            for n in (d / 2).max(1)..=opts.max_n.unwrap_or(7) {
                for code in codes_for(q, n, d, opts)? {
                    for a in 0..=r.min(n) {
                        out.push(verify_unique_decoding(&code, a, r - a, opts.enumeration_guard())?);
                    }
                }
            }
        }
    }
    Ok(out)
}
