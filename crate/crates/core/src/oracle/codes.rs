//! Codes at desk scale: exact maximum codes by clique search and greedy
//! maximal codes.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::balls::{indel_ball_codes, levenshtein_distance};
use super::clique::{max_clique_budgeted, Bitset, CliqueStats, Graph};
use super::word::{check_guard, Word};
use crate::params::CodeParams;
use crate::{Error, ExactInt, Result};

/// A set of distinct words of length `n` with pairwise Levenshtein distance
/// at least `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    params: CodeParams,
    words: Vec<Word>,
    min_distance: Option<usize>,
}

impl Code {
    /// Validates and builds a code; words are stored in lexicographic order.
    pub fn new(params: CodeParams, mut words: Vec<Word>) -> Result<Self> {
        words.sort();
        words.dedup();
        for w in &words {
            if w.len() != params.n as usize || w.q() != params.q {
                return Err(Error::Precondition(format!(
                    "word {w} does not belong to Σ^n for {params}"
                )));
            }
        }
        let mut min_distance: Option<usize> = None;
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let dist = levenshtein_distance(a, b)?;
                if dist < params.d as usize {
                    return Err(Error::Precondition(format!(
                        "codewords {a} and {b} are at distance {dist} < {}",
                        params.d
                    )));
                }
                min_distance = Some(min_distance.map_or(dist, |m| m.min(dist)));
            }
        }
        Ok(Self {
            params,
            words,
            min_distance,
        })
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[cfg(test)]
    pub(crate) fn words_mut_for_test(&mut self) -> &mut Vec<Word> {
        &mut self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest pairwise distance, `None` for codes with fewer than two words.
    pub fn min_distance(&self) -> Option<usize> {
        self.min_distance
    }

    fn from_indices(params: CodeParams, indices: &[u64]) -> Result<Self> {
        let words = indices
            .iter()
            .map(|&i| Word::from_index(params.q, params.n as usize, i))
            .collect();
        Self::new(params, words)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", words.join(", "))
    }
}

/// Default guard for exact clique search: `q^n <= 2^14`.
pub const EXACT_GUARD_BITS: u32 = 14;
/// Default guard for greedy codes: `q^n <= 2^20`.
pub const GREEDY_GUARD_BITS: u32 = 20;

/// Neighbours of `x` in the conflict graph: words other than `x` within
/// distance `d - 2`, i.e. `L_{t,t}(x)` with `t = d/2 - 1`.
fn conflicts(params: &CodeParams, x: u64) -> Vec<u64> {
    let t = params.radius() as usize;
    let mut ball = indel_ball_codes(params.q, params.n as usize, x, t, t);
    ball.retain(|&y| y != x);
    ball
}

/// Compatibility graph on `Σ^n`: words are adjacent iff their distance is at
/// least `d`. Codes are exactly its cliques.
pub fn compatibility_graph(params: &CodeParams, size: u64) -> Graph {
    let size = size as usize;
    let conflict_lists: Vec<Vec<u64>> = (0..size as u64)
        .into_par_iter()
        .map(|x| conflicts(params, x))
        .collect();
    let mut g = Graph::new(size);
    let full = Bitset::full(size);
    for (x, list) in conflict_lists.iter().enumerate() {
        let mut row = full.clone();
        row.remove(x);
        for &y in list {
            row.remove(y as usize);
        }
        for y in row.iter().filter(|&y| y > x) {
            g.add_edge(x, y);
        }
    }
    g
}

/// Result of an exact search.
#[derive(Debug, Clone)]
pub struct ExactCode {
    pub size: ExactInt,
    pub code: Code,
    pub stats: CliqueStats,
}

/// `A_q(n,d)` by exact maximum-clique search, with a witness code.
pub fn exact_max_code_size(q: u32, n: u32, d: u32, guard_bits: u32) -> Result<ExactCode> {
    exact_max_code_size_budgeted(q, n, d, guard_bits, u64::MAX)
}

/// As [`exact_max_code_size`], but fails with [`Error::SearchBudget`] if the
/// search visits more than `node_budget` nodes before proving optimality.
pub fn exact_max_code_size_budgeted(
    q: u32,
    n: u32,
    d: u32,
    guard_bits: u32,
    node_budget: u64,
) -> Result<ExactCode> {
    let params = CodeParams::new(q, n, d)?;
    let size = check_guard(q, n as usize, guard_bits, "use greedy_code for larger spaces")?;
    let graph = compatibility_graph(&params, size);
    let seed = greedy_indices(&params, size, GreedyStrategy::MinDegree);
    let seed: Vec<usize> = seed.iter().map(|&i| i as usize).collect();
    let (clique, stats) = max_clique_budgeted(&graph, Some(&seed), node_budget);
    if !stats.complete {
        return Err(Error::SearchBudget {
            nodes: stats.nodes,
            best_found: clique.len() as u64,
        });
    }
    let indices: Vec<u64> = clique.iter().map(|&v| v as u64).collect();
    let code = Code::from_indices(params, &indices)?;
    Ok(ExactCode {
        size: BigInt::from(code.len()),
        code,
        stats,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyStrategy {
    /// Scan `Σ^n` in lexicographic order, keeping every compatible word.
    Lex,
    /// Repeatedly take a minimum-degree vertex of the remaining conflict
    /// graph and delete its closed neighbourhood.
    MinDegree,
}

impl GreedyStrategy {
    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "lex" => Some(Self::Lex),
            "min_degree" | "min-degree" => Some(Self::MinDegree),
            _ => None,
        }
    }
}

fn greedy_indices(params: &CodeParams, size: u64, strategy: GreedyStrategy) -> Vec<u64> {
    let size_usize = size as usize;
    let mut alive = vec![true; size_usize];
    let mut chosen = Vec::new();
    match strategy {
        GreedyStrategy::Lex => {
            for x in 0..size {
                if alive[x as usize] {
                    chosen.push(x);
                    alive[x as usize] = false;
                    for y in conflicts(params, x) {
                        alive[y as usize] = false;
                    }
                }
            }
        }
        GreedyStrategy::MinDegree => {
            let mut degree: Vec<usize> = (0..size)
                .into_par_iter()
                .map(|x| conflicts(params, x).len())
                .collect();
            let mut heap: BinaryHeap<Reverse<(usize, u64)>> =
                (0..size).map(|x| Reverse((degree[x as usize], x))).collect();
            while let Some(Reverse((deg, v))) = heap.pop() {
                if !alive[v as usize] || degree[v as usize] != deg {
                    continue;
                }
                chosen.push(v);
                alive[v as usize] = false;
                let removed: Vec<u64> = conflicts(params, v)
                    .into_iter()
                    .filter(|&u| alive[u as usize])
                    .collect();
                for &u in &removed {
                    alive[u as usize] = false;
                }
                for &u in &removed {
                    for w in conflicts(params, u) {
                        if alive[w as usize] {
                            degree[w as usize] -= 1;
                            heap.push(Reverse((degree[w as usize], w)));
                        }
                    }
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// A maximal code built greedily.
pub fn greedy_code(
    q: u32,
    n: u32,
    d: u32,
    strategy: GreedyStrategy,
    guard_bits: u32,
) -> Result<Code> {
    let params = CodeParams::new(q, n, d)?;
    let size = check_guard(q, n as usize, guard_bits, "lower n or raise the guard")?;
    let indices = greedy_indices(&params, size, strategy);
    Code::from_indices(params, &indices)
}
