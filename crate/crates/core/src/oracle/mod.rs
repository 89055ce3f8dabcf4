//! Brute-force ground truth: enumeration of words, balls and codes, and
//! direct checks of the identities the bounds rely on.

pub mod balls;
pub mod clique;
pub mod codes;
pub mod pairs;
pub mod verify;
pub mod word;

pub use balls::{deletion_ball, indel_ball, insertion_ball, levenshtein_distance};
pub use codes::{exact_max_code_size, greedy_code, Code, ExactCode, GreedyStrategy};
pub use pairs::{max_disjoint_pairs, pair_histogram, PairHistogram};
pub use word::{all_words, Word};
