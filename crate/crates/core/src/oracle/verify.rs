//! Direct, enumeration-based checks of the identities and lemmas behind the
//! bounds. Each check returns a [`Report`] rather than panicking so the CLI
//! can print a summary and the first counterexample.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::balls::{deletion_ball_codes, indel_ball_codes, insertion_ball_codes};
use super::codes::{exact_max_code_size_budgeted, Code};
use super::pairs::pair_histogram;
use super::word::check_guard;
use crate::combinatorics::{count_words_by_pair_number, insertion_ball_size, pow};
use crate::lower_bounds::{improved_lower, improved_lower_closed_form, levenshtein_lower, overlap_sum};
use crate::params::CodeParams;
use crate::upper_bounds::{
    elias_t_admissible, elias_type_upper, list_size_ratio, sphere_packing_upper,
};
use crate::{Error, ExactInt, ExactRational, Result};

/// Outcome of one verification.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub passed: bool,
    pub details: BTreeMap<String, String>,
    pub counterexample: Option<String>,
}

impl Report {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            details: BTreeMap::new(),
            counterexample: None,
        }
    }

    fn detail(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.to_owned(), value.to_string());
        self
    }

    fn fail(&mut self, counterexample: impl Into<String>) {
        if self.passed {
            self.counterexample = Some(counterexample.into());
        }
        self.passed = false;
    }
}

fn big(v: &ExactInt) -> String {
    v.to_string()
}

/// Default guard for the enumeration checks: `2^26` words.
pub const ENUMERATION_GUARD_BITS: u32 = 26;

/// Checks `sum_{y in Σ^{n+t}} |D_t(y)| = sum_{x in Σ^n} |I_t(x)| = q^n I_q(n,t)`,
/// with both sums taken by enumeration.
pub fn verify_double_counting(q: u32, n: u32, t: u32, guard_bits: u32) -> Result<Report> {
    let (nu, tu) = (n as usize, t as usize);
    let big_space = check_guard(q, nu + tu, guard_bits, "lower n + t or raise the guard")?;
    let small_space = check_guard(q, nu, guard_bits, "lower n or raise the guard")?;
    let deletion_sum: u64 = (0..big_space)
        .into_par_iter()
        .map(|y| deletion_ball_codes(q, nu + tu, y, tu).len() as u64)
        .sum();
    let insertion_sum: u64 = (0..small_space)
        .into_par_iter()
        .map(|x| insertion_ball_codes(q, nu, x, tu).len() as u64)
        .sum();
    let formula = pow(u64::from(q), n) * insertion_ball_size(q, n, t);
    let mut report = Report::new(format!("double_counting q={q} n={n} t={t}"))
        .detail("sum_deletion_balls", deletion_sum)
        .detail("sum_insertion_balls", insertion_sum)
        .detail("formula", big(&formula));
    if BigInt::from(deletion_sum) != formula || BigInt::from(insertion_sum) != formula {
        report.fail(format!(
            "sum |D_t(y)| = {deletion_sum}, sum |I_t(x)| = {insertion_sum}, q^n I_q(n,t) = {formula}"
        ));
    }
    Ok(report)
}

/// Checks `|I_t(x)| = I_q(n,t)` for every `x` in `Σ^n`.
pub fn verify_insertion_ball_sizes(q: u32, n: u32, t: u32, guard_bits: u32) -> Result<Report> {
    let (nu, tu) = (n as usize, t as usize);
    let space = check_guard(q, nu + tu, guard_bits, "lower n + t or raise the guard")?;
    let small = check_guard(q, nu, guard_bits, "lower n or raise the guard")?;
    debug_assert!(small <= space);
    let expected = insertion_ball_size(q, n, t);
    let expected_u64 = expected.to_u64().expect("fits: bounded by q^(n+t)");
    let bad = (0..small)
        .into_par_iter()
        .find_first(|&x| insertion_ball_codes(q, nu, x, tu).len() as u64 != expected_u64);
    let mut report = Report::new(format!("insertion_ball_size q={q} n={n} t={t}"))
        .detail("words", small)
        .detail("formula", big(&expected));
    if let Some(x) = bad {
        let w = super::word::Word::from_index(q, nu, x);
        let size = insertion_ball_codes(q, nu, x, tu).len();
        report.fail(format!("|I_{t}({w})| = {size} != {expected}"));
    }
    Ok(report)
}

/// Checks the enumerated pair-number histogram against the closed-form count.
pub fn verify_pair_histogram(n: u32, q: u32, guard_bits: u32) -> Result<Report> {
    let hist = pair_histogram(n, q, guard_bits)?;
    let mut report = Report::new(format!("pair_histogram q={q} n={n}"));
    for p in 0..=n / 2 {
        let counted = hist.counts.get(&p).cloned().unwrap_or_else(BigInt::zero);
        let formula = count_words_by_pair_number(n, q, i64::from(p));
        if counted != formula {
            report.fail(format!("p={p}: enumerated {counted}, formula {formula}"));
        }
        report = report.detail(&format!("p{p}"), big(&counted));
    }
    if hist.total() != pow(u64::from(q), n) {
        report.fail(format!("histogram total {} != q^n", hist.total()));
    }
    Ok(report)
}

/// Largest `|D_t(y) ∩ C|` over all `y` in `Σ^{n+t}`, compared against the
/// list-size limit `(n+t)d / ((n+t)d - 2nt)`.
pub fn verify_list_size_bound(code: &Code, t: u32, guard_bits: u32) -> Result<Report> {
    let params = code.params();
    if params.d >= 2 * params.n || !elias_t_admissible(&params, t) {
        return Err(Error::Precondition(format!(
            "t = {t} must satisfy t < nd/(2n-d) with d < 2n for {params}"
        )));
    }
    let (nu, tu) = (params.n as usize, t as usize);
    let space = check_guard(params.q, nu + tu, guard_bits, "lower n + t or raise the guard")?;
    let members: std::collections::HashSet<u64> = code.words().iter().map(|w| w.index()).collect();
    let (max_list, witness) = (0..space)
        .into_par_iter()
        .map(|y| {
            let hits = deletion_ball_codes(params.q, nu + tu, y, tu)
                .into_iter()
                .filter(|z| members.contains(z))
                .count();
            (hits, std::cmp::Reverse(y))
        })
        .max()
        .map(|(h, std::cmp::Reverse(y))| (h, y))
        .unwrap_or((0, 0));
    let (num, den) = list_size_ratio(params.n, params.d, t);
    let limit = num / den;
    let witness = super::word::Word::from_index(params.q, nu + tu, witness);
    let mut report = Report::new(format!("list_size {params} t={t} |C|={}", code.len()))
        .detail("max_list_size", max_list as u64)
        .detail("bound", format!("{num}/{den}"))
        .detail("bound_floor", limit)
        .detail("witness", witness.to_string());
    if max_list as u64 > limit {
        report.fail(format!("|D_{t}({witness}) ∩ C| = {max_list} > {num}/{den}"));
    }
    Ok(report)
}

/// Average of `|L_{t,t}(x)|` over all `x` in `Σ^n`, exactly.
pub fn avg_indel_ball_size(q: u32, n: u32, t: u32, guard_bits: u32) -> Result<ExactRational> {
    if t > n {
        return Err(Error::Precondition(format!("t = {t} exceeds n = {n}")));
    }
    let space = check_guard(q, n as usize, guard_bits, "lower n or raise the guard")?;
    let total: u64 = (0..space)
        .into_par_iter()
        .map(|x| indel_ball_codes(q, n as usize, x, t as usize, t as usize).len() as u64)
        .sum();
    Ok(BigRational::new(BigInt::from(total), BigInt::from(space)))
}

/// Checks that the enumerated average indel-ball size does not exceed the
/// analytic bound `q^-t I_q(n-t,t)^2 - q^-n sum_p N(p)(2^p~ - 1) I(...)`.
pub fn verify_average_ball_bound(q: u32, n: u32, t: u32, guard_bits: u32) -> Result<Report> {
    let average = avg_indel_ball_size(q, n, t, guard_bits)?;
    let ball = insertion_ball_size(q, n - t, t);
    let (sum, _) = overlap_sum(n, q, t)?;
    let bound = BigRational::new(&ball * &ball, pow(u64::from(q), t))
        - BigRational::new(sum, pow(u64::from(q), n));
    let mut report = Report::new(format!("average_indel_ball q={q} n={n} t={t}"))
        .detail("average", average.to_string())
        .detail("bound", bound.to_string());
    if average > bound {
        report.fail(format!("average {average} exceeds bound {bound}"));
    }
    Ok(report)
}

/// Checks that the balls `L_{a,b}(c)` around distinct codewords are disjoint
/// whenever `a + b <= d/2 - 1`.
pub fn verify_unique_decoding(code: &Code, a: u32, b: u32, guard_bits: u32) -> Result<Report> {
    let params = code.params();
    if a + b > params.radius() {
        return Err(Error::Precondition(format!(
            "a + b = {} exceeds d/2 - 1 = {}",
            a + b,
            params.radius()
        )));
    }
    if a > params.n {
        return Err(Error::Precondition(format!("a = {a} exceeds n")));
    }
    let len = params.n as usize;
    check_guard(params.q, len - a as usize + b as usize, guard_bits, "raise the guard")?;
    let mut owner: HashMap<u64, usize> = HashMap::new();
    let mut report = Report::new(format!("unique_decoding {params} a={a} b={b}"))
        .detail("codewords", code.len() as u64);
    'outer: for (i, c) in code.words().iter().enumerate() {
        for y in indel_ball_codes(params.q, len, c.index(), a as usize, b as usize) {
            if let Some(&j) = owner.get(&y) {
                if j != i {
                    let y = super::word::Word::from_index(params.q, len - a as usize + b as usize, y);
                    report.fail(format!(
                        "{y} reachable from both {} and {c}",
                        code.words()[j]
                    ));
                    break 'outer;
                }
            }
            owner.insert(y, i);
        }
    }
    Ok(report.detail("ball_words", owner.len() as u64))
}

/// Checks that every lower bound is at most `A_q(n,d)` and every upper bound
/// at least `A_q(n,d)`, with `A_q(n,d)` from exact clique search.
pub fn verify_sandwich(q: u32, n: u32, d: u32, exact_guard_bits: u32) -> Result<Report> {
    verify_sandwich_budgeted(q, n, d, exact_guard_bits, u64::MAX)
}

/// As [`verify_sandwich`], but a search that exceeds `node_budget` nodes is a
/// failed check (no optimum, no sandwich) rather than an error.
pub fn verify_sandwich_budgeted(
    q: u32,
    n: u32,
    d: u32,
    exact_guard_bits: u32,
    node_budget: u64,
) -> Result<Report> {
    let params = CodeParams::new(q, n, d)?;
    match exact_max_code_size_budgeted(q, n, d, exact_guard_bits, node_budget) {
        Ok(exact) => Ok(sandwich_report(params, &exact.size)?.detail("nodes", exact.stats.nodes)),
        Err(Error::SearchBudget { nodes, best_found }) => {
            let mut report = Report::new(format!("sandwich {params}"))
                .detail("nodes", nodes)
                .detail("best_found", best_found);
            report.fail(format!(
                "exact search for {params} not finished after {nodes} nodes (best code {best_found} words)"
            ));
            Ok(report)
        }
        Err(e) => Err(e),
    }
}

pub(crate) fn sandwich_report(params: CodeParams, exact: &ExactInt) -> Result<Report> {
    let mut report = Report::new(format!("sandwich {params}")).detail("exact", big(exact));
    let mut lowers = vec![("lev", levenshtein_lower(params)?.value)];
    if params.d >= 4 {
        lowers.push(("cor3", improved_lower_closed_form(params)?.value));
        lowers.push(("thm4", improved_lower(params)?.value));
    }
    let mut uppers = vec![("thm1", sphere_packing_upper(params)?.value)];
    if params.d < 2 * params.n {
        uppers.push(("thm2", elias_type_upper(params)?.value));
    }
    for (name, v) in &lowers {
        report = report.detail(name, big(v));
        if v > exact {
            report.fail(format!("{name} lower bound {v} exceeds A = {exact}"));
        }
    }
    for (name, v) in &uppers {
        report = report.detail(name, big(v));
        if v < exact {
            report.fail(format!("{name} upper bound {v} is below A = {exact}"));
        }
    }
    Ok(report)
}

/// Summary value for JSON output.
pub fn reports_json(reports: &[Report]) -> Value {
    json!({
        "passed": reports.iter().all(|r| r.passed),
        "reports": reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::codes::{
        exact_max_code_size, greedy_code, GreedyStrategy, EXACT_GUARD_BITS, GREEDY_GUARD_BITS,
    };
    use crate::oracle::word::Word;

    #[test]
    fn double_counting_example() {
        let r = verify_double_counting(2, 6, 2, ENUMERATION_GUARD_BITS).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["formula"], "2368");
        assert_eq!(r.details["sum_deletion_balls"], "2368");
    }

    #[test]
    fn list_size_example() {
        let p = CodeParams::new(2, 2, 4).unwrap();
        let code = Code::new(p, vec![Word::parse(2, "00").unwrap(), Word::parse(2, "11").unwrap()])
            .unwrap();
        // d = 2n, so no t is admissible
        assert!(verify_list_size_bound(&code, 1, ENUMERATION_GUARD_BITS).is_err());

        let p = CodeParams::new(2, 4, 4).unwrap();
        let code = Code::new(
            p,
            vec![Word::parse(2, "0000").unwrap(), Word::parse(2, "1111").unwrap()],
        )
        .unwrap();
        let r = verify_list_size_bound(&code, 1, ENUMERATION_GUARD_BITS).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["bound"], "20/12");
        assert_eq!(r.details["max_list_size"], "1");
    }

    #[test]
    fn unique_decoding_on_exact_codes() {
        for (n, d) in [(5, 4), (6, 4), (6, 6), (7, 6)] {
            let code = exact_max_code_size(2, n, d, EXACT_GUARD_BITS).unwrap().code;
            let r = d / 2 - 1;
            for a in 0..=r {
                let rep = verify_unique_decoding(&code, a, r - a, ENUMERATION_GUARD_BITS).unwrap();
                assert!(rep.passed, "{:?}", rep.counterexample);
            }
            assert!(verify_unique_decoding(&code, r + 1, 0, ENUMERATION_GUARD_BITS).is_err());
        }
    }

    #[test]
    fn unique_decoding_detects_bad_code() {
        // Bypass validation to build a set that is not a distance-4 code.
        let p = CodeParams::new(2, 3, 4).unwrap();
        let good = Code::new(p, vec![Word::parse(2, "000").unwrap()]).unwrap();
        let mut bad = good.clone();
        bad.words_mut_for_test().push(Word::parse(2, "001").unwrap());
        let rep = verify_unique_decoding(&bad, 1, 0, ENUMERATION_GUARD_BITS).unwrap();
        assert!(!rep.passed);
        assert!(rep.counterexample.is_some());
    }

    #[test]
    fn average_ball_size() {
        for (q, n) in [(2, 5), (3, 4)] {
            assert_eq!(
                avg_indel_ball_size(q, n, 0, ENUMERATION_GUARD_BITS).unwrap(),
                BigRational::from_integer(BigInt::from(1))
            );
        }
        for (q, n, t) in [(2, 8, 1), (2, 10, 2), (3, 6, 1), (4, 5, 2)] {
            let r = verify_average_ball_bound(q, n, t, ENUMERATION_GUARD_BITS).unwrap();
            assert!(r.passed, "{:?}", r.counterexample);
        }
    }

    #[test]
    fn insertion_sizes_and_histograms() {
        assert!(verify_insertion_ball_sizes(3, 4, 2, ENUMERATION_GUARD_BITS).unwrap().passed);
        assert!(verify_pair_histogram(8, 2, ENUMERATION_GUARD_BITS).unwrap().passed);
        assert!(verify_pair_histogram(5, 3, ENUMERATION_GUARD_BITS).unwrap().passed);
    }

    #[test]
    fn sandwich_small() {
        for n in 4..=7 {
            let r = verify_sandwich(2, n, 4, EXACT_GUARD_BITS).unwrap();
            assert!(r.passed, "{:?}", r.counterexample);
        }
    }

    #[test]
    fn sandwich_detects_violation() {
        let p = CodeParams::new(2, 6, 4).unwrap();
        let r = sandwich_report(p, &BigInt::from(1000)).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn greedy_min_degree_beats_lower_bound() {
        let c = greedy_code(2, 8, 4, GreedyStrategy::MinDegree, GREEDY_GUARD_BITS).unwrap();
        let p = CodeParams::new(2, 8, 4).unwrap();
        assert!(BigInt::from(c.len()) >= improved_lower_closed_form(p).unwrap().value);
    }
}
