//! The `indel-bounds` command line.

pub mod curve;
pub mod output;
pub mod suites;
pub mod table;

use std::io::Write;

use anyhow::{anyhow, bail};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::oracle::codes::{
    exact_max_code_size_budgeted, greedy_code, GreedyStrategy, EXACT_GUARD_BITS,
    GREEDY_GUARD_BITS,
};
use crate::{evaluate, CodeParams, Error, Method, RateMethod};
use curve::{Annotation, CurveSpec};
pub use output::Format;
use output::{Sheet, NA};
use suites::{run_suite, Suite, SuiteOptions};
use table::TableSpec;

#[derive(Debug, Parser)]
#[command(
    name = "indel-bounds",
    version,
    about = "Bounds on the size of codes correcting insertions and deletions"
)]
pub struct Cli {
    /// Output format for every command.
    #[arg(long, value_enum, global = true, default_value = "csv")]
    pub format: Format,

    /// Refuse to enumerate spaces larger than 2^BITS words (overrides the
    /// per-command defaults).
    #[arg(long = "guard-max-space", value_name = "BITS", global = true)]
    pub guard_max_space: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub d: u32,
}

impl ParamArgs {
    fn params(self) -> crate::Result<CodeParams> {
        CodeParams::new(self.q, self.n, self.d)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate bounds at one (q, n, d).
    Bound {
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated tags: thm1, thm2, lev, cor3, thm4, exact, greedy.
        #[arg(long)]
        methods: Option<String>,
    },
    /// Print a table of bounds: a built-in one or `custom`.
    Table {
        /// `paper-table-1`, `paper-table-2` or `custom`.
        name: String,
        /// Rows for `custom`: `q,n,d;q,n,d;...`.
        #[arg(long)]
        rows: Option<String>,
        /// Method tags for `custom` (default: thm1,thm2,lev,cor3,thm4).
        #[arg(long)]
        columns: Option<String>,
    },
    /// Emit asymptotic rate curves as `method,delta,rate`.
    RateCurve {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 0.0)]
        delta_min: f64,
        /// Defaults to 1 - 1/q.
        #[arg(long)]
        delta_max: Option<f64>,
        #[arg(long, default_value_t = curve::DEFAULT_STEP)]
        step: f64,
        /// Comma-separated tags: cor1, cor2, elias, mrrw, gv_lb.
        #[arg(long)]
        methods: Option<String>,
        /// Omit the threshold marker row.
        #[arg(long)]
        no_annotations: bool,
    },
    /// Check formulas against brute-force enumeration.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        max_t: Option<u32>,
        /// Give up on an exact search after this many branch-and-bound nodes.
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// Largest code by exact maximum-clique search, with a witness.
    Exact {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// A maximal code built greedily.
    Greedy {
        #[command(flatten)]
        params: ParamArgs,
        /// `lex` or `min_degree`.
        #[arg(long, default_value = "min_degree")]
        strategy: String,
    },
}

pub const DEFAULT_BOUND_METHODS: [Method; 5] = [
    Method::SpherePacking,
    Method::EliasType,
    Method::LevLB,
    Method::Cor3LB,
    Method::Thm4LB,
];

pub fn parse_methods(text: &str) -> anyhow::Result<Vec<Method>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Method::from_tag(s).ok_or_else(|| anyhow!("unknown method `{s}`")))
        .collect::<anyhow::Result<Vec<_>>>()
        .and_then(|v| if v.is_empty() { Err(anyhow!("no methods given")) } else { Ok(v) })
}

fn parse_rate_methods(text: &str) -> anyhow::Result<Vec<RateMethod>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| RateMethod::from_tag(s).ok_or_else(|| anyhow!("unknown rate method `{s}`")))
        .collect()
}

fn code_words(code: &crate::oracle::Code) -> String {
    code.words().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let guard = cli.guard_max_space;
    match &cli.command {
        Command::Bound { params, methods } => {
            let p = params.params()?;
            let (list, explicit) = match methods {
                Some(m) => (parse_methods(m)?, true),
                None => (DEFAULT_BOUND_METHODS.to_vec(), false),
            };
            let mut sheet = Sheet::new(&["q", "n", "d", "method", "direction", "value", "aux"])
                .meta("command", "bound");
            let mut code = 0;
            for m in list {
                let (value, aux) = match evaluate(m, p, guard) {
                    Ok(b) => {
                        let aux: Vec<String> = b.aux.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        (b.value.to_string(), aux.join(";"))
                    }
                    Err(Error::Inapplicable { reason, .. }) => {
                        if explicit {
                            writeln!(err, "{}: not applicable at {p}: {reason}", m.tag())?;
                            code = 1;
                        }
                        (NA.to_owned(), format!("reason={reason}"))
                    }
                    Err(e) => return Err(e.into()),
                };
                sheet.push(vec![
                    p.q.to_string(),
                    p.n.to_string(),
                    p.d.to_string(),
                    m.tag().into(),
                    m.direction().to_string(),
                    value,
                    aux,
                ]);
            }
            sheet.render(cli.format, out)?;
            Ok(code)
        }
        Command::Table { name, rows, columns } => {
            let spec = if name == "custom" {
                let rows = rows.as_deref().ok_or_else(|| anyhow!("`custom` needs --rows"))?;
                TableSpec::custom(rows, columns.as_deref().unwrap_or("thm1,thm2,lev,cor3,thm4"))?
            } else {
                if rows.is_some() || columns.is_some() {
                    bail!("--rows/--columns only apply to `custom`");
                }
                TableSpec::builtin(name).ok_or_else(|| {
                    anyhow!(
                        "unknown table `{name}` (expected one of {}, custom)",
                        table::BUILTIN_NAMES.join(", ")
                    )
                })?
            };
            spec.evaluate(guard)?.meta("table", name.as_str()).render(cli.format, out)?;
            Ok(0)
        }
        Command::RateCurve {
            q,
            delta_min,
            delta_max,
            step,
            methods,
            no_annotations,
        } => {
            let mut spec = CurveSpec::standard(*q);
            spec.delta_min = *delta_min;
            if let Some(m) = delta_max {
                spec.delta_max = *m;
            }
            spec.step = *step;
            if let Some(m) = methods {
                spec.methods = parse_rate_methods(m)?;
            }
            if *no_annotations {
                spec.annotations.clear();
            } else {
                spec.annotations = vec![Annotation::BghThreshold];
            }
            spec.evaluate()?.render(cli.format, out)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            q,
            max_n,
            d,
            max_t,
            node_budget,
        } => {
            let opts = SuiteOptions {
                q: *q,
                max_n: *max_n,
                d: *d,
                max_t: *max_t,
                guard_bits: guard,
                node_budget: *node_budget,
            };
            let reports = run_suite(*suite, &opts)?;
            let passed = reports.iter().filter(|(_, r)| r.passed).count();
            let all_passed = passed == reports.len();
            match cli.format {
                Format::Json => {
                    let rows: Vec<_> = reports
                        .iter()
                        .map(|(s, r)| json!({ "suite": s.tag(), "report": r }))
                        .collect();
                    let doc = json!({
                        "meta": {
                            "command": "verify",
                            "suite": suite.tag(),
                            "checks": reports.len().to_string(),
                            "passed": passed.to_string(),
                            "ok": all_passed,
                        },
                        "rows": rows,
                    });
                    serde_json::to_writer_pretty(&mut *out, &doc)?;
                    writeln!(out)?;
                }
                Format::Csv => {
                    let mut sheet = Sheet::new(&["suite", "check", "passed", "details", "counterexample"])
                        .meta("command", "verify");
                    for (s, r) in &reports {
                        sheet.push(vec![
                            s.tag().into(),
                            r.name.clone(),
                            r.passed.to_string(),
                            serde_json::to_string(&r.details)?,
                            r.counterexample.clone().unwrap_or_default(),
                        ]);
                    }
                    sheet.render(cli.format, out)?;
                }
                Format::Pretty => {
                    for (s, r) in &reports {
                        let mark = if r.passed { "PASS" } else { "FAIL" };
                        writeln!(out, "{mark} [{}] {}", s.tag(), r.name)?;
                    }
                    writeln!(out, "{passed}/{} checks passed", reports.len())?;
                }
            }
            if let Some((s, r)) = reports.iter().find(|(_, r)| !r.passed) {
                writeln!(
                    err,
                    "verification failed in {} ({}): {}",
                    s.tag(),
                    r.name,
                    r.counterexample.as_deref().unwrap_or("no counterexample recorded")
                )?;
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Exact { params, node_budget } => {
            let p = params.params()?;
            let found = exact_max_code_size_budgeted(
                p.q,
                p.n,
                p.d,
                guard.unwrap_or(EXACT_GUARD_BITS),
                node_budget.unwrap_or(u64::MAX),
            )?;
            let mut sheet =
                Sheet::new(&["q", "n", "d", "size", "nodes", "code"]).meta("command", "exact");
            sheet.push(vec![
                p.q.to_string(),
                p.n.to_string(),
                p.d.to_string(),
                found.size.to_string(),
                found.stats.nodes.to_string(),
                code_words(&found.code),
            ]);
            sheet.render(cli.format, out)?;
            Ok(0)
        }
        Command::Greedy { params, strategy } => {
            let p = params.params()?;
            let s = GreedyStrategy::from_tag(strategy)
                .ok_or_else(|| anyhow!("unknown strategy `{strategy}` (lex, min_degree)"))?;
            let code = greedy_code(p.q, p.n, p.d, s, guard.unwrap_or(GREEDY_GUARD_BITS))?;
            let mut sheet =
                Sheet::new(&["q", "n", "d", "strategy", "size", "code"]).meta("command", "greedy");
            sheet.push(vec![
                p.q.to_string(),
                p.n.to_string(),
                p.d.to_string(),
                strategy.clone(),
                code.len().to_string(),
                code_words(&code),
            ]);
            sheet.render(cli.format, out)?;
            Ok(0)
        }
    }
}

