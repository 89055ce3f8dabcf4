//! Built-in and custom tables of finite bounds.

use anyhow::{bail, Context};

use super::output::{Sheet, NA};
use crate::{evaluate, CodeParams, Error, Method};

/// A column is either a method this crate evaluates or a published bound
/// whose formula is not available here (always rendered `n/a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Method(Method),
    Unavailable(&'static str),
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub rows: Vec<CodeParams>,
    pub columns: Vec<Column>,
    pub source_label: String,
}

const TABLE_1_ROWS: [(u32, u32, u32); 18] = [
    (2, 20, 4),
    (2, 20, 10),
    (2, 20, 20),
    (2, 20, 30),
    (2, 40, 4),
    (2, 40, 10),
    (2, 40, 20),
    (2, 40, 30),
    (2, 40, 40),
    (4, 20, 4),
    (4, 20, 10),
    (4, 20, 20),
    (4, 20, 30),
    (4, 40, 4),
    (4, 40, 10),
    (4, 40, 20),
    (4, 40, 40),
    (4, 40, 60),
];

const TABLE_2_ROWS: [(u32, u32, u32); 10] = [
    (2, 20, 6),
    (2, 20, 8),
    (2, 40, 6),
    (2, 40, 8),
    (2, 40, 10),
    (4, 20, 6),
    (4, 20, 8),
    (4, 40, 6),
    (4, 40, 8),
    (4, 40, 10),
];

pub const BUILTIN_NAMES: [&str; 2] = ["paper-table-1", "paper-table-2"];

fn rows(list: &[(u32, u32, u32)]) -> Vec<CodeParams> {
    list.iter()
        .map(|&(q, n, d)| CodeParams::new(q, n, d).expect("built-in rows are valid"))
        .collect()
}

impl TableSpec {
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "paper-table-1" => Some(Self {
                rows: rows(&TABLE_1_ROWS),
                columns: vec![
                    Column::Unavailable("lev02_ub"),
                    Column::Unavailable("kk13_ub"),
                    Column::Method(Method::SpherePacking),
                    Column::Method(Method::EliasType),
                ],
                source_label: "upper bounds on code size".into(),
            }),
            "paper-table-2" => Some(Self {
                rows: rows(&TABLE_2_ROWS),
                columns: vec![
                    Column::Method(Method::LevLB),
                    Column::Method(Method::Cor3LB),
                    Column::Method(Method::Thm4LB),
                ],
                source_label: "lower bounds on code size".into(),
            }),
            _ => None,
        }
    }

    /// Parses `q,n,d;q,n,d;...` rows and comma-separated method tags.
    pub fn custom(rows_text: &str, columns_text: &str) -> anyhow::Result<Self> {
        let mut rows = Vec::new();
        for chunk in rows_text.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let fields: Vec<u32> = chunk
                .split(',')
                .map(|f| f.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .with_context(|| format!("row `{chunk}` is not `q,n,d`"))?;
            let [q, n, d] = fields[..] else {
                bail!("row `{chunk}` is not `q,n,d`");
            };
            rows.push(CodeParams::new(q, n, d)?);
        }
        if rows.is_empty() {
            bail!("custom table needs at least one row");
        }
        Ok(Self {
            rows,
            columns: super::parse_methods(columns_text)?
                .into_iter()
                .map(Column::Method)
                .collect(),
            source_label: "custom".into(),
        })
    }

    fn header(&self) -> Vec<&'static str> {
        let mut header = vec!["q", "n", "d"];
        for c in &self.columns {
            header.push(match c {
                Column::Method(m) => m.tag(),
                Column::Unavailable(name) => name,
            });
        }
        header
    }

    /// Evaluates every cell. Inapplicable methods become `n/a`; any other
    /// failure aborts.
    pub fn evaluate(&self, guard_bits: Option<u32>) -> anyhow::Result<Sheet> {
        let mut sheet = Sheet::new(&self.header()).meta("source", self.source_label.as_str());
        for c in &self.columns {
            if let Column::Unavailable(name) = c {
                sheet = sheet.meta(name, "formula not available; column left n/a");
            }
        }
        for &params in &self.rows {
            let mut row = vec![params.q.to_string(), params.n.to_string(), params.d.to_string()];
            for c in &self.columns {
                row.push(match c {
                    Column::Unavailable(_) => NA.to_owned(),
                    Column::Method(m) => match evaluate(*m, params, guard_bits) {
                        Ok(b) => b.value.to_string(),
                        Err(Error::Inapplicable { .. }) => NA.to_owned(),
                        Err(e) => return Err(e).context(format!("{} at {params}", m.tag())),
                    },
                });
            }
            sheet.push(row);
        }
        Ok(sheet)
    }
}
