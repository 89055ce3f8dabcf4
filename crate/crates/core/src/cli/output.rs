//! One tabular result type rendered three ways. Every cell is already a
//! string: integers in full decimal, reals with six decimals, `n/a` for
//! values that do not exist.

use std::collections::BTreeMap;
use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

pub const NA: &str = "n/a";

pub fn real(x: f64) -> String {
    format!("{x:.6}")
}

#[derive(Debug, Clone, Default)]
pub struct Sheet {
    pub meta: BTreeMap<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Sheet {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            meta: BTreeMap::new(),
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.to_owned(), value.into());
        self
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
        match format {
            Format::Csv => self.csv(out),
            Format::Json => self.json(out),
            Format::Pretty => self.pretty(out),
        }
    }

    fn csv(&self, out: &mut dyn Write) -> anyhow::Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn json_value(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| ((*c).to_owned(), Value::String(v.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        json!({ "meta": self.meta, "rows": rows })
    }

    fn json(&self, out: &mut dyn Write) -> anyhow::Result<()> {
        serde_json::to_writer_pretty(&mut *out, &self.json_value())?;
        writeln!(out)?;
        Ok(())
    }

    fn pretty(&self, out: &mut dyn Write) -> anyhow::Result<()> {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            padded.join("  ").trim_end().to_owned()
        };
        for (k, v) in &self.meta {
            match v {
                Value::String(s) => writeln!(out, "# {k}: {s}")?,
                other => writeln!(out, "# {k}: {other}")?,
            }
        }
        writeln!(out, "{}", line(self.columns.clone()))?;
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        writeln!(out, "{}", rule.join("  "))?;
        for row in &self.rows {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }
}
