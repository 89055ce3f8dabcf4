//! Rate-curve emission: `method,delta,rate`, one method after another with
//! ascending `delta`, plus marker rows for annotations.

use anyhow::bail;

use super::output::{real, Sheet, NA};
use crate::upper_bounds::{bgh_zero_rate_threshold, zero_rate_threshold};
use crate::{evaluate_rate, RateMethod};

pub const DEFAULT_STEP: f64 = 0.005;
/// Tag of the marker row for the positive-rate threshold `1 - 2/(q + sqrt q)`.
pub const BGH_TAG: &str = "bgh17";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Annotation {
    BghThreshold,
}

#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub q: u32,
    pub delta_min: f64,
    pub delta_max: f64,
    pub step: f64,
    pub methods: Vec<RateMethod>,
    pub annotations: Vec<Annotation>,
}

impl CurveSpec {
    /// All methods and the threshold marker on `[0, 1 - 1/q]`.
    pub fn standard(q: u32) -> Self {
        Self {
            q,
            delta_min: 0.0,
            delta_max: zero_rate_threshold(q),
            step: DEFAULT_STEP,
            methods: RateMethod::ALL.to_vec(),
            annotations: vec![Annotation::BghThreshold],
        }
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.q < 2 {
            bail!("alphabet size q = {} must be at least 2", self.q);
        }
        let ordered = 0.0 <= self.delta_min && self.delta_min < self.delta_max;
        if !(ordered && self.delta_max <= 1.0) {
            bail!(
                "delta range [{}, {}] must satisfy 0 <= min < max <= 1",
                self.delta_min,
                self.delta_max
            );
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            bail!("step {} must be positive", self.step);
        }
        if self.methods.is_empty() {
            bail!("no rate methods selected");
        }
        Ok(())
    }

    /// Grid points `delta_min + i * step` up to `delta_max` (inclusive, with
    /// a little slack so that e.g. 0.5 survives accumulated round-off).
    pub fn grid(&self) -> Vec<f64> {
        let count = ((self.delta_max - self.delta_min) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|i| self.delta_min + i as f64 * self.step)
            .map(|d| d.min(self.delta_max))
            .collect()
    }

    pub fn evaluate(&self) -> anyhow::Result<Sheet> {
        self.validate()?;
        let grid = self.grid();
        let mut sheet = Sheet::new(&["method", "delta", "rate"])
            .meta("q", self.q.to_string())
            .meta("step", real(self.step))
            .meta("points", grid.len().to_string());
        for &method in &self.methods {
            for &delta in &grid {
                let p = evaluate_rate(method, self.q, delta)?;
                sheet.push(vec![method.tag().into(), real(p.delta), real(p.rate)]);
            }
        }
        for a in &self.annotations {
            match a {
                Annotation::BghThreshold => {
                    let x = bgh_zero_rate_threshold(self.q);
                    sheet.push(vec![BGH_TAG.into(), real(x), NA.into()]);
                }
            }
        }
        Ok(sheet)
    }
}
