use crate::arith::{Alpha, SigmaTable};
use crate::error::{LabError, Result};
use crate::errorterm::ErrorEvaluator;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecordEntry {
    pub x: f64,
    pub e_value: f64,
    pub normalized: f64,
}

/// Successive strict maxima of `|E_α(x)| / (x ln x)^{1/4+α/2}` over half-integers.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RecordList {
    entries: Vec<RecordEntry>,
}

impl RecordList {
    pub fn entries(&self) -> &[RecordEntry] {
        &self.entries
    }

    pub fn last(&self) -> Option<&RecordEntry> {
        self.entries.last()
    }

    fn push(&mut self, entry: RecordEntry) {
        debug_assert!(self
            .entries
            .last()
            .is_none_or(|p| entry.normalized.abs() > p.normalized.abs() && entry.x > p.x));
        self.entries.push(entry);
    }
}

fn half_integers(x_max: f64, table: &SigmaTable) -> Result<std::ops::RangeInclusive<u64>> {
    if !(x_max >= 1.5) || !x_max.is_finite() {
        return Err(LabError::domain(format!(
            "record scan needs x_max >= 1.5, got {x_max}"
        )));
    }
    let last = (x_max - 0.5).floor() as u64;
    table.require("record scan", last)?;
    Ok(1..=last)
}

/// Scan `x = 1.5, 2.5, ...` up to `x_max`, keeping each new maximum of `|normalized E|`.
pub fn record_scan(alpha: Alpha, x_max: f64, table: &SigmaTable) -> Result<RecordList> {
    if alpha.value().to_bits() != table.alpha().value().to_bits() {
        return Err(LabError::domain(
            "record scan alpha does not match the table",
        ));
    }
    let eval = ErrorEvaluator::new(table)?;
    let mut records = RecordList::default();
    let mut best = f64::NEG_INFINITY;
    for k in half_integers(x_max, table)? {
        let s = eval.sample(k as f64 + 0.5)?;
        if s.normalized.abs() > best {
            best = s.normalized.abs();
            records.push(RecordEntry {
                x: s.x,
                e_value: s.e_value,
                normalized: s.normalized,
            });
        }
    }
    Ok(records)
}

/// Maximum of `|normalized E|` over the half-integers of each block `[2^k, 2^{k+1})`.
pub fn dyadic_block_maxima(
    alpha: Alpha,
    x_max: f64,
    table: &SigmaTable,
) -> Result<Vec<(u32, f64)>> {
    if alpha.value().to_bits() != table.alpha().value().to_bits() {
        return Err(LabError::domain(
            "block scan alpha does not match the table",
        ));
    }
    let eval = ErrorEvaluator::new(table)?;
    let mut out: Vec<(u32, f64)> = Vec::new();
    for k in half_integers(x_max, table)? {
        let x = k as f64 + 0.5;
        let block = x.log2().floor() as u32;
        let v = eval.sample(x)?.normalized.abs();
        match out.last_mut() {
            Some((b, m)) if *b == block => *m = m.max(v),
            _ => out.push((block, v)),
        }
    }
    Ok(out)
}
