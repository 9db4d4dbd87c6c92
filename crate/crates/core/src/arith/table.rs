use super::Alpha;
use crate::eft::CompensatedSum;
use crate::error::{LabError, Result};

/// Dense table of `σ_α(n)` for `n = 1..=n_max` together with prefix sums
/// `S(k) = Σ_{n≤k} σ_α(n)`.
///
/// Immutable once built; share it freely between scan workers.
#[derive(Debug, Clone)]
pub struct SigmaTable {
    alpha: Alpha,
    values: Vec<f64>,
    // prefix[k] = S(k), prefix[0] = 0
    prefix: Vec<f64>,
}

impl SigmaTable {
    /// Wrap raw values (index 0 holds `σ_α(1)`), recomputing prefix sums.
    pub fn from_values(alpha: Alpha, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(LabError::domain("sigma table needs n_max >= 1"));
        }
        if values[0] != 1.0 {
            return Err(LabError::domain(format!(
                "sigma_alpha(1) must be exactly 1, got {}",
                values[0]
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite() || *v < 1.0) {
            return Err(LabError::domain(format!(
                "invalid sigma value {} at n = {}",
                values[i],
                i + 1
            )));
        }
        let mut prefix = Vec::new();
        prefix
            .try_reserve_exact(values.len() + 1)
            .map_err(|e| LabError::Resource(format!("prefix sums: {e}")))?;
        prefix.push(0.0);
        let mut acc = CompensatedSum::new();
        for v in &values {
            acc.add(*v);
            prefix.push(acc.value());
        }
        Ok(Self {
            alpha,
            values,
            prefix,
        })
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn n_max(&self) -> u64 {
        self.values.len() as u64
    }

    /// `σ_α(n)` for `1 <= n <= n_max`.
    #[inline]
    pub fn value(&self, n: u64) -> f64 {
        self.values[(n - 1) as usize]
    }

    /// `S(k)` for `0 <= k <= n_max`.
    #[inline]
    pub fn prefix(&self, k: u64) -> f64 {
        self.prefix[k as usize]
    }

    /// Raw values, index 0 holding `σ_α(1)`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn require(&self, what: &'static str, n: u64) -> Result<()> {
        if n > self.n_max() {
            Err(LabError::Range {
                what,
                required: n,
                available: self.n_max(),
            })
        } else {
            Ok(())
        }
    }
}

/// Divisor-enumeration sieve: every `d` adds `d^α` to each of its multiples,
/// in the order `d = 1, 2, ..., n_max`.
pub fn build_sigma_table(n_max: u64, alpha: Alpha) -> Result<SigmaTable> {
    if n_max == 0 {
        return Err(LabError::domain("n_max must be >= 1"));
    }
    let len = usize::try_from(n_max)
        .map_err(|_| LabError::Resource(format!("n_max {n_max} does not fit in memory")))?;
    let mut values: Vec<f64> = Vec::new();
    values
        .try_reserve_exact(len)
        .map_err(|e| LabError::Resource(format!("sigma table of {n_max} entries: {e}")))?;
    values.resize(len, 0.0);
    let a = alpha.value();
    for d in 1..=len {
        let p = (d as f64).powf(a);
        for slot in values[d - 1..].iter_mut().step_by(d) {
            *slot += p;
        }
    }
    SigmaTable::from_values(alpha, values)
}

/// Successive strict maxima of `σ_α(n)` as `(n, value)` records.
pub fn running_sup(table: &SigmaTable) -> Vec<(u64, f64)> {
    let mut records = Vec::new();
    let mut best = f64::NEG_INFINITY;
    for (i, &v) in table.values().iter().enumerate() {
        if v > best {
            best = v;
            records.push((i as u64 + 1, v));
        }
    }
    records
}
