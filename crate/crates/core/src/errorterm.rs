//! Main terms of `Σ_{n≤x} σ_α(n)` and exact samples of the error term `E_α(x)`.
//!
//! `E_α(x) = S(x) − x^{1+α} ζ(1+α)/(1+α) − x ζ(1−α)`. The residue constant
//! `−ζ(−α)/2` is left inside `E_α`.

use rayon::prelude::*;

use crate::arith::{Alpha, SigmaTable};
use crate::error::{LabError, Result};
use crate::special::zeta_real;

/// Coefficients of the two main terms for a fixed `α`.
#[derive(Debug, Clone, Copy)]
pub struct MainTerm {
    alpha: Alpha,
    lead: f64,
    linear: f64,
}

impl MainTerm {
    pub fn new(alpha: Alpha) -> Result<Self> {
        let a = alpha.value();
        Ok(Self {
            alpha,
            lead: zeta_real(1.0 + a)? / (1.0 + a),
            linear: zeta_real(1.0 - a)?,
        })
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    /// `x^{1+α} ζ(1+α)/(1+α)`
    #[inline]
    pub fn power_part(&self, x: f64) -> f64 {
        x.powf(1.0 + self.alpha.value()) * self.lead
    }

    /// `x ζ(1−α)`
    #[inline]
    pub fn linear_part(&self, x: f64) -> f64 {
        x * self.linear
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        self.power_part(x) + self.linear_part(x)
    }
}

pub fn main_term(x: f64, alpha: Alpha) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(LabError::domain(format!("main term needs x > 0, got {x}")));
    }
    Ok(MainTerm::new(alpha)?.eval(x))
}

/// `(x ln x)^{1/4+α/2}`, the scale of the Ω-result.
#[inline]
pub fn omega_scale(x: f64, alpha: Alpha) -> f64 {
    (x * x.ln()).powf(alpha.quarter_exponent())
}

/// One exact evaluation of the error term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorSample {
    pub x: f64,
    /// `S(⌊x⌋)`
    pub s_value: f64,
    pub main: f64,
    pub e_value: f64,
    /// `e_value / (x ln x)^{1/4+α/2}`
    pub normalized: f64,
}

/// Evaluates [`ErrorSample`]s against one table, caching the zeta constants.
#[derive(Debug, Clone, Copy)]
pub struct ErrorEvaluator<'a> {
    table: &'a SigmaTable,
    main: MainTerm,
}

impl<'a> ErrorEvaluator<'a> {
    pub fn new(table: &'a SigmaTable) -> Result<Self> {
        Ok(Self {
            table,
            main: MainTerm::new(table.alpha())?,
        })
    }

    pub fn table(&self) -> &'a SigmaTable {
        self.table
    }

    pub fn main_term(&self) -> &MainTerm {
        &self.main
    }

    pub fn sample(&self, x: f64) -> Result<ErrorSample> {
        if !(x > 1.0) || !x.is_finite() {
            return Err(LabError::domain(format!("error term needs x > 1, got {x}")));
        }
        let k = x.floor() as u64;
        self.table.require("error term", k)?;
        let s_value = self.table.prefix(k);
        let main = self.main.eval(x);
        let e_value = s_value - main;
        Ok(ErrorSample {
            x,
            s_value,
            main,
            e_value,
            normalized: e_value / omega_scale(x, self.main.alpha()),
        })
    }
}

fn check_alpha(alpha: Alpha, table: &SigmaTable) -> Result<()> {
    if alpha.value().to_bits() != table.alpha().value().to_bits() {
        return Err(LabError::domain(format!(
            "alpha {alpha} does not match table built for {}",
            table.alpha()
        )));
    }
    Ok(())
}

pub fn error_term(x: f64, alpha: Alpha, table: &SigmaTable) -> Result<ErrorSample> {
    check_alpha(alpha, table)?;
    ErrorEvaluator::new(table)?.sample(x)
}

/// Geometrically spaced half-integer points `m + 1/2` with `⌊x_lo⌋ <= m <= ⌊x_hi⌋`,
/// strictly increasing. Half-integers keep samples away from the jumps of `S`.
pub fn half_integer_grid(x_lo: f64, x_hi: f64, count: usize) -> Result<Vec<f64>> {
    if !(x_lo > 1.0) || !(x_hi >= x_lo) || !x_hi.is_finite() {
        return Err(LabError::domain(format!(
            "grid needs 1 < x_lo <= x_hi, got [{x_lo}, {x_hi}]"
        )));
    }
    if count == 0 {
        return Err(LabError::domain("grid needs at least one point"));
    }
    let lo = x_lo.floor();
    let hi = x_hi.floor();
    if count == 1 {
        return Ok(vec![lo + 0.5]);
    }
    if (hi - lo + 1.0) < count as f64 {
        return Err(LabError::domain(format!(
            "{count} points do not fit between {lo} and {hi}"
        )));
    }
    let ratio = x_hi / x_lo;
    let mut out: Vec<f64> = Vec::with_capacity(count);
    for i in 0..count {
        let g = if i + 1 == count {
            hi
        } else {
            (x_lo * ratio.powf(i as f64 / (count - 1) as f64))
                .floor()
                .clamp(lo, hi)
        };
        let m = match out.last() {
            Some(prev) => g.max(prev - 0.5 + 1.0),
            None => g,
        };
        out.push(m + 0.5);
    }
    // bumping can push the tail past hi; pull it back from the right
    for i in (0..count).rev() {
        let cap = hi - (count - 1 - i) as f64 + 0.5;
        if out[i] > cap {
            out[i] = cap;
        }
    }
    Ok(out)
}

/// Error-term samples on a geometric half-integer grid, evaluated in parallel
/// and returned in grid order.
pub fn scan_error(
    x_lo: f64,
    x_hi: f64,
    count: usize,
    alpha: Alpha,
    table: &SigmaTable,
) -> Result<Vec<ErrorSample>> {
    check_alpha(alpha, table)?;
    if x_hi > table.n_max() as f64 {
        return Err(LabError::Range {
            what: "scan",
            required: x_hi.ceil() as u64,
            available: table.n_max(),
        });
    }
    let grid = half_integer_grid(x_lo, x_hi, count)?;
    let eval = ErrorEvaluator::new(table)?;
    grid.par_iter().map(|&x| eval.sample(x)).collect()
}

/// Exponent `(2α² + 3α + 1)/(2α + 3)` of the intermediate upper bound for `E_α`.
pub fn corollary_exponent(alpha: Alpha) -> f64 {
    let a = alpha.value();
    (2.0 * a * a + 3.0 * a + 1.0) / (2.0 * a + 3.0)
}
