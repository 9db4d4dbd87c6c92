//! The resonance lemma: for `S(t) = Σ f(n) cos(2πλ_n t + γ)` with a resonant
//! index set `𝓜`, `λ_𝓜 ⊂ [λ_Y/2, 3λ_Y/2]`, some `x ∈ [X/2, (6L)^{|𝓜|+1} X]` has
//!
//! ```text
//! |S(x)| >= (1/8) Σ_{m∈𝓜} f(m) − (1/(L−1)) Σ_{λ_n ≤ 2λ_Y} f(n) − (4/(π² X λ_Y)) Σ f(n).
//! ```

use std::collections::BTreeSet;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::SigmaTable;
use crate::eft::CompensatedSum;
use crate::error::{LabError, Result};

/// Grid points examined before a search reports budget exhaustion.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
/// The "large constant" `L` used when reproducing the asymptotic parameterization.
pub const ASYMPTOTIC_BIG_L: u64 = 100_000_000;

/// Full data of one lemma application. Indices are 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct ResonanceInstance {
    coeffs: Vec<f64>,
    freqs: Vec<f64>,
    phase: f64,
    resonant_set: BTreeSet<usize>,
    big_l: u64,
    y_index: usize,
    big_x: f64,
}

impl ResonanceInstance {
    pub fn new(
        coeffs: Vec<f64>,
        freqs: Vec<f64>,
        phase: f64,
        resonant_set: BTreeSet<usize>,
        big_l: u64,
        y_index: usize,
        big_x: f64,
    ) -> Result<Self> {
        if coeffs.len() != freqs.len() || coeffs.is_empty() {
            return Err(LabError::domain(
                "coefficients and frequencies must be nonempty and of equal length",
            ));
        }
        if coeffs.iter().any(|f| !f.is_finite() || *f < 0.0) {
            return Err(LabError::domain(
                "coefficients must be finite and nonnegative",
            ));
        }
        if freqs.iter().any(|l| !l.is_finite() || *l < 0.0) {
            return Err(LabError::domain(
                "frequencies must be finite and nonnegative",
            ));
        }
        if freqs.windows(2).any(|w| w[1] < w[0]) {
            return Err(LabError::domain("frequencies must be non-decreasing"));
        }
        if !phase.is_finite() {
            return Err(LabError::domain("phase must be finite"));
        }
        if big_l < 2 {
            return Err(LabError::domain(format!("L must be >= 2, got {big_l}")));
        }
        if y_index == 0 || y_index > freqs.len() {
            return Err(LabError::domain(format!(
                "Y = {y_index} outside 1..={}",
                freqs.len()
            )));
        }
        if !(big_x >= 2.0) || !big_x.is_finite() {
            return Err(LabError::domain(format!("X must be >= 2, got {big_x}")));
        }
        let ly = freqs[y_index - 1];
        for &m in &resonant_set {
            if m == 0 || m > freqs.len() {
                return Err(LabError::domain(format!(
                    "resonant index {m} outside support"
                )));
            }
            let lm = freqs[m - 1];
            if lm < ly / 2.0 || lm > 1.5 * ly {
                return Err(LabError::domain(format!(
                    "lambda_{m} = {lm} outside [lambda_Y/2, 3 lambda_Y/2] = [{}, {}]",
                    ly / 2.0,
                    1.5 * ly
                )));
            }
        }
        Ok(Self {
            coeffs,
            freqs,
            phase,
            resonant_set,
            big_l,
            y_index,
            big_x,
        })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn freqs(&self) -> &[f64] {
        &self.freqs
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn resonant_set(&self) -> &BTreeSet<usize> {
        &self.resonant_set
    }

    pub fn big_l(&self) -> u64 {
        self.big_l
    }

    pub fn y_index(&self) -> usize {
        self.y_index
    }

    pub fn big_x(&self) -> f64 {
        self.big_x
    }

    fn lambda_y(&self) -> f64 {
        self.freqs[self.y_index - 1]
    }

    /// `[X/2, (6L)^{|𝓜|+1} X]`; the upper end may be `+inf` in floating point.
    pub fn interval(&self) -> (f64, f64) {
        let exp = self.resonant_set.len() as f64 + 1.0;
        (
            self.big_x / 2.0,
            (6.0 * self.big_l as f64).powf(exp) * self.big_x,
        )
    }
}

/// `S(t) = Σ f(n) cos(2π λ_n t + γ)`.
pub fn resonance_sum(inst: &ResonanceInstance, t: f64) -> f64 {
    inst.coeffs
        .iter()
        .zip(&inst.freqs)
        .filter(|(f, _)| **f != 0.0)
        .map(|(f, l)| f * (2.0 * PI * l * t + inst.phase).cos())
        .collect::<CompensatedSum>()
        .value()
}

/// The three pieces of the lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundParts {
    /// `(1/8) Σ_{m∈𝓜} f(m)`
    pub resonant: f64,
    /// `(1/(L−1)) Σ_{λ_n ≤ 2λ_Y} f(n)`
    pub near: f64,
    /// `(4/(π² X λ_Y)) Σ f(n)`
    pub tail: f64,
    pub total: f64,
}

impl ResonanceInstance {
    pub fn bound_parts(&self) -> Result<BoundParts> {
        let ly = self.lambda_y();
        if ly == 0.0 {
            return Err(LabError::domain("lambda_Y must be positive"));
        }
        let resonant: f64 = self
            .resonant_set
            .iter()
            .map(|&m| self.coeffs[m - 1])
            .sum::<f64>()
            / 8.0;
        let near_sum: f64 = self
            .coeffs
            .iter()
            .zip(&self.freqs)
            .filter(|(_, l)| **l <= 2.0 * ly)
            .map(|(f, _)| *f)
            .sum();
        let near = near_sum / (self.big_l - 1) as f64;
        let total_mass: f64 = self.coeffs.iter().sum();
        let tail = 4.0 / (PI * PI * self.big_x * ly) * total_mass;
        Ok(BoundParts {
            resonant,
            near,
            tail,
            total: resonant - near - tail,
        })
    }
}

pub fn resonance_bound(inst: &ResonanceInstance) -> Result<f64> {
    Ok(inst.bound_parts()?.total)
}

/// Outcome of a successful grid search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Verification {
    pub bound: f64,
    pub x_found: f64,
    pub s_at_x: f64,
    pub grid_density: u64,
    pub interval_lo: f64,
    pub interval_hi: f64,
    /// Right end actually covered by the grid (budget cap).
    pub searched_hi: f64,
    pub grid_index: u64,
}

/// Exhaustive search of the grid `X/2 + i·h`, `h = 1/(density · max λ)`, for the
/// smallest index with `|S(x)| >= bound`. At most `budget` points are examined.
pub fn resonance_verify(
    inst: &ResonanceInstance,
    grid_density: u64,
    budget: u64,
) -> Result<Verification> {
    if grid_density == 0 || budget == 0 {
        return Err(LabError::domain("grid density and budget must be positive"));
    }
    let bound = resonance_bound(inst)?;
    let (lo, hi) = inst.interval();
    let lambda_max = inst.freqs.last().copied().unwrap_or(0.0);
    let (step, available) = if lambda_max > 0.0 {
        let step = 1.0 / (grid_density as f64 * lambda_max);
        let n = ((hi - lo) / step).floor();
        (
            step,
            if n.is_finite() && n < u64::MAX as f64 {
                n as u64 + 1
            } else {
                u64::MAX
            },
        )
    } else {
        (0.0, 1)
    };
    let count = available.min(budget).min(usize::MAX as u64) as usize;
    let at = |i: usize| lo + i as f64 * step;
    let found = (0..count)
        .into_par_iter()
        .position_first(|i| resonance_sum(inst, at(i)).abs() >= bound);
    match found {
        Some(i) => {
            let x = at(i);
            Ok(Verification {
                bound,
                x_found: x,
                s_at_x: resonance_sum(inst, x),
                grid_density,
                interval_lo: lo,
                interval_hi: hi,
                searched_hi: at(count - 1),
                grid_index: i as u64,
            })
        }
        None => {
            let (best, i_best) = (0..count)
                .into_par_iter()
                .map(|i| (resonance_sum(inst, at(i)).abs(), i))
                .reduce(
                    || (f64::NEG_INFINITY, 0),
                    |a, b| {
                        if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                            b
                        } else {
                            a
                        }
                    },
                );
            Err(LabError::VerificationFailed {
                bound,
                best,
                x_best: at(i_best),
                budget_exhausted: (count as u64) < available,
            })
        }
    }
}

/// `T = δ ln N / (8 ln(6·10^8))`, the resonance length used with `L = 10^8`.
pub fn resonance_length(n_terms: u64, delta: f64) -> f64 {
    delta * (n_terms as f64).ln() / (8.0 * (6e8f64).ln())
}

fn resonant_indices(t_param: f64) -> BTreeSet<usize> {
    let lo = (t_param / 4.0).ceil().max(1.0) as usize;
    let hi = (0.75 * t_param).floor() as usize;
    (lo..=hi).collect()
}

/// Smallest `Y` whose `λ_Y = 2√Y` window `[λ_Y/2, 3λ_Y/2]` holds `𝓜`.
fn fitting_y(set: &BTreeSet<usize>) -> Option<usize> {
    let (&first, &last) = (set.first()?, set.last()?);
    let lam = |n: usize| 2.0 * (n as f64).sqrt();
    let need = 2.0 / 3.0 * lam(last);
    let y = (1..=last).find(|&y| lam(y) >= need)?;
    (lam(y) <= 2.0 * lam(first)).then_some(y)
}

/// The instance behind `F_α(x², N)`: `f(n) = σ_α(n) n^{−3/4−α/2}` for `n <= N`,
/// `λ_n = 2√n`, `γ = −π/4`, `𝓜 = [T/4, 3T/4] ∩ ℤ`.
pub fn series_instance(
    table: &SigmaTable,
    n_terms: u64,
    t_param: f64,
    big_l: u64,
    big_x: f64,
    y_index: Option<usize>,
) -> Result<ResonanceInstance> {
    table.require("resonance instance", n_terms)?;
    if n_terms == 0 {
        return Err(LabError::domain("resonance instance needs N >= 1"));
    }
    let expo = -0.5 - table.alpha().quarter_exponent();
    let coeffs: Vec<f64> = (1..=n_terms)
        .map(|n| table.value(n) * (n as f64).powf(expo))
        .collect();
    let freqs: Vec<f64> = (1..=n_terms).map(|n| 2.0 * (n as f64).sqrt()).collect();
    let set = resonant_indices(t_param);
    if set.is_empty() {
        return Err(LabError::domain(format!(
            "T = {t_param} leaves the resonant set empty"
        )));
    }
    let y = match y_index {
        Some(y) => y,
        None => fitting_y(&set).ok_or_else(|| {
            LabError::domain(format!(
                "no Y places lambda over [T/4, 3T/4] for T = {t_param}"
            ))
        })?,
    };
    ResonanceInstance::new(coeffs, freqs, -PI / 4.0, set, big_l, y, big_x)
}

/// The two sums controlled by powers of `T` in the asymptotic argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowSums {
    pub t_param: f64,
    /// `Σ_{T/4 ≤ m ≤ 3T/4} m^{−3/4+α/2}`, a lower bound for `Σ_{m∈𝓜} f(m)`.
    pub resonant_lower: f64,
    /// `Σ_{m∈𝓜} f(m)`
    pub resonant: f64,
    /// `Σ_{λ_n ≤ 2λ_Y} f(n)` with `Y` from the fitted window.
    pub near: f64,
    /// `T^{1/4+α/2}`
    pub scale: f64,
}

pub fn window_sums(table: &SigmaTable, t_param: f64) -> Result<WindowSums> {
    let set = resonant_indices(t_param);
    let y = fitting_y(&set)
        .ok_or_else(|| LabError::domain(format!("empty resonant set for T = {t_param}")))?;
    let a = table.alpha().value();
    let q = table.alpha().quarter_exponent();
    // λ_n <= 2 λ_Y  <=>  n <= 4Y
    let near_end = 4 * y as u64;
    table.require("window sums", near_end)?;
    let f = |n: u64| table.value(n) * (n as f64).powf(-0.5 - q);
    Ok(WindowSums {
        t_param,
        resonant_lower: set.iter().map(|&m| (m as f64).powf(-0.75 + a / 2.0)).sum(),
        resonant: set.iter().map(|&m| f(m as u64)).sum(),
        near: (1..=near_end).map(f).sum(),
        scale: t_param.powf(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{build_sigma_table, Alpha};
    use crate::voronoi::{truncated_series, SeriesParams};

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn single(big_x: f64, big_l: u64) -> ResonanceInstance {
        ResonanceInstance::new(vec![1.0], vec![1.0], 0.0, set(&[1]), big_l, 1, big_x).unwrap()
    }

    #[test]
    fn single_term_sum() {
        let inst = single(2.0, 2);
        assert_eq!(resonance_sum(&inst, 0.0), 1.0);
        assert!(resonance_sum(&inst, 0.25).abs() < 1e-15);
    }

    #[test]
    fn bound_substitution() {
        let inst = ResonanceInstance::new(vec![8.0], vec![1.0], 0.0, set(&[1]), 2, 1, 4.0).unwrap();
        let b = resonance_bound(&inst).unwrap();
        let want = 1.0 - 8.0 - 8.0 / (PI * PI);
        assert!((b - want).abs() < 1e-14);
        assert!((b + 7.8106).abs() < 1e-4);
    }

    #[test]
    fn empty_resonant_set_is_non_positive() {
        let inst = ResonanceInstance::new(vec![1.0, 2.0], vec![1.0, 2.0], 0.3, set(&[]), 5, 1, 3.0)
            .unwrap();
        assert!(resonance_bound(&inst).unwrap() <= 0.0);
    }

    #[test]
    fn zero_lambda_y_rejected() {
        let inst = ResonanceInstance::new(vec![1.0, 1.0], vec![0.0, 1.0], 0.0, set(&[]), 3, 1, 2.0)
            .unwrap();
        assert!(resonance_bound(&inst).is_err());
    }

    #[test]
    fn construction_rejects_violations() {
        // λ_2 = 5 outside [λ_1/2, 3λ_1/2] = [0.5, 1.5]
        assert!(
            ResonanceInstance::new(vec![1.0, 1.0], vec![1.0, 5.0], 0.0, set(&[2]), 3, 1, 2.0)
                .is_err()
        );
        assert!(
            ResonanceInstance::new(vec![1.0, 1.0], vec![2.0, 1.0], 0.0, set(&[]), 3, 1, 2.0)
                .is_err()
        );
        assert!(ResonanceInstance::new(vec![-1.0], vec![1.0], 0.0, set(&[]), 3, 1, 2.0).is_err());
        assert!(ResonanceInstance::new(vec![1.0], vec![1.0], 0.0, set(&[]), 1, 1, 2.0).is_err());
        assert!(ResonanceInstance::new(vec![1.0], vec![1.0], 0.0, set(&[]), 3, 1, 1.0).is_err());
        assert!(ResonanceInstance::new(vec![1.0], vec![1.0], 0.0, set(&[3]), 3, 1, 2.0).is_err());
    }

    #[test]
    fn single_cosine_verifies() {
        let inst = single(10.0, 1000);
        let v = resonance_verify(&inst, 20, DEFAULT_BUDGET).unwrap();
        assert!(v.bound > 0.0);
        assert!(v.s_at_x.abs() >= v.bound);
        assert!(v.x_found >= 5.0 && v.x_found <= v.interval_hi);
        assert_eq!(v.grid_index, 0);
    }

    #[test]
    fn budget_exhaustion_reports_failure() {
        // grid starts at X/2 = 500000.25 where cos(2πx) = 0
        let inst = single(1_000_000.5, 1_000_000);
        let bound = resonance_bound(&inst).unwrap();
        assert!(bound > 0.12);
        match resonance_verify(&inst, 20, 1) {
            Err(LabError::VerificationFailed {
                best,
                budget_exhausted,
                ..
            }) => {
                assert!(best < 1e-6);
                assert!(budget_exhausted);
            }
            other => panic!("unexpected {other:?}"),
        }
        let v = resonance_verify(&inst, 20, 100).unwrap();
        assert!(v.grid_index > 0 && v.s_at_x.abs() >= bound);
    }

    #[test]
    fn search_is_deterministic() {
        let inst = ResonanceInstance::new(
            vec![1.0, 0.7, 0.4],
            vec![1.0, std::f64::consts::SQRT_2, 1.7],
            -PI / 4.0,
            set(&[1, 2, 3]),
            1000,
            2,
            100.0,
        )
        .unwrap();
        let a = resonance_verify(&inst, 20, DEFAULT_BUDGET).unwrap();
        let b = resonance_verify(&inst, 20, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        assert!(a.s_at_x.abs() >= a.bound && a.bound > 0.0);
    }

    #[test]
    fn series_instance_reproduces_series() {
        let alpha = Alpha::new(0.25).unwrap();
        let table = build_sigma_table(50, alpha).unwrap();
        let inst = series_instance(&table, 50, 4.0, 3, 2.0, None).unwrap();
        assert_eq!(inst.resonant_set(), &set(&[1, 2, 3]));
        assert_eq!(inst.y_index(), 2);
        for x in [1.3, 2.0, 7.77, 31.4159] {
            let p = SeriesParams::new(x * x, 50, alpha).unwrap();
            let f = truncated_series(&p, &table).unwrap();
            let s = resonance_sum(&inst, x);
            assert!((f - s).abs() < 1e-11, "x={x}: {f} vs {s}");
        }
    }

    #[test]
    fn small_l_forces_non_positive_bound() {
        // 𝓜 ⊂ {λ_n ≤ 2λ_Y}, so for L <= 9 the second term beats the first
        let alpha = Alpha::new(0.25).unwrap();
        let table = build_sigma_table(50, alpha).unwrap();
        for l in 2..=9 {
            let inst = series_instance(&table, 50, 4.0, l, 1e3, None).unwrap();
            assert!(resonance_bound(&inst).unwrap() < 0.0);
        }
    }

    #[test]
    fn t_parameter_formula() {
        let t = resonance_length(1_000_000, 1.0);
        assert!((t - 1e6f64.ln() / (8.0 * 6e8f64.ln())).abs() < 1e-15);
    }
}
