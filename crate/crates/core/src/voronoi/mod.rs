//! The truncated Voronoi-type series for `E_α(x)`, its admissible truncation
//! window, the functional-equation factor `γ(s)`, the Stirling phase `θ(t)`,
//! and the summation kernel `W_α`.

mod kernel;
mod phase;

pub use kernel::{
    kernel_bessel, kernel_compare, kernel_contour, KernelComparison, KernelEstimate,
    KernelQuadrature,
};
pub use phase::{oscillation_cos, oscillation_fraction};

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arith::{Alpha, SigmaTable};
use crate::eft::CompensatedSum;
use crate::error::{LabError, Result};
use crate::errorterm::ErrorEvaluator;
use crate::special::{check_finite, ln_gamma_complex, ComplexPoint};

/// Evaluation point, truncation length and exponent of the oscillating series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    pub x: f64,
    pub n_terms: u64,
    pub alpha: Alpha,
}

impl SeriesParams {
    pub fn new(x: f64, n_terms: u64, alpha: Alpha) -> Result<Self> {
        if !(x > 1.0) || !x.is_finite() {
            return Err(LabError::domain(format!("series needs x > 1, got {x}")));
        }
        Ok(Self { x, n_terms, alpha })
    }

    /// Fails unless `n_terms` lies inside [`admissible_range`] for this `eps`.
    pub fn check_window(&self, eps: f64) -> Result<()> {
        let (lo, hi) = admissible_range(self.x, self.alpha, eps)?;
        let n = self.n_terms as f64;
        if n < lo || n > hi {
            return Err(LabError::domain(format!(
                "N = {} outside admissible window [{lo:.6e}, {hi:.6e}] at x = {}",
                self.n_terms, self.x
            )));
        }
        Ok(())
    }
}

/// `(x^{1/2+α+ε}, x^{1/(2α)−ε})`: the range of truncation lengths for which the
/// series approximates `E_α(x)` to `O(x^{1/4+α/2})`.
pub fn admissible_range(x: f64, alpha: Alpha, eps: f64) -> Result<(f64, f64)> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(LabError::domain(format!("window needs x > 1, got {x}")));
    }
    if !(eps > 0.0) {
        return Err(LabError::domain(format!("eps must be positive, got {eps}")));
    }
    let a = alpha.value();
    let lower_exp = 0.5 + a + eps;
    let upper_exp = 1.0 / (2.0 * a) - eps;
    if lower_exp >= upper_exp {
        return Err(LabError::EmptyWindow {
            lower: x.powf(lower_exp),
            upper: x.powf(upper_exp),
        });
    }
    if eps >= 0.5 {
        return Err(LabError::domain(format!("eps must be < 1/2, got {eps}")));
    }
    Ok((x.powf(lower_exp), x.powf(upper_exp)))
}

fn check_table(params: &SeriesParams, table: &SigmaTable) -> Result<()> {
    if params.alpha.value().to_bits() != table.alpha().value().to_bits() {
        return Err(LabError::domain(format!(
            "series alpha {} does not match table alpha {}",
            params.alpha,
            table.alpha()
        )));
    }
    table.require("truncated series", params.n_terms)
}

/// `F_α(x, N) = Σ_{n≤N} σ_α(n) n^{−3/4−α/2} cos(4π√(nx) − π/4)`, summed in
/// order `n = 1..N` with compensation.
pub fn truncated_series(params: &SeriesParams, table: &SigmaTable) -> Result<f64> {
    check_table(params, table)?;
    let expo = -0.5 - params.alpha.quarter_exponent();
    let mut acc = CompensatedSum::new();
    for n in 1..=params.n_terms {
        let coeff = table.value(n) * (n as f64).powf(expo);
        acc.add(coeff * oscillation_cos(n, params.x));
    }
    Ok(acc.value())
}

/// `x^{1/4+α/2}/(√2 π) · F_α(x, N)`.
pub fn series_approx(params: &SeriesParams, table: &SigmaTable) -> Result<f64> {
    Ok(series_prefactor(params) * truncated_series(params, table)?)
}

#[inline]
pub fn series_prefactor(params: &SeriesParams) -> f64 {
    params.x.powf(params.alpha.quarter_exponent()) / (std::f64::consts::SQRT_2 * PI)
}

/// One point of the series-versus-error-term comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualSample {
    pub x: f64,
    pub n_terms: u64,
    pub e_value: f64,
    pub approx: f64,
    /// `e_value − approx`
    pub residual: f64,
    /// `|residual| / x^{1/4+α/2}`
    pub residual_normalized: f64,
}

/// Compare `E_α(x)` with the truncated series at each `x` of `grid`, in
/// parallel. `n_terms = None` uses `N = ⌈x⌉`; with `eps`, every `N` must lie in
/// the admissible window.
pub fn residual_scan(
    grid: &[f64],
    n_terms: Option<u64>,
    eps: Option<f64>,
    table: &SigmaTable,
) -> Result<Vec<ResidualSample>> {
    let alpha = table.alpha();
    let eval = ErrorEvaluator::new(table)?;
    grid.par_iter()
        .map(|&x| {
            let n = n_terms.unwrap_or(x.ceil() as u64);
            let params = SeriesParams::new(x, n, alpha)?;
            if let Some(eps) = eps {
                params.check_window(eps)?;
            }
            let e_value = eval.sample(x)?.e_value;
            let approx = series_approx(&params, table)?;
            let residual = e_value - approx;
            Ok(ResidualSample {
                x,
                n_terms: n,
                e_value,
                approx,
                residual,
                residual_normalized: residual.abs() / x.powf(alpha.quarter_exponent()),
            })
        })
        .collect()
}

fn near_nonpositive_integer(z: Complex64, tol: f64) -> bool {
    z.re < tol && (z.re - z.re.round()).hypot(z.im) < tol
}

/// `γ(s) = π^{1+α−2s} Γ(s/2)Γ((s−α)/2) / (Γ((1−s)/2)Γ((1+α−s)/2))`, so that
/// `f(1+α−s) = γ(s) f(s)` for `f(s) = ζ(s)ζ(s−α)`.
pub fn gamma_factor(s: ComplexPoint, alpha: Alpha) -> Result<ComplexPoint> {
    check_finite(s, "gamma factor")?;
    let a = alpha.value();
    let num = [s / 2.0, (s - a) / 2.0];
    let den = [(1.0 - s) / 2.0, (1.0 + a - s) / 2.0];
    // distance 1e-8 in s is 5e-9 in the half-arguments
    if num.iter().any(|z| near_nonpositive_integer(*z, 5e-9)) {
        return Err(LabError::Pole(format!("gamma factor at {s}")));
    }
    if den
        .iter()
        .any(|z| z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round())
    {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let log = (1.0 + a - 2.0 * s) * PI.ln() + ln_gamma_complex(num[0])? + ln_gamma_complex(num[1])?
        - ln_gamma_complex(den[0])?
        - ln_gamma_complex(den[1])?;
    Ok(log.exp())
}

/// Stirling phase `θ(t) = t/(2π) ln(t/(2π)) − t/(2π) − 1/8`, for `t > 0`.
pub fn theta_phase(t: f64) -> f64 {
    let u = t / (2.0 * PI);
    u * u.ln() - u - 0.125
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::build_sigma_table;
    use crate::special::zeta_complex;

    fn a(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn window_examples() {
        let (lo, hi) = admissible_range(1e4, a(0.25), 0.05).unwrap();
        assert!((lo / 10f64.powf(3.2) - 1.0).abs() < 1e-12);
        assert!((hi / 10f64.powf(7.8) - 1.0).abs() < 1e-12);
        let (lo2, hi2) = admissible_range(1e4, a(0.2), 0.05).unwrap();
        assert!(lo2 < lo && hi2 > hi);
        assert!(matches!(
            admissible_range(10.0, a(0.49), 0.05),
            Err(LabError::EmptyWindow { .. })
        ));
        assert!(admissible_range(1e4, a(0.25), 0.0).is_err());
        assert!(admissible_range(0.5, a(0.25), 0.1).is_err());
    }

    #[test]
    fn window_check_on_params() {
        let p = SeriesParams::new(1e4 + 0.5, 10_001, a(0.25)).unwrap();
        p.check_window(0.05).unwrap();
        let p = SeriesParams::new(1e4 + 0.5, 100, a(0.25)).unwrap();
        assert!(p.check_window(0.05).is_err());
    }

    #[test]
    fn series_small_cases() {
        let alpha = a(0.25);
        let t = build_sigma_table(100, alpha).unwrap();
        let p = SeriesParams::new(7.5, 0, alpha).unwrap();
        assert_eq!(truncated_series(&p, &t).unwrap(), 0.0);
        assert_eq!(series_approx(&p, &t).unwrap(), 0.0);
        for x in [2.5, 7.5, 33.0, 1234.5678] {
            let p = SeriesParams::new(x, 1, alpha).unwrap();
            let want = (4.0 * PI * x.sqrt() - PI / 4.0).cos();
            assert!((truncated_series(&p, &t).unwrap() - want).abs() < 1e-12);
        }
        let p = SeriesParams::new(50.5, 101, alpha).unwrap();
        assert!(matches!(
            truncated_series(&p, &t),
            Err(LabError::Range { .. })
        ));
    }

    #[test]
    fn approx_is_prefactor_times_series() {
        let alpha = a(0.25);
        let t = build_sigma_table(2000, alpha).unwrap();
        let p = SeriesParams::new(1500.5, 2000, alpha).unwrap();
        let f = truncated_series(&p, &t).unwrap();
        assert_eq!(series_approx(&p, &t).unwrap(), series_prefactor(&p) * f);
    }

    #[test]
    fn gamma_factor_symmetry_point() {
        for alpha in [0.1, 0.25, 0.4] {
            let g = gamma_factor(Complex64::new((1.0 + alpha) / 2.0, 0.0), a(alpha)).unwrap();
            assert!((g - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn gamma_factor_functional_equation() {
        let alpha = a(0.25);
        for i in 0..10 {
            let s = Complex64::new(-0.3 + 0.2 * i as f64, 2.0 + 5.3 * i as f64);
            let f = |z: Complex64| zeta_complex(z).unwrap() * zeta_complex(z - 0.25).unwrap();
            let lhs = f(1.25 - s);
            let rhs = gamma_factor(s, alpha).unwrap() * f(s);
            assert!((lhs - rhs).norm() <= 1e-7 * lhs.norm(), "s={s}");
        }
    }

    #[test]
    fn gamma_factor_modulus_asymptotic() {
        let alpha = a(0.25);
        for t in [50.0, 200.0] {
            for sigma in [-0.5, 0.3, 1.0, 2.0] {
                let g = gamma_factor(Complex64::new(sigma, t), alpha).unwrap();
                let model = (t / (2.0 * PI)).powf(2.0 * sigma - 1.25);
                assert!(
                    (g.norm() / model - 1.0).abs() <= 2.0 / t,
                    "t={t} sigma={sigma}"
                );
            }
        }
    }

    #[test]
    fn gamma_factor_poles() {
        let alpha = a(0.25);
        assert!(matches!(
            gamma_factor(Complex64::new(0.0, 0.0), alpha),
            Err(LabError::Pole(_))
        ));
        assert!(matches!(
            gamma_factor(Complex64::new(0.25, 1e-9), alpha),
            Err(LabError::Pole(_))
        ));
        assert!(matches!(
            gamma_factor(Complex64::new(-4.0, 0.0), alpha),
            Err(LabError::Pole(_))
        ));
        // denominator poles are zeros of γ
        assert_eq!(
            gamma_factor(Complex64::new(1.0, 0.0), alpha).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn theta_values() {
        assert!((theta_phase(2.0 * PI) + 1.125).abs() < 1e-15);
        assert!((theta_phase(2.0 * PI * std::f64::consts::E) + 0.125).abs() < 1e-14);
        let (t, h) = (100.0, 1e-4);
        let fd = (theta_phase(t + h) - theta_phase(t - h)) / (2.0 * h);
        assert!((fd - (t / (2.0 * PI)).ln() / (2.0 * PI)).abs() < 1e-6);
    }
}
