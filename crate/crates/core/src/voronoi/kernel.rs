//! The summation kernel
//!
//! ```text
//! W_α(y) = (1/2πi) ∫ y^{−s} Γ(s/2)Γ((s−α)/2) / ((α+1−s) Γ((1−s)/2)Γ((1+α−s)/2)) ds
//! ```
//!
//! and its Bessel closed form
//!
//! ```text
//! W_α(y) = (I_{−1−α}(4√y) − I_{1+α}(4√y) − J_{−1−α}(4√y) − J_{1+α}(4√y)) / (2 sin(πα/2) y^{(1+α)/2}).
//! ```
//!
//! On a vertical line `Re s = c` the integrand grows like `|t|^{2c−α−2}`, so the
//! symmetric limit only exists for `c < (1+α)/2`. The factor `1/(α+1−s)` is
//! cancelled by the zero of `1/Γ((1+α−s)/2)`; the only poles are at
//! `s = −2k` and `s = α − 2k`. The quadrature therefore bends the contour
//! into the left half plane, `s(u) = c + κ − κ√(1+u²) + iu`, where the
//! integrand decays faster than exponentially. Any anchor `c > α` gives the
//! same value, including the conventional `c = 2`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::arith::Alpha;
use crate::error::{LabError, Result};
use crate::special::{bessel_j, bessel_k, ln_gamma_complex};

const MAX_Y: f64 = 1e4;

/// Parameters of the contour quadrature for [`kernel_contour`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelQuadrature {
    /// Real part where the contour crosses the real axis.
    pub abscissa: f64,
    /// Truncation `|Im s| <= height` (in the path parameter `u`).
    pub height: f64,
    /// Trapezoidal step in `u`.
    pub step: f64,
    /// Asymptotic slope `κ` of the leftward bend.
    pub tilt: f64,
    /// Relative tolerance on the shift when `height` is doubled.
    pub tolerance: f64,
}

impl KernelQuadrature {
    /// Defaults tuned for `0 < y <= 1e4`: the bend is flattened for large `y`
    /// so the integrand never grows far above the result.
    pub fn for_point(y: f64) -> Self {
        let root = y.max(1e-300).sqrt();
        Self {
            abscissa: 2.0,
            height: (10.0 * root).max(200.0),
            step: 0.02,
            tilt: (1.5 / root).min(0.25),
            tolerance: 1e-9,
        }
    }

    pub fn with_height(self, height: f64) -> Self {
        Self { height, ..self }
    }

    pub fn with_step(self, step: f64) -> Self {
        Self { step, ..self }
    }

    pub fn with_abscissa(self, abscissa: f64) -> Self {
        Self { abscissa, ..self }
    }

    pub fn with_tilt(self, tilt: f64) -> Self {
        Self { tilt, ..self }
    }

    pub fn with_tolerance(self, tolerance: f64) -> Self {
        Self { tolerance, ..self }
    }

    pub fn validate(&self, alpha: Alpha) -> Result<()> {
        let ok = self.height.is_finite()
            && self.height > 0.0
            && self.step > 0.0
            && self.step <= self.height / 100.0
            && self.tilt.is_finite()
            && self.tilt >= 0.0
            && self.tolerance > 0.0;
        if !ok {
            return Err(LabError::domain(format!(
                "invalid kernel quadrature {self:?}"
            )));
        }
        if !(self.abscissa > alpha.value()) || !self.abscissa.is_finite() {
            return Err(LabError::domain(format!(
                "contour abscissa {} must lie right of the pole at alpha = {alpha}",
                self.abscissa
            )));
        }
        if self.tilt == 0.0 && self.abscissa >= (1.0 + alpha.value()) / 2.0 {
            return Err(LabError::domain(
                "an unbent contour only converges for abscissa < (1 + alpha)/2",
            ));
        }
        Ok(())
    }
}

/// Contour estimate of `W_α(y)` with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelEstimate {
    pub value: f64,
    /// Imaginary part of the symmetrized sum; zero up to rounding.
    pub imag: f64,
    /// Value with the height doubled.
    pub doubled_height_value: f64,
}

/// `y^{−s} Γ(s/2)Γ((s−α)/2) / (2 Γ((1−s)/2) Γ((3+α−s)/2))`, the kernel integrand
/// with the removable pole at `s = 1 + α` cancelled.
fn integrand(s: Complex64, ln_y: f64, alpha: f64) -> Result<Complex64> {
    let log = -s * ln_y + ln_gamma_complex(s / 2.0)? + ln_gamma_complex((s - alpha) / 2.0)?
        - ln_gamma_complex((1.0 - s) / 2.0)?
        - ln_gamma_complex((3.0 + alpha - s) / 2.0)?;
    Ok(log.exp() * 0.5)
}

fn contour_sum(y: f64, alpha: f64, quad: &KernelQuadrature) -> Result<Complex64> {
    let ln_y = y.ln();
    let c = quad.abscissa;
    let kappa = quad.tilt;
    let path = |u: f64| {
        let root = (1.0 + u * u).sqrt();
        let s = Complex64::new(c + kappa - kappa * root, u);
        let ds = Complex64::new(-kappa * u / root, 1.0);
        (s, ds)
    };
    let steps = (quad.height / quad.step).round() as i64;
    // pair ±u so the conjugate contributions meet before being accumulated
    let (s0, ds0) = path(0.0);
    let mut total = integrand(s0, ln_y, alpha)? * ds0;
    for k in (1..=steps).rev() {
        let u = k as f64 * quad.step;
        let (sp, dsp) = path(u);
        let (sm, dsm) = path(-u);
        total += integrand(sp, ln_y, alpha)? * dsp + integrand(sm, ln_y, alpha)? * dsm;
    }
    // (1/2πi) · h · Σ
    Ok(total * quad.step / Complex64::new(0.0, 2.0 * PI))
}

/// Trapezoidal quadrature of the defining contour integral. Fails with
/// [`LabError::Accuracy`] when doubling the height moves the value by more
/// than `quad.tolerance` (relative).
pub fn kernel_contour(y: f64, alpha: Alpha, quad: &KernelQuadrature) -> Result<KernelEstimate> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(LabError::domain(format!("kernel needs y > 0, got {y}")));
    }
    quad.validate(alpha)?;
    let a = alpha.value();
    let base = contour_sum(y, a, quad)?;
    let doubled = contour_sum(y, a, &quad.with_height(2.0 * quad.height))?;
    let shift = (doubled.re - base.re).abs();
    if shift > quad.tolerance * base.re.abs().max(f64::MIN_POSITIVE) {
        return Err(LabError::Accuracy {
            what: "kernel contour under height doubling",
            first: base.re,
            second: doubled.re,
            tolerance: quad.tolerance,
        });
    }
    Ok(KernelEstimate {
        value: base.re,
        imag: base.im,
        doubled_height_value: doubled.re,
    })
}

/// Bessel closed form of `W_α(y)` for `0 < α < 1/2`, `0 < y <= 1e4`.
///
/// The `I` pair is evaluated as `I_{−ν} − I_ν = (2/π) sin(νπ) K_ν`: the two
/// `I` terms grow like `e^{4√y}` and cancel to an exponentially small result.
pub fn kernel_bessel(y: f64, alpha: Alpha) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(LabError::domain(format!("kernel needs y > 0, got {y}")));
    }
    if y > MAX_Y {
        return Err(LabError::domain(format!("kernel needs y <= 1e4, got {y}")));
    }
    let alpha = alpha.require_below_half()?;
    let a = alpha.value();
    let nu = 1.0 + a;
    let z = 4.0 * y.sqrt();
    let i_pair = 2.0 / PI * (nu * PI).sin() * bessel_k(nu, z)?;
    let bracket = i_pair - bessel_j(-nu, z)? - bessel_j(nu, z)?;
    Ok(bracket / (2.0 * (PI * a / 2.0).sin() * y.powf(nu / 2.0)))
}

/// Both evaluations of `W_α(y)` side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelComparison {
    pub y: f64,
    pub alpha: f64,
    pub bessel_value: f64,
    pub contour_value: f64,
    /// `|bessel − contour| / |contour|`
    pub rel_diff: f64,
}

pub fn kernel_compare(y: f64, alpha: Alpha, quad: &KernelQuadrature) -> Result<KernelComparison> {
    let bessel_value = kernel_bessel(y, alpha)?;
    let contour_value = kernel_contour(y, alpha, quad)?.value;
    Ok(KernelComparison {
        y,
        alpha: alpha.value(),
        bessel_value,
        contour_value,
        rel_diff: (bessel_value - contour_value).abs() / contour_value.abs(),
    })
}
