//! Bessel functions `J_ν`, `I_ν`, `K_ν` of real order.
//!
//! Below `y = 12 + 2|ν|` the ascending series is summed in double-double
//! arithmetic (the alternating `J` series cancels badly near the switch);
//! above it the Hankel large-argument expansions are used.

use std::f64::consts::PI;

use super::gamma::recip_gamma_real;
use crate::eft::DoubleDouble;
use crate::error::{LabError, Result};

pub const BESSEL_SWITCH_BASE: f64 = 12.0;
pub const BESSEL_SWITCH_SLOPE: f64 = 2.0;
const MAX_ORDER: f64 = 5.0;
const MAX_ARG: f64 = 1e4;
// e^y overflows f64 beyond this
const MAX_I_ARG: f64 = 700.0;

fn switch_radius(nu: f64) -> f64 {
    BESSEL_SWITCH_BASE + BESSEL_SWITCH_SLOPE * nu.abs()
}

fn check_args(nu: f64, y: f64) -> Result<()> {
    if !nu.is_finite() || nu.abs() > MAX_ORDER {
        return Err(LabError::domain(format!(
            "bessel order must satisfy |nu| <= 5, got {nu}"
        )));
    }
    if !y.is_finite() || y < 0.0 {
        return Err(LabError::domain(format!(
            "bessel argument must be >= 0, got {y}"
        )));
    }
    if y > MAX_ARG {
        return Err(LabError::domain(format!(
            "bessel argument must be <= 1e4, got {y}"
        )));
    }
    Ok(())
}

fn negative_integer(nu: f64) -> Option<i64> {
    (nu < 0.0 && nu == nu.round()).then_some(nu as i64)
}

/// `Σ_k (±1)^k (y/2)^{2k+ν} / (k! Γ(k+ν+1))`.
pub(crate) fn ascending_series(nu: f64, y: f64, alternating: bool) -> f64 {
    let half = y / 2.0;
    let lead = half.powf(nu) * recip_gamma_real(nu + 1.0);
    if lead == 0.0 {
        return 0.0;
    }
    let q = DoubleDouble::from_f64(half).mul(DoubleDouble::from_f64(half));
    let q = if alternating { q.neg() } else { q };
    let nu_dd = DoubleDouble::from_f64(nu);
    let mut term = DoubleDouble::from_f64(1.0);
    let mut sum = term;
    let mut k = 0u32;
    loop {
        k += 1;
        let kf = DoubleDouble::from_f64(k as f64);
        let denom = kf.mul(kf.add(nu_dd));
        term = term.mul(q).div(denom);
        sum = sum.add(term);
        let past_peak = (k as f64) > half + nu.abs() + 2.0;
        if past_peak && term.hi.abs() <= 1e-20 * sum.hi.abs() {
            break;
        }
        if k > 500 {
            break;
        }
    }
    lead * sum.to_f64()
}

/// Coefficients `a_k(ν)/y^k` of the Hankel expansions, truncated at the smallest term.
fn hankel_terms(nu: f64, y: f64) -> Vec<f64> {
    let mu = 4.0 * nu * nu;
    let mut terms = vec![1.0];
    let mut t = 1.0f64;
    for k in 1..200u32 {
        let odd = (2 * k - 1) as f64;
        let next = t * (mu - odd * odd) / (k as f64 * 8.0 * y);
        if next.abs() > t.abs() && k > 2 {
            break;
        }
        t = next;
        terms.push(t);
        if t.abs() < 1e-18 {
            break;
        }
    }
    terms
}

fn j_asymptotic(nu: f64, y: f64) -> f64 {
    let terms = hankel_terms(nu, y);
    let (mut p, mut q) = (0.0, 0.0);
    for (k, t) in terms.iter().enumerate() {
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
    }
    let phase = (0.5 * nu + 0.25) * PI;
    let (sy, cy) = y.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cy * cp + sy * sp;
    let sin_chi = sy * cp - cy * sp;
    (2.0 / (PI * y)).sqrt() * (p * cos_chi - q * sin_chi)
}

fn i_asymptotic(nu: f64, y: f64) -> f64 {
    let terms = hankel_terms(nu, y);
    let s: f64 = terms
        .iter()
        .enumerate()
        .map(|(k, t)| if k % 2 == 0 { *t } else { -*t })
        .sum();
    y.exp() / (2.0 * PI * y).sqrt() * s
}

/// Bessel function of the first kind `J_ν(y)`, `|ν| <= 5`, `0 <= y <= 1e4`.
pub fn bessel_j(nu: f64, y: f64) -> Result<f64> {
    check_args(nu, y)?;
    if let Some(m) = negative_integer(nu) {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * bessel_j(-nu, y)?);
    }
    if y == 0.0 {
        return zero_argument(nu);
    }
    Ok(if y < switch_radius(nu) {
        ascending_series(nu, y, true)
    } else {
        j_asymptotic(nu, y)
    })
}

/// Modified Bessel function of the first kind `I_ν(y)`.
pub fn bessel_i(nu: f64, y: f64) -> Result<f64> {
    check_args(nu, y)?;
    if negative_integer(nu).is_some() {
        return bessel_i(-nu, y);
    }
    if y == 0.0 {
        return zero_argument(nu);
    }
    if y > MAX_I_ARG {
        return Err(LabError::Overflow(format!("I_nu({y}) exceeds f64 range")));
    }
    Ok(if y < switch_radius(nu) {
        ascending_series(nu, y, false)
    } else {
        i_asymptotic(nu, y)
    })
}

fn zero_argument(nu: f64) -> Result<f64> {
    if nu == 0.0 {
        Ok(1.0)
    } else if nu > 0.0 {
        Ok(0.0)
    } else {
        Err(LabError::Overflow(format!(
            "order {nu} is singular at y = 0"
        )))
    }
}

/// Modified Bessel function of the second kind, from
/// `K_ν(y) = ∫_0^∞ e^{-y cosh t} cosh(νt) dt` by the trapezoidal rule.
///
/// The integrand is even and analytic in the strip `|Im t| < π/2`, so the
/// rule converges geometrically in `1/h`.
pub fn bessel_k(nu: f64, y: f64) -> Result<f64> {
    check_args(nu, y)?;
    if y == 0.0 {
        return Err(LabError::Overflow("K_nu is singular at y = 0".into()));
    }
    let h = 1.0 / 32.0;
    // factor e^{-y} out so large arguments stay representable until the end
    let mut sum = 0.5;
    let mut k = 1u32;
    loop {
        let t = k as f64 * h;
        let term = (-y * (t.cosh() - 1.0)).exp() * (nu * t).cosh();
        sum += term;
        if term < 1e-18 * sum && y * (t.cosh() - 1.0) > 40.0 {
            break;
        }
        k += 1;
    }
    Ok(h * sum * (-y).exp())
}
