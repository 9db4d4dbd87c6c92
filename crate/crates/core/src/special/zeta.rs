use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::ln_gamma_complex;
use super::{check_finite, ComplexPoint, BERNOULLI_EVEN};
use crate::error::{LabError, Result};

/// `(2k)!` for `k = 1..=20`, as floats.
fn factorial_even(k: usize) -> f64 {
    (1..=2 * k).map(|i| i as f64).product()
}

/// Euler–Maclaurin evaluation of `ζ(s)`.
///
/// With `N > (|s| + 40)/2` consecutive Bernoulli corrections shrink by roughly
/// `1/π²`, so the tail after the last retained term is below `1e-18` relative.
fn zeta_euler_maclaurin(s: Complex64) -> Complex64 {
    let n = ((s.norm() + 40.0) / 2.0).ceil().max(10.0) as u64;
    let one = Complex64::new(1.0, 0.0);
    // power sum, smallest terms first
    let mut head = Complex64::new(0.0, 0.0);
    for k in (1..n).rev() {
        head += (-s * (k as f64).ln()).exp();
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp();
    let mut total = head + n_pow * nf / (s - one) + n_pow * 0.5;

    // corrections B_{2k}/(2k)! · s(s+1)...(s+2k-2) · N^{-s-2k+1}
    let mut rising = s;
    let mut npow = n_pow / nf;
    let inv_n2 = 1.0 / (nf * nf);
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let kk = k + 1;
        let term = rising * npow * (b / factorial_even(kk));
        total += term;
        if term.norm() <= 1e-18 * total.norm() {
            break;
        }
        let m = 2.0 * kk as f64;
        rising *= (s + (m - 1.0)) * (s + m);
        npow *= inv_n2;
    }
    total
}

/// `ζ(s)` for real `s ≠ 1`. Negative arguments go through the functional equation.
pub fn zeta_real(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(LabError::domain(format!("zeta: non-finite argument {s}")));
    }
    if s == 1.0 {
        return Err(LabError::Pole("zeta at s = 1".into()));
    }
    if s >= 0.0 {
        return Ok(zeta_euler_maclaurin(Complex64::new(s, 0.0)).re);
    }
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    let g = ln_gamma_complex(Complex64::new(1.0 - s, 0.0))?.re.exp();
    let z = zeta_euler_maclaurin(Complex64::new(1.0 - s, 0.0)).re;
    Ok(2f64.powf(s) * PI.powf(s - 1.0) * (PI * s / 2.0).sin() * g * z)
}

/// `ζ(s)` for complex `s ≠ 1`.
pub fn zeta_complex(s: ComplexPoint) -> Result<ComplexPoint> {
    check_finite(s, "zeta")?;
    if s.re == 1.0 && s.im == 0.0 {
        return Err(LabError::Pole("zeta at s = 1".into()));
    }
    if s.im == 0.0 {
        return Ok(Complex64::new(zeta_real(s.re)?, 0.0));
    }
    Ok(zeta_euler_maclaurin(s))
}
