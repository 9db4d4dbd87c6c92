use std::f64::consts::PI;

use num_complex::Complex64;

use super::{check_finite, ComplexPoint, BERNOULLI_EVEN};
use crate::error::{LabError, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const SHIFT_RADIUS: f64 = 15.0;

/// `ln sin(πz)` without overflow for large `|Im z|`. Branch is arbitrary.
pub(crate) fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 8.0 {
        return (z * PI).sin().ln();
    }
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    // sin(πz) = e^{-iπz} (1 - e^{2iπz}) · i/2, and |e^{2iπz}| = e^{-2π Im z} is tiny
    let i = Complex64::i();
    let small = (i * 2.0 * PI * z).exp();
    -i * PI * z + (Complex64::new(1.0, 0.0) - small).ln() + Complex64::new(0.5f64.ln(), PI / 2.0)
}

fn near_pole(z: Complex64) -> bool {
    z.re <= 0.0 && z.im.abs() < 1e-13 && (z.re - z.re.round()).abs() < 1e-13
}

/// Stirling series for `ln Γ(z)`, valid for `|z| >= SHIFT_RADIUS`, `Re z > 0`.
fn ln_gamma_stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI_EVEN.iter().take(10).enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        series += pow * (b / (n * (n - 1.0)));
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut shift = Complex64::new(1.0, 0.0);
    let mut log_shift = Complex64::new(0.0, 0.0);
    while z.norm() < SHIFT_RADIUS {
        shift *= z;
        // keep the running product in range
        if shift.norm() > 1e200 {
            log_shift += shift.ln();
            shift = Complex64::new(1.0, 0.0);
        }
        z += 1.0;
    }
    ln_gamma_stirling(z) - log_shift - shift.ln()
}

/// `ln Γ(z)` on any branch (only `exp` of the result is branch-free).
/// Reflection handles `Re z < 1/2`.
pub fn ln_gamma_complex(z: ComplexPoint) -> Result<ComplexPoint> {
    check_finite(z, "gamma")?;
    if near_pole(z) {
        return Err(LabError::Pole(format!("gamma at non-positive integer {z}")));
    }
    Ok(if z.re < 0.5 {
        Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(Complex64::new(1.0, 0.0) - z)
    } else {
        ln_gamma_right(z)
    })
}

pub fn gamma_complex(z: ComplexPoint) -> Result<ComplexPoint> {
    Ok(ln_gamma_complex(z)?.exp())
}

/// Real Gamma; sign carried through the complex logarithm.
pub fn gamma_real(x: f64) -> Result<f64> {
    Ok(gamma_complex(Complex64::new(x, 0.0))?.re)
}

/// `1/Γ(x)`, zero at the poles.
pub fn recip_gamma_real(x: f64) -> f64 {
    let z = Complex64::new(x, 0.0);
    if near_pole(z) {
        return 0.0;
    }
    match ln_gamma_complex(z) {
        Ok(l) => (-l).exp().re,
        Err(_) => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn golden_values() {
        let g = gamma_complex(c(0.5, 0.0)).unwrap();
        assert!((g.re - PI.sqrt()).abs() <= 1e-12 * PI.sqrt());
        assert!(g.im.abs() < 1e-15);
        assert!((gamma_real(5.0).unwrap() - 24.0).abs() <= 24.0 * 1e-12);
        let g = gamma_complex(c(1.0, 1.0)).unwrap();
        let target = PI / PI.sinh();
        assert!((g.norm_sqr() - target).abs() / target < 1e-12);
    }

    #[test]
    fn poles_rejected() {
        for n in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma_complex(c(n, 0.0)), Err(LabError::Pole(_))));
        }
        assert!(gamma_complex(c(f64::NAN, 0.0)).is_err());
        assert_eq!(recip_gamma_real(-3.0), 0.0);
    }

    #[test]
    fn against_high_precision() {
        // mpmath, 30 digits
        let cases = [
            (
                c(0.3, 7.5),
                c(6.736_215_448_569_355e-6, 1.090_179_340_436_427_1e-5),
            ),
            (
                c(-2.7, 0.4),
                c(-0.426_013_648_168_737_5, 0.036_482_419_059_879_47),
            ),
            (
                c(150.0, 100.0),
                c(-1.084_625_136_635_078_9e245, -9.587_591_530_529_565e246),
            ),
        ];
        for (z, want) in cases {
            let got = gamma_complex(z).unwrap();
            assert!(rel(got, want) < 1e-10, "{z}: {got} vs {want}");
        }
    }

    #[test]
    fn recurrence_and_reflection() {
        for &(re, im) in &[
            (0.7, 3.0),
            (-4.3, 0.2),
            (2.5, -60.0),
            (-0.5, 120.0),
            (0.1, 0.0),
        ] {
            let z = c(re, im);
            let lhs = gamma_complex(z + 1.0).unwrap();
            let rhs = z * gamma_complex(z).unwrap();
            assert!(rel(lhs, rhs) < 1e-11, "{z}");
            let refl = gamma_complex(z).unwrap() * gamma_complex(c(1.0, 0.0) - z).unwrap();
            // Γ(z)Γ(1−z) sin(πz) = π, without forming 1/sin
            let prod = refl * (z * PI).sin();
            assert!(rel(prod, c(PI, 0.0)) < 1e-10, "{z}: {prod}");
        }
    }

    #[test]
    fn ln_gamma_survives_huge_imaginary_parts() {
        // |Γ(1/2 + it)|^2 = π / cosh(πt)
        for t in [200.0, 1000.0, 5000.0] {
            let l = ln_gamma_complex(c(0.5, t)).unwrap();
            let want = 0.5 * (PI.ln() - (PI * t - 2f64.ln()));
            assert!((l.re - want).abs() < 1e-9 * want.abs(), "t={t}");
        }
    }

    #[test]
    fn recip_gamma_negative_orders() {
        // 1/Γ(-0.5) = -1/(2√π)
        assert!((recip_gamma_real(-0.5) + 0.5 / PI.sqrt()).abs() < 1e-15);
        assert!((recip_gamma_real(3.0) - 0.5).abs() < 1e-15);
    }
}
