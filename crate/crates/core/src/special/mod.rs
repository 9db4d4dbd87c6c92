//! Special functions used by the main terms, the functional equation and the kernel.

mod bessel;
mod gamma;
mod zeta;

pub use bessel::{bessel_i, bessel_j, bessel_k, BESSEL_SWITCH_BASE, BESSEL_SWITCH_SLOPE};
pub use gamma::{gamma_complex, gamma_real, ln_gamma_complex, recip_gamma_real};
pub use zeta::{zeta_complex, zeta_real};

use crate::error::{LabError, Result};

/// A point `s = σ + it` of the complex plane.
pub type ComplexPoint = num_complex::Complex64;

pub(crate) fn check_finite(z: ComplexPoint, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(LabError::domain(format!("{what}: non-finite argument {z}")))
    }
}

/// `B_{2k}` for `k = 1..=20`.
pub(crate) const BERNOULLI_EVEN: [f64; 20] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
];

/// Convexity exponent `μ(σ)` bounding `|ζ(σ+it)| ≪ t^{μ(σ)} ln t`.
pub fn mu_exponent(sigma: f64) -> f64 {
    if sigma >= 1.0 {
        0.0
    } else if sigma >= 0.5 {
        (1.0 - sigma) / 3.0
    } else {
        0.5 - 2.0 * sigma / 3.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_values() {
        assert_eq!(mu_exponent(1.5), 0.0);
        assert_eq!(mu_exponent(1.0), 0.0);
        assert!((mu_exponent(0.5) - 1.0 / 6.0).abs() < 1e-16);
        assert_eq!(mu_exponent(0.0), 0.5);
    }

    #[test]
    fn mu_continuous_at_breakpoints() {
        for b in [0.5, 1.0] {
            let l = mu_exponent(b - 1e-12);
            let r = mu_exponent(b);
            assert!((l - r).abs() < 1e-11, "jump at {b}");
        }
        for i in 0..200 {
            assert!(mu_exponent(-1.0 + i as f64 * 0.015) >= 0.0);
        }
    }
}
