//! Accurate `cos(4π√(nx) − π/4)`.
//!
//! Only the fractional part of `√(4nx)` matters. For half-integer `x` the
//! product `4nx = 2n·2x` is an integer and the fractional part is
//! `(m − k²)/(k + √m)` with `k = ⌊√m⌋`, free of cancellation. Other `x` use a
//! double-double product and one Newton correction of the square root.

use std::f64::consts::PI;

use crate::eft::two_prod;

/// Fractional part of `√(4nx)` in `[0, 1)`.
pub fn oscillation_fraction(n: u64, x: f64) -> f64 {
    let twice = 2.0 * x;
    if twice == twice.trunc() && twice > 0.0 && twice < 1.8e19 {
        let m = (2 * n as u128).checked_mul(twice as u128);
        if let Some(m) = m {
            let k = m.isqrt();
            let rem = m - k * k;
            return rem as f64 / (k as f64 + (m as f64).sqrt());
        }
    }
    let (hi, lo) = two_prod(4.0 * n as f64, x);
    let r = hi.sqrt();
    let corr = ((-r).mul_add(r, hi) + lo) / (2.0 * r);
    let mut f = (r - r.floor()) + corr;
    if f < 0.0 {
        f += 1.0;
    } else if f >= 1.0 {
        f -= 1.0;
    }
    f
}

#[inline]
pub fn oscillation_cos(n: u64, x: f64) -> f64 {
    (2.0 * PI * oscillation_fraction(n, x) - PI / 4.0).cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares_have_zero_fraction() {
        // 4·n·x = 4·9·4 = 144
        assert_eq!(oscillation_fraction(9, 4.0), 0.0);
        assert_eq!(oscillation_fraction(1, 0.25), 0.0);
    }

    #[test]
    fn routes_agree() {
        for n in [1u64, 7, 1000, 999_983, 123_456_789] {
            for x in [1000.5, 777_777.5, 1e6 + 0.5] {
                let exact = oscillation_fraction(n, x);
                // perturb off the half-integer path
                let generic = {
                    let (hi, lo) = two_prod(4.0 * n as f64, x);
                    let r = hi.sqrt();
                    let corr = ((-r).mul_add(r, hi) + lo) / (2.0 * r);
                    ((r - r.floor()) + corr).rem_euclid(1.0)
                };
                let d = (exact - generic).abs();
                assert!(d.min(1.0 - d) < 1e-12, "n={n} x={x}: {exact} vs {generic}");
            }
        }
    }

    #[test]
    fn large_products_keep_phase() {
        // √(4·10^12·(10^6+0.5)) = √(4·10^18 + 2·10^12); mpmath fraction
        let f = oscillation_fraction(1_000_000_000_000, 1e6 + 0.5);
        assert!((f - 0.999_937_500_015_625).abs() < 1e-10, "{f}");
    }
}
