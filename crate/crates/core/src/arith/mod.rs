//! Fractional divisor sums and the arithmetic side of the extremal problem.

mod cache;
mod primes;
mod table;

pub use cache::{read_cache, value_checksum, write_cache, CACHE_MAGIC, CACHE_VERSION};
pub use primes::{
    prime_power_sum, primes_up_to, primorial_cutoff, sup_shape_ratio, sup_sigma_rhs,
    PrimorialCutoff,
};
pub use table::{build_sigma_table, running_sup, SigmaTable};

use crate::error::{LabError, Result};

/// Exponent `α` of the divisor sum, restricted to the open interval `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value < 1.0 {
            Ok(Alpha(value))
        } else {
            Err(LabError::domain(format!(
                "alpha must lie in (0, 1), got {value}"
            )))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// The error-term results (main terms, oscillating series, Ω-evidence) need `α < 1/2`.
    pub fn require_below_half(self) -> Result<Self> {
        if self.0 < 0.5 {
            Ok(self)
        } else {
            Err(LabError::domain(format!(
                "this computation needs 0 < alpha < 1/2, got {}",
                self.0
            )))
        }
    }

    /// `1/4 + α/2`, the exponent of `x` in the oscillating series and in the Ω normalization.
    #[inline]
    pub fn quarter_exponent(self) -> f64 {
        0.25 + 0.5 * self.0
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `σ_α(n)` by enumerating the divisors of `n` up to `√n`.
pub fn sigma_alpha_direct(n: u64, alpha: Alpha) -> Result<f64> {
    sigma_signed_direct(n, alpha.value())
}

/// Divisor-power sum for any real exponent, including the `σ_{-α}` of the
/// identity `σ_α(n) = n^α σ_{-α}(n)`.
pub fn sigma_signed_direct(n: u64, exponent: f64) -> Result<f64> {
    if n == 0 {
        return Err(LabError::domain("sigma is defined for n >= 1"));
    }
    let mut sum = 0.0;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            sum += (d as f64).powf(exponent);
            let e = n / d;
            if e != d {
                sum += (e as f64).powf(exponent);
            }
        }
        d += 1;
    }
    Ok(sum)
}
