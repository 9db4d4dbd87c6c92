use super::Alpha;
use crate::error::{LabError, Result};

/// All primes `p <= limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut p = 2usize;
    while p * p <= n {
        if !composite[p] {
            for m in (p * p..=n).step_by(p) {
                composite[m] = true;
            }
        }
        p += 1;
    }
    (2..=n)
        .filter(|&i| !composite[i])
        .map(|i| i as u64)
        .collect()
}

/// The largest prime `y` whose primorial `P(y) = Π_{p≤y} p` does not exceed `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimorialCutoff {
    pub y: u64,
    pub primorial: u128,
}

pub fn primorial_cutoff(x: f64) -> Result<PrimorialCutoff> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(LabError::domain(format!(
            "primorial cutoff needs x >= 2, got {x}"
        )));
    }
    // P(y) for y up to ~100 already exceeds u128
    let mut cut = PrimorialCutoff { y: 2, primorial: 2 };
    for p in primes_up_to(200).into_iter().skip(1) {
        let next = match cut.primorial.checked_mul(p as u128) {
            Some(v) => v,
            None => {
                return Err(LabError::Overflow(format!(
                    "primorial beyond {} exceeds 128 bits",
                    cut.y
                )))
            }
        };
        if next as f64 > x {
            return Ok(cut);
        }
        cut = PrimorialCutoff {
            y: p,
            primorial: next,
        };
    }
    Err(LabError::Overflow(format!(
        "x = {x} beyond supported primorial range"
    )))
}

/// `Σ_{p≤y} p^{-β}` over primes.
pub fn prime_power_sum(y: u64, beta: f64) -> Result<f64> {
    if y < 2 {
        return Err(LabError::domain(format!(
            "prime power sum needs y >= 2, got {y}"
        )));
    }
    if !(beta > 0.0) {
        return Err(LabError::domain(format!(
            "beta must be positive, got {beta}"
        )));
    }
    Ok(primes_up_to(y)
        .into_iter()
        .map(|p| (p as f64).powf(-beta))
        .sum())
}

/// Closed-form size of `sup_{n≤x} σ_α(n)` with the `o(1)` dropped:
/// `x^α · exp((ln x)^{1-α} / ((1-α) ln ln x))`.
///
/// Defined for `x >= e^e`, where `ln ln x >= 1`.
pub fn sup_sigma_rhs(x: f64, alpha: Alpha) -> Result<f64> {
    let threshold = std::f64::consts::E.powf(std::f64::consts::E);
    if !(x >= threshold) || !x.is_finite() {
        return Err(LabError::domain(format!(
            "sup comparator needs x >= e^e ~ {threshold:.6}, got {x}"
        )));
    }
    let a = alpha.value();
    let lx = x.ln();
    Ok((a * lx + lx.powf(1.0 - a) / ((1.0 - a) * lx.ln())).exp())
}

/// `ln(σ_α(n)/n^α) · ln ln n / (ln n)^{1−α}`: tends to `1/(1−α)` along the
/// records of `σ_α`.
pub fn sup_shape_ratio(n: u64, sigma: f64, alpha: Alpha) -> f64 {
    let a = alpha.value();
    let ln_n = (n as f64).ln();
    (sigma.ln() - a * ln_n) * ln_n.ln() / ln_n.powf(1.0 - a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(1_000_000).len(), 78_498);
    }

    #[test]
    fn primorial_examples() {
        assert_eq!(
            primorial_cutoff(2.0).unwrap(),
            PrimorialCutoff { y: 2, primorial: 2 }
        );
        assert_eq!(
            primorial_cutoff(100.0).unwrap(),
            PrimorialCutoff {
                y: 5,
                primorial: 30
            }
        );
        assert_eq!(
            primorial_cutoff(210.0).unwrap(),
            PrimorialCutoff {
                y: 7,
                primorial: 210
            }
        );
        assert_eq!(primorial_cutoff(209.9).unwrap().y, 5);
        assert!(primorial_cutoff(1.5).is_err());
        assert!(primorial_cutoff(f64::NAN).is_err());
    }

    #[test]
    fn primorial_brackets_x() {
        for x in [2.0, 5.0, 6.0, 29.0, 1e6, 1e12, 6.5e17] {
            let c = primorial_cutoff(x).unwrap();
            assert!(c.primorial as f64 <= x);
            let next_p = primes_up_to(200).into_iter().find(|&p| p > c.y).unwrap();
            assert!((c.primorial * next_p as u128) as f64 > x);
        }
    }

    #[test]
    fn prime_power_sum_examples() {
        assert_eq!(prime_power_sum(2, 1.0).unwrap(), 0.5);
        let v = prime_power_sum(10, 0.25).unwrap();
        assert!((v - 2.884_260_558_832_993_5).abs() < 1e-14);
        assert!(prime_power_sum(1, 1.0).is_err());
        assert!(prime_power_sum(10, 0.0).is_err());
    }

    #[test]
    fn prime_power_sum_matches_asymptotic_shape() {
        let y = 1_000_000u64;
        let v = prime_power_sum(y, 0.25).unwrap();
        let yf = y as f64;
        let asym = yf.powf(0.75) / (0.75 * yf.ln());
        assert!((v / asym - 1.0).abs() <= 0.25, "ratio {}", v / asym);
    }

    #[test]
    fn prime_power_sum_bounded_for_large_beta() {
        let small = prime_power_sum(1000, 1.5).unwrap();
        let big = prime_power_sum(1_000_000, 1.5).unwrap();
        assert!(big <= small + 1.0);
    }

    #[test]
    fn sup_rhs_values() {
        let alpha = Alpha::new(0.25).unwrap();
        let ee = std::f64::consts::E.powf(std::f64::consts::E);
        let v = sup_sigma_rhs(ee, alpha).unwrap();
        // x^{1/4} exp((ln x)^{3/4}/0.75) at ln ln x = 1
        assert!((v - 33.189_618_987_617_6).abs() / v < 1e-12);
        let v = sup_sigma_rhs(1e6, alpha).unwrap();
        assert!((v - 1_203.079_142_902_325_8).abs() / v < 1e-12);
        assert!(sup_sigma_rhs(10.0, alpha).is_err());
    }

    #[test]
    fn sup_rhs_monotone() {
        let alpha = Alpha::new(0.25).unwrap();
        let mut prev = 0.0;
        let steps = 4000;
        for i in 0..=steps {
            let x = 20.0 * (1e8f64 / 20.0).powf(i as f64 / steps as f64);
            let v = sup_sigma_rhs(x, alpha).unwrap();
            assert!(v > prev, "not increasing at {x}");
            prev = v;
        }
    }
}
