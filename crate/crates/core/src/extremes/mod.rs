//! Large values of oscillating sums: the resonance lemma on finite instances,
//! and record hunting for `|E_α(x)| / (x ln x)^{1/4+α/2}`.

mod records;
mod resonance;

pub use records::{dyadic_block_maxima, record_scan, RecordEntry, RecordList};
pub use resonance::{
    series_instance, resonance_length, resonance_bound, resonance_sum, resonance_verify,
    window_sums, BoundParts, ResonanceInstance, Verification, WindowSums, DEFAULT_BUDGET,
    ASYMPTOTIC_BIG_L,
};

/// `1/4 + α/2 − 1/(1+2α)`: negative exactly when `α < 1/2`, which keeps the
/// tail term of the resonance bound below the main term.
pub fn tail_exponent(alpha: f64) -> f64 {
    0.25 + alpha / 2.0 - 1.0 / (1.0 + 2.0 * alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_exponent_sign_matches_alpha_half() {
        for i in 1..1000 {
            let a = i as f64 / 1000.0;
            assert_eq!(tail_exponent(a) < 0.0, a < 0.5, "alpha = {a}");
        }
        assert!(tail_exponent(0.5).abs() < 1e-15);
    }
}
