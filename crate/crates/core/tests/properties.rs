use std::collections::BTreeSet;

use proptest::prelude::*;
use sigma_lab::arith::{
    build_sigma_table, read_cache, sigma_alpha_direct, sup_sigma_rhs, write_cache,
};
use sigma_lab::errorterm::{half_integer_grid, main_term, ErrorEvaluator, MainTerm};
use sigma_lab::extremes::{resonance_bound, resonance_sum};
use sigma_lab::special::{gamma_complex, mu_exponent, zeta_complex};
use sigma_lab::voronoi::gamma_factor;
use sigma_lab::{Alpha, ComplexPoint, ResonanceInstance, SigmaTable};

// max of σ_α(n) / envelope(n) over 16 <= n <= 10^5 at α = 0.25
const GROWTH_PIN: f64 = 1.245_903_792_758_512;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn sieve_agrees_with_enumeration(a in 0.01f64..0.99, n in 1u64..3000) {
        let alpha = Alpha::new(a).unwrap();
        let t = build_sigma_table(n, alpha).unwrap();
        let d = sigma_alpha_direct(n, alpha).unwrap();
        prop_assert!((t.value(n) - d).abs() <= 1e-12 * d);
    }

    #[test]
    fn multiplicative_on_coprimes(a in 0.01f64..0.99, m in 1u64..200, n in 1u64..200) {
        prop_assume!(gcd(m, n) == 1);
        let alpha = Alpha::new(a).unwrap();
        let lhs = sigma_alpha_direct(m * n, alpha).unwrap();
        let rhs = sigma_alpha_direct(m, alpha).unwrap() * sigma_alpha_direct(n, alpha).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs);
    }

    #[test]
    fn cache_round_trip_bit_exact(a in 0.01f64..0.99, n in 1u64..500) {
        let t = build_sigma_table(n, Alpha::new(a).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_cache(&t, &mut buf).unwrap();
        prop_assert_eq!(buf.len() as u64, 24 + 8 * n);
        let back: SigmaTable = read_cache(&buf[..], None).unwrap();
        prop_assert_eq!(back.alpha().value().to_bits(), a.to_bits());
        for k in 1..=n {
            prop_assert_eq!(back.value(k).to_bits(), t.value(k).to_bits());
            prop_assert_eq!(back.prefix(k).to_bits(), t.prefix(k).to_bits());
        }
    }

    #[test]
    fn error_term_jumps_by_sigma(n in 2u64..5000) {
        let alpha = Alpha::new(0.25).unwrap();
        let t = build_sigma_table(5000, alpha).unwrap();
        let eval = ErrorEvaluator::new(&t).unwrap();
        let x = n as f64;
        let jump = eval.sample(x).unwrap().e_value - eval.sample(x - x * 1e-15).unwrap().e_value;
        prop_assert!((jump - t.value(n)).abs() <= 1e-9 * t.value(n));
    }

    #[test]
    fn main_term_homogeneous(a in 0.01f64..0.99, x in 0.1f64..1e6) {
        let alpha = Alpha::new(a).unwrap();
        let m = MainTerm::new(alpha).unwrap();
        let lhs = main_term(4.0 * x, alpha).unwrap();
        let rhs = 4f64.powf(1.0 + a) * m.power_part(x) + 4.0 * m.linear_part(x);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn grid_is_increasing_half_integers(lo in 2.0f64..1e4, span in 1.0f64..1e5, count in 1usize..60) {
        let hi = lo + span;
        prop_assume!((hi.floor() - lo.floor()) as usize + 1 >= count);
        let g = half_integer_grid(lo, hi, count).unwrap();
        prop_assert_eq!(g.len(), count);
        prop_assert!(g.windows(2).all(|w| w[1] > w[0]));
        prop_assert!(g.iter().all(|x| x.fract() == 0.5));
        prop_assert!(g[0] >= lo.floor() && g[count - 1] <= hi.floor() + 0.5);
    }

    #[test]
    fn bound_never_exceeds_resonant_mass(
        coeffs in prop::collection::vec(0.0f64..5.0, 1..8),
        big_l in 2u64..1000,
        big_x in 2.0f64..1e4,
        t in -50.0f64..50.0,
    ) {
        let n = coeffs.len();
        let freqs: Vec<f64> = (0..n).map(|i| 1.0 + 0.05 * i as f64).collect();
        let set: BTreeSet<usize> = (1..=n).collect();
        let inst = ResonanceInstance::new(coeffs.clone(), freqs, 0.3, set, big_l, 1, big_x).unwrap();
        let total: f64 = coeffs.iter().sum();
        prop_assert!(resonance_bound(&inst).unwrap() <= total / 8.0);
        prop_assert!(resonance_sum(&inst, t).abs() <= total * (1.0 + 1e-12));
    }

    #[test]
    fn gamma_recurrence(re in -20.0f64..20.0, im in 0.1f64..50.0) {
        let z = ComplexPoint::new(re, im);
        let lhs = gamma_complex(z + 1.0).unwrap();
        let rhs = z * gamma_complex(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm());
    }

    #[test]
    fn zeta_conjugate_symmetric(re in -1.0f64..3.0, im in 0.5f64..500.0) {
        let s = ComplexPoint::new(re, im);
        let a = zeta_complex(s).unwrap();
        let b = zeta_complex(s.conj()).unwrap();
        prop_assert!((a.conj() - b).norm() <= 1e-12 * a.norm().max(1e-300));
    }

    #[test]
    fn mu_is_nonnegative_and_nonincreasing(s in -5.0f64..5.0, d in 0.0f64..1.0) {
        prop_assert!(mu_exponent(s) >= 0.0);
        prop_assert!(mu_exponent(s + d) <= mu_exponent(s));
    }
}

#[test]
fn product_functional_equation() {
    // f(s) = ζ(s)ζ(s−α) satisfies f(1+α−s) = γ(s) f(s)
    let f = |s: ComplexPoint, a: f64| zeta_complex(s).unwrap() * zeta_complex(s - a).unwrap();
    let mut worst = 0.0f64;
    for k in 0..20 {
        let a = [0.1, 0.25, 0.4, 0.33][k % 4];
        let s = ComplexPoint::new(-0.3 + 0.09 * k as f64, 2.0 + 2.3 * k as f64);
        let lhs = f(1.0 + a - s, a);
        let rhs = gamma_factor(s, Alpha::new(a).unwrap()).unwrap() * f(s, a);
        let r = (lhs - rhs).norm() / lhs.norm();
        worst = worst.max(r);
        assert!(r <= 1e-8, "s = {s}, alpha = {a}: residual {r:e}");
    }
    assert!(worst < 1e-8);
}

#[test]
fn divisor_growth_stays_under_envelope() {
    // σ_α(n) = O(n^{α+o(1)}), tested against exp(α ln n + (ln n)^{1−α}/((1−α) ln ln n))
    let alpha = Alpha::new(0.25).unwrap();
    let t = build_sigma_table(100_000, alpha).unwrap();
    let worst = (16..=100_000u64)
        .map(|n| t.value(n) / sup_sigma_rhs(n as f64, alpha).unwrap())
        .fold(0.0f64, f64::max);
    assert!(worst <= GROWTH_PIN * 1.05, "observed constant {worst:.17e}");
    assert!(worst >= GROWTH_PIN / 1.05, "observed constant {worst:.17e}");
}

#[test]
fn sup_rhs_dominates_power() {
    let alpha = Alpha::new(0.25).unwrap();
    for x in [20.0f64, 1e3, 1e6, 1e9] {
        assert!(sup_sigma_rhs(x, alpha).unwrap() > x.powf(0.25));
    }
}
