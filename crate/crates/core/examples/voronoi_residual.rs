// Compare E_α(x) with the truncated oscillating series at N = ⌈x⌉.

use std::error::Error;

use sigma_lab::arith::build_sigma_table;
use sigma_lab::errorterm::half_integer_grid;
use sigma_lab::voronoi::{admissible_range, residual_scan, theta_phase};
use sigma_lab::Alpha;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alpha = Alpha::new(0.25)?;
    let (lo, hi) = admissible_range(1e4, alpha, 0.05)?;
    println!("admissible N at x = 1e4, eps = 0.05: [{lo:.1}, {hi:.1}]");

    let table = build_sigma_table(20_001, alpha)?;
    let grid = half_integer_grid(1_000.0, 20_000.0, 8)?;
    let rows = residual_scan(&grid, None, None, &table)?;
    println!(
        "{:>10} {:>7} {:>12} {:>12} {:>10}",
        "x", "N", "E(x)", "series", "resid/x^q"
    );
    for r in &rows {
        println!(
            "{:>10.1} {:>7} {:>12.4} {:>12.4} {:>10.4}",
            r.x, r.n_terms, r.e_value, r.approx, r.residual_normalized
        );
    }
    println!("theta(100) = {:.12}", theta_phase(100.0));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
