// Sample E_α(x) on a geometric half-integer grid and look at its normalized size.

use std::error::Error;

use sigma_lab::arith::build_sigma_table;
use sigma_lab::errorterm::{main_term, scan_error};
use sigma_lab::Alpha;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alpha = Alpha::new(0.25)?;
    let table = build_sigma_table(100_000, alpha)?;
    println!("main term at x = 1: {:.16}", main_term(1.0, alpha)?);

    let samples = scan_error(10.0, 100_000.0, 12, alpha, &table)?;
    println!(
        "{:>12} {:>16} {:>12} {:>10}",
        "x", "S(x)", "E(x)", "E/scale"
    );
    for s in &samples {
        println!(
            "{:>12.1} {:>16.4} {:>12.4} {:>10.4}",
            s.x, s.s_value, s.e_value, s.normalized
        );
    }
    let peak = samples
        .iter()
        .map(|s| s.normalized.abs())
        .fold(0.0, f64::max);
    println!("max |E|/(x ln x)^(1/4+a/2) on grid: {peak:.4}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
