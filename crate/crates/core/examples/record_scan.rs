// Successive maxima of |E_α(x)| / (x ln x)^{1/4+α/2} and their dyadic profile.

use std::error::Error;

use sigma_lab::arith::build_sigma_table;
use sigma_lab::extremes::{dyadic_block_maxima, record_scan};
use sigma_lab::Alpha;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alpha = Alpha::new(0.25)?;
    let x_max = 100_000.0;
    let table = build_sigma_table(x_max as u64, alpha)?;
    let records = record_scan(alpha, x_max, &table)?;
    println!("{} records up to {x_max}", records.entries().len());
    for r in records.entries().iter().rev().take(5).rev() {
        println!(
            "  x = {:>10.1}  E = {:>12.4}  normalized = {:.6}",
            r.x, r.e_value, r.normalized
        );
    }
    for (k, m) in dyadic_block_maxima(alpha, x_max, &table)? {
        println!("  [2^{k:<2}, 2^{:<2}): {m:.4}", k + 1);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
