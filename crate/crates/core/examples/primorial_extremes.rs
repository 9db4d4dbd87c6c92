// Largest values of σ_α(n): primorial cutoffs, the prime-power sum, and the
// explicit upper envelope for sup σ_α(n).

use std::error::Error;

use sigma_lab::arith::{
    build_sigma_table, prime_power_sum, primorial_cutoff, running_sup, sup_shape_ratio,
    sup_sigma_rhs,
};
use sigma_lab::Alpha;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alpha = Alpha::new(0.25)?;
    for x in [30.0, 1e6, 1e12, 1e30] {
        let c = primorial_cutoff(x)?;
        println!("x = {x:e}: Y = {}, P(Y) = {}", c.y, c.primorial);
    }
    println!(
        "sum_(p<=10) p^0.25/(p^0.25 - 1) = {:.12}",
        prime_power_sum(10, 0.25)?
    );

    let table = build_sigma_table(1_000_000, alpha)?;
    let records = running_sup(&table);
    let (n, value) = *records.last().ok_or("no records")?;
    let rhs = sup_sigma_rhs(n as f64, alpha)?;
    println!("last record n* = {n}, sigma = {value:.6}, envelope = {rhs:.3}");
    println!(
        "shape ratio {:.4} (limit 1/(1-a) = {:.4})",
        sup_shape_ratio(n, value, alpha),
        1.0 / (1.0 - alpha.value())
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
