// Check the resonance lemma by brute force on small instances.

use std::collections::BTreeSet;
use std::error::Error;
use std::f64::consts::SQRT_2;

use sigma_lab::arith::build_sigma_table;
use sigma_lab::extremes::{series_instance, resonance_bound, resonance_verify, DEFAULT_BUDGET};
use sigma_lab::{Alpha, ResonanceInstance};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let two = ResonanceInstance::new(
        vec![1.0, 1.0],
        vec![1.0, SQRT_2],
        0.0,
        BTreeSet::from([1, 2]),
        1000,
        1,
        100.0,
    )?;
    let v = resonance_verify(&two, 20, DEFAULT_BUDGET)?;
    println!(
        "two frequencies: bound {:.5}, |S({:.4})| = {:.5}",
        v.bound,
        v.x_found,
        v.s_at_x.abs()
    );

    let alpha = Alpha::new(0.25)?;
    let table = build_sigma_table(50, alpha)?;
    let small = series_instance(&table, 50, 4.0, 3, 2.0, None)?;
    println!(
        "series instance with L = 3: bound {:.5} (not positive)",
        resonance_bound(&small)?
    );

    let big = series_instance(&table, 50, 4.0, 100_000_000, 100.0, None)?;
    let v = resonance_verify(&big, 20, DEFAULT_BUDGET)?;
    println!(
        "series instance with L = 1e8, X = 100: bound {:.5}, |S({:.4})| = {:.5}",
        v.bound,
        v.x_found,
        v.s_at_x.abs()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
