// Sieve σ_α, persist it as an SGAT cache, and read it back bit-exactly.

use std::error::Error;

use sigma_lab::arith::{build_sigma_table, running_sup, sigma_alpha_direct, value_checksum};
use sigma_lab::{Alpha, SigmaTable};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alpha = Alpha::new(0.25)?;
    let table = build_sigma_table(100_000, alpha)?;

    for n in [1u64, 6, 7, 360, 99_991] {
        let direct = sigma_alpha_direct(n, alpha)?;
        println!(
            "sigma_{alpha}({n}) = {:.15} (direct {direct:.15})",
            table.value(n)
        );
    }
    println!("S(1e5) = {:.6}", table.prefix(100_000));

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("sigma.sgat");
    table.write_to_path(&path)?;
    let back = SigmaTable::read_from_path(&path, Some(alpha))?;
    assert_eq!(value_checksum(&back), value_checksum(&table));
    println!(
        "cache: {} bytes, checksum {:016x}",
        std::fs::metadata(&path)?.len(),
        value_checksum(&back)
    );

    let records = running_sup(&table);
    let tail: Vec<_> = records.iter().rev().take(4).rev().collect();
    println!("last running-sup records: {tail:?}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
