// Drive the command line in-process: sieve to a cache, then scan from it.

use std::error::Error;

use sigma_lab::cli::run;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let cache = dir.path().join("t.sgat");
    let out = dir.path().join("scan.csv");
    let cache_s = cache.to_str().ok_or("path")?;
    let out_s = out.to_str().ok_or("path")?;

    let code = run([
        "sigma-lab",
        "sieve",
        "--alpha",
        "0.25",
        "--n-max",
        "1000",
        "--cache",
        cache_s,
    ]);
    if code != 0 {
        return Err(format!("sieve exited with {code}").into());
    }
    let code = run([
        "sigma-lab",
        "scan",
        "--alpha",
        "0.25",
        "--cache",
        cache_s,
        "--x-min",
        "10",
        "--x-max",
        "1000",
        "--points",
        "5",
        "--out",
        out_s,
    ]);
    if code != 0 {
        return Err(format!("scan exited with {code}").into());
    }
    print!("{}", std::fs::read_to_string(&out)?);
    run(["sigma-lab", "exponent", "--alpha", "0.25"]);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
