// Zeta, complex Gamma, fractional-order Bessel functions and μ(σ).

use std::error::Error;

use sigma_lab::special::{
    bessel_i, bessel_j, bessel_k, gamma_complex, mu_exponent, zeta_complex, zeta_real,
};
use sigma_lab::ComplexPoint;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("zeta(2)    = {:.16}", zeta_real(2.0)?);
    println!("zeta(-1)   = {:.16}", zeta_real(-1.0)?);
    println!("zeta(0.75) = {:.16}", zeta_real(0.75)?);
    let rho = ComplexPoint::new(0.5, 14.134725141734695);
    println!("|zeta(rho_1)| = {:.3e}", zeta_complex(rho)?.norm());
    println!(
        "Gamma(0.3+7.5i) = {:.6e}",
        gamma_complex(ComplexPoint::new(0.3, 7.5))?
    );
    for nu in [-1.25, 0.5, 1.25] {
        println!(
            "nu = {nu:>5}: J(3.7) = {:+.15}, I(2.5) = {:.15}",
            bessel_j(nu, 3.7)?,
            bessel_i(nu, 2.5)?
        );
    }
    println!("K_1.3(8) = {:.15e}", bessel_k(1.3, 8.0)?);
    for s in [-0.5, 0.0, 0.25, 0.5, 1.0, 1.5] {
        println!("mu({s}) = {}", mu_exponent(s));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
