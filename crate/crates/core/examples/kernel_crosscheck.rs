// Evaluate the kernel W_α(y) by its Bessel closed form and by contour quadrature.

use std::error::Error;

use sigma_lab::voronoi::kernel_compare;
use sigma_lab::{Alpha, KernelQuadrature};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>6} {:>5} {:>22} {:>22} {:>9}",
        "y", "alpha", "bessel", "contour", "rel"
    );
    for a in [0.1, 0.25, 0.4] {
        let alpha = Alpha::new(a)?;
        for y in [1.0, 10.0, 100.0] {
            let quad = KernelQuadrature::for_point(y);
            let c = kernel_compare(y, alpha, &quad)?;
            println!(
                "{:>6} {:>5} {:>22.15e} {:>22.15e} {:>9.1e}",
                y, a, c.bessel_value, c.contour_value, c.rel_diff
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
