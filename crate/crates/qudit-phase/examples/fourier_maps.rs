//! The finite Fourier transform exchanges clock and shift; the
//! quadratic diagonal map ladders the shift through the remaining
//! class generators.
//!
//! Usage: cargo run --example fourier_maps [-- <dim>]

use qudit_phase::fourier::{self, quadratic_phase_form_residual};
use qudit_phase::pauli::PrimeDim;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);
    let d = PrimeDim::new(dim)?;

    let report = fourier::fourier_pair_check(d);
    let mut out = Vec::new();
    report.write_to(&mut out)?;
    print!("{}", String::from_utf8(out)?);

    if d.get() > 2 {
        println!(
            "\nquadratic map is generated by the inversions: phase-sum residual {:.3e}",
            quadratic_phase_form_residual(d)
        );
        let v = fourier::quadratic_phase(d);
        println!("diagonal entries (arg / 2 pi):");
        for i in 0..d.get() {
            let frac = v.matrix().get(i, i).arg() / std::f64::consts::TAU;
            println!("  level {i}: {frac:+.6}");
        }
    }
    Ok(())
}
