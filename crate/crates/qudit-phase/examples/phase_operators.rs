//! The phase-operator families: conjugate shift powers by the diagonal
//! phase shift and verify unitarity, the group law, and invariance of
//! the inversions.
//!
//! Usage: cargo run --example phase_operators [-- <dim>]

use qudit_phase::pauli::{self, PrimeDim};
use qudit_phase::phase::{self, PhaseAngles};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let d = PrimeDim::new(dim)?;
    let n = d.get();

    let angles: Vec<f64> = (1..n).map(|j| 0.3 * j as f64).collect();
    println!("reference phases: {angles:?}");
    let phis = PhaseAngles::new(d, angles)?;

    let u = phase::phase_shift(&phis);
    println!("\nphase shift leaves every inversion fixed:");
    for j in 0..n - 1 {
        let h = pauli::inversion(d, j)?;
        let conj = u.adjoint().mat_mul(&h.mat_mul(&u)?)?;
        println!("  inversion {j}: residual {:.3e}", conj.max_abs_diff(&h));
    }

    println!("\nfamilies E^k:");
    let e1 = phase::phase_operator(d, &phis, 1)?;
    for k in 1..n {
        let ek = phase::phase_operator(d, &phis, k)?;
        let adjoint_partner = phase::phase_operator(d, &phis, n - k)?;
        println!(
            "  k={k}: unitarity {:.3e}, (E^1)^k match {:.3e}, E^(d-k) = (E^k)+ match {:.3e}",
            ek.unitarity_residual(),
            ek.max_abs_diff(&e1.pow(k)),
            adjoint_partner.max_abs_diff(&ek.adjoint()),
        );
    }

    println!("\nE^1 entries (row, col, value):");
    for row in 0..n {
        for col in 0..n {
            let z = e1.get(row, col);
            if z.norm() > 1e-14 {
                println!("  ({row}, {col}): {:+.6}{:+.6}i", z.re, z.im);
            }
        }
    }
    Ok(())
}
