//! The covariant phase POVM: Hermitian densities that integrate to the
//! identity and shift covariantly under the inversion generators.
//!
//! Usage: cargo run --example povm_covariance [-- <dim>]

use qudit_phase::linalg::eig_hermitian;
use qudit_phase::pauli::PrimeDim;
use qudit_phase::phase::{CovariantPovm, PhaseAngles};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let d = PrimeDim::new(dim)?;
    let n = d.get();

    let povm = CovariantPovm::uniform(d);
    let coeffs: Vec<String> = povm
        .gammas()
        .iter()
        .map(|g| format!("{:+.3}{:+.3}i", g.re, g.im))
        .collect();
    println!("coefficients: [{}]", coeffs.join(", "));

    let phis = PhaseAngles::new(d, (1..n).map(|j| 0.25 * j as f64).collect())?;
    let element = povm.element(&phis);
    println!("\ndensity at one reference phase:");
    println!(
        "  hermiticity residual {:.3e}",
        element.hermiticity_residual()
    );
    let eigs = eig_hermitian(&element)?;
    let spectrum: Vec<String> = eigs.iter().map(|(v, _)| format!("{v:+.6}")).collect();
    println!("  spectrum [{}]", spectrum.join(", "));

    if n <= 5 {
        println!(
            "  identity integral residual {:.3e}",
            povm.identity_integral_residual(if n <= 3 { 16 } else { 8 })?
        );
        println!(
            "  min eigenvalue over the grid {:+.3e} (negative would mean no positivity)",
            povm.min_eigenvalue_scan(if n <= 3 { 32 } else { 8 })?
        );
    }

    println!("\ncovariance under single-axis shifts:");
    for j in 0..n - 1 {
        let residual = povm.covariance_residual(&phis, j, 1.234)?;
        println!("  axis {j}: residual {:.3e}", residual);
    }
    Ok(())
}
