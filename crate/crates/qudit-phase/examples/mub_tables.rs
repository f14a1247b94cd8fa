//! Build the d+1 mutually unbiased bases and print the cross-basis
//! overlap summary; every squared overlap equals 1/d.
//!
//! Usage: cargo run --example mub_tables [-- <dim>]

use qudit_phase::mub::{self, overlap_squared_matrix};
use qudit_phase::pauli::PrimeDim;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let d = PrimeDim::new(dim)?;
    let n = d.get();

    let collection = mub::build_mubs(d)?;
    println!("{} bases of {} vectors each", collection.len(), n);

    for basis in collection.bases() {
        println!(
            "\nbasis from class {} (orthonormality residual {:.3e}):",
            basis.source_label(),
            basis.orthonormality_residual()
        );
        for (i, v) in basis.vectors().iter().enumerate() {
            let row: Vec<String> = v
                .amplitudes()
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            println!("  |{i}> = [{}]", row.join(", "));
        }
    }

    let report = mub::unbiasedness_report(&collection);
    println!("\ncross-basis |overlap|^2 target 1/{n}:");
    for pair in &report.pairs {
        println!(
            "  bases {} x {}: max deviation {:.3e}",
            pair.basis_a, pair.basis_b, pair.max_deviation
        );
    }
    println!(
        "overall max deviation {:.3e} -> {}",
        report.max_deviation,
        if report.passed {
            "unbiased"
        } else {
            "NOT unbiased"
        }
    );

    // spot check one pair in full
    let overlaps = overlap_squared_matrix(collection.basis(0), collection.basis(1));
    println!("\nfull |<a|b>|^2 table for bases 0 x 1:");
    for row in overlaps {
        let cells: Vec<String> = row.iter().map(|o| format!("{o:.6}")).collect();
        println!("  [{}]", cells.join(", "));
    }
    Ok(())
}
