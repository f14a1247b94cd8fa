//! Build the generalized Pauli operators for a prime dimension and
//! check the Weyl commutation relation and the class structure.
//!
//! Usage: cargo run --example weyl_algebra [-- <dim>]

use qudit_phase::pauli::{self, PrimeDim};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dim: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let d = PrimeDim::new(dim)?;
    let n = d.get();

    let weyl = pauli::weyl_check(d);
    println!(
        "clock*shift = w * shift*clock   residual {:.3e} ({})",
        weyl.residual,
        if weyl.passed { "pass" } else { "FAIL" }
    );

    println!("\n{} commuting classes, {} operators each:", n + 1, n - 1);
    for k in 0..=n {
        let class = pauli::commuting_class(d, k)?;
        println!(
            "  class {k:>2}: commutation residual {:.3e}, max |trace| {:.3e}",
            class.commutation_residual(),
            class.trace_residual()
        );
    }

    let set = pauli::multicomplementary_set(d);
    println!("\nmulticomplementary set: {} generators", set.len());
    for (k, op) in set.operators().iter().enumerate() {
        println!(
            "  generator {k:>2}: unitarity residual {:.3e}",
            op.unitarity_residual()
        );
    }

    println!("\nclock powers expand over the inversion operators:");
    for k in 1..n {
        let residual = pauli::inversion_span_residual(d, &pauli::clock(d).pow(k));
        println!("  clock^{k}: span residual {residual:.3e}");
    }
    Ok(())
}
