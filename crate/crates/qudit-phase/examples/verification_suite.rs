//! Run the full invariant suite for a range of prime dimensions and
//! print one report per dimension.
//!
//! Usage: cargo run --release --example verification_suite [-- <max_dim>]

use qudit_phase::pauli::PrimeDim;
use qudit_phase::verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(7);
    let mut stdout = std::io::stdout().lock();
    let mut all_ok = true;
    for d in PrimeDim::all().into_iter().filter(|d| d.get() <= max) {
        let report = verify::run(d)?;
        report.write_to(&mut stdout)?;
        println!();
        all_ok &= report.passed();
    }
    if !all_ok {
        std::process::exit(1);
    }
    Ok(())
}
