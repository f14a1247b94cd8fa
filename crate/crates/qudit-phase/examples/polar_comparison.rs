//! Contrast construction: the transition phase operator from the polar
//! decomposition of |0><1|. The transition operator is singular, so a
//! two-parameter family of unitaries completes the decomposition; the
//! covariant family treats all three levels at once instead.
//!
//! Usage: cargo run --example polar_comparison

use num_complex::Complex64;
use qudit_phase::polar;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("modulus (right polar factor) of the 0 -> 1 transition:");
    let r = polar::transition_modulus();
    for row in 0..3 {
        let cells: Vec<String> = (0..3)
            .map(|col| format!("{:+.4}", r.get(row, col).re))
            .collect();
        println!("  [{}]", cells.join(", "));
    }

    println!("\nsome unitary completions E12 with E12 * R = |0><1|:");
    let cases = [
        (
            "su(2)-restricted (y = 0)",
            Complex64::from_polar(1.0, 0.8),
            Complex64::new(0.0, 0.0),
        ),
        (
            "swap-like (x = 0)",
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ),
        (
            "generic",
            Complex64::from_polar(0.6, 1.1),
            Complex64::from_polar(0.8, -2.3),
        ),
    ];
    for (label, x, y) in cases {
        let e12 = polar::transition_phase_operator(x, y)?;
        println!(
            "  {label}: unitarity {:.3e}, decomposition residual {:.3e}",
            e12.unitarity_residual(),
            polar::decomposition_residual(x, y)?
        );
    }

    println!("\nthe y = 0 completion isolates the third level:");
    let e12 = polar::transition_phase_operator(
        Complex64::from_polar(1.0, 0.8),
        Complex64::new(0.0, 0.0),
    )?;
    for row in 0..3 {
        let cells: Vec<String> = (0..3)
            .map(|col| {
                let z = e12.get(row, col);
                format!("{:+.3}{:+.3}i", z.re, z.im)
            })
            .collect();
        println!("  [{}]", cells.join(", "));
    }
    Ok(())
}
