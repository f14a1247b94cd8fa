//! Three-level closed forms: the explicit two-angle phase operator and
//! the three-term expectation formula, cross-checked against the
//! general matrix path.
//!
//! Usage: cargo run --example qutrit_closed_forms

use qudit_phase::pauli::PrimeDim;
use qudit_phase::phase::{self, PhaseAngles};
use qudit_phase::qutrit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = PrimeDim::new(3)?;
    let (p1, p2) = (0.9, 0.35);

    let explicit = qutrit::phase_operator_explicit(p1, p2);
    let phis = PhaseAngles::new(d, vec![p1, p2])?;
    let general = phase::phase_operator(d, &phis, 1)?;
    println!(
        "explicit operator vs general machinery: residual {:.3e}",
        explicit.max_abs_diff(&general)
    );

    let (theta, xi, c1, c2) = (1.7, 0.9, 0.4, 2.1);
    let state = qutrit::state(theta, xi, c1, c2)?;
    let closed = qutrit::phase_expectation(theta, xi, c1, c2, p1, p2);
    let matrix_path = phase::phase_moment(&state, &phis, 1)?;
    println!("\ngeneral state (theta={theta}, xi={xi}):");
    println!("  closed form  {:+.10}{:+.10}i", closed.re, closed.im);
    println!(
        "  matrix path  {:+.10}{:+.10}i",
        matrix_path.re, matrix_path.im
    );

    println!("\ntwo-level limit (xi = 0): modulus is sin(theta)/2 and only");
    println!("the combination 2*phi_1 - phi_2 matters:");
    let value = qutrit::phase_expectation(theta, 0.0, c1, 0.0, p1, p2);
    println!(
        "  |<E>| = {:.10}   sin(theta)/2 = {:.10}",
        value.norm(),
        0.5 * theta.sin()
    );
    for t in [0.5, 1.5, 3.0] {
        let moved = qutrit::phase_expectation(theta, 0.0, c1, 0.0, p1 + t, p2 + 2.0 * t);
        println!("  shift t = {t}: |change| = {:.3e}", (moved - value).norm());
    }
    Ok(())
}
