//! Two-level closed forms: the single-angle phase operator, its
//! expectation sin(theta) cos(chi + phi) on a Bloch state, and the
//! complementary-direction condition on the sphere.
//!
//! Usage: cargo run --example qubit_closed_forms

use qudit_phase::pauli::PrimeDim;
use qudit_phase::phase::{self, PhaseAngles};
use qudit_phase::qubit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = PrimeDim::new(2)?;
    let (theta, chi) = (1.1, 0.7);
    let state = qubit::bloch_state(theta, chi)?;

    println!("expectation of the phase operator vs the closed form:");
    for step in 0..8 {
        let phi = std::f64::consts::TAU * step as f64 / 8.0;
        let direct = qubit::phase_operator(phi).expectation(&state);
        let closed = qubit::phase_expectation(theta, chi, phi);
        // the general machinery carries half the angle
        let phis = PhaseAngles::new(d, vec![phi / 2.0])?;
        let general = phase::phase_moment(&state, &phis, 1)?;
        println!(
            "  phi = {phi:>8.5}: matrix {:+.10}  closed {closed:+.10}  general path {:+.10}",
            direct.re, general.re
        );
    }

    println!("\ncomplementary directions on the Bloch sphere:");
    for (theta_a, phi_a, phi_b) in [
        (0.0, 0.0, 1.0),
        (std::f64::consts::FRAC_PI_4, 0.0, std::f64::consts::PI),
        (1.2, 2.0, 4.5),
    ] {
        let theta_b = qubit::complementary_polar_angle(theta_a, phi_a, phi_b);
        let na = qubit::bloch_vector(theta_a, phi_a);
        let nb = qubit::bloch_vector(theta_b, phi_b);
        let dot: f64 = na.iter().zip(&nb).map(|(x, y)| x * y).sum();
        println!(
            "  A = ({theta_a:.4}, {phi_a:.4}), phi_B = {phi_b:.4} -> theta_B = {theta_b:.6}, n_A.n_B = {dot:+.2e}"
        );
    }
    Ok(())
}
