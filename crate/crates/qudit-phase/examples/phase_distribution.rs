//! Sample the phase distribution of a qutrit state on a uniform grid
//! and show its normalization and extrema. A state occupying only two
//! levels depends on one effective phase and stays constant along
//! 2*phi_1 - phi_2 = const.
//!
//! Usage: cargo run --example phase_distribution

use qudit_phase::phase::{self, angle_volume};
use qudit_phase::qutrit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid_n = 64;

    // general three-level superposition
    let state = qutrit::state(1.9, 1.2, 0.4, 2.6)?;
    let dist = phase::phase_distribution(&state, grid_n)?;
    println!("general qutrit state on a {grid_n}x{grid_n} grid:");
    println!("  riemann sum  {:.12}", dist.riemann_sum());
    println!("  min P        {:+.6e}", dist.min_value());
    println!("  max P        {:+.6e}", dist.max_value());
    println!("  uniform ref  {:+.6e}", 1.0 / angle_volume(3));

    // two-level state: constant along the effective-phase direction
    let two_level = qutrit::state(1.1, 0.0, 0.8, 0.0)?;
    let dist = phase::phase_distribution(&two_level, grid_n)?;
    let mut spread = vec![(f64::INFINITY, f64::NEG_INFINITY); grid_n];
    for i in 0..grid_n {
        for j in 0..grid_n {
            let line = (2 * i + 2 * grid_n - j) % grid_n;
            let v = dist.value(i * grid_n + j);
            spread[line].0 = spread[line].0.min(v);
            spread[line].1 = spread[line].1.max(v);
        }
    }
    let worst = spread.iter().map(|(lo, hi)| hi - lo).fold(0.0, f64::max);
    println!("\ntwo-level state (xi = 0):");
    println!(
        "  riemann sum                    {:.12}",
        dist.riemann_sum()
    );
    println!("  max spread along 2p1 - p2 line {worst:.3e}");

    println!("\nvalues along one transverse cut (phi_2 = 0):");
    for i in (0..grid_n).step_by(8) {
        let angles = dist.angles_at(i * grid_n);
        println!(
            "  phi_1 = {:>8.5}  P = {:.8}",
            angles[0],
            dist.value(i * grid_n)
        );
    }
    Ok(())
}
