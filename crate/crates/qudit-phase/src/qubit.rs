//! Two-level closed forms: the single-angle phase operator, its
//! expectation value on a Bloch state, and the complementarity
//! condition between Bloch directions.
//!
//! Angle conventions. The single-angle operator here carries phases
//! e^{+-i phi} on the off-diagonal, i.e. it is generated by half the
//! inversion angle. The general machinery at d=2 produces e^{+-2i phi_1}
//! instead, so the two parametrizations are related by phi = 2*phi_1:
//! `phase_operator(phi)` equals `phase::phase_operator` evaluated at
//! phi_1 = phi/2.

use num_complex::Complex64;

use crate::linalg::{ComplexMatrix, QuditState};
use crate::Result;

/// Single-angle qubit phase operator [[0, e^{i phi}], [e^{-i phi}, 0]].
pub fn phase_operator(phi: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m.set(0, 1, Complex64::from_polar(1.0, phi));
    m.set(1, 0, Complex64::from_polar(1.0, -phi));
    m
}

/// Bloch state (cos(theta/2), sin(theta/2) e^{i chi}).
pub fn bloch_state(theta: f64, chi: f64) -> Result<QuditState> {
    QuditState::normalized(vec![
        Complex64::new((theta / 2.0).cos(), 0.0),
        Complex64::from_polar((theta / 2.0).sin(), chi),
    ])
}

/// Closed-form expectation of the phase operator on a Bloch state:
/// sin(theta) * cos(chi + phi).
pub fn phase_expectation(theta: f64, chi: f64, phi: f64) -> f64 {
    theta.sin() * (chi + phi).cos()
}

/// Unit Bloch vector for polar angle theta and azimuth phi.
pub fn bloch_vector(theta: f64, phi: f64) -> [f64; 3] {
    [
        phi.cos() * theta.sin(),
        phi.sin() * theta.sin(),
        theta.cos(),
    ]
}

/// Polar angle theta_b in (0, pi) making direction (theta_b, phi_b)
/// complementary (Bloch-orthogonal) to direction (theta_a, phi_a):
/// cot(theta_b) = -tan(theta_a) * cos(phi_b - phi_a).
pub fn complementary_polar_angle(theta_a: f64, phi_a: f64, phi_b: f64) -> f64 {
    let cot = -theta_a.tan() * (phi_b - phi_a).cos();
    // acot onto (0, pi)
    f64::atan2(1.0, cot)
}
