//! Three-level closed forms: the explicit two-angle phase operator and
//! its expectation value on a general pure state.

use num_complex::Complex64;

use crate::linalg::{ComplexMatrix, QuditState};
use crate::Result;

/// General pure qutrit state
/// (cos(theta/2), sin(theta/2) cos(xi/2) e^{i chi1}, sin(theta/2) sin(xi/2) e^{i chi2}).
pub fn state(theta: f64, xi: f64, chi1: f64, chi2: f64) -> Result<QuditState> {
    let half = theta / 2.0;
    QuditState::normalized(vec![
        Complex64::new(half.cos(), 0.0),
        Complex64::from_polar(half.sin() * (xi / 2.0).cos(), chi1),
        Complex64::from_polar(half.sin() * (xi / 2.0).sin(), chi2),
    ])
}

/// Explicit two-angle phase operator: nonzero entries
/// e^{i(phi1+phi2)}, e^{-i(2 phi1 - phi2)}, e^{i(phi1 - 2 phi2)} on the
/// cyclic-shift pattern.
pub fn phase_operator_explicit(phi1: f64, phi2: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(3);
    m.set(0, 2, Complex64::from_polar(1.0, phi1 + phi2));
    m.set(1, 0, Complex64::from_polar(1.0, -(2.0 * phi1 - phi2)));
    m.set(2, 1, Complex64::from_polar(1.0, phi1 - 2.0 * phi2));
    m
}

/// Closed-form expectation of the phase operator on the general state:
/// three terms, one per cyclic transition.
pub fn phase_expectation(
    theta: f64,
    xi: f64,
    chi1: f64,
    chi2: f64,
    phi1: f64,
    phi2: f64,
) -> Complex64 {
    let half = theta / 2.0;
    let term12 = Complex64::from_polar(
        0.5 * half.sin().powi(2) * xi.sin(),
        (chi1 - chi2) + (phi1 - 2.0 * phi2),
    );
    let term20 = Complex64::from_polar(0.5 * theta.sin() * (xi / 2.0).sin(), chi2 + (phi1 + phi2));
    let term01 = Complex64::from_polar(
        0.5 * theta.sin() * (xi / 2.0).cos(),
        -(chi1 + (2.0 * phi1 - phi2)),
    );
    term12 + term20 + term01
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PrimeDim;
    use crate::phase::{self, PhaseAngles};
    use crate::rng::SplitMix64;
    use crate::tol;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn explicit_operator_matches_general_path() {
        let d = PrimeDim::new(3).unwrap();
        let mut rng = SplitMix64::new(79);
        for _ in 0..100 {
            let (p1, p2) = (rng.angle(), rng.angle());
            let phis = PhaseAngles::new(d, vec![p1, p2]).unwrap();
            let general = phase::phase_operator(d, &phis, 1).unwrap();
            assert!(general.max_abs_diff(&phase_operator_explicit(p1, p2)) < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn expectation_matches_matrix_path() {
        let d = PrimeDim::new(3).unwrap();
        let mut rng = SplitMix64::new(83);
        for _ in 0..500 {
            let theta = rng.range(0.0, PI);
            let xi = rng.range(0.0, PI);
            let (c1, c2) = (rng.angle(), rng.angle());
            let (p1, p2) = (rng.angle(), rng.angle());
            let psi = state(theta, xi, c1, c2).unwrap();
            let phis = PhaseAngles::new(d, vec![p1, p2]).unwrap();
            let matrix_path = phase::phase_moment(&psi, &phis, 1).unwrap();
            let closed = phase_expectation(theta, xi, c1, c2, p1, p2);
            assert!((matrix_path - closed).norm() < tol::CONJUGATION);
        }
    }

    #[test]
    fn two_level_limit() {
        // xi = 0: modulus sin(theta)/2, phase -(chi1 + 2 phi1 - phi2)
        let mut rng = SplitMix64::new(89);
        for _ in 0..100 {
            let theta = rng.range(0.0, PI);
            let c1 = rng.angle();
            let (p1, p2) = (rng.angle(), rng.angle());
            let value = phase_expectation(theta, 0.0, c1, 0.0, p1, p2);
            let expected = Complex64::from_polar(0.5 * theta.sin(), -(c1 + 2.0 * p1 - p2));
            assert!((value - expected).norm() < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn two_level_limit_depends_on_single_combination() {
        // moving along 2 phi1 - phi2 = const leaves the value fixed
        let value0 = phase_expectation(FRAC_PI_2, 0.0, 0.7, 0.0, 0.3, 1.1);
        for t in [0.1, 0.5, 2.0, 5.0] {
            let value = phase_expectation(FRAC_PI_2, 0.0, 0.7, 0.0, 0.3 + t, 1.1 + 2.0 * t);
            assert!((value - value0).norm() < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn pole_state_has_zero_expectation() {
        let value = phase_expectation(0.0, 1.2, 0.4, 2.2, 0.9, 1.7);
        assert!(value.norm() < tol::ALGEBRAIC);
    }
}
