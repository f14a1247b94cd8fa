//! Polar-decomposition construction of a transition phase operator,
//! for contrast with the covariant family.
//!
//! The 0 -> 1 transition operator |0><1| is singular, so its polar
//! unitary is not unique: any unitary of the form below completes the
//! decomposition. With the positive factor taken on the right,
//! R = sqrt((|1><0|)(|0><1|)) = |1><1|, the product E12 * R recovers
//! |0><1| exactly. (Taking sqrt((|0><1|)(|1><0|)) = |0><0| instead
//! gives the left factor, which composes on the other side.)

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::{sqrt_psd, ComplexMatrix};
use crate::pauli::{self, PrimeDim};
use crate::tol;
use crate::Result;

/// Transition phase operator for the 0 -> 1 transition:
/// [[0, 1, 0], [x, 0, y], [conj(y), 0, -conj(x)]] with |x|^2 + |y|^2 = 1.
/// Unitary for every admissible (x, y).
pub fn transition_phase_operator(x: Complex64, y: Complex64) -> Result<ComplexMatrix> {
    let norm = x.norm_sqr() + y.norm_sqr();
    if (norm - 1.0).abs() > tol::ALGEBRAIC {
        return Err(Error::NotNormalized { norm: norm.sqrt() });
    }
    let mut m = ComplexMatrix::zeros(3);
    m.set(0, 1, Complex64::new(1.0, 0.0));
    m.set(1, 0, x);
    m.set(1, 2, y);
    m.set(2, 0, y.conj());
    m.set(2, 2, -x.conj());
    Ok(m)
}

/// Right polar factor of the 0 -> 1 transition: the positive square
/// root of (|1><0|)(|0><1|), i.e. the projector |1><1|.
pub fn transition_modulus() -> ComplexMatrix {
    let d = PrimeDim::new(3).expect("3 is prime");
    let s01 = pauli::transition(d, 0, 1).expect("indices in range");
    let s10 = pauli::transition(d, 1, 0).expect("indices in range");
    let gram = s10.mat_mul(&s01).expect("same dimension");
    sqrt_psd(&gram).expect("projector is PSD")
}

/// Max-abs residual of E12 * R - |0><1| for the given unitary completion.
pub fn decomposition_residual(x: Complex64, y: Complex64) -> Result<f64> {
    let d = PrimeDim::new(3).expect("3 is prime");
    let e12 = transition_phase_operator(x, y)?;
    let product = e12.mat_mul(&transition_modulus())?;
    let s01 = pauli::transition(d, 0, 1)?;
    Ok(product.max_abs_diff(&s01))
}
