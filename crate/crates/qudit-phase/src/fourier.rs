//! Finite Fourier transform and the quadratic diagonal map that ladders
//! the shift operator through the class generators.

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::{roots_of_unity, ComplexMatrix};
use crate::pauli::{self, PrimeDim};
use crate::report::{Check, Report};
use crate::tol;
use crate::Result;

/// Finite Fourier transform: entries w^(n*n')/sqrt(d). Symmetric and
/// unitary, with F^4 = 1.
#[derive(Debug, Clone)]
pub struct FourierMatrix {
    dim: usize,
    matrix: ComplexMatrix,
}

impl FourierMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

pub fn fourier(d: PrimeDim) -> FourierMatrix {
    let n = d.get();
    let omega = roots_of_unity(n);
    let inv_sqrt = 1.0 / (n as f64).sqrt();
    let matrix = ComplexMatrix::from_fn(n, |row, col| omega[(row * col) % n] * inv_sqrt);
    FourierMatrix { dim: n, matrix }
}

/// Diagonal unitary whose k-th conjugation power carries the shift
/// operator to shift*clock^k.
///
/// For odd primes the diagonal is w^(-(n^2 - n)(d+1)/2) with the
/// exponent reduced mod d in integer arithmetic before the root table
/// is consulted. At d=2 no such map exists for shift*clock itself; the
/// returned diag(1, -i) instead carries the shift operator onto
/// i*shift*clock (the second Pauli matrix), which is the standard
/// two-level substitute.
#[derive(Debug, Clone)]
pub struct QuadraticPhase {
    dim: usize,
    matrix: ComplexMatrix,
}

impl QuadraticPhase {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

pub fn quadratic_phase(d: PrimeDim) -> QuadraticPhase {
    let n = d.get();
    if n == 2 {
        let matrix =
            ComplexMatrix::diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, -1.0)]);
        return QuadraticPhase { dim: 2, matrix };
    }
    let omega = roots_of_unity(n);
    let half = n.div_ceil(2); // (d+1)/2 for odd d
    let entries: Vec<Complex64> = (0..n)
        .map(|i| {
            let quad = (i * i + n - i) % n; // n^2 - n, reduced
            let exponent = (n - (quad * half) % n) % n; // negated, reduced
            omega[exponent]
        })
        .collect();
    QuadraticPhase {
        dim: n,
        matrix: ComplexMatrix::diagonal(&entries),
    }
}

/// Unitary conjugation u^dag * a * u.
pub fn conjugate(a: &ComplexMatrix, u: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: u.dim(),
        });
    }
    let residual = u.unitarity_residual();
    if residual >= tol::EIGEN {
        return Err(Error::NotUnitary { residual });
    }
    u.adjoint().mat_mul(&a.mat_mul(u)?)
}

/// Residuals of the Fourier-pair identities: shift = F^dag clock F,
/// F^4 = 1, and the quadratic-phase conjugation ladder (replaced by the
/// sigma_y check at d=2).
pub fn fourier_pair_check(d: PrimeDim) -> Report {
    let n = d.get();
    let mut report = Report::new("fourier-pair", n);

    let f = fourier(d);
    let x = pauli::shift(d);
    let z = pauli::clock(d);

    let conj = conjugate(&z, f.matrix()).expect("F is unitary");
    report.push(Check::new(
        "shift-from-clock",
        x.max_abs_diff(&conj),
        tol::CONJUGATION,
    ));

    let f4 = f.matrix().pow(4);
    report.push(Check::new(
        "fourier-quartic",
        f4.max_abs_diff(&ComplexMatrix::identity(n)),
        tol::CONJUGATION,
    ));

    let v = quadratic_phase(d);
    if n == 2 {
        // target is i * shift * clock, not shift * clock
        let xz = x.mat_mul(&z).expect("same dimension");
        let sigma_y = xz.scale(Complex64::new(0.0, 1.0));
        let conj = conjugate(&x, v.matrix()).expect("V is unitary");
        report.push(
            Check::new(
                "quadratic-phase-ladder",
                sigma_y.max_abs_diff(&conj),
                tol::CONJUGATION,
            )
            .with_note("d=2 target is i*shift*clock"),
        );
    } else {
        let mut worst = 0.0f64;
        for k in 1..n {
            let vk = v.matrix().pow(k);
            let target = x.mat_mul(&z.pow(k)).expect("same dimension");
            let conj = conjugate(&x, &vk).expect("V^k is unitary");
            worst = worst.max(target.max_abs_diff(&conj));
        }
        report.push(Check::new(
            "quadratic-phase-ladder",
            worst,
            tol::CONJUGATION,
        ));
    }
    report
}

/// Residual of the phase-sum criterion: after dividing out the d-th
/// root of the determinant, the diagonal phases of the quadratic map
/// sum to a multiple of 2*pi, i.e. it is generated by the inversions.
pub fn quadratic_phase_form_residual(d: PrimeDim) -> f64 {
    let v = quadratic_phase(d);
    let n = d.get();
    let det: Complex64 = (0..n).map(|i| v.matrix().get(i, i)).product();
    let root = Complex64::from_polar(1.0, det.arg() / n as f64);
    let sum: f64 = (0..n).map(|i| (v.matrix().get(i, i) / root).arg()).sum();
    let wrapped = sum / std::f64::consts::TAU;
    (wrapped - wrapped.round()).abs() * std::f64::consts::TAU
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(d: usize) -> PrimeDim {
        PrimeDim::new(d).unwrap()
    }

    #[test]
    fn fourier_d2_exact() {
        let f = fourier(p(2));
        let r = 1.0 / 2.0f64.sqrt();
        let expected =
            ComplexMatrix::from_rows(&[vec![c(r, 0.0), c(r, 0.0)], vec![c(r, 0.0), c(-r, 0.0)]]);
        assert_eq!(f.matrix().max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn fourier_d3_matches_roots() {
        let f = fourier(p(3));
        let omega = roots_of_unity(3);
        let r = 1.0 / 3.0f64.sqrt();
        let expected = ComplexMatrix::from_rows(&[
            vec![c(r, 0.0), c(r, 0.0), c(r, 0.0)],
            vec![c(r, 0.0), omega[1] * r, omega[2] * r],
            vec![c(r, 0.0), omega[2] * r, omega[1] * r],
        ]);
        assert!(f.matrix().max_abs_diff(&expected) < tol::ALGEBRAIC);
    }

    #[test]
    fn fourier_quartic_d5() {
        let f = fourier(p(5));
        let f4 = f.matrix().pow(4);
        assert!(f4.max_abs_diff(&ComplexMatrix::identity(5)) < tol::CONJUGATION);
    }

    #[test]
    fn fourier_symmetric_exactly() {
        for d in [2usize, 3, 7, 31] {
            let f = fourier(p(d));
            assert_eq!(f.matrix().max_abs_diff(&f.matrix().transpose()), 0.0);
        }
    }

    #[test]
    fn quadratic_phase_d3() {
        let v = quadratic_phase(p(3));
        let omega = roots_of_unity(3);
        let expected = ComplexMatrix::diagonal(&[omega[0], omega[0], omega[2]]);
        assert_eq!(v.matrix().max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn quadratic_phase_d2() {
        let v = quadratic_phase(p(2));
        let expected = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, -1.0)]);
        assert_eq!(v.matrix().max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn quadratic_phase_d5() {
        // exponents -(n^2 - n) * 3 mod 5 for n = 0..4: 0, 0, 4, 2, 4
        let v = quadratic_phase(p(5));
        let omega = roots_of_unity(5);
        let expected = ComplexMatrix::diagonal(&[omega[0], omega[0], omega[4], omega[2], omega[4]]);
        assert_eq!(v.matrix().max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn conjugation_examples() {
        let d = p(3);
        let f = fourier(d);
        let x = pauli::shift(d);
        let z = pauli::clock(d);
        assert!(conjugate(&z, f.matrix()).unwrap().max_abs_diff(&x) < tol::CONJUGATION);

        let v = quadratic_phase(d);
        let xz = x.mat_mul(&z).unwrap();
        assert!(conjugate(&x, v.matrix()).unwrap().max_abs_diff(&xz) < tol::CONJUGATION);

        let id = ComplexMatrix::identity(3);
        assert!(conjugate(&z, &id).unwrap().max_abs_diff(&z) < tol::ALGEBRAIC);
    }

    #[test]
    fn conjugate_rejects_non_unitary() {
        let a = ComplexMatrix::identity(2);
        let m = ComplexMatrix::from_fn(2, |i, j| c((i + j) as f64, 0.0));
        assert!(matches!(conjugate(&a, &m), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn pair_check_passes() {
        for d in [2usize, 3, 7] {
            let report = fourier_pair_check(p(d));
            assert!(report.passed(), "d={d}");
        }
    }

    #[test]
    fn pair_check_d2_sigma_y_exact() {
        let report = fourier_pair_check(p(2));
        let ladder = report
            .checks
            .iter()
            .find(|c| c.name == "quadratic-phase-ladder")
            .unwrap();
        assert_eq!(ladder.residual, 0.0);
    }

    #[test]
    fn shift_eigenvectors_are_fourier_columns() {
        // columns of F^dag are shift eigenvectors with eigenvalue w^n
        for d in PrimeDim::all() {
            let n = d.get();
            let f_adj = fourier(d).matrix().adjoint();
            let x = pauli::shift(d);
            let omega = roots_of_unity(n);
            for col in 0..n {
                let column: Vec<Complex64> = (0..n).map(|row| f_adj.get(row, col)).collect();
                let image = x.apply(&column);
                let worst = column
                    .iter()
                    .zip(&image)
                    .map(|(v, iv)| (iv - omega[col] * v).norm())
                    .fold(0.0, f64::max);
                assert!(worst < tol::CONJUGATION, "d={n} col={col}");
            }
        }
    }

    #[test]
    fn quadratic_phase_form_all_odd_primes() {
        for d in PrimeDim::all() {
            if d.get() == 2 {
                continue;
            }
            assert!(
                quadratic_phase_form_residual(d) < tol::EIGEN,
                "d={}",
                d.get()
            );
        }
    }
}
