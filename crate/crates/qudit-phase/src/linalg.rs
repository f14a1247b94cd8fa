//! Dense complex matrices, state vectors, and eigendecomposition sized
//! for small prime dimensions (d <= 31).

use std::f64::consts::TAU;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::Error;
use crate::tol;
use crate::Result;

/// Largest supported Hilbert-space dimension.
pub const MAX_DIM: usize = 31;

/// The d-th roots of unity `[1, w, w^2, ...]` with `w = exp(2*pi*i/d)`.
///
/// Powers are always taken from this table, never by repeated complex
/// multiplication, so phases do not drift for large exponents. Angles
/// that land on the real or imaginary axis are snapped to their exact
/// values; this is what makes the d=2 operators (and everything built
/// from them) exact rather than correct-to-round-off.
pub fn roots_of_unity(d: usize) -> Vec<Complex64> {
    (0..d)
        .map(|m| {
            if (4 * m) % d == 0 {
                match (4 * m / d) % 4 {
                    0 => Complex64::new(1.0, 0.0),
                    1 => Complex64::new(0.0, 1.0),
                    2 => Complex64::new(-1.0, 0.0),
                    _ => Complex64::new(0.0, -1.0),
                }
            } else {
                Complex64::from_polar(1.0, TAU * m as f64 / d as f64)
            }
        })
        .collect()
}

/// Dense square complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 2, "matrices are at least 2x2");
        Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from an entry function over (row, col).
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.entries[i * dim + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "rows must form a square matrix"
        );
        Self::from_fn(dim, |i, j| rows[i][j])
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m.entries[i * entries.len() + i] = z;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    /// Standard matrix product.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..d {
                    out.entries[i * d + j] += a * other.entries[k * d + j];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = self.clone();
        for (o, e) in out.entries.iter_mut().zip(&other.entries) {
            *o += e;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = self.clone();
        for (o, e) in out.entries.iter_mut().zip(&other.entries) {
            *o -= e;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e *= factor;
        }
        out
    }

    /// Matrix power by repeated multiplication (exponents here are < d).
    pub fn pow(&self, exponent: usize) -> Self {
        let mut out = Self::identity(self.dim);
        for _ in 0..exponent {
            out = out.mat_mul(self).expect("same dimension");
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry modulus (the max-abs norm used by every residual check).
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max-abs residual of `M^dag M - 1`.
    pub fn unitarity_residual(&self) -> f64 {
        let gram = self.adjoint().mat_mul(self).expect("same dimension");
        gram.max_abs_diff(&Self::identity(self.dim))
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        self.unitarity_residual() < tolerance
    }

    /// Max-abs residual of `M - M^dag`.
    pub fn hermiticity_residual(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Matrix-vector product on raw amplitudes.
    pub fn apply(&self, amplitudes: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(amplitudes.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * amplitudes[j]).sum())
            .collect()
    }

    /// Bilinear form `<psi| M |psi>`.
    pub fn expectation(&self, state: &QuditState) -> Complex64 {
        let image = self.apply(state.amplitudes());
        state
            .amplitudes()
            .iter()
            .zip(&image)
            .map(|(c, m)| c.conj() * m)
            .sum()
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, other: &ComplexMatrix) -> ComplexMatrix {
        self.mat_mul(other).expect("dimension mismatch")
    }
}

/// Normalized complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct QuditState {
    dim: usize,
    amplitudes: Vec<Complex64>,
}

impl QuditState {
    /// Wrap amplitudes that are already normalized to within 1e-12.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        if amplitudes.len() < 2 {
            return Err(Error::DimensionOutOfRange(amplitudes.len()));
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > tol::ALGEBRAIC {
            return Err(Error::NotNormalized {
                norm: norm_sq.sqrt(),
            });
        }
        let dim = amplitudes.len();
        Ok(Self { dim, amplitudes })
    }

    /// Scale arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        if amplitudes.len() < 2 {
            return Err(Error::DimensionOutOfRange(amplitudes.len()));
        }
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::NotNormalized { norm });
        }
        let dim = amplitudes.len();
        let amplitudes = amplitudes.into_iter().map(|z| z / norm).collect();
        Ok(Self { dim, amplitudes })
    }

    /// Computational basis state |index>.
    pub fn basis_state(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, bound: dim });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self::new(amplitudes)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Rotate the global phase so the first component above the zero
    /// threshold is real and positive. Idempotent.
    pub fn with_leading_phase_convention(&self) -> Self {
        for z in &self.amplitudes {
            if z.norm() > tol::COMPONENT_ZERO {
                let phase = z.conj() / z.norm();
                let amplitudes = self.amplitudes.iter().map(|a| a * phase).collect();
                return Self {
                    dim: self.dim,
                    amplitudes,
                };
            }
        }
        self.clone()
    }
}

/// Rank-one matrix `|a><b|`.
pub fn outer(a: &QuditState, b: &QuditState) -> ComplexMatrix {
    assert_eq!(a.dim(), b.dim(), "dimension mismatch");
    ComplexMatrix::from_fn(a.dim(), |i, j| a.amplitude(i) * b.amplitude(j).conj())
}

/// One eigenvalue/eigenvector pair of a unitary matrix.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: Complex64,
    pub vector: QuditState,
}

const MAX_JACOBI_SWEEPS: usize = 60;

/// Cyclic Jacobi diagonalization of a Hermitian matrix held in raw
/// row-major storage. `a` is reduced towards diagonal form in place and
/// `v` accumulates the rotations (columns end up as eigenvectors).
fn jacobi_hermitian(n: usize, a: &mut [Complex64], v: &mut [Complex64]) -> Result<()> {
    if n <= 1 {
        return Ok(());
    }
    let scale = a.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
    let stop = scale * 1e-15;
    let skip = scale * 1e-18;

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[p * n + q].norm());
            }
        }
        if off <= stop {
            return Ok(());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let m = apq.norm();
                if m <= skip {
                    continue;
                }
                let phase = apq / m; // e^{i alpha}
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (app - aqq) / (2.0 * m);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // G = diag(1, conj(phase)) * [[c, -s], [s, c]] acting on columns p, q.
                let g_qp = phase.conj() * s;
                let g_qq = phase.conj() * c;
                for i in 0..n {
                    let hip = a[i * n + p];
                    let hiq = a[i * n + q];
                    a[i * n + p] = hip * c + hiq * g_qp;
                    a[i * n + q] = hiq * g_qq - hip * s;
                }
                for j in 0..n {
                    let hpj = a[p * n + j];
                    let hqj = a[q * n + j];
                    a[p * n + j] = hpj * c + hqj * g_qp.conj();
                    a[q * n + j] = hqj * g_qq.conj() - hpj * s;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = vip * c + viq * g_qp;
                    v[i * n + q] = viq * g_qq - vip * s;
                }
            }
        }
    }

    let mut off = 0.0f64;
    for p in 0..n {
        for q in (p + 1)..n {
            off = off.max(a[p * n + q].norm());
        }
    }
    if off <= scale * 1e-12 {
        Ok(())
    } else {
        Err(Error::EigenConvergence { off_diagonal: off })
    }
}

/// Eigendecomposition of a Hermitian matrix. Pairs are sorted by
/// ascending eigenvalue; the sort is stable so exact degeneracies keep
/// the rotation order, which is deterministic.
pub fn eig_hermitian(matrix: &ComplexMatrix) -> Result<Vec<(f64, QuditState)>> {
    if !matrix.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = matrix.dim();
    let mut a = matrix.entries.clone();
    let mut v = ComplexMatrix::identity(n).entries;
    jacobi_hermitian(n, &mut a, &mut v)?;

    let mut order: Vec<usize> = (0..n).collect();
    let values: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    order.sort_by(|&i, &j| {
        values[i]
            .partial_cmp(&values[j])
            .expect("finite eigenvalues")
    });

    order
        .into_iter()
        .map(|col| {
            let amplitudes: Vec<Complex64> = (0..n).map(|row| v[row * n + col]).collect();
            Ok((values[col], QuditState::normalized(amplitudes)?))
        })
        .collect()
}

/// Gap below which neighbouring stage-one eigenvalues are treated as one
/// degenerate cluster. Far above eigensolver noise, far below the
/// smallest spacing between distinct root-of-unity real parts at d=31.
const CLUSTER_GAP: f64 = 1e-8;

/// Eigendecomposition of a unitary matrix.
///
/// A unitary U is normal, so its Hermitian and anti-Hermitian parts
/// `A = (U + U^dag)/2` and `B = (U - U^dag)/(2i)` commute and are
/// diagonalized simultaneously: first A, then B restricted to each
/// degenerate eigenspace of A. Together A and B separate every distinct
/// eigenvalue of U.
///
/// Output conventions (these make MUB tables reproducible):
/// - each eigenvector's first component above 1e-10 is made real positive;
/// - pairs are sorted by eigenvalue phase angle in [0, 2*pi), with
///   phases within 1e-9 of 2*pi wrapped to 0;
/// - the sort is stable, so a fully degenerate input (the identity)
///   yields the computational basis.
pub fn eig_unitary(matrix: &ComplexMatrix) -> Result<Vec<EigenPair>> {
    let residual = matrix.unitarity_residual();
    if residual >= tol::EIGEN {
        return Err(Error::NotUnitary { residual });
    }
    let n = matrix.dim();
    let adjoint = matrix.adjoint();
    let herm = matrix.add(&adjoint)?.scale(Complex64::new(0.5, 0.0));
    let anti = matrix.sub(&adjoint)?.scale(Complex64::new(0.0, -0.5));

    let stage_one = eig_hermitian(&herm)?;

    // Split stage-one output into degenerate clusters by consecutive gap.
    let mut vectors: Vec<QuditState> = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && stage_one[end].0 - stage_one[end - 1].0 <= CLUSTER_GAP {
            end += 1;
        }
        if end - start == 1 {
            vectors.push(stage_one[start].1.clone());
        } else {
            let cluster: Vec<&QuditState> = stage_one[start..end].iter().map(|(_, s)| s).collect();
            vectors.extend(refine_cluster(&anti, &cluster)?);
        }
        start = end;
    }

    let mut pairs: Vec<EigenPair> = vectors
        .into_iter()
        .map(|vector| {
            let vector = vector.with_leading_phase_convention();
            let value = matrix.expectation(&vector);
            EigenPair { value, vector }
        })
        .collect();

    pairs.sort_by(|a, b| {
        eigenvalue_phase(a.value)
            .partial_cmp(&eigenvalue_phase(b.value))
            .expect("finite phases")
    });
    Ok(pairs)
}

/// Diagonalize the anti-Hermitian part restricted to one degenerate
/// cluster of stage-one eigenvectors.
fn refine_cluster(anti: &ComplexMatrix, cluster: &[&QuditState]) -> Result<Vec<QuditState>> {
    let n = anti.dim();
    let m = cluster.len();
    let mut sub = vec![Complex64::new(0.0, 0.0); m * m];
    for (r, u) in cluster.iter().enumerate() {
        let image = anti.apply(u.amplitudes());
        for (c, w) in cluster.iter().enumerate().skip(r) {
            let z: Complex64 = w
                .amplitudes()
                .iter()
                .zip(&image)
                .map(|(wi, iv)| wi.conj() * iv)
                .sum();
            // <w| B |u> lands at (c, r); hermitize to kill round-off skew.
            sub[c * m + r] = z;
            sub[r * m + c] = z.conj();
        }
    }
    for i in 0..m {
        sub[i * m + i].im = 0.0;
    }
    let mut rot = vec![Complex64::new(0.0, 0.0); m * m];
    for i in 0..m {
        rot[i * m + i] = Complex64::new(1.0, 0.0);
    }
    jacobi_hermitian(m, &mut sub, &mut rot)?;

    let mut order: Vec<usize> = (0..m).collect();
    let values: Vec<f64> = (0..m).map(|i| sub[i * m + i].re).collect();
    order.sort_by(|&i, &j| {
        values[i]
            .partial_cmp(&values[j])
            .expect("finite eigenvalues")
    });

    order
        .into_iter()
        .map(|col| {
            let mut amplitudes = vec![Complex64::new(0.0, 0.0); n];
            for (r, u) in cluster.iter().enumerate() {
                let coeff = rot[r * m + col];
                for (a, ui) in amplitudes.iter_mut().zip(u.amplitudes()) {
                    *a += coeff * ui;
                }
            }
            QuditState::normalized(amplitudes)
        })
        .collect()
}

/// Phase angle of a unit-modulus eigenvalue, mapped into [0, 2*pi) with
/// values within 1e-9 of 2*pi wrapped back to 0.
pub fn eigenvalue_phase(value: Complex64) -> f64 {
    let mut phase = value.arg();
    if phase < 0.0 {
        phase += TAU;
    }
    if TAU - phase < 1e-9 {
        phase = 0.0;
    }
    phase
}

/// Positive semidefinite square root of a Hermitian PSD matrix.
pub fn sqrt_psd(matrix: &ComplexMatrix) -> Result<ComplexMatrix> {
    let pairs = eig_hermitian(matrix)?;
    let mut out = ComplexMatrix::zeros(matrix.dim());
    for (value, vector) in pairs {
        let clamped = value.max(0.0).sqrt();
        if clamped == 0.0 {
            continue;
        }
        let proj = outer(&vector, &vector).scale(Complex64::new(clamped, 0.0));
        out = out.add(&proj)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier;
    use crate::pauli::{self, PrimeDim};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn mat_mul_identity() {
        let id = ComplexMatrix::identity(3);
        assert_eq!(id.mat_mul(&id).unwrap().max_abs_diff(&id), 0.0);
    }

    #[test]
    fn mat_mul_weyl_relation_d3() {
        let d = PrimeDim::new(3).unwrap();
        let z = pauli::clock(d);
        let x = pauli::shift(d);
        let omega = roots_of_unity(3)[1];
        let zx = z.mat_mul(&x).unwrap();
        let xz = x.mat_mul(&z).unwrap().scale(omega);
        assert!(zx.max_abs_diff(&xz) < tol::ALGEBRAIC);
    }

    #[test]
    fn shift_squares_to_identity_d2() {
        let d = PrimeDim::new(2).unwrap();
        let x = pauli::shift(d);
        assert_eq!(x.pow(2).max_abs_diff(&ComplexMatrix::identity(2)), 0.0);
    }

    #[test]
    fn mat_mul_rejects_dimension_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(
            a.mat_mul(&b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn adjoint_of_identity() {
        let id = ComplexMatrix::identity(4);
        assert_eq!(id.adjoint().max_abs_diff(&id), 0.0);
    }

    #[test]
    fn adjoint_of_fourier_d2_is_itself() {
        let d = PrimeDim::new(2).unwrap();
        let f = fourier::fourier(d).into_matrix();
        assert_eq!(f.adjoint().max_abs_diff(&f), 0.0);
    }

    #[test]
    fn adjoint_of_quadratic_phase_d3() {
        let d = PrimeDim::new(3).unwrap();
        let v = fourier::quadratic_phase(d).into_matrix();
        let omega = roots_of_unity(3);
        let expected = ComplexMatrix::diagonal(&[omega[0], omega[0], omega[1]]);
        // conj(w^2) = w
        assert!(v.adjoint().max_abs_diff(&expected) < tol::ALGEBRAIC);
    }

    #[test]
    fn eig_unitary_clock_d3_is_computational_basis() {
        let d = PrimeDim::new(3).unwrap();
        let pairs = eig_unitary(&pauli::clock(d)).unwrap();
        let omega = roots_of_unity(3);
        for (n, pair) in pairs.iter().enumerate() {
            assert!((pair.value - omega[n]).norm() < tol::EIGEN);
            let basis = QuditState::basis_state(3, n).unwrap();
            assert!((pair.vector.inner(&basis).norm() - 1.0).abs() < tol::EIGEN);
            // convention makes it literally the basis vector
            for i in 0..3 {
                assert!((pair.vector.amplitude(i) - basis.amplitude(i)).norm() < tol::EIGEN);
            }
        }
    }

    #[test]
    fn eig_unitary_shift_d2() {
        let d = PrimeDim::new(2).unwrap();
        let pairs = eig_unitary(&pauli::shift(d)).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((pairs[0].value - c(1.0, 0.0)).norm() < tol::EIGEN);
        assert!((pairs[1].value - c(-1.0, 0.0)).norm() < tol::EIGEN);
        assert!((pairs[0].vector.amplitude(0) - c(r, 0.0)).norm() < tol::EIGEN);
        assert!((pairs[0].vector.amplitude(1) - c(r, 0.0)).norm() < tol::EIGEN);
        assert!((pairs[1].vector.amplitude(0) - c(r, 0.0)).norm() < tol::EIGEN);
        assert!((pairs[1].vector.amplitude(1) - c(-r, 0.0)).norm() < tol::EIGEN);
    }

    #[test]
    fn eig_unitary_identity_degenerate() {
        let id = ComplexMatrix::identity(5);
        let pairs = eig_unitary(&id).unwrap();
        for (n, pair) in pairs.iter().enumerate() {
            assert!((pair.value - c(1.0, 0.0)).norm() < tol::EIGEN);
            let basis = QuditState::basis_state(5, n).unwrap();
            for i in 0..5 {
                assert!((pair.vector.amplitude(i) - basis.amplitude(i)).norm() < tol::EIGEN);
            }
        }
    }

    #[test]
    fn eig_unitary_rejects_non_unitary() {
        let m = ComplexMatrix::from_fn(2, |i, j| c((i + 2 * j) as f64, 0.0));
        assert!(matches!(eig_unitary(&m), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn eig_unitary_reconstruction_fourier() {
        // F has a heavily degenerate spectrum ({1, -1, i, -i}); good
        // stress test for the cluster refinement.
        for dim in [2usize, 3, 5, 7, 11] {
            let d = PrimeDim::new(dim).unwrap();
            let f = fourier::fourier(d).into_matrix();
            let pairs = eig_unitary(&f).unwrap();
            let mut rebuilt = ComplexMatrix::zeros(dim);
            for pair in &pairs {
                let proj = outer(&pair.vector, &pair.vector).scale(pair.value);
                rebuilt = rebuilt.add(&proj).unwrap();
            }
            assert!(rebuilt.max_abs_diff(&f) < tol::EIGEN_AGGREGATE, "d={dim}");
        }
    }

    #[test]
    fn eig_hermitian_orthonormal_columns() {
        let d = PrimeDim::new(7).unwrap();
        let x = pauli::shift(d);
        let herm = x.add(&x.adjoint()).unwrap().scale(c(0.5, 0.0));
        let pairs = eig_hermitian(&herm).unwrap();
        for (i, (_, vi)) in pairs.iter().enumerate() {
            for (j, (_, vj)) in pairs.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((vi.inner(vj).norm() - target).abs() < tol::EIGEN);
            }
        }
    }

    #[test]
    fn phase_convention_idempotent() {
        let s = QuditState::normalized(vec![c(0.0, 0.4), c(-0.3, 0.2), c(0.5, -0.1)]).unwrap();
        let once = s.with_leading_phase_convention();
        let twice = once.with_leading_phase_convention();
        for i in 0..3 {
            assert!((once.amplitude(i) - twice.amplitude(i)).norm() < 1e-15);
        }
        assert!(once.amplitude(0).im.abs() < 1e-15);
        assert!(once.amplitude(0).re > 0.0);
    }

    #[test]
    fn sqrt_psd_of_projector() {
        let p = ComplexMatrix::diagonal(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let r = sqrt_psd(&p).unwrap();
        assert!(r.max_abs_diff(&p) < tol::EIGEN);
    }

    #[test]
    fn state_rejects_unnormalized() {
        let r = QuditState::new(vec![c(1.0, 0.0), c(0.5, 0.0)]);
        assert!(matches!(r, Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn roots_snap_cardinal_angles() {
        let r2 = roots_of_unity(2);
        assert_eq!(r2[1], c(-1.0, 0.0));
        let r4 = roots_of_unity(4);
        assert_eq!(r4[1], c(0.0, 1.0));
        assert_eq!(r4[3], c(0.0, -1.0));
    }
}
