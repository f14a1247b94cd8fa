//! Phase operators complementary to the inversions: the diagonal phase
//! shift U, the conjugated shift powers E^k, their moments, the moment
//! kernel, the phase distribution, and the covariant POVM built from
//! them.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::{eig_hermitian, ComplexMatrix, QuditState};
use crate::pauli::{self, PrimeDim};
use crate::tol;
use crate::Result;

/// Hard cap on phase-grid sizes; keeps every sweep desk scale.
const MAX_GRID_POINTS: u128 = 1 << 24;

/// Reference phases (phi_1, ..., phi_{d-1}), stored in [0, 2*pi).
/// Component j (0-indexed) multiplies the inversion between levels j
/// and j+1.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseAngles {
    dim: usize,
    values: Vec<f64>,
}

impl PhaseAngles {
    pub fn new(d: PrimeDim, values: Vec<f64>) -> Result<Self> {
        if values.len() != d.get() - 1 {
            return Err(Error::AngleCount {
                expected: d.get() - 1,
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let values = values.into_iter().map(|v| v.rem_euclid(TAU)).collect();
        Ok(Self {
            dim: d.get(),
            values,
        })
    }

    pub fn zero(d: PrimeDim) -> Self {
        Self {
            dim: d.get(),
            values: vec![0.0; d.get() - 1],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, j: usize) -> f64 {
        self.values[j]
    }

    /// Copy with component j shifted by delta (wrapped into range).
    pub fn shifted(&self, j: usize, delta: f64) -> Self {
        let mut values = self.values.clone();
        values[j] = (values[j] + delta).rem_euclid(TAU);
        Self {
            dim: self.dim,
            values,
        }
    }

    /// Exponent of the diagonal phase shift on level `s`:
    /// sum_j phi_j * weight(j, s), with adjacent-level weights +-1.
    fn level_exponent(&self, s: usize) -> f64 {
        let mut theta = 0.0;
        if s < self.dim - 1 {
            theta += self.values[s];
        }
        if s >= 1 {
            theta -= self.values[s - 1];
        }
        theta
    }

    /// Diagonal entries of the phase shift, exp(-i * theta_s).
    fn shift_diagonal(&self) -> Vec<Complex64> {
        (0..self.dim)
            .map(|s| Complex64::from_polar(1.0, -self.level_exponent(s)))
            .collect()
    }
}

/// Diagonal phase shift exp(-i sum_j phi_j h_j). Commutes with every
/// inversion operator.
pub fn phase_shift(phis: &PhaseAngles) -> ComplexMatrix {
    ComplexMatrix::diagonal(&phis.shift_diagonal())
}

/// One family E^k: the k-th shift power conjugated by the phase shift.
#[derive(Debug, Clone)]
pub struct PhaseOperatorFamily {
    dim: PrimeDim,
    power: usize,
}

impl PhaseOperatorFamily {
    pub fn new(d: PrimeDim, power: usize) -> Result<Self> {
        if power == 0 || power >= d.get() {
            return Err(Error::PowerOutOfRange {
                power,
                dim: d.get(),
            });
        }
        Ok(Self { dim: d, power })
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn at(&self, phis: &PhaseAngles) -> ComplexMatrix {
        debug_assert_eq!(phis.dim(), self.dim.get());
        let n = self.dim.get();
        let u = phis.shift_diagonal();
        let mut m = ComplexMatrix::zeros(n);
        for s in 0..n {
            let row = (s + self.power) % n;
            m.set(row, s, u[row].conj() * u[s]);
        }
        m
    }
}

/// Phase operator E^k(phi) = U^dag(phi) * shift^k * U(phi). Strictly
/// zero on the diagonal; support is the shift^k cyclic pattern.
pub fn phase_operator(d: PrimeDim, phis: &PhaseAngles, k: usize) -> Result<ComplexMatrix> {
    if phis.dim() != d.get() {
        return Err(Error::DimensionMismatch {
            left: phis.dim(),
            right: d.get(),
        });
    }
    Ok(PhaseOperatorFamily::new(d, k)?.at(phis))
}

/// k-th phase moment <E^k(phi)> via the amplitude sum
/// sum_s conj(c_{s+k}) c_s conj(U_{s+k}) U_s.
pub fn phase_moment_sum(state: &QuditState, phis: &PhaseAngles, k: usize) -> Result<Complex64> {
    let n = state.dim();
    if phis.dim() != n {
        return Err(Error::DimensionMismatch {
            left: phis.dim(),
            right: n,
        });
    }
    if k == 0 || k >= n {
        return Err(Error::PowerOutOfRange { power: k, dim: n });
    }
    let u = phis.shift_diagonal();
    let mut total = Complex64::new(0.0, 0.0);
    for s in 0..n {
        let sk = (s + k) % n;
        total += state.amplitude(sk).conj() * state.amplitude(s) * u[sk].conj() * u[s];
    }
    Ok(total)
}

/// Same moment through the matrix bilinear form <psi| E^k |psi>.
pub fn phase_moment_bilinear(
    state: &QuditState,
    phis: &PhaseAngles,
    k: usize,
) -> Result<Complex64> {
    let d = PrimeDim::new(state.dim())?;
    let e = phase_operator(d, phis, k)?;
    Ok(e.expectation(state))
}

/// Phase moment with both computation paths cross-checked; fails loudly
/// if they disagree beyond 1e-11.
pub fn phase_moment(state: &QuditState, phis: &PhaseAngles, k: usize) -> Result<Complex64> {
    let from_sum = phase_moment_sum(state, phis, k)?;
    let from_matrix = phase_moment_bilinear(state, phis, k)?;
    let delta = (from_sum - from_matrix).norm();
    if delta >= tol::CONJUGATION {
        return Err(Error::CrossCheckFailed { delta });
    }
    Ok(from_sum)
}

/// Moments of the shift powers, <shift^k> for k = 1..=d-1 (the phi = 0
/// moments).
pub fn shift_moments(state: &QuditState) -> Vec<Complex64> {
    let n = state.dim();
    (1..n)
        .map(|k| {
            (0..n)
                .map(|s| state.amplitude((s + k) % n).conj() * state.amplitude(s))
                .sum()
        })
        .collect()
}

/// Moment kernel: (1 + sum_k conj(<E^k(phi)>) shift^k) / (2*pi)^(d-1).
/// Its trace against shift^l reproduces every moment.
pub fn moment_kernel(state: &QuditState, phis: &PhaseAngles) -> Result<ComplexMatrix> {
    let n = state.dim();
    let d = PrimeDim::new(n)?;
    let norm = angle_volume(n);
    let mut kernel = ComplexMatrix::identity(n);
    let x = pauli::shift(d);
    let mut x_power = ComplexMatrix::identity(n);
    for k in 1..n {
        x_power = x_power.mat_mul(&x)?;
        let moment = phase_moment_sum(state, phis, k)?;
        kernel = kernel.add(&x_power.scale(moment.conj()))?;
    }
    Ok(kernel.scale(Complex64::new(1.0 / norm, 0.0)))
}

/// (2*pi)^(d-1), the volume of the reference-phase torus.
pub fn angle_volume(dim: usize) -> f64 {
    TAU.powi(dim as i32 - 1)
}

/// Phase distribution sampled on a uniform tensor grid over the phase
/// torus [0, 2*pi)^(d-1), `grid_n` points per axis, lexicographic
/// ordering with the last axis fastest.
#[derive(Debug, Clone)]
pub struct PhaseDistribution {
    dim: usize,
    grid_n: usize,
    values: Vec<f64>,
}

impl PhaseDistribution {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grid_n(&self) -> usize {
        self.grid_n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn axes(&self) -> usize {
        self.dim - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Grid angles for a flat index, last axis fastest.
    pub fn angles_at(&self, mut flat: usize) -> Vec<f64> {
        let axes = self.axes();
        let mut indices = vec![0usize; axes];
        for ax in (0..axes).rev() {
            indices[ax] = flat % self.grid_n;
            flat /= self.grid_n;
        }
        indices
            .iter()
            .map(|&i| TAU * i as f64 / self.grid_n as f64)
            .collect()
    }

    pub fn value(&self, flat: usize) -> f64 {
        self.values[flat]
    }

    /// Rectangle-rule integral over the torus; 1 up to round-off.
    pub fn riemann_sum(&self) -> f64 {
        let weight = (TAU / self.grid_n as f64).powi(self.axes() as i32);
        self.values.iter().sum::<f64>() * weight
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Evaluate P(phi) = (1 + sum_k conj(<E^k(phi)>) <shift^k>) / (2*pi)^(d-1)
/// on the uniform grid. P is provably real (the k and d-k terms are
/// conjugates); an imaginary residue above 1e-10 is reported as an
/// error because it can only come from an implementation bug.
pub fn phase_distribution(state: &QuditState, grid_n: usize) -> Result<PhaseDistribution> {
    let n = state.dim();
    let d = PrimeDim::new(n)?;
    if grid_n < 8 {
        return Err(Error::GridTooSmall(grid_n));
    }
    let axes = n - 1;
    let points = (grid_n as u128).pow(axes as u32);
    if points > MAX_GRID_POINTS {
        return Err(Error::GridTooLarge { points });
    }
    let x_moments = shift_moments(state);
    let norm = angle_volume(n);
    let mut values = Vec::with_capacity(points as usize);
    let mut indices = vec![0usize; axes];
    loop {
        let angles: Vec<f64> = indices
            .iter()
            .map(|&i| TAU * i as f64 / grid_n as f64)
            .collect();
        let phis = PhaseAngles::new(d, angles)?;
        let mut p = Complex64::new(1.0, 0.0);
        for k in 1..n {
            let moment = phase_moment_sum(state, &phis, k)?;
            p += moment.conj() * x_moments[k - 1];
        }
        if p.im.abs() >= tol::REALITY {
            return Err(Error::ImaginaryResidue {
                residual: p.im.abs(),
            });
        }
        values.push(p.re / norm);
        // advance the mixed-radix counter, last axis fastest
        let mut ax = axes;
        loop {
            if ax == 0 {
                return Ok(PhaseDistribution {
                    dim: n,
                    grid_n,
                    values,
                });
            }
            ax -= 1;
            indices[ax] += 1;
            if indices[ax] < grid_n {
                break;
            }
            indices[ax] = 0;
        }
    }
}

/// Covariant POVM density built from the phase-operator families with
/// fixed coefficients: (1 + sum_k gamma_k E^k(phi)) / (2*pi)^(d-1).
///
/// Hermiticity requires gamma_{d-k} = conj(gamma_k); this is enforced
/// at construction. Positivity depends on the coefficient choice and is
/// reported by a grid scan, never assumed.
#[derive(Debug, Clone)]
pub struct CovariantPovm {
    dim: PrimeDim,
    gammas: Vec<Complex64>,
}

impl CovariantPovm {
    pub fn new(d: PrimeDim, gammas: Vec<Complex64>) -> Result<Self> {
        let n = d.get();
        if gammas.len() != n - 1 {
            return Err(Error::AngleCount {
                expected: n - 1,
                got: gammas.len(),
            });
        }
        let residual = (1..n)
            .map(|k| (gammas[n - k - 1] - gammas[k - 1].conj()).norm())
            .fold(0.0, f64::max);
        if residual > tol::ALGEBRAIC {
            return Err(Error::CoefficientConstraint { residual });
        }
        Ok(Self { dim: d, gammas })
    }

    /// All coefficients equal to one.
    pub fn uniform(d: PrimeDim) -> Self {
        Self {
            dim: d,
            gammas: vec![Complex64::new(1.0, 0.0); d.get() - 1],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim.get()
    }

    pub fn gammas(&self) -> &[Complex64] {
        &self.gammas
    }

    /// The POVM density at one reference phase.
    pub fn element(&self, phis: &PhaseAngles) -> ComplexMatrix {
        let n = self.dim.get();
        let norm = angle_volume(n);
        let mut m = ComplexMatrix::identity(n);
        for k in 1..n {
            let e = PhaseOperatorFamily::new(self.dim, k)
                .expect("k in range")
                .at(phis);
            m = m.add(&e.scale(self.gammas[k - 1])).expect("same dimension");
        }
        m.scale(Complex64::new(1.0 / norm, 0.0))
    }

    /// Max-abs residual of the rectangle-rule identity integral
    /// integral Delta(phi) d phi = 1 over an N-per-axis grid.
    pub fn identity_integral_residual(&self, grid_n: usize) -> Result<f64> {
        let n = self.dim.get();
        if grid_n < 8 {
            return Err(Error::GridTooSmall(grid_n));
        }
        let axes = n - 1;
        let points = (grid_n as u128).pow(axes as u32);
        if points > MAX_GRID_POINTS {
            return Err(Error::GridTooLarge { points });
        }
        let weight = (TAU / grid_n as f64).powi(axes as i32);
        let mut total = ComplexMatrix::zeros(n);
        let mut indices = vec![0usize; axes];
        loop {
            let angles: Vec<f64> = indices
                .iter()
                .map(|&i| TAU * i as f64 / grid_n as f64)
                .collect();
            let phis = PhaseAngles::new(self.dim, angles)?;
            total = total.add(&self.element(&phis))?;
            let mut ax = axes;
            loop {
                if ax == 0 {
                    let integral = total.scale(Complex64::new(weight, 0.0));
                    return Ok(integral.max_abs_diff(&ComplexMatrix::identity(n)));
                }
                ax -= 1;
                indices[ax] += 1;
                if indices[ax] < grid_n {
                    break;
                }
                indices[ax] = 0;
            }
        }
    }

    /// Smallest eigenvalue of the density over an N-per-axis phase grid.
    /// Negative values flag coefficient choices without positivity.
    pub fn min_eigenvalue_scan(&self, grid_n: usize) -> Result<f64> {
        let n = self.dim.get();
        let axes = n - 1;
        let points = (grid_n as u128).pow(axes as u32);
        if points > MAX_GRID_POINTS {
            return Err(Error::GridTooLarge { points });
        }
        let mut min_eig = f64::INFINITY;
        let mut indices = vec![0usize; axes];
        loop {
            let angles: Vec<f64> = indices
                .iter()
                .map(|&i| TAU * i as f64 / grid_n as f64)
                .collect();
            let phis = PhaseAngles::new(self.dim, angles)?;
            let pairs = eig_hermitian(&self.element(&phis))?;
            min_eig = min_eig.min(pairs[0].0);
            let mut ax = axes;
            loop {
                if ax == 0 {
                    return Ok(min_eig);
                }
                ax -= 1;
                indices[ax] += 1;
                if indices[ax] < grid_n {
                    break;
                }
                indices[ax] = 0;
            }
        }
    }

    /// Max-abs residual of the covariance identity: conjugating by
    /// exp(i phi' h_j) shifts the j-th reference phase by phi'.
    pub fn covariance_residual(&self, phis: &PhaseAngles, j: usize, delta: f64) -> Result<f64> {
        let n = self.dim.get();
        if j + 1 >= n {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: n - 1,
            });
        }
        // exp(i delta h_j) is diagonal with entries exp(i delta h_{j,s})
        let rot = ComplexMatrix::diagonal(
            &(0..n)
                .map(|s| {
                    Complex64::from_polar(1.0, delta * pauli::inversion_weight(self.dim, j, s))
                })
                .collect::<Vec<_>>(),
        );
        let lhs = rot.mat_mul(&self.element(phis))?.mat_mul(&rot.adjoint())?;
        let rhs = self.element(&phis.shifted(j, delta));
        Ok(lhs.max_abs_diff(&rhs))
    }
}
