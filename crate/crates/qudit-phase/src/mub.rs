//! Mutually unbiased bases as eigenbases of the multicomplementary set.
//!
//! Basis vectors are ordered by eigenvalue phase and carry the
//! leading-component phase convention, so tables are identical across
//! runs and platforms. The collection is built from the operator set
//! directly; no closed-form basis formula is used.

use crate::error::Error;
use crate::fourier;
use crate::linalg::{eig_unitary, ComplexMatrix, QuditState};
use crate::pauli::{self, PrimeDim};
use crate::tol;
use crate::Result;

/// Orthonormal eigenbasis of one class generator.
#[derive(Debug, Clone)]
pub struct OrthonormalBasis {
    dim: usize,
    source_label: usize,
    vectors: Vec<QuditState>,
}

impl OrthonormalBasis {
    /// Wrap externally supplied vectors, checking orthonormality.
    pub fn from_vectors(source_label: usize, vectors: Vec<QuditState>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::DimensionOutOfRange(0));
        }
        let dim = vectors[0].dim();
        if vectors.len() != dim || vectors.iter().any(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                left: vectors.len(),
                right: dim,
            });
        }
        let basis = Self {
            dim,
            source_label,
            vectors,
        };
        let residual = basis.orthonormality_residual();
        if residual >= tol::EIGEN {
            return Err(Error::NotUnitary { residual });
        }
        Ok(basis)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn source_label(&self) -> usize {
        self.source_label
    }

    pub fn vectors(&self) -> &[QuditState] {
        &self.vectors
    }

    pub fn vector(&self, n: usize) -> &QuditState {
        &self.vectors[n]
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((a.inner(b).norm() - target).abs());
            }
        }
        worst
    }
}

/// The d+1 eigenbases, in class order 0..=d.
#[derive(Debug, Clone)]
pub struct MubCollection {
    dim: usize,
    bases: Vec<OrthonormalBasis>,
}

impl MubCollection {
    pub fn from_bases(dim: usize, bases: Vec<OrthonormalBasis>) -> Result<Self> {
        if bases.len() != dim + 1 || bases.iter().any(|b| b.dim() != dim) {
            return Err(Error::DimensionMismatch {
                left: bases.len(),
                right: dim + 1,
            });
        }
        Ok(Self { dim, bases })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bases(&self) -> &[OrthonormalBasis] {
        &self.bases
    }

    pub fn basis(&self, k: usize) -> &OrthonormalBasis {
        &self.bases[k]
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }
}

/// Eigenbasis of a unitary operator, ordered by eigenvalue phase.
pub fn eigenbasis_of(op: &ComplexMatrix, label: usize) -> Result<OrthonormalBasis> {
    let pairs = eig_unitary(op)?;
    let vectors = pairs.into_iter().map(|p| p.vector).collect();
    OrthonormalBasis::from_vectors(label, vectors)
}

/// Build the full collection of d+1 mutually unbiased bases.
pub fn build_mubs(d: PrimeDim) -> Result<MubCollection> {
    let set = pauli::multicomplementary_set(d);
    let bases = set
        .operators()
        .iter()
        .enumerate()
        .map(|(k, op)| eigenbasis_of(op, k))
        .collect::<Result<Vec<_>>>()?;
    MubCollection::from_bases(d.get(), bases)
}

/// Squared overlaps |<a_i|b_j>|^2 between two bases.
pub fn overlap_squared_matrix(a: &OrthonormalBasis, b: &OrthonormalBasis) -> Vec<Vec<f64>> {
    a.vectors()
        .iter()
        .map(|va| {
            b.vectors()
                .iter()
                .map(|vb| va.inner(vb).norm_sqr())
                .collect()
        })
        .collect()
}

/// Unbiasedness summary for one pair of bases.
#[derive(Debug, Clone)]
pub struct PairDeviation {
    pub basis_a: usize,
    pub basis_b: usize,
    pub max_deviation: f64,
}

/// Deviation of every cross-basis overlap from 1/d.
#[derive(Debug, Clone)]
pub struct UnbiasednessReport {
    pub dim: usize,
    pub tolerance: f64,
    pub pairs: Vec<PairDeviation>,
    pub max_deviation: f64,
    pub passed: bool,
}

pub fn unbiasedness_report(collection: &MubCollection) -> UnbiasednessReport {
    let dim = collection.dim();
    let target = 1.0 / dim as f64;
    let mut pairs = Vec::new();
    let mut max_deviation = 0.0f64;
    for i in 0..collection.len() {
        for j in (i + 1)..collection.len() {
            let overlaps = overlap_squared_matrix(collection.basis(i), collection.basis(j));
            let dev = overlaps
                .iter()
                .flatten()
                .map(|&o| (o - target).abs())
                .fold(0.0, f64::max);
            max_deviation = max_deviation.max(dev);
            pairs.push(PairDeviation {
                basis_a: i,
                basis_b: j,
                max_deviation: dev,
            });
        }
    }
    UnbiasednessReport {
        dim,
        tolerance: tol::EIGEN_AGGREGATE,
        pairs,
        max_deviation,
        passed: max_deviation < tol::EIGEN_AGGREGATE,
    }
}

/// Largest residual of `M v - <v|M|v> v` over every class member and
/// every vector of the matching basis.
pub fn class_diagonalization_residual(d: PrimeDim, collection: &MubCollection) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in 0..collection.len() {
        let class = pauli::commuting_class(d, k)?;
        for member in class.members() {
            for v in collection.basis(k).vectors() {
                let image = member.apply(v.amplitudes());
                let lambda = member.expectation(v);
                let residual = image
                    .iter()
                    .zip(v.amplitudes())
                    .map(|(iv, a)| (iv - lambda * a).norm())
                    .fold(0.0, f64::max);
                worst = worst.max(residual);
            }
        }
    }
    Ok(worst)
}

/// Worst per-vector departure from the alternative construction route:
/// for odd d and k >= 1, basis k must match the quadratic-phase
/// conjugation of the shift eigenbasis up to a global phase per vector.
pub fn route_equivalence_residual(d: PrimeDim, collection: &MubCollection) -> Result<f64> {
    assert!(d.get() != 2, "route equivalence is defined for odd primes");
    let v = fourier::quadratic_phase(d);
    let shift_basis = collection.basis(1);
    let mut worst = 0.0f64;
    for k in 1..collection.len() {
        let v_dag_k = v.matrix().adjoint().pow(k - 1);
        for (n, reference) in collection.basis(k).vectors().iter().enumerate() {
            let image = v_dag_k.apply(shift_basis.vector(n).amplitudes());
            let rotated = QuditState::normalized(image)?;
            worst = worst.max((reference.inner(&rotated).norm() - 1.0).abs());
        }
    }
    Ok(worst)
}
