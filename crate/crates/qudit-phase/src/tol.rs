//! Centralized numerical tolerances.
//!
//! Two regimes: identities assembled from exact roots of unity hold to
//! round-off (1e-12 .. 1e-11 after a few products), while anything that
//! passes through the iterative eigensolver gets an order of magnitude
//! of slack (1e-10 .. 1e-9). Quadrature checks use 1e-6; the integrands
//! are trigonometric polynomials, so the uniform grid is spectrally
//! exact and the observed error is pure round-off.

/// Algebraic identities built directly from root-of-unity tables.
pub const ALGEBRAIC: f64 = 1e-12;

/// Identities involving a handful of matrix products (conjugations, powers).
pub const CONJUGATION: f64 = 1e-11;

/// Quantities produced by the iterative eigensolver (orthonormality, overlaps).
pub const EIGEN: f64 = 1e-10;

/// Aggregates of eigensolver output (unbiasedness sweeps, reconstruction).
pub const EIGEN_AGGREGATE: f64 = 1e-9;

/// Riemann sums over phase grids (normalization, identity integrals).
pub const QUADRATURE: f64 = 1e-6;

/// Imaginary residue allowed on provably real quantities.
pub const REALITY: f64 = 1e-10;

/// Threshold below which a vector component counts as zero for the
/// leading-component phase convention.
pub const COMPONENT_ZERO: f64 = 1e-10;
