//! Operator algebra for phase in prime-dimension quantum systems:
//! generalized Pauli classes, mutually unbiased bases, finite Fourier
//! maps, covariant phase operators and measurements, with closed-form
//! qubit and qutrit cross-checks.
//!
//! Everything is dense, deterministic, and sized for desk-scale
//! dimensions (prime d <= 31). Eigenbases follow fixed ordering and
//! phase conventions so that every table is reproducible byte for byte.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`weyl_algebra`** - shift/clock operators, commuting classes, traces
//! - **`fourier_maps`** - Fourier pairing and the quadratic diagonal map
//! - **`mub_tables`** - the d+1 mutually unbiased bases and overlap tables
//! - **`phase_operators`** - the conjugated families E^k and their laws
//! - **`phase_distribution`** - sampled P(phi) for qutrit states
//! - **`povm_covariance`** - the covariant measurement and its checks
//! - **`qubit_closed_forms`** - two-level formulas against the general path
//! - **`qutrit_closed_forms`** - three-level formulas against the general path
//! - **`polar_comparison`** - the polar-decomposition contrast construction
//! - **`verification_suite`** - the full invariant suite over several dimensions
//!
//! ```bash
//! cargo run --example mub_tables -- 5
//! cargo run --example phase_operators -- 3
//! cargo run --release --example verification_suite -- 11
//! ```
//!
//! The same functionality is scriptable through the `qudit-phase`
//! binary (`verify`, `mubs`, `phase-dist`, `expectation`, `povm-check`).

pub mod cli;
pub mod error;
pub mod fourier;
pub mod io;
pub mod linalg;
pub mod mub;
pub mod pauli;
pub mod phase;
pub mod polar;
pub mod qubit;
pub mod qutrit;
pub mod report;
pub mod rng;
pub mod tol;
pub mod verify;

pub use error::Error;
pub use linalg::{ComplexMatrix, QuditState};
pub use mub::MubCollection;
pub use pauli::PrimeDim;
pub use phase::{CovariantPovm, PhaseAngles, PhaseDistribution};

pub type Result<T> = std::result::Result<T, Error>;
