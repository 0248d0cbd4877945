//! Wigner-Yanase skew information and the uncertainty-relation machinery built on it.
//!
//! The crate is organized around a small stack of validated linear-algebra types
//! ([`ComplexMatrix`], [`HermitianOperator`], [`DensityMatrix`]) and pure functions
//! over them:
//!
//! - [`hermitian`] — matrix types, spectral decomposition, PSD square root,
//!   commutator, tensor product, partial trace.
//! - [`skew`] — skew information, variance, orthonormal observable bases, and the
//!   basis-summed total uncertainty Q(ρ).
//! - [`bounds`] — additive uncertainty-relation lower bounds for observable sets
//!   (multi-observable, pairwise, weighted) and comparison reports.
//! - [`entanglement`] — sum observables, additivity/monotonicity checks, convexity
//!   verification, and the local-uncertainty-relation witness.
//! - [`catalog`] — named operator families (Pauli, spin-1) and parameterized state
//!   families used by the figure scans.
//! - [`matrixfile`] — the JSON matrix interchange format used by the CLI.
//! - [`sampling`] — deterministic seeded generators for random states, observables,
//!   and unitaries.
//!
//! Everything is immutable after construction and safe to share across threads.

pub mod bounds;
pub mod catalog;
pub mod entanglement;
pub mod hermitian;
pub mod matrixfile;
pub mod sampling;
pub mod skew;

use thiserror::Error;

pub use bounds::{BoundReport, ObservableSet, WeightedRelation};
pub use catalog::{BlochVector, FigureFamily};
pub use entanglement::{ProductDecomposition, WitnessVerdict};
pub use hermitian::{Complex64, ComplexMatrix, DensityMatrix, HermitianOperator, Subsystem};
pub use skew::ObservableBasis;

/// Largest supported matrix dimension. Dense algorithms only; larger inputs are rejected.
pub const MAX_DIM: usize = 64;

/// Errors produced by construction and validation across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must have dimension at least 1")]
    EmptyMatrix,

    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("matrix entry ({row},{col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not Hermitian: max |M - M†| = {deviation:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("trace must be 1 within 1e-10, got {trace}")]
    InvalidTrace { trace: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("eigensolver failed to converge for a {dim}x{dim} Hermitian matrix")]
    EigenConvergence { dim: usize },

    #[error("square-root reconstruction residual {residual:.3e} exceeds 1e-9 (dim {dim})")]
    SqrtReconstruction { dim: usize, residual: f64 },

    #[error("bipartite factors {dim_a}x{dim_b} do not match total dimension {dim}")]
    BadFactorization {
        dim: usize,
        dim_a: usize,
        dim_b: usize,
    },

    #[error("state vector must be nonzero")]
    ZeroStateVector,

    #[error("observable set must not be empty")]
    EmptyObservableSet,

    #[error("{bound} bound undefined for n < {min} observables, got {got}")]
    BoundArity {
        bound: &'static str,
        min: usize,
        got: usize,
    },

    #[error("weight must lie in [1/2, 1), got {lambda}")]
    InvalidWeight { lambda: f64 },

    #[error("observable sets must have equal length: {left} vs {right}")]
    SetSizeMismatch { left: usize, right: usize },

    #[error("basis dimension must be between 2 and {max}, got {dim}")]
    BasisDimRange { dim: usize, max: usize },

    #[error("operator basis needs {expected} elements for dimension {dim}, got {got}")]
    BasisSize {
        dim: usize,
        expected: usize,
        got: usize,
    },

    #[error("operator basis is not orthonormal: |Tr(H_{i} H_{j}) - δ| = {deviation:.3e}")]
    BasisNotOrthonormal { i: usize, j: usize, deviation: f64 },

    #[error("invalid probability weights: {reason}")]
    InvalidWeights { reason: String },

    #[error("Bloch vector norm {norm} exceeds 1")]
    BlochNorm { norm: f64 },

    #[error("unknown figure family `{name}` (expected fig1_bloch or fig2_spin1)")]
    UnknownFamily { name: String },

    #[error("invalid matrix JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("matrix file: expected {dim} rows in `{field}`, got {got}")]
    RowCount {
        field: &'static str,
        dim: usize,
        got: usize,
    },

    #[error("matrix file: row {row} of `{field}` has {got} entries, expected {dim}")]
    RowLength {
        field: &'static str,
        row: usize,
        dim: usize,
        got: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
