//! Error type shared by every module in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across linear algebra, state construction,
/// channel building, and formula evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A matrix entry was NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    /// An operation needed a square matrix and got a rectangular one.
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// A Hermitian matrix was required; the symmetry defect exceeded `tol`.
    #[error("matrix is not Hermitian (defect {defect:.3e}, tolerance {tol:.3e})")]
    NotHermitian { defect: f64, tol: f64 },

    /// The Jacobi iteration did not reach the off-diagonal threshold.
    #[error("eigensolver failed to converge after {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    /// A nominally positive semidefinite matrix had an eigenvalue below the
    /// clamping window.
    #[error("eigenvalue {value:.6e} is negative beyond tolerance")]
    NegativeEigenvalue { value: f64 },

    /// A density operator's trace was not 1.
    #[error("trace is {trace:.12e}, expected 1")]
    TraceNotOne { trace: f64 },

    /// A pure-state amplitude vector was not normalized.
    #[error("state norm is {norm:.12e}, expected 1")]
    NotNormalized { norm: f64 },

    /// A dimension was outside what the crate supports (matrices up to 4×4).
    #[error("unsupported dimension {dim}: {context}")]
    WrongDimension { dim: usize, context: &'static str },

    /// Two operands had incompatible dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A scalar argument fell outside its admissible interval.
    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// A channel parameter fell outside its admissible range.
    #[error("channel parameter {name} = {value} is invalid: {constraint}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// A Kraus list failed the completeness check Σ K†K = I.
    #[error("Kraus operators are not complete (max defect {defect:.3e})")]
    IncompleteKraus { defect: f64 },

    /// The canonicalizing-orthogonal search did not reach its residual bound.
    #[error("no canonicalizing orthogonal found (best residual {residual:.3e})")]
    NotFound { residual: f64 },

    /// A named formula parameter was missing from the parameter record.
    #[error("missing parameter `{name}`")]
    MissingParam { name: String },

    /// A closed-form expression hit log of a negative argument, which means
    /// its parameters are outside the region where the expression is defined.
    #[error("log of negative argument {arg:.6e} in closed-form evaluation")]
    DomainError { arg: f64 },

    /// A request named something the crate does not provide.
    #[error("unsupported: {0}")]
    Unsupported(String),
}
