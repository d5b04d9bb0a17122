use alloc::string::String;

/// Errors raised by the exact computations in this crate.
///
/// Variants that describe an internal inconsistency (`ExactDivisionFailed`,
/// `Inconsistent`) should never fire on valid input; they exist so that a
/// broken identity surfaces as a value instead of a panic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Weyl type {label}{rank}: {reason}")]
    InvalidType {
        label: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("budget `{budget}` exceeded: requested {requested}, limit {limit}")]
    BudgetExceeded {
        budget: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("degrees unresolved at truncation {truncation}: found {found} of {expected}")]
    DegreesUnresolved {
        truncation: usize,
        found: usize,
        expected: usize,
    },
    #[error("degree budget exceeded: requested degree {requested}, limit {limit}")]
    DegreeBudgetExceeded { requested: usize, limit: usize },
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("exact division failed: {0}")]
    ExactDivisionFailed(&'static str),
    #[error("bigraded table incomplete: no zero antidiagonal within bounds {a}x{b}")]
    IncompleteTable { a: usize, b: usize },
    #[error("equivariance failed for generator {generator} on basis vector {basis_index}")]
    EquivarianceFailed {
        generator: usize,
        basis_index: usize,
    },
    #[error("map is not bijective: rank {rank} of {dim}")]
    NotBijective { rank: usize, dim: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
