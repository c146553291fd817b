//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by graph construction, spectral computation, bounds,
/// families, and limits.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Edge-list text could not be parsed. Carries the 1-based line number.
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// An edge joins a vertex to itself; simple graphs have no loops.
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },

    /// A vertex id or exponent is outside its allowed range.
    #[error("{what} {value} out of range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// A walk count exceeded 64-bit integer range.
    #[error("closed-walk count overflows 64-bit integers (vertex {vertex}, length {k})")]
    Overflow { vertex: usize, k: u32 },

    /// The operation requires a connected graph.
    #[error("graph is not connected")]
    Disconnected,

    /// The operation requires a bipartite graph.
    #[error("graph is not bipartite")]
    NotBipartite,

    /// The operation requires at least one edge.
    #[error("graph has no edges")]
    EmptyGraph,

    /// The operation requires the vertex to have at least one incident edge.
    #[error("vertex {vertex} has degree zero")]
    ZeroDegree { vertex: usize },

    /// A Hölder exponent was not in the open ray p > 1.
    #[error("exponent p = {p} must exceed 1")]
    BadExponent { p: f64 },

    /// A Cauchy–Schwarz radicand fell below the tolerance floor, which
    /// signals inconsistent spectral weights rather than roundoff.
    #[error("negative radicand {value} in upper-bound computation")]
    NegativeRadicand { value: f64 },

    /// The matrix is larger than the configured eigensolver cap.
    #[error("graph has {n} vertices, above the eigensolver cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    /// The eigensolver did not converge within its iteration budget.
    #[error("eigensolver failed to converge")]
    ConvergenceFailure,

    /// Family or model parameters are invalid.
    #[error("bad parameters: {reason}")]
    BadParameters { reason: String },

    /// A limit-model string or variant is not recognized.
    #[error("unsupported model: {reason}")]
    UnsupportedModel { reason: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
