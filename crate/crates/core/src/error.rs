//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by shapeclust operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector's norm is at or below the degeneracy floor, so its direction
    /// is undefined.
    #[error("vector norm {norm:.3e} is at or below the degeneracy floor {floor:.3e}")]
    DegenerateNorm { norm: f64, floor: f64 },

    /// A centroid update was requested for a cluster with no members.
    #[error("cannot compute a centroid for an empty cluster")]
    EmptyCluster,

    /// Every member of a cluster is degenerate (effectively zero), so no
    /// direction can be extracted.
    #[error("all {count} cluster members are degenerate (norm <= floor)")]
    AllDegenerate { count: usize },

    /// The matrix handed to the eigensolver is (numerically) zero.
    #[error("matrix is numerically zero (Frobenius norm {frobenius:.3e})")]
    ZeroMatrix { frobenius: f64 },

    /// The dataset has fewer signals than requested clusters.
    #[error("dataset has {signals} signals but {clusters} clusters were requested")]
    TooFewSignals { signals: usize, clusters: usize },

    /// Fewer non-degenerate signals exist than clusters to initialize.
    #[error("only {viable} non-degenerate signals available for {clusters} initial centroids")]
    NoViableInit { viable: usize, clusters: usize },

    /// The feature matrix is rank deficient to working tolerance.
    #[error(
        "feature bank is rank deficient: smallest singular value {sigma_min:.3e} <= {tolerance:.3e}"
    )]
    RankDeficientBank { sigma_min: f64, tolerance: f64 },

    /// Input shapes are inconsistent with the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Two sequences that must align do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// The two plane basis vectors are (numerically) linearly dependent.
    #[error("plane basis vectors are degenerate or linearly dependent")]
    DegenerateBasis,

    /// Prototype rejection sampling could not satisfy the separation
    /// constraint within the attempt budget.
    #[error("prototype rejection sampling exhausted {attempts} attempts")]
    RejectionExhausted { attempts: usize },

    /// A configuration value violates its documented invariant.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A signal file could not be parsed; `line` is 1-based within the file.
    #[error("parse error at line {line}{}: {message}", column.map(|c| format!(", column {c}")).unwrap_or_default())]
    Parse {
        line: usize,
        column: Option<usize>,
        message: String,
    },

    /// Row width or vector dimension disagrees with the declared one.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
