//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by fallible constructors and operations.
///
/// Shape mismatches in plain arithmetic operators (`+`, `*`, ...) are treated
/// as programming errors and panic instead; everything data-dependent goes
/// through `Result`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index ({row}, {col}) out of range for size {size}")]
    IndexOutOfRange { row: usize, col: usize, size: usize },

    #[error("expected {expected} entries, got {actual}")]
    WrongEntryCount { expected: usize, actual: usize },

    #[error("diagonal index {index} out of range for size {size}")]
    BandOutOfRange { index: i64, size: usize },

    #[error("sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("operands carry different formats")]
    FormatMismatch,

    #[error("sign entries must be +1 or -1, got {0}")]
    InvalidSign(i64),

    #[error("image list is not a bijection on 1..={size}")]
    NotAPermutation { size: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("transported involution is not diagonal with entries ±1: this is a change of realization, not of format")]
    RealizationChange,

    #[error("no alternating arrangement for block dimensions ({n_even}|{n_odd})")]
    UnsupportedDimensions { n_even: usize, n_odd: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("rank {rank} is inconsistent with the {family} family")]
    InconsistentRank { family: String, rank: usize },

    #[error("degenerate pairing: str(e_{index} f_{index}) = 0")]
    DegeneratePairing { index: usize },

    #[error("pairing str(e_{i} f_{j}) is nonzero for i != j")]
    NonOrthogonalPairing { i: usize, j: usize },

    #[error("rescaling coefficient {index} is zero")]
    ZeroCoefficient { index: usize },

    #[error("grade {grade} out of range for this construction")]
    GradeOutOfRange { grade: i64 },

    #[error("index ({i}, {j}) outside window [-{window}, {window}]")]
    OutsideWindow { i: i64, j: i64, window: i64 },

    #[error("window {window} too small for generator index {index}")]
    WindowTooSmall { index: i64, window: i64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
