//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by signal, engine, circuit, and I/O operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Two signals with different sampling configurations were combined.
    #[error("signal configuration mismatch: {0}")]
    ConfigMismatch(String),

    /// A sampling configuration cannot represent the requested content.
    #[error("sampling too coarse: {0}")]
    Nyquist(String),

    /// A basis, qubit, or channel index is out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A filter band or numeric parameter is invalid.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Comparator input carries a non-negligible imaginary part.
    #[error("comparator input is not real: max |im| = {max_imag:.3e} exceeds tolerance {tolerance:.3e}")]
    NotReal { max_imag: f64, tolerance: f64 },

    /// Mixer reference is not a ±1-valued square wave.
    #[error("mixer reference is not a ±1-valued square wave")]
    NotSquare,

    /// Matrix/vector dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A circuit references qubits or gates an engine cannot execute.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// Malformed circuit or state description.
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
