use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which bound system of an interval problem an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Lower,
    Upper,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Lower => f.write_str("lower"),
            Bound::Upper => f.write_str("upper"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A value lies outside the carrier, or an argument is otherwise invalid.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is not defined for this semiring (e.g. the standard
    /// order of a non-idempotent semiring).
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("semiring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    /// Partial sums of a closure did not stabilise; `(row, col)` is an entry
    /// that still changed when the certificate term was added.
    #[error("divergence at entry ({row}, {col}){}", .bound.map(|b| format!(" of the {b} bound system")).unwrap_or_default())]
    Divergence {
        row: usize,
        col: usize,
        bound: Option<Bound>,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
