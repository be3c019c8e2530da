use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter `{name}`: {constraint}")]
    InvalidParameter { name: String, constraint: String },

    #[error("degenerate spectrum (minimum eigenvalue gap {gap:.3e}); supply the basis explicitly")]
    DegenerateBasis { gap: f64 },

    #[error("matrix is not normal (||MM* - M*M|| = {deviation:.3e})")]
    NotNormal { deviation: f64 },

    #[error("not a valid quantum state: {0}")]
    InvalidState(String),

    #[error("basis is not orthonormal: |<v{i}|v{j}> - delta| = {deviation:.3e}")]
    NotOrthonormal { i: usize, j: usize, deviation: f64 },

    #[error(
        "channel is not CPTP: trace-preservation deviation {trace_deviation:.3e}, minimum Choi eigenvalue {min_choi_eigenvalue:.3e}"
    )]
    NotCptp {
        trace_deviation: f64,
        min_choi_eigenvalue: f64,
    },

    #[error("complete positivity violated: {0}")]
    NotCompletelyPositive(String),

    #[error("not a stochastic matrix: {0}")]
    NotStochastic(String),

    #[error("not a probability vector: {0}")]
    NotProbability(String),

    #[error("dimension {0} is not prime; use the general detection engine")]
    CompositeDimension(usize),

    #[error("channel is not a generalized Pauli channel: {0}")]
    NotGeneralizedPauli(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn param(name: impl Into<String>, constraint: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.into(),
            constraint: constraint.into(),
        }
    }
}

/// Rejects values outside a closed interval, naming the parameter.
pub(crate) fn check_range(name: &str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if value.is_finite() && value >= lo && value <= hi {
        Ok(())
    } else {
        Err(Error::param(name, format!("must lie in [{lo}, {hi}], got {value}")))
    }
}
