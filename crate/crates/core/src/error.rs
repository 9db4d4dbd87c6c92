use thiserror::Error;

pub type Result<T> = std::result::Result<T, LabError>;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("range error: {what} needs a table with n_max >= {required}, have {available}")]
    Range {
        what: &'static str,
        required: u64,
        available: u64,
    },

    #[error("pole: {0}")]
    Pole(String),

    #[error("empty admissible window: lower {lower} >= upper {upper}")]
    EmptyWindow { lower: f64, upper: f64 },

    #[error("accuracy: {what} moved from {first:e} to {second:e} (tolerance {tolerance:e})")]
    Accuracy {
        what: &'static str,
        first: f64,
        second: f64,
        tolerance: f64,
    },

    #[error("resource: {0}")]
    Resource(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error(
        "verification failed: no grid point reached bound {bound:e} (best |S| = {best:e} at x = {x_best}, budget exhausted: {budget_exhausted})"
    )]
    VerificationFailed {
        bound: f64,
        best: f64,
        x_best: f64,
        budget_exhausted: bool,
    },

    #[error(transparent)]
    Cache(#[from] CacheError),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Failures reading or writing the `SGAT` table cache.
#[derive(Debug, Error)]
pub enum CacheError {
    #[error("bad magic bytes {0:?}")]
    BadMagic([u8; 4]),
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u32),
    #[error("truncated file: expected {expected} bytes, found {found}")]
    Truncated { expected: u64, found: u64 },
    #[error("trailing bytes: expected {expected} bytes, found {found}")]
    TrailingBytes { expected: u64, found: u64 },
    #[error("alpha mismatch: cache holds {stored}, requested {requested}")]
    AlphaMismatch { stored: f64, requested: f64 },
    #[error("corrupt contents: {0}")]
    Corrupt(String),
}

impl LabError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        LabError::Domain(msg.into())
    }

    /// Short machine-readable tag used in CLI error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            LabError::Domain(_) => "domain",
            LabError::Range { .. } => "range",
            LabError::Pole(_) => "pole",
            LabError::EmptyWindow { .. } => "empty_window",
            LabError::Accuracy { .. } => "accuracy",
            LabError::Resource(_) => "resource",
            LabError::Overflow(_) => "overflow",
            LabError::VerificationFailed { .. } => "verification_failed",
            LabError::Cache(_) => "cache",
            LabError::Io(_) => "io",
        }
    }
}
