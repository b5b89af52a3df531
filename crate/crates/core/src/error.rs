use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u32, right: u32 },

    /// An exhaustive search would exceed a configured bound. `knob` names the
    /// flag or environment variable that raises it.
    #[error("refused: {what} needs {needed} but the cap is {cap} (raise {knob})")]
    CapExceeded {
        what: String,
        needed: u128,
        cap: u128,
        knob: &'static str,
    },

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("undeclared vertex `{0}`")]
    UndeclaredVertex(String),

    #[error("undeclared arrow `{0}`")]
    UndeclaredArrow(String),

    #[error("word `{0}` is not a composable path")]
    NotComposable(String),

    #[error("relation mixes paths with different endpoints: {0}")]
    InhomogeneousRelation(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("not an idempotent: {0}")]
    NotIdempotent(String),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("no witness within bound {bound}: {reason}")]
    NoWitness { bound: usize, reason: String },

    #[error("interchange format: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, needed: u128, cap: u128, knob: &'static str) -> Self {
        Error::CapExceeded {
            what: what.into(),
            needed,
            cap,
            knob,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
