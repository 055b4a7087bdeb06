use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring signature mismatch: {0} vs {1} variables")]
    SignatureMismatch(usize, usize),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation requires a homogeneous ideal")]
    NonHomogeneous,

    #[error("Hilbert function did not stabilize within t <= {0}; positive-dimensional ideal suspected")]
    NotStabilized(usize),

    #[error("generic initial ideal not Borel-fixed after {0} coordinate changes; try a larger coefficient range")]
    GinNotBorelFixed(usize),

    #[error("regularity disagrees between seeds {0} and {1}: {2} vs {3}")]
    SeedDisagreement(u64, u64, usize, usize),

    #[error("iteration cap reached in {0}")]
    IterationCap(&'static str),

    #[error("complex shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
