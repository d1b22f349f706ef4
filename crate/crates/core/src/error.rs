use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {table}: expected {expected}, found {found}")]
    DimensionMismatch { table: &'static str, expected: usize, found: usize },

    #[error("index {index} out of range for carrier of size {n} (in {table})")]
    IndexOutOfRange { table: &'static str, index: usize, n: usize },

    #[error("no residual exists: {{z : {expr}}} has no greatest element for ({x}, {c})")]
    NotResiduable { expr: &'static str, x: usize, c: usize },

    #[error("algebra is not idempotent: {0}·{0} ≠ {0}")]
    NotIdempotent(usize),

    #[error("residual tables are missing")]
    MissingResiduals,

    #[error("wrong class: {0}")]
    WrongClass(String),

    #[error("size {n} exceeds the configured bound {max}")]
    TooLarge { n: usize, max: usize },

    #[error("map is not injective: {0} and {1} have the same image")]
    NotInjective(usize, usize),

    #[error("size {0} is too small (minimum {1})")]
    SizeTooSmall(usize, usize),

    #[error("Sugihara chains from an involution need odd size, got {0}")]
    EvenSize(usize),

    #[error("bad skeleton: {0}")]
    BadSkeleton(String),

    #[error("bad fibers: {0}")]
    BadFibers(String),

    #[error("incompatible span: {0}")]
    IncompatibleSpan(String),

    #[error("no monoidal atom found")]
    NoAtom,

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
