use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unit part of zero is undefined")]
    UndefinedUnitPart,

    #[error("zero polynomial where a nonzero polynomial is required")]
    ZeroPolynomial,

    #[error("polynomial must be monic: {0}")]
    NonMonic(String),

    #[error("{phi} does not divide the reduction of the polynomial modulo {p}")]
    NotAFactor { phi: String, p: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("second-order configuration not supported: {0}")]
    UnsupportedSecondOrder(String),

    #[error("x^7 + ({a})x + ({b}) is reducible over Q")]
    Reducible { a: String, b: String },

    #[error("standing hypothesis violated at p = {p}: v_p(a) >= 6 and v_p(b) >= 7")]
    HypothesisViolation { p: String },

    #[error("family hypothesis fails: {0}")]
    FamilyHypothesis(String),

    #[error("table ambiguity for nu_{p}: rows {rows:?} all match")]
    TableAmbiguity { p: u64, rows: Vec<usize> },

    #[error("splitting type {0} is not tabulated")]
    NotTabulated(String),

    #[error("wild ramification at p = {p}")]
    WildRamification { p: u64 },

    #[error("inconsistency detected: {0}")]
    InconsistencyDetected(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("internal error: {0}")]
    Internal(String),
}
