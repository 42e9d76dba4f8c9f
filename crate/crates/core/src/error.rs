use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a monomial needs at least one variable")]
    NoVariables,

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("operation is undefined for the unit monomial")]
    UnitMonomial,

    #[error("the zero ideal has no generators")]
    EmptyIdeal,

    #[error("ideal is not a lex-segment ideal")]
    NotLexSegment,

    #[error("ideal is not stable: generator {generator} violates the exchange condition")]
    NotStable { generator: String },

    #[error("diagram is not decomposable by the greedy algorithm: {reason}")]
    NotDecomposable { reason: String },

    #[error("invalid degree sequence {0:?}: degrees must be strictly increasing and nonempty")]
    InvalidDegreeSequence(Vec<u32>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
