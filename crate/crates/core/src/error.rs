use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("division is not exact in the integer Laurent ring")]
    NonExactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable x{0} occurs with a negative exponent but is evaluated at 0")]
    ZeroAtNegativeExponent(usize),
    #[error("the zero polynomial has no denominator vector")]
    ZeroPolynomial,

    #[error("principal part is not skew-symmetrizable: {0}")]
    NotSkewSymmetrizable(String),
    #[error("extended exchange matrix has rank {rank} < {n}")]
    RankDeficient { rank: usize, n: usize },
    #[error("index {0} is not exchangeable")]
    NotExchangeable(usize),
    #[error("malformed seed: {0}")]
    MalformedSeed(String),

    #[error("exchange graph exploration did not complete within its bounds")]
    IncompleteGraph,

    #[error("unknown Cartan-Killing type `{0}`")]
    UnknownType(String),
    #[error("cluster count is not an integer (exponent data is wrong)")]
    NonIntegerResult,
    #[error("support function violates the polytope hypothesis: {0}")]
    HypothesisViolated(String),
    #[error("cluster linear system is singular")]
    SingularClusterSystem,

    #[error("chord label {0} is not a diagonal of the triangulation")]
    NotADiagonal(usize),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("expected a root system of type {expected}, got {got}")]
    WrongType { expected: String, got: String },
    #[error("relation violated: {0}")]
    RelationViolated(String),

    #[error("word is not reduced")]
    NotReduced,
    #[error("the first r entries of the word must be 1..r")]
    BadPrefix,
    #[error("malformed word entry {0}")]
    BadEntry(i32),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("exchange identity violated: {0}")]
    IdentityViolated(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by malformed input rather than a failed domain check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::MalformedSeed(_)
                | Error::BadEntry(_)
                | Error::UnknownType(_)
                | Error::SizeMismatch(_)
                | Error::VarCountMismatch(..)
                | Error::InvalidTriangulation(_)
        )
    }
}
