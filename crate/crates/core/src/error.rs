use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("{0} is undefined on the zero element")]
    ZeroElement(&'static str),

    #[error("wrong sector: {0}")]
    WrongSector(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("element is a scalar: {0}")]
    ScalarInput(&'static str),

    #[error("degree bound too small: {0}")]
    Bound(String),

    #[error("element is not in the computed centralizer span")]
    Membership,

    #[error("degenerate monoid: {0}")]
    DegenerateMonoid(String),

    #[error("image escapes the degree bound {bound}: total degree {degree}")]
    BoundEscape { bound: u32, degree: u32 },

    #[error("no element Q with [Q,P] = 1 exists for P in k[XY]")]
    ImpossiblePair,

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("negative exponent at line {line}, column {column}")]
    NegativeExponent { line: usize, column: usize },

    #[error("zero denominator at line {line}, column {column}")]
    ZeroDenominator { line: usize, column: usize },
}

pub type Result<T, E = WeylError> = std::result::Result<T, E>;
