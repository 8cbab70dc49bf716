use alloc::string::String;

/// Errors raised by the algebra layer. Variant names double as the error
/// names reported by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a supported prime characteristic")]
    NotPrime(u64),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coefficient denominator vanishes in this field")]
    ZeroDenominator,
    #[error("cannot eliminate {requested} variables from a ring with {available}")]
    TooManyVariables { requested: usize, available: usize },
    #[error(
        "quotient is infinite-dimensional: variable `{0}` has no pure power among leading terms"
    )]
    InfiniteDimensional(String),
    #[error("module elements have rank {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("ideal is not proper in the local ring: it contains a unit")]
    NotProper,
    #[error("modulus generator has a nonzero constant term")]
    ModulusNotLocal,
    #[error("base algebra is not Artinian")]
    NotArtinian,
    #[error("x_{variable}^{exponent} does not lie in the modulus")]
    PowersNotContained { variable: String, exponent: u32 },
    #[error("quotient is not Gorenstein (socle dimension {0})")]
    NotGorenstein(usize),
    #[error("no witness generates the colon ideal modulo the power ideal")]
    NoWitness,
    #[error("exponent vectors have dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("generator `{0}` is not a monomial")]
    NotMonomial(String),
}

impl Error {
    /// Stable identifier used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::DuplicateVariable(_) => "DuplicateVariable",
            Error::InvalidVariable(_) => "InvalidVariable",
            Error::RingMismatch => "RingMismatch",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::TooManyVariables { .. } => "TooManyVariables",
            Error::InfiniteDimensional(_) => "InfiniteDimensional",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotProper => "NotProper",
            Error::ModulusNotLocal => "ModulusNotLocal",
            Error::NotArtinian => "NotArtinian",
            Error::PowersNotContained { .. } => "PowersNotContained",
            Error::NotGorenstein(_) => "NotGorenstein",
            Error::NoWitness => "NoWitness",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotDivisible => "NotDivisible",
            Error::NotMonomial(_) => "NotMonomial",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
