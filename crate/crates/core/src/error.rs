use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic must be odd, got {0}")]
    EvenCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    BadExtensionDegree,
    #[error("field order {0} exceeds the configured cap {1}")]
    FieldTooLarge(u64, u64),
    #[error("element does not belong to this field")]
    MismatchedField,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("expected a nonzero field element")]
    ZeroElement,
    #[error("division by the zero polynomial")]
    ZeroDivision,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("exponent {got} out of range [0, {max}]")]
    ExponentOutOfRange { got: u64, max: u64 },
    #[error("expected {expected} exponents, got {got}")]
    ExponentArity { expected: usize, got: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the zero code has no encoder")]
    ZeroDimensionalCode,
    #[error("dual containment needs a self-inverse beta (beta^2 = 1)")]
    BetaNotSelfInverse,
    #[error("enumeration size {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
}
