use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("element is not a p^s-th power in the represented field")]
    NotAPthPower,
    #[error("polynomial is not a p^s-th power")]
    NotAPower,
    #[error("operation requires positive characteristic")]
    WrongCharacteristic,
    #[error("operands live over different fields or variable counts")]
    SpecMismatch,
    #[error("divisor does not divide dividend")]
    NotDivisible,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial not allowed here")]
    ZeroPoly,
    #[error("divisor must be non-constant")]
    ConstantDivisor,
    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: u32, cap: u32 },
    #[error("multi-index does not dominate")]
    IndexNotDominating,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("counting function minus log-norm is not constant")]
    NotConstant,
    #[error("functions are linearly dependent over the base field")]
    NotFIndependent,
    #[error("no nonvanishing Wronskian within step bound {0}")]
    SearchExhausted(u64),
    #[error("a proper subsum vanishes: {0:?}")]
    VanishingSubsum(Vec<usize>),
    #[error("functions do not sum to zero")]
    NotSumZero,
    #[error("inputs are not relatively prime")]
    NotCoprime,
    #[error("input size exceeds guard: {0}")]
    GuardExceeded(String),
    #[error("inseparable factor: input has a factor whose derivatives all vanish")]
    Inseparable,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
