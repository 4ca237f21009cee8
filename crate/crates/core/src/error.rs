use thiserror::Error;

/// Errors raised by the arithmetic, division and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation is undefined at zero (valuations, canonical units, φ).
    #[error("{0} is undefined at zero")]
    ZeroInput(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("rounding divisor must be positive")]
    NonPositiveDivisor,

    #[error("gcd of 0 and 0 is undefined")]
    BothZero,

    /// The brute-force expansion search refuses operands above its norm cap.
    #[error("norm {norm} exceeds the search cap {cap}")]
    NormCapExceeded { norm: String, cap: u64 },

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    /// A verification box implies more cases than the guard allows.
    #[error("box implies {cases} cases, above the limit of {limit}")]
    BoxTooLarge { cases: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
