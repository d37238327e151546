use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight at position {index} is {value}; weights must be positive")]
    NonPositiveWeight { index: usize, value: i64 },

    #[error("weights have common divisor {gcd}; the weight vector must be primitive")]
    NonPrimitive { gcd: u64 },

    #[error("need at least 2 weights, got {0}")]
    TooFewWeights(usize),

    #[error("sum of weights overflows 64 bits")]
    WeightOverflow,

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("weight {weight} at position {index} is not below the degree {degree}")]
    WeightExceedsDegree { index: usize, weight: u64, degree: u64 },

    #[error("operation requires a Brieskorn-Pham form")]
    WrongVariant,

    #[error("exponent list invalid: {0}")]
    InvalidExponents(String),

    #[error("Betti sum evaluated to the non-integer {0}")]
    NonIntegerBetti(String),

    #[error("c coefficient for subset {subset:#b} is the non-integer {value}")]
    InexactDivision { subset: u64, value: String },

    #[error("{variables} variables exceed the subset sweep limit of {limit}")]
    TooManyVariables { variables: usize, limit: usize },

    #[error("size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: u128, cap: u64 },

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),

    #[error("input contains no catalog rows")]
    EmptyInput,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("weights at line {line} are not in ascending order")]
    NotAscending { line: usize },
}

impl Error {
    /// True for failures that mean an internal convention broke (inexact
    /// c division, non-integral Betti sum) rather than bad input.
    pub fn is_convention_violation(&self) -> bool {
        matches!(
            self,
            Error::NonIntegerBetti(_) | Error::InexactDivision { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
