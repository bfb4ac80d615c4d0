use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported (the field must have odd characteristic)")]
    EvenCharacteristic,
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("field F_{p}^{degree} is too large for this implementation")]
    FieldTooLarge { p: u64, degree: usize },
    #[error("refusing to enumerate a field of order {order} (ceiling {ceiling})")]
    EnumerationCeiling { order: u64, ceiling: u64 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("{m} does not divide q - 1 = {order_minus_one}")]
    OrderNotDivisor { m: u64, order_minus_one: u64 },
    #[error("cannot embed {sub} into {ext}: {reason}")]
    Embedding {
        sub: String,
        ext: String,
        reason: &'static str,
    },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0} of the zero polynomial is undefined")]
    ZeroPolynomial(&'static str),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("evaluation points not distinct (positions {0} and {1})")]
    RepeatedPoints(usize, usize),
    #[error("multiplier must be nonzero (position {0})")]
    ZeroMultiplier(usize),
    #[error("twist eta must be nonzero")]
    ZeroTwist,
    #[error("invalid dimension: {0}")]
    Dimension(String),
    #[error("expected {expected} entries, got {got}")]
    Length { expected: usize, got: usize },
    #[error("self-duality needs n = 2k, got n = {n}, k = {k}")]
    NotHalfRate { n: usize, k: usize },
    #[error("oracle budget exceeded: {needed} subsets of size {size} (budget {budget})")]
    BudgetExceeded {
        size: usize,
        needed: u64,
        budget: u64,
    },
    #[error("hypothesis violated [{hypothesis}]: {detail}")]
    Hypothesis { hypothesis: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Invariant violations are bugs; everything else is a property of the
    /// input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    /// The violated hypothesis, for refusals.
    pub fn hypothesis_name(&self) -> Option<&str> {
        match self {
            Error::Hypothesis { hypothesis, .. } => Some(hypothesis),
            _ => None,
        }
    }

    pub(crate) fn hypothesis(hypothesis: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Hypothesis {
            hypothesis: hypothesis.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
