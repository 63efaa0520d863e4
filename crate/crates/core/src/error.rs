use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field size {0} is not a prime (only prime fields are supported)")]
    NotPrime(u64),
    #[error("field size {0} is too large (must be below 2^31)")]
    FieldTooLarge(u64),
    #[error("operands belong to different fields: F_{left} and F_{right}")]
    FieldMismatch { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("no nonzero polynomials were given")]
    NoGenerators,
    #[error("ideal is not zero-dimensional: no pure power of t{0} among the leading monomials")]
    NotZeroDimensional(usize),
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("duplicate point {0:?}")]
    DuplicatePoint(Vec<u64>),
    #[error("evaluation is not injective: rank {rank} is below the space dimension {dim}; standardize the space first")]
    NonInjectiveEvaluation { rank: usize, dim: usize },
    #[error("enumeration of {required} elements exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("the code is zero")]
    ZeroCode,
    #[error("r = {r} is out of range 1..={max}")]
    RankOutOfRange { r: usize, max: usize },
    #[error("the second space is not a proper subspace of the first")]
    NotProperSubspace,
    #[error("space is not standard: {0} does not reduce to itself modulo the vanishing ideal")]
    NotStandard(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("validation mismatch: {0}")]
    ValidationMismatch(String),
}
