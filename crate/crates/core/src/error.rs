use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("invalid image array: {0}")]
    NotABijection(String),

    #[error("group order exceeds 128-bit capacity")]
    OrderOverflow,

    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },

    #[error("subgroup orders {left} and {right} both exceed enumeration cap {cap}")]
    IntersectionCapExceeded { left: u128, right: u128, cap: u128 },

    #[error("tuple budget {budget} exhausted ({tested} candidates evaluated)")]
    BudgetExceeded { budget: u64, tested: u64 },

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
