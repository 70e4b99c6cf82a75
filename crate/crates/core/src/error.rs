use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{numerator} is not divisible by {denominator}")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("polynomial of degree {degree} needs more moments than the {available} available")]
    DegreeExceeded { degree: usize, available: usize },
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("illegal state: {0}")]
    IllegalState(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("instance size {size} exceeds the enumeration budget {limit}")]
    BudgetExceeded { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
