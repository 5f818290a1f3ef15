use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// `Inconclusive` is distinct from every other variant: it means a resource
/// cap was hit and no answer (true or false) is claimed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("the ideal is the whole ring (a generator is a unit)")]
    UnitIdeal,
    #[error("the quotient is infinite dimensional (no pure power of `{0}` in the leading ideal)")]
    InfiniteQuotient(String),
    #[error("generator `{0}` is not a monomial")]
    NonMonomial(String),
    #[error("reduction required: {0}")]
    ReductionRequired(String),
    #[error("not free over the coefficient ring: {0}")]
    NotFree(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("asserted invariant violated: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
