use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument must be a positive integer, got {0}")]
    NonPositive(u64),

    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial must have degree at least {min}, got {degree}")]
    DegreeTooSmall { degree: usize, min: usize },

    #[error("polynomial has a repeated root")]
    RepeatedRoot,

    #[error("index ({i}, {j}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("{algorithm} failed to converge after {iterations} iterations")]
    NoConvergence {
        algorithm: &'static str,
        iterations: usize,
    },

    #[error(
        "root ordering violates the conjugate-pair convention (imaginary residue {residue:e})"
    )]
    OrderingViolation { residue: f64 },

    #[error("matrix is singular or has a zero row/column")]
    Singular,

    #[error("matrix is not positive definite (smallest eigenvalue {0:e})")]
    NotPositiveDefinite(f64),

    #[error("quadratic x^2 + ({b})x + ({c}) does not have a negative discriminant")]
    NonNegativeDiscriminant { b: f64, c: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
