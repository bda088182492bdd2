use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::GoldenNumber;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix order must be at least 1")]
    InvalidOrder,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("eigenvalues {first} and {second} coincide")]
    RepeatedEigenvalue { first: usize, second: usize },
    #[error("recomposition U·diag(λ)·U⁻¹ differs from R at ({row}, {col})")]
    Recomposition { row: usize, col: usize },
    #[error("entry ({row}, {col}) of R^{power} is not an integer: {value}")]
    NonIntegral {
        power: u32,
        row: usize,
        col: usize,
        value: Box<GoldenNumber>,
    },
    #[error("R^{power} via the decomposition differs from direct multiplication at ({row}, {col}): {spectral} vs {direct}")]
    PowerMismatch {
        power: u32,
        row: usize,
        col: usize,
        spectral: BigInt,
        direct: BigInt,
    },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
