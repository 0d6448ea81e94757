//! Exact integer and Gaussian-integer linear algebra.

mod det;
mod gauss;
mod matrix;
mod scalar;
mod snf;
mod solve;

pub use det::det;
pub use gauss::GaussInt;
pub use matrix::{GaussMatrix, IntMatrix, Matrix};
pub use scalar::{Int, Scalar};
pub use snf::{smith_normal_form, verify_snf, SnfResult};
pub use solve::{gauss_solve_via_real, realify, solve_integer, IntSolver};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    #[error("internal error: {0}")]
    Internal(String),
}
