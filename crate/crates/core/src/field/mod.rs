//! Exact arithmetic in a real quadratic field `Q(√d)`, `d = 5` by default.

mod quadratic;
mod text;

pub use quadratic::{QuadraticScalar, Radicand, DEFAULT_RADICAND};
pub use text::{format_scalar, parse_scalar, parse_scalar_in, to_decimal};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(u32, u32),
    #[error("radicand {0} is not a squarefree integer >= 2")]
    BadRadicand(u32),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}
