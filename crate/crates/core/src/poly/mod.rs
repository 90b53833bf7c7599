//! Exact arithmetic in ℚ[t^±1], ℚ(t) and matrices over ℚ(t).
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals
//! and there is no floating point anywhere in the crate.

mod dense;
mod laurent;
mod matrix;
mod ratfun;
mod series;

pub use laurent::LaurentPoly;
pub use matrix::MatRF;
pub use ratfun::RatFun;
pub use series::HSeries;

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational coefficient.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num/den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular")]
    Singular,
}
