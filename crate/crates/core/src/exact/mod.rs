//! Exact arithmetic over `ℚ` and `ℚ[t]`, and 2×2 matrices over `ℚ[t]`.
//!
//! `t` is a formal indeterminate. It is never evaluated by the certification
//! code: a trace that depends on `t` is transcendental at every transcendental
//! value of `t`.

mod mat2;
mod poly;
mod rational;

pub use mat2::{mat_inverse, mat_mul, projective_eq, trace, Mat2};
pub use poly::{poly_arith, Poly, PolyOp};
pub use rational::{rat_arith, ParseRationalError, RatOp, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero in {op}")]
    DivisionByZero { op: &'static str },
    #[error("matrix determinant is not ±1")]
    NotUnimodular,
}
