//! Sparse multivariate polynomials over `Q`, polynomials in `z` with such
//! coefficients, and the sequential linear elimination engine.

mod elim;
mod param;
mod parse;
mod poly;

pub use elim::{
    divide_out_assumed_nonzero, sequential_linear_solve, EliminationError, EliminationStep, EliminationTrace,
    Equation, StepReport, TraceReport,
};
pub use param::ParamPoly;
pub use parse::parse;
pub use poly::{MultiPoly, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultiPolyError {
    #[error("operands use different variable sets")]
    MismatchedVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("divisor does not divide the polynomial exactly")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by a non-constant expression")]
    DivisionByNonConstant,
    #[error("parse error: {0}")]
    Parse(String),
}
