use thiserror::Error;

use crate::halfint::HalfInt;

/// Errors raised by the exact L-factor algebra and its consumers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Numeric evaluation was requested at a stored pole of the product.
    #[error("evaluation at a pole: the factor with shift {shift} vanishes at w = {w}")]
    EvaluationAtPole { shift: HalfInt, w: f64 },

    /// `C_psi` is only defined for self-associate data, i.e. equal Speh heights.
    #[error("C_psi requires c = d (got c = {c}, d = {d})")]
    NotSelfAssociate { c: u32, d: u32 },
}
