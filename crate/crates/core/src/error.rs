//! Crate-wide error type.

use crate::var::{ChartTag, Var};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("chart violation: {sym} is not a symbol of chart {chart:?}")]
    ChartViolation { sym: String, chart: ChartTag },

    #[error("chart mismatch: {0:?} vs {1:?}")]
    ChartMismatch(ChartTag, ChartTag),

    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown variable {0:?} in this chart")]
    UnknownVariable(Var),

    #[error("form degree out of range: {0}")]
    DegreeOverflow(usize),

    #[error("interior product needs a form of degree >= 1")]
    DegreeZeroInterior,

    #[error("singular frame: wedge of the frame vanishes")]
    SingularFrame,

    #[error("ill-formed substitution: missing image for {0:?}")]
    IllFormedSubstitution(Var),

    #[error("not Laurent-finite in alpha (denominator mixes alpha with other terms)")]
    NotAlphaFinite,

    #[error("ansatz basis size {0} exceeds the cap {1}")]
    AnsatzTooLarge(usize, usize),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
