use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field: {0}")]
    Field(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("polynomial does not divide exactly")]
    NotDivisible,

    #[error("shape: {0}")]
    Shape(String),

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("polynomial is not a member of the ideal")]
    NotMember,

    #[error("ideal is not homogeneous")]
    Inhomogeneous,

    #[error("quotient does not have dimension one: {0}")]
    Dimension(String),

    #[error("not a perfect codimension-2 ideal: {0}")]
    NotPerfectCodim2(String),

    #[error("Hilbert function did not stabilize below degree {0}")]
    NoStabilization(u32),

    #[error("no exact or predicted resolution available: {0}")]
    Unresolvable(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A construction whose existence is asserted by the theory failed.
    #[error("claimed object does not exist: {0}")]
    Refuted(String),
}
