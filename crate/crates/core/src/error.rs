use crate::qpoly::PolyError;
use crate::ParamError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what}: parameters out of domain ({reason})")]
    OutOfDomain { what: String, reason: String },
    #[error("{op} does not accept objects of kind `{got}`")]
    FamilyMismatch { op: String, got: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("shift {shift} sends exponent {exponent} below zero")]
    NegativeExponent { shift: i64, exponent: i64 },
    #[error("unknown identifier `{0}`")]
    UnknownId(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Param(#[from] ParamError),
}

pub(crate) fn out_of_domain(what: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::OutOfDomain { what: what.into(), reason: reason.into() }
}

pub(crate) fn mismatch(op: impl Into<String>, got: impl Into<String>) -> Error {
    Error::FamilyMismatch { op: op.into(), got: got.into() }
}
