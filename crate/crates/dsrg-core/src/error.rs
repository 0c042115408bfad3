use thiserror::Error;

/// Crate-wide error type. Negative verdicts (infeasible parameters, not-DSRG
/// certificates, rejected constructions) are ordinary values, not errors;
/// errors mean the inputs violated an operation's contract.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("incompatible operands: {0}")]
    IncompatibleOperands(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("unsupported multigraph: {0}")]
    UnsupportedMultigraph(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
