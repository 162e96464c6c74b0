use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A construction would exceed one of the configured size caps.
    #[error("capacity exceeded: {what} needs {needed}, cap is {cap}")]
    Capacity {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    /// The isomorphism search ran out of nodes. This is never a negative answer.
    #[error("isomorphism search between groups of order {order} exhausted its budget of {budget} nodes")]
    Indeterminate { order: usize, budget: u64 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("constant term of the series is not the unit")]
    NonUnitConstant,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Capacity and indeterminate outcomes are resource limits, not wrong answers.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::Indeterminate { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
