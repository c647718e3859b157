use thiserror::Error;

use crate::algebra::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("slot x{0} is already in use")]
    SlotCollision(usize),
    #[error("{0} is not invertible over Q[d]")]
    NotInvertible(String),
    #[error("hypothesis failed: {what}")]
    Hypothesis { what: String, report: Box<CheckReport> },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search space too large: {0} candidates")]
    SearchTooLarge(u128),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn hypothesis(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Hypothesis {
            what: what.into(),
            report: Box::new(report),
        }
    }

    /// The failing identities carried by a hypothesis error.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::Hypothesis { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
