use thiserror::Error;

use crate::finring::RingError;
use crate::groebner::GbError;
use crate::poly::PolyError;
use crate::syntax::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// An enumeration would exceed the configured search budget.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// Structurally invalid input (wrong arity, not a point, mismatched presentations).
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A result failed its independent re-verification.
    #[error("internal check failed: {0}")]
    Bug(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// True when the failure is a budget limit rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::Budget(_)
                | Error::Groebner(GbError::BudgetExceeded(_))
                | Error::Ring(RingError::BudgetExceeded { .. })
        )
    }

    /// Short machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            e if e.is_budget() => "budget",
            Error::Poly(_) => "polynomial",
            Error::Ring(_) => "ring",
            Error::Groebner(_) => "groebner",
            Error::Parse(_) => "parse",
            Error::Bug(_) => "bug",
            _ => "invalid",
        }
    }
}
