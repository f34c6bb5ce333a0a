use thiserror::Error;

use crate::exactalg::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// The family lacks data the quantity needs (e.g. no closed-form pushforward).
    #[error("capability error: {0}")]
    Capability(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("wrong relative dimension: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("pole at evaluation point {at}")]
    Pole { at: Rational },

    /// Binomial-basis reconstruction disagreed with a sample value.
    #[error("input is not a polynomial of degree {degree}: sample at k={k} is {sample}, fit gives {fitted}")]
    NotPolynomial {
        degree: usize,
        k: i64,
        sample: Rational,
        fitted: Rational,
    },

    /// Two independent routes to the same quantity disagree.
    #[error("{quantity} is inconsistent: {left_route} gives {left}, {right_route} gives {right}")]
    Inconsistent {
        quantity: String,
        left_route: String,
        left: Rational,
        right_route: String,
        right: Rational,
    },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Capability(_) => 3,
            Error::Precondition(_) | Error::Dimension { .. } | Error::Pole { .. } => 4,
            Error::NotPolynomial { .. } | Error::Inconsistent { .. } => 1,
        }
    }
}
