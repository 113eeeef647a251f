use thiserror::Error;

use crate::cat::Witness;

/// Failure modes shared by every construction in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A size cap would be exceeded. Checks turn this into "skipped".
    #[error("cap exceeded: {0}")]
    Cap(String),
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// A construction that the theory says must succeed did not, e.g. a map
    /// that should coequalize a pair fails to.
    #[error("structural inconsistency: {msg}")]
    Structural {
        msg: String,
        witness: Option<Box<Witness>>,
    },
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural {
            msg: msg.into(),
            witness: None,
        }
    }

    pub fn structural_at(msg: impl Into<String>, witness: Witness) -> Self {
        Error::Structural {
            msg: msg.into(),
            witness: Some(Box::new(witness)),
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
