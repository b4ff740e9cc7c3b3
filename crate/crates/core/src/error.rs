use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: unknown labels, non-injective maps, bad shapes.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A configured size limit was exceeded; the computation was refused.
    #[error("resource bound exceeded: {what} is {actual}, limit {limit}")]
    Bound {
        what: String,
        actual: usize,
        limit: usize,
    },

    /// A coefficient system or presentation failed a functoriality or
    /// compatibility check.
    #[error("validation error: {0}")]
    Validation(String),

    /// A tabulated functor is missing a value or morphism that the
    /// computation needs.
    #[error("diagram incomplete: {0}")]
    DiagramIncomplete(String),

    /// An internal consistency check failed (for instance a relator that
    /// does not hold as an automorphism identity).
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}

pub(crate) fn check_bound(what: &str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Bound {
            what: what.to_string(),
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
