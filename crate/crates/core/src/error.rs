use thiserror::Error;

use crate::algebra::AlgebraTag;

/// A string that is not a valid scalar literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar literal `{0}`")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra mismatch: {left} vs {right}")]
    TagMismatch { left: AlgebraTag, right: AlgebraTag },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Parse(#[from] ParseScalarError),
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn same_tag(left: AlgebraTag, right: AlgebraTag) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::TagMismatch { left, right })
    }
}
