use thiserror::Error;

use crate::contraction::InvalidSign;
use crate::io::LoadError;
use crate::parse::ParseError;
use crate::poly::AlgebraError;
use crate::seifert::SeifertError;

/// Any error surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Sign(#[from] InvalidSign),
}

impl Error {
    /// 2 usage, 3 parse or validation, 4 mathematical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Sign(_) => 2,
            Self::Load(_) | Self::Parse(_) => 3,
            Self::Seifert(e) => match e {
                SeifertError::NoBands | SeifertError::Algebra(_) => 4,
                _ => 3,
            },
            Self::Algebra(_) => 4,
        }
    }
}
