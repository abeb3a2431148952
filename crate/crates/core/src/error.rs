use thiserror::Error;

use crate::syntax::{Arrow, ArrowType, Object};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),

    #[error("type mismatch in `{term}`: expected {expected}, found {found}")]
    TypeMismatch {
        term: Box<Arrow>,
        expected: Object,
        found: Object,
    },

    #[error("type mismatch in `{term}`: expected {expected}, found {found}")]
    ShapeMismatch {
        term: Box<Arrow>,
        expected: &'static str,
        found: Object,
    },

    #[error("arrow types differ: {left} vs {right}")]
    ArrowTypesDiffer { left: ArrowType, right: ArrowType },

    #[error("the signature declares no indeterminate")]
    NoIndeterminate,

    #[error("`{0}` mentions the indeterminate but an arrow of the base category is required")]
    UnexpectedIndeterminate(Box<Arrow>),

    #[error("finite model has no interpretation for `{0}`")]
    MissingInterpretation(String),

    #[error("finite model too large: carrier of {0} exceeds the enumeration limit")]
    ModelTooLarge(Object),

    #[error("ill-typed lambda term: {0}")]
    IllTypedLambda(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("duplicate declaration of `{0}`")]
    DuplicateName(String),

    #[error("indeterminate `{name}` must have source T, found {found}")]
    BadIndeterminateType { name: String, found: Object },
}

impl Error {
    pub(crate) fn mismatch(term: &Arrow, expected: &Object, found: &Object) -> Self {
        Error::TypeMismatch {
            term: Box::new(term.clone()),
            expected: expected.clone(),
            found: found.clone(),
        }
    }

    /// True for errors caused by user input rather than by a kernel defect.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::IllTypedLambda(_))
    }
}
