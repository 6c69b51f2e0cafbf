//! Error type shared by every layer of the engine.
//!
//! Law violations are never errors: they are reported through
//! [`LawReport`](crate::report::LawReport). Errors signal ill-typed input,
//! missing structure, or malformed documents.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arrows {g} and {f} are not composable")]
    NotComposable { g: String, f: String },

    #[error("unknown arrow {0}")]
    UnknownArrow(String),

    #[error("unknown object {0}")]
    UnknownObject(String),

    #[error("category has no terminal object")]
    NoTerminalObject,

    #[error("arrows {f} and {g} do not share a codomain")]
    NotACospan { f: String, g: String },

    #[error("ill-typed square: {0}")]
    IllTypedSquare(String),

    #[error("cone does not commute: {0}")]
    NonCommutingCone(String),

    #[error("no unique mediating arrow: {0}")]
    PullbackMediatorMissing(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("no subobject classifier: {0}")]
    NoSubobjectClassifier(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("no pullback exists for the cospan {0}")]
    MissingPullback(String),

    #[error("no binary product exists for {0}")]
    MissingProduct(String),

    #[error("tables do not form a commutative ring: {0}")]
    NotARing(String),

    #[error("global elements {i} and {j} are not equal")]
    NotEqualElements { i: String, j: String },

    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),

    #[error("missing structure: {0}")]
    LayerMissing(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("dangling reference: {0}")]
    Integrity(String),

    #[error("mutation not applicable: {0}")]
    MutationNotApplicable(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
