//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),

    #[error("`{g}` and `{f}` are not composable (cod(f) must equal dom(g))")]
    NotComposable { g: String, f: String },

    #[error("table entry for ({left}, {right}) lies outside the truncation window")]
    Truncated { left: String, right: String },

    #[error("{what} count {actual} exceeds the enumeration limit {max}; raise the limit explicitly to proceed")]
    LimitExceeded {
        what: &'static str,
        actual: usize,
        max: usize,
    },

    #[error("category carries no braiding")]
    MissingBraiding,

    #[error("category failed validation: {0}")]
    InvalidCategory(String),

    #[error("strand counts differ: {a} vs {b}")]
    StrandMismatch { a: usize, b: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    BadGenerator { index: usize, strands: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("functor {functor} is not cocontinuous on the supplied diagram; refusing the inheritance construction")]
    NotCocontinuous { functor: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
