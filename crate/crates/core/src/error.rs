use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    UnknownSymbol { symbol: char, position: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: String, right: String },

    #[error("subset construction exceeded the cap of {cap} states")]
    StateBlowup { cap: usize },

    /// More distinct languages than the orbit bound allows; always an implementation bug.
    #[error("{mode} orbit produced {found} distinct languages, bound is {bound}")]
    BoundViolation {
        mode: &'static str,
        found: usize,
        bound: usize,
    },

    #[error("language could not be classified: {0}")]
    Unclassifiable(String),

    #[error("phi undefined: neither M with nor without the empty word lies in B(L) for node {0}")]
    PhiUndefined(String),

    /// A property that holds for every language failed on a concrete input.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
