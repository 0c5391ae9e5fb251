use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator s{index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("cannot shift by {offset} into {new_strands} strands from {strands}")]
    ShiftOutOfBounds {
        strands: usize,
        offset: usize,
        new_strands: usize,
    },

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("not composable: {0}")]
    NotComposable(String),

    #[error("configurations are not slide-equivalent")]
    NotSlideEquivalent,

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("non-dyadic coordinate `{0}`: denominator must be a power of two")]
    NonDyadic(String),

    #[error("malformed braid word: {0}")]
    BraidSyntax(String),

    #[error("malformed word: {0}")]
    WordSyntax(String),

    #[error("malformed configuration: {0}")]
    ConfigSyntax(String),

    #[error("unknown category `{0}` (expected free, perm or bichar:<n>)")]
    UnknownCategory(String),

    #[error("morphism is not invertible")]
    NotInvertible,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
