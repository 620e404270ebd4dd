use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped roughly by origin: malformed input data, shape
/// mismatches between operands, resource caps, and verification failures
/// (inputs that are well-formed but do not define a perfect code).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a word must contain at least one coordinate")]
    EmptyWord,

    #[error("{digit} is not a quaternary digit")]
    InvalidDigit { digit: u8 },

    #[error("invalid character {ch:?} in word")]
    InvalidChar { ch: char },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("operation requires an even length, got {len}")]
    OddLength { len: usize },

    #[error("coordinate index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("matrix text contains no rows")]
    EmptyMatrix,

    #[error("matrix rows must all have {expected} columns, found a row with {found}")]
    RaggedRows { expected: usize, found: usize },

    #[error("column counts differ: {left} vs {right}")]
    ColumnCountMismatch { left: usize, right: usize },

    #[error("{required} columns exceed the column cap of {cap}")]
    ColumnCapExceeded { required: u128, cap: usize },

    #[error(
        "enumerating 2^{log2_size} codewords exceeds the cap of {cap}; \
         use the structural check or raise the cap"
    )]
    EnumerationCapExceeded { log2_size: u32, cap: u128 },

    #[error("the code carries no check matrix")]
    MissingCheckMatrix,

    #[error("not a check matrix of a perfect code: {reason}")]
    NotPerfect { reason: String },

    #[error("malformed check matrix: {reason}")]
    MalformedCheckMatrix { reason: String },

    #[error(
        "classification requires k >= 4 (binary length >= 16); \
         k = {k} falls outside the classified range"
    )]
    UnsupportedExponent { k: u32 },

    #[error("operation requires at least one word")]
    EmptyInput,

    #[error("not a permutation of 0..{len}")]
    InvalidPermutation { len: usize },
}

impl Error {
    fn not_perfect(reason: impl Into<String>) -> Self {
        Error::NotPerfect {
            reason: reason.into(),
        }
    }

    fn malformed(reason: impl Into<String>) -> Self {
        Error::MalformedCheckMatrix {
            reason: reason.into(),
        }
    }
}

pub(crate) fn not_perfect(reason: impl Into<String>) -> Error {
    Error::not_perfect(reason)
}

pub(crate) fn malformed(reason: impl Into<String>) -> Error {
    Error::malformed(reason)
}

pub type Result<T> = std::result::Result<T, Error>;
