use thiserror::Error;

/// Errors produced by the fragmentation pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input text contained no non-blank content.
    #[error("input text contains no non-blank content")]
    EmptyInput,

    /// A boundary index fell outside the valid range `1..=n-1`.
    #[error("boundary {boundary} out of range 1..={max}")]
    BoundaryOutOfRange { boundary: usize, max: usize },

    /// The operation needs at least two paragraphs.
    #[error("document has {n} paragraph(s), need at least 2")]
    TooFewParagraphs { n: usize },

    /// Segmenter input failed validation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A supplied boundary set referenced a boundary that does not exist.
    #[error("invalid boundary {boundary}: must lie in 1..={max}")]
    InvalidBoundary { boundary: usize, max: usize },

    /// Guard against exhaustive enumeration of too many segmentations.
    #[error("instance with {n} paragraphs exceeds exhaustive-search limit of {max}")]
    InstanceTooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
