//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by construction and by the combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parts are not weakly decreasing positive integers.
    #[error("invalid partition: parts must be weakly decreasing and positive, got {0:?}")]
    InvalidPartition(Vec<usize>),

    /// A skew shape whose inner shape is not contained in the outer one.
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    InnerNotContained { inner: Vec<usize>, outer: Vec<usize> },

    /// A filling that is not column-strict on its shape.
    #[error("filling is not column-strict: {0}")]
    NotColumnStrict(String),

    /// Letters outside the declared alphabet, or a zero letter.
    #[error("letter {letter} outside alphabet [1, {alphabet}]")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    /// Text or JSON input that does not parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// An RSK pair whose components do not fit together.
    #[error("invalid RSK pair: {0}")]
    InvalidRskPair(String),

    /// An operation that requires a standard tableau.
    #[error("tableau is not standard")]
    NotStandard,

    /// An operation that requires an LR word / LR tableau for the sequence.
    #[error("word is not an LR word for the rectangle sequence {0}")]
    NotLrWord(String),

    /// Rectangle sequences that are not comparable in the pseudo order.
    #[error("rectangle sequences {0} and {1} are not comparable")]
    NotComparable(String, String),

    /// An index outside the rectangle sequence.
    #[error("position {pos} out of range for a sequence of {len} rectangles")]
    PositionOutOfRange { pos: usize, len: usize },

    /// Content vectors that do not match where they must.
    #[error("content mismatch: {0}")]
    ContentMismatch(String),

    /// An enumeration or orbit whose configured size guard was exceeded.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// An internal structural invariant failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
