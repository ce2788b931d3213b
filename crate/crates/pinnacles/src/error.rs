//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("letter {letter} is not in 1..={n}")]
    LetterOutOfRange { letter: u32, n: usize },

    #[error("letter {letter} does not occur in the word")]
    LetterNotInWord { letter: u32 },

    #[error("the pinnacle set and vale set do not form an admissible pair")]
    InadmissiblePair,

    #[error("invalid PV-arrangement: {0}")]
    InvalidArrangement(String),

    #[error("the arrangement is not canonical")]
    NotCanonical,

    #[error("invalid weak composition: {0}")]
    InvalidComposition(String),

    #[error("n = {n} exceeds the exhaustive enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
