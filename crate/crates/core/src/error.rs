use thiserror::Error;

use crate::word::{OrderedAlphabet, ParityClass};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letters must be positive integers")]
    ZeroLetter,
    #[error("an alphabet needs two letters a < b, got {0} and {1}")]
    BadAlphabet(u32, u32),
    #[error("letter {letter} is not in the alphabet {alphabet}")]
    NotInAlphabet { letter: u32, alphabet: OrderedAlphabet },
    #[error("the two letters of a run-length decoding must differ (both are {0})")]
    SameLetters(u32),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("operation needs a nonempty word")]
    EmptyWord,
    #[error("`{word}` is not a smooth prefix over {alphabet}")]
    NotSmoothPrefix { word: String, alphabet: OrderedAlphabet },
    #[error("no closed-form extremal word for {0:?} alphabets")]
    UnsupportedClass(ParityClass),
    #[error("alphabet {alphabet} does not satisfy `{constraint}`")]
    Constraint { alphabet: OrderedAlphabet, constraint: String },
    #[error("formula `{formula}`: {reason}")]
    Formula { formula: String, reason: String },
    #[error("search depth {0} is larger than 12")]
    DepthTooLarge(usize),
    #[error("length must be at least {min}, got {got}")]
    TooShort { min: usize, got: usize },
}
