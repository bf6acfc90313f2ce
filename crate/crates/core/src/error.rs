use thiserror::Error;

use crate::words::Word;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: unexpected {found:?} at position {position} (expected a, b, c, d or 1)")]
    Parse {
        input: String,
        position: usize,
        found: char,
    },

    #[error("word {0} has an odd number of a's")]
    OddParity(Word),

    #[error("word {0} has an even number of a's")]
    EvenParity(Word),

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("depth must be positive")]
    ZeroDepth,

    #[error("depth {0} exceeds the supported maximum of 64")]
    DepthTooLarge(usize),

    #[error("coset enumeration defined more than {limit} cosets")]
    EnumerationOverflow { limit: usize },

    #[error("quotient has order {0}, expected 16")]
    QuotientOrder(usize),

    #[error("quotient check failed: {0}")]
    QuotientCheck(String),

    #[error("lift table conflict at ({i}, {j}): {existing} from {existing_word}, {found} from {found_word}")]
    LiftConflict {
        i: u8,
        j: u8,
        existing: u8,
        existing_word: Word,
        found: u8,
        found_word: Word,
    },

    #[error("only {0} lift pairs found among words of length <= 12, expected 32")]
    LiftShortfall(usize),

    #[error("lift table invariant violated: {0}")]
    LiftInvariant(String),

    #[error("base Q table check failed: {0}")]
    BaseTable(String),

    #[error("conjugacy recursion revisited ({0}, {1}) while it was still being computed")]
    Cycle(Word, Word),
}
