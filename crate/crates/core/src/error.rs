use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A token of a braid word could not be parsed.
    MalformedToken {
        token: String,
    },
    /// A letter index does not fit in the requested strand count.
    StrandsTooSmall {
        strands: usize,
        required: usize,
    },
    /// Zero strands, or a zero letter.
    InvalidLetter {
        letter: i32,
        strands: usize,
    },
    /// Two words with different strand counts were combined.
    StrandMismatch {
        left: usize,
        right: usize,
    },
    /// The cube of resolutions is larger than the configured limit.
    CrossingLimit {
        crossings: usize,
        limit: usize,
        estimated_states: u128,
    },
    VertexOutOfRange {
        vertex: u64,
        crossings: usize,
    },
    LabelWidth {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedToken { token } => write!(f, "malformed braid token `{token}`"),
            Error::StrandsTooSmall { strands, required } => write!(
                f,
                "{strands} strands requested but the word needs at least {required}"
            ),
            Error::InvalidLetter { letter, strands } => {
                write!(f, "letter {letter} is not a generator of B_{strands}")
            }
            Error::StrandMismatch { left, right } => {
                write!(f, "strand count mismatch: {left} vs {right}")
            }
            Error::CrossingLimit {
                crossings,
                limit,
                estimated_states,
            } => write!(
                f,
                "{crossings} crossings exceeds the limit of {limit} \
                 (estimated {estimated_states} enhanced states in the cube); \
                 raise --max-crossings to attempt it anyway"
            ),
            Error::VertexOutOfRange { vertex, crossings } => write!(
                f,
                "vertex {vertex} is outside the cube of a {crossings}-crossing diagram"
            ),
            Error::LabelWidth { expected, found } => write!(
                f,
                "label mask has width {found}, the resolution has {expected} circles"
            ),
        }
    }
}

impl core::error::Error for Error {}
