use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Every variant has a stable name (see [`Error::kind`]) so front ends can
/// report failures as data instead of free text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid value: {0}")]
    Value(String),

    #[error("degree {degree} is below the minimum {minimum}")]
    DegreeTooSmall { degree: u32, minimum: u32 },

    #[error(
        "both groups have 2-torsion ({g1} and {g2}); the smash decomposition is not available"
    )]
    Unsupported2Torsion { g1: String, g2: String },

    #[error("unknown: {0}")]
    Unknown(String),

    #[error("enumeration bound exceeded: {needed} candidates > bound {bound}")]
    BoundExceeded { needed: u128, bound: u64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("operation type is outside the basic range: {0}")]
    OutOfRange(String),

    #[error("operation type is not a Whitehead or Torsion candidate")]
    NotSpecial,

    #[error("no Torsion product of this type exists: {0}")]
    TorsionProductAbsent(String),

    #[error("stem table line {line}: {message}")]
    StemTable { line: usize, message: String },
}

impl Error {
    /// Stable variant name used in JSON reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::Value(_) => "ValueError",
            Error::DegreeTooSmall { .. } => "DegreeTooSmall",
            Error::Unsupported2Torsion { .. } => "Unsupported2Torsion",
            Error::Unknown(_) => "Unknown",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::Dimension(_) => "DimensionMismatch",
            Error::InvalidMorphism(_) => "InvalidMorphism",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotSpecial => "NotSpecial",
            Error::TorsionProductAbsent(_) => "TorsionProductAbsent",
            Error::StemTable { .. } => "StemTableError",
        }
    }

    /// True for malformed input, as opposed to a well-formed question the
    /// library cannot (or refuses to) answer.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::Value(_) | Error::Dimension(_) | Error::StemTable { .. }
        )
    }

    pub(crate) fn degree(degree: u32, minimum: u32) -> Result<(), Error> {
        if degree < minimum {
            Err(Error::DegreeTooSmall { degree, minimum })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
