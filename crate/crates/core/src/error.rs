use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A constructor or operation argument violates its precondition.
    InvalidParameter(String),
    /// Malformed text; `position` is a 0-based character offset.
    Parse { position: usize, message: String },
    /// A closed form was queried outside the range where it is stated.
    OutOfDomain { what: &'static str, value: u64, min: u64 },
    /// The graph lacks the structure an operation needs.
    UnsupportedGraph(String),
    /// The number of colors (or similar) is not handled by an operation.
    UnsupportedParameters(String),
    /// Exhaustive enumeration refused: `vertices * colors` exceeds `limit`.
    InstanceTooLarge { vertices: usize, colors: u8, limit: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse { position, message: msg.into() }
    }

    /// Stable kebab-case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::Parse { .. } => "parse",
            Error::OutOfDomain { .. } => "out-of-domain",
            Error::UnsupportedGraph(_) => "unsupported-graph",
            Error::UnsupportedParameters(_) => "unsupported-parameters",
            Error::InstanceTooLarge { .. } => "instance-too-large",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(m) => write!(f, "invalid parameter: {m}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::OutOfDomain { what, value, min } => {
                write!(f, "{what} is defined for values >= {min}, got {value}")
            }
            Error::UnsupportedGraph(m) => write!(f, "unsupported graph: {m}"),
            Error::UnsupportedParameters(m) => write!(f, "unsupported parameters: {m}"),
            Error::InstanceTooLarge { vertices, colors, limit } => write!(
                f,
                "instance too large for exhaustive search: {vertices} vertices x {colors} colors exceeds {limit}"
            ),
        }
    }
}

impl core::error::Error for Error {}
