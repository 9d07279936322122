use thiserror::Error;

/// Errors raised by the library.
///
/// Cost-safety refusals (`CapExceeded`) are distinct from domain errors so
/// that callers can tell "this input is meaningless" apart from "this input
/// is too large to process under the configured limits".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("facet file parse error on line {line}: {message}")]
    FacetFile { line: usize, message: String },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("exact arithmetic overflowed during elimination; retry over a prime field")]
    ArithmeticOverflow,

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::ArithmeticOverflow)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
