use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invariant undefined for the zero ideal")]
    UndefinedStats,

    #[error("{0}")]
    Domain(String),

    #[error("resource cap `{cap}` exceeded: need {needed}, limit {limit}{hint}")]
    Resource {
        cap: &'static str,
        needed: u128,
        limit: u128,
        hint: &'static str,
    },

    #[error("exponent overflow: {0} exceeds the configured bound")]
    Overflow(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown verification id `{0}`")]
    UnknownCheck(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(cap: &'static str, needed: u128, limit: u128) -> Self {
        Error::Resource {
            cap,
            needed,
            limit,
            hint: "",
        }
    }

    /// True for errors caused by a configured cap rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. } | Error::Overflow(_))
    }
}
