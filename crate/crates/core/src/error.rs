use thiserror::Error;

/// Errors raised by validation, parsing and size limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {n} out of range (expected {min}..={max})")]
    VariableCount { n: u32, min: u32, max: u32 },

    #[error("rule number {rule} does not fit in 2^{n} bits")]
    RuleOutOfRange { n: u32, rule: u128 },

    #[error("decimal rule numbers are only supported for n <= {max}, got n = {n}")]
    DecimalUnsupported { n: u32, max: u32 },

    #[error("operands have different variable counts ({left} vs {right})")]
    VariableCountMismatch { left: u32, right: u32 },

    #[error("class index {k} out of range for n = {n} (expected 1..={max})")]
    ClassIndex { n: u32, k: u64, max: u64 },

    #[error("n = {n} exceeds the {what} cap of {cap}")]
    CapExceeded {
        what: &'static str,
        n: u32,
        cap: u32,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
