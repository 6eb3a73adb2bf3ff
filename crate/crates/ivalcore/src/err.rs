use thiserror::Error;

/// Errors raised by interval construction and elementary functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A NaN endpoint was passed to a constructor or produced where none is
    /// tolerated.
    #[error("NaN endpoint in interval operation")]
    NaNDetected,
    /// Division where the divisor interval (or the modulus of a complex
    /// divisor rectangle) contains zero.
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    /// Argument interval leaves the function's domain (`log` of a nonpositive
    /// interval, `acos` outside [-1,1], trig argument beyond 2^53, ...).
    #[error("domain error: {0}")]
    DomainError(&'static str),
    /// Argument interval contains (or cannot be separated from) a pole of
    /// tan/cot/sec/csc.
    #[error("argument interval contains a pole")]
    PoleError,
    /// Malformed decimal or hexadecimal literal.
    #[error("parse error: {0}")]
    ParseError(String),
}
