use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A value left the unsigned 64-bit range. All arithmetic is checked;
    /// overflow is reported, never wrapped.
    #[error("arithmetic overflow beyond the 64-bit range")]
    Overflow,

    #[error("complex is not pure: {0}")]
    NotPure(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    /// The backtracking solver exceeded its node budget. The answer is
    /// unknown, not false.
    #[error("resource limit exceeded after {0} search nodes")]
    ResourceLimit(u64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
