//! Crate-wide error type with a stable mapping to CLI exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Precondition violation or an input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A job was refused or aborted because its candidate space or search
    /// grid exceeds the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A certified computation could not reach the required accuracy within
    /// the precision cap.
    #[error("certification failed: {0}")]
    Certification(String),

    /// A linear-algebra instance has no nonzero solution (hypothesis of the
    /// solvability lemma violated).
    #[error("infeasible instance: {0}")]
    Infeasible(String),

    /// Malformed file, header mismatch, or checksum failure.
    #[error("format error: {0}")]
    Format(String),

    /// An inequality the underlying theory guarantees was empirically
    /// violated. This signals a bug, never a property of the inputs.
    #[error("verified bound violated (bug): {0}")]
    BoundViolated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code used by the CLI: 0 all-pass, 1 bound violated, 2 resource
    /// guard, 3 certification cap, 4 other operational errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BoundViolated(_) => 1,
            Error::Budget(_) => 2,
            Error::Certification(_) => 3,
            _ => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
