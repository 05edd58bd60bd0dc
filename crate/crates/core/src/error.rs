use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The potential supports no bound state for the requested parameters.
    #[error("no bound states: {0}")]
    NoBoundState(String),

    /// A documented precondition of a special-case routine was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A molecule name was not found among the available presets.
    #[error("unknown molecule `{0}`")]
    UnknownMolecule(String),

    /// Malformed preset file.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Adaptive quadrature failed to reach its tolerance.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    /// The shooting solver could not bracket or converge on a level.
    #[error("no eigenvalue found: {0}")]
    NoEigenvalue(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
