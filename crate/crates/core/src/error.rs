use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested Cartan type or rank is not supported.
    #[error("unsupported root system: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The operation is undefined for this input (e.g. `w_max` of an ideal
    /// containing a simple root).
    #[error("outside the domain of the operation: {0}")]
    Domain(String),
    #[error("set is not bi-convex: {0}")]
    NotBiconvex(String),
    /// A theorem-backed consistency check failed. Indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
