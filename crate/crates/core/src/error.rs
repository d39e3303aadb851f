use core::fmt;

/// Errors surfaced by the math modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument left the mathematical domain of the operation.
    Domain(&'static str),
    /// A searched-for object (root, sign change, feasible point) does not
    /// exist in the examined region.
    NotFound(&'static str),
    /// A cost guard rejected the request.
    Resource(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::NotFound(m) => write!(f, "not found: {m}"),
            Error::Resource(m) => write!(f, "resource limit: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
