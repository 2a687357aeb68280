use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground sets differ: {left} vs {right} elements")]
    GroundMismatch { left: usize, right: usize },
    #[error("{what}: n = {n} exceeds the limit {limit}")]
    Guard {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("the set of enumerations must be non-empty")]
    EmptySet,
    #[error("enumerations are not adjacent")]
    NotAdjacent,
    #[error("relation is not a poset")]
    NotPoset,
    #[error("relation is not a preposet")]
    NotPreposet,
    #[error("set system is not a topology")]
    NotTopology,
    #[error("set of enumerations is not poset-based")]
    NotPosetBased,
    #[error("game is not supermodular")]
    NotSupermodular,
    #[error("game is modular")]
    Modular,
    #[error("function is not a polymatroid")]
    NotPolymatroid,
    #[error("vector is not a vertex of the core")]
    NotVertex,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub(crate) fn same_ground(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::GroundMismatch { left, right })
    }
}

pub(crate) fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::Guard { what, n, limit })
    } else {
        Ok(())
    }
}
