use thiserror::Error;

use crate::ground::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ground set: {0}")]
    InvalidGround(String),

    #[error("subset {0} is not a member of the family")]
    NotInFamily(Subset),

    #[error("not a semicharacter: {0}")]
    NotASemicharacter(String),

    #[error("not a semilattice: {0}")]
    NotASemilattice(String),

    #[error("{what} exceeds the limit of {limit}")]
    TooLarge { what: String, limit: usize },

    #[error("bad arguments: {0}")]
    BadArguments(String),

    #[error("degenerate base set: hit set #{0} is empty")]
    DegenerateBase(usize),

    #[error("transform table has no entry for {0}")]
    IncompleteTable(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
