use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is not strictly increasing: {0:?}")]
    NotIncreasing(Vec<u64>),
    #[error("set {0} is not exactly large")]
    NotExactlyLarge(String),
    #[error("cannot parse set: {0}")]
    ParseSet(String),
    #[error("cannot parse program: line {line}: {msg}")]
    ParseProgram { line: usize, msg: String },
    #[error("program index does not fit in 64 bits")]
    IndexOverflow,
    #[error("reduction requires i <= j (got i = {i}, j = {j})")]
    BadReductionLevels { i: u64, j: u64 },
    #[error("query index {e} exceeds tuple bound {bound}")]
    QueryAboveBound { e: u64, bound: u64 },
    #[error("tuple has {got} elements, expected {expected}")]
    TupleArity { got: usize, expected: usize },
    #[error("set {0} is not min-homogeneous")]
    NotMinHomogeneous(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
