use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("generator s_{index} out of range for S_{n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("invalid transposition ({0},{1})")]
    InvalidTransposition(usize, usize),

    #[error("generator x({0},{0}) has equal indices")]
    EqualIndices(usize),

    #[error("index {index} exceeds window {n}")]
    IndexOutOfWindow { index: usize, n: usize },

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("length mismatch: l(u) + l(v) = {lhs} but l(w) = {rhs}")]
    LengthMismatch { lhs: usize, rhs: usize },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("elimination produced a non-unit pivot {coeff} at degree {degree}")]
    NonUnitPivot { degree: usize, coeff: i64 },

    #[error("cache file: {0}")]
    Cache(String),

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
