use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension must be at least 2, got {0}")]
    BadDimension(usize),

    #[error("generator s{j} is not defined for n = {n} (need 3 <= j <= n)")]
    BadGenerator { j: usize, n: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("interval parameter k must be nonzero")]
    ZeroK,

    #[error("element is not of maximal length")]
    NotMaxLength,

    #[error("element is not in the interval [1, lambda^{k}]")]
    NotSimple { k: i64 },

    #[error("parse error at position {pos} (token `{token}`): {msg}")]
    Parse {
        pos: usize,
        token: String,
        msg: String,
    },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
