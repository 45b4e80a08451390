use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid germ 1/{m}({w1},{w2}): order must be positive and weights coprime to it")]
    InvalidGerm { m: u64, w1: i64, w2: i64 },

    #[error("invalid normalized germ ({m},{q}): need 0 < q < m with gcd(m,q) = 1")]
    InvalidNormalized { m: u64, q: u64 },

    #[error("chain entry {0} is below 2")]
    InvalidChainEntry(u64),

    #[error("brute-force mld on a germ of order {m} exceeds the limit {limit}; use the upper bound or raise the limit")]
    MldLimitExceeded { m: u64, limit: u64 },

    #[error("bound parameter T = {t} must satisfy 1 <= T < {m}")]
    InvalidBoundParameter { t: u64, m: u64 },

    #[error("weights ({a},{b},{c}) must be positive")]
    NonPositiveWeight { a: u64, b: u64, c: u64 },

    #[error("triple ({a},{b},{c}) is not well formed")]
    NotWellFormed { a: u64, b: u64, c: u64 },

    #[error("({n},{x},{y}) is not a solution of n + x^2 + y^2 = (n+2)xy")]
    NotASolution { n: u64, x: String, y: String },

    #[error("parameter n = {n} must be at least {min}")]
    ParameterTooSmall { n: u64, min: u64 },

    #[error("could not start worker pool: {0}")]
    WorkerPool(String),

    #[error("integer overflow: {0}")]
    Overflow(&'static str),
}
