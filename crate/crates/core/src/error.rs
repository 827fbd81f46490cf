use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("{what} index {value} is out of range (minimum {min})")]
    IndexOutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
    },

    #[error("cyclotomic modulus must be at least 1, got {0}")]
    InvalidModulus(u64),

    #[error("sequence `{name}` is not normalized at n = {n}: expected a monic polynomial of degree {n}")]
    NotNormalized { name: String, n: usize },

    #[error("unknown {kind} `{value}`")]
    UnknownName { kind: &'static str, value: String },

    #[error("malformed JSON for {what}: {reason}")]
    Json { what: &'static str, reason: String },
}

pub type Result<T, E = SkeinError> = std::result::Result<T, E>;
