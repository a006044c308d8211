use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal character {found:?} at position {position}")]
    IllegalCharacter { position: usize, found: char },
    #[error("empty sequence")]
    EmptySequence,
    #[error(
        "unbalanced sequence: {left} left turns, {right} right turns (need exactly 4 more lefts)"
    )]
    BalanceViolation { left: usize, right: usize },
    #[error("sequence of length {0} is too short (need at least 4 turns)")]
    TooShort(usize),
    #[error("sequence is not xy-monotone")]
    NotXYMonotone,
    #[error("sequence is not x-monotone")]
    NotXMonotone,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("instance of length {n} exceeds the enumeration limit {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("no realization with edge lengths at most {0}")]
    NoRealizationWithinBound(i64),
    #[error("invalid 3-partition instance: {0}")]
    InvalidInstance(String),
    #[error("wrap spiral needs at least 2 windings, got {0}")]
    WindingsTooSmall(u64),
    #[error("not a 3-partition: {0}")]
    NotAPartition(String),
    #[error("connector routing failed: {0}")]
    RoutingFailure(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
