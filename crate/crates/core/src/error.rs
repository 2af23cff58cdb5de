use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("malformed permutation text: {0}")]
    Malformed(String),

    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },

    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: partition of {partition} against cycle type of {cycle_type}")]
    SizeMismatch { partition: usize, cycle_type: usize },

    #[error("group is not transitive")]
    Intransitive,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no cycle of length {0}")]
    NoSuchCycle(usize),

    #[error("{prime} is not a prime in (n/2, n] for n = {n}")]
    PrimeOutOfWindow { prime: usize, n: usize },

    #[error("guard `{guard}` exceeded: {value} > {limit}")]
    GuardExceeded {
        guard: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("the prime window for degree {0} is empty")]
    EmptyPrimeWindow(usize),

    #[error("series order {order} exceeds the {available} known coefficients")]
    SeriesOrder { order: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
