use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("ring mismatch: Z[zeta_{left}] vs Z[zeta_{right}]")]
    RingMismatch { left: u32, right: u32 },
    #[error("pochhammer shift must be at least 1, got {0}")]
    InvalidShift(usize),
    #[error("pochhammer step must be at least 1")]
    InvalidStep,
    #[error("exponent schedule is not strictly increasing at n = {0}")]
    NonIncreasingSchedule(u64),
    #[error("pole exponent must be positive at n = {0}")]
    InvalidPole(u64),
    #[error("table rows incomplete: need order {needed}, have {have}")]
    IncompleteTable { needed: usize, have: usize },
    #[error("z-exponent {m} outside the support bound |m| <= {n}")]
    SupportBound { n: usize, m: i64 },
}

pub type Result<T> = std::result::Result<T, SeriesError>;
