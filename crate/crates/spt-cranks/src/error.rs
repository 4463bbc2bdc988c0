use partition_enum::PartitionError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrankError {
    #[error("object is not a member of {0}")]
    NotMember(&'static str),
    #[error("mark {j} outside 1..={nu}")]
    InvalidMark { j: usize, nu: usize },
    #[error("k(m,n) needs n >= 1 and m >= n+1, got m={m}, n={n}")]
    KDomain { m: u64, n: u64 },
    #[error("family {0} has no partition-pair model")]
    NoPairModel(&'static str),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

pub type Result<T> = std::result::Result<T, CrankError>;
