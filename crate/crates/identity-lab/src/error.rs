use partition_enum::PartitionError;
use series_core::SeriesError;
use spt_cranks::CrankError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("check {check} has no stated component {r}")]
    UnknownComponent { check: String, r: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Crank(#[from] CrankError),
}

pub type Result<T> = std::result::Result<T, LabError>;
