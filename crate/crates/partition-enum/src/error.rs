use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partitions have positive parts")]
    ZeroPart,
    #[error("a part size can be overlined at most once")]
    DoubleOverline,
    #[error("overlined size {0} does not occur in the partition")]
    OverlineMissing(u32),
    #[error("the M2-rank needs a partition without repeated odd parts")]
    RepeatedOddParts,
    #[error("statistic {0} does not apply to this kind of object")]
    NotApplicable(&'static str),
    #[error("family {0} is not an enumerated statistic table")]
    UnsupportedFamily(String),
    #[error(transparent)]
    Series(#[from] series_core::SeriesError),
}
