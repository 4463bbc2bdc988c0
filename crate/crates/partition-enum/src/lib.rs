//! Partitions, overpartitions and their statistics.
//!
//! Enumeration is deterministic (lexicographically descending). Rank tables are
//! built by enumeration, crank tables from their product generating functions.
//!
//! ```
//! use partition_enum::{spt_count, SptVariant};
//! assert_eq!(spt_count(4, SptVariant::SptBar), 13.into());
//! ```

pub mod error;
pub mod gf;
pub mod overpartition;
pub mod partition;
pub mod spt;
pub mod stats;
pub mod table;

pub use error::PartitionError;
pub use overpartition::{
    enumerate_overpartitions, for_each_overpartition, overline, Overpartition, OverpartitionConstraints,
};
pub use partition::{enumerate_partitions, for_each_partition, Parity, Partition, PartitionConstraints, Smallest};
pub use spt::{spt_count, spt_count_table, spt_counts, SptVariant};
pub use stats::{
    crank, dyson_rank, m2_rank, m2_residual_crank, rank, residual_crank, statistic, StatObject, Statistic,
};
pub use table::{
    crank_cross_check, crank_exceptions, crank_row_enumerated, series_table, stat_table, stat_table_with, Family,
    TwoVarTable,
};
