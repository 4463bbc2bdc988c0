//! Combinatorial models of the overpartition spt-crank.
//!
//! - [`VectorPartition`]: weighted vectors (π1, π2, π3, π4) whose crank is #(π2) − #(π3).
//! - [`PartitionPair`]: SP̄ pairs (λ1, λ2) with crank̄.
//! - [`MarkedOverpartition`]: (π, j) with the sptcrank.
//!
//! [`phi`] carries marked overpartitions to SP̄ pairs, preserving size and crank.
//!
//! ```
//! use partition_enum::{Overpartition, Partition};
//! use spt_cranks::{crank_bar, phi, MarkedOverpartition};
//! let pi = Overpartition::new(Partition::new(vec![3, 3, 2]).unwrap(), vec![3]).unwrap();
//! let m = MarkedOverpartition::new(pi, 1).unwrap();
//! let pair = phi(&m).unwrap();
//! assert_eq!(pair.to_string(), "[3+2, 3]");
//! assert_eq!(crank_bar(&pair).unwrap(), m.sptcrank());
//! ```

pub mod bijection;
pub mod error;
pub mod marked;
pub mod pairs;
pub mod series;
pub mod vector;

pub use bijection::{d_n, k_int, k_partition, p_n, phi, phi_inv, psi, psi_inv};
pub use error::{CrankError, Result};
pub use marked::{enumerate_marked, for_each_marked, sptcrank_classes, MarkedOverpartition};
pub use pairs::{crank_bar, enumerate_sp_pairs, k_vec, PartitionPair};
pub use series::{
    nsb_at_root, nsb_series, nsb_table, nsb_table_enumerated, nsb_table_with, s2bar_summand, sp_crank_table,
    summand_laurent,
};
pub use vector::{enumerate_vector_partitions, vector_partition, SptFamily, VectorPartition, WeightedVector};
