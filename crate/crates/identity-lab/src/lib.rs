//! Executable checks for the overpartition spt-crank identities.
//!
//! Each check in [`CATALOG`] compares two independently computed sides
//! coefficient by coefficient and returns a [`CheckReport`]; a failure
//! carries the first differing coefficient as its [`Witness`].
//!
//! ```
//! use identity_lab::{run_check, Lab, Status};
//! let lab = Lab::default();
//! let r = run_check("T2_5", Some(60), &lab).unwrap();
//! assert_eq!(r.status, Status::Pass);
//! ```

pub mod bijections;
pub mod catalog;
pub mod classes;
pub mod classical;
pub mod congruence;
pub mod dissection;
pub mod error;
pub mod lab;
pub mod moments;
pub mod nonneg;
pub mod rank_crank;
pub mod report;
pub mod tables;

pub use catalog::{catalog, find, run_catalog, run_check, run_checks, CheckSpec, Kind, CATALOG};
pub use error::{LabError, Result};
pub use lab::Lab;
pub use report::{CheckReport, Status, Value, Witness};
