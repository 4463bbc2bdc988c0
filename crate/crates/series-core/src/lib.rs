//! Exact truncated q-series over ℤ and the cyclotomic integers ℤ[ζ_t].
//!
//! - [`CycInt`]: canonical elements of ℤ[ζ_t].
//! - [`QSeries`]: truncated power series in `q`, with dissection and reassembly.
//! - [`ZLaurentSeries`]: two-variable integer series Σ c(m,n) z^m q^n, |m| ≤ n.
//! - Builders for Pochhammer products, eta quotients, theta functions and Lambert sums.
//!
//! ```
//! use series_core::{poch_inf, CycInt};
//! let euler = poch_inf(&CycInt::one(1), 1, 1, 7).unwrap();
//! assert_eq!(series_core::small_ints(&euler), vec![1, -1, -1, 0, 0, 1, 0, 1]);
//! ```

pub mod cyclotomic;
pub mod error;
pub mod lambert;
pub mod laurent;
pub mod par;
pub mod products;
pub mod qseries;

pub use cyclotomic::{cyc_reduce, cyclotomic_degree, cyclotomic_polynomial, CycInt};
pub use error::{Result, SeriesError};
pub use lambert::{lambert_sum, lambert_sum_laurent, LambertSchedule};
pub use laurent::{specialize_rows, ZLaurentSeries};
pub use par::Exec;
pub use products::{
    eta_quotient, poch_inf, poch_inf_inv, theta_f, theta_f_product, theta_phi, theta_phi_product, Poch,
};
pub use qseries::{series_arith, small_ints, QSeries, SeriesOp};
