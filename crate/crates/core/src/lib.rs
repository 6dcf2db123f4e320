//! Closed-form upper bounds for the standard normal CDF Φ(x), measured against
//! an independent high-accuracy reference.
//!
//! * [`reference`]: φ, Φ, Q, erf and erfc to a few ulps.
//! * [`bounds`]: the Polya, Kouba, Alzer, Abreu, Neumann, Yang, Bercu and
//!   Eidous upper bounds plus the Eidous* approximation.
//! * [`analysis`]: signed error curves, maximum-error search, the derivative
//!   of the Eidous error and its root, the Eidous/Polya crossover, grid
//!   verification of the bound inequality, and the comparison table.

pub mod analysis;
pub mod bounds;
mod error;
mod exec;
pub mod reference;

pub use analysis::{
    error_at, error_ratio_ei_vs_star, h_prime, h_prime_root, make_table1, max_abs_error,
    scan_errors, verify_upper_bound, ErrorRow, ExtremumReport, Grid, VerificationReport,
};
pub use bounds::{erf_bound_upper, eval_bound, q_bound_lower, BoundKind};
pub use error::{Error, Result};
pub use exec::Execution;
pub use reference::{erf_ref, erfc_ref, phi_ref, q_ref, std_normal_pdf};
