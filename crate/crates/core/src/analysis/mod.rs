//! Tightness analysis of the bounds: signed error h_U(x) = Φ_U(x) − Φ(x),
//! its extrema, grid verification and the comparison table.
//!
//! Infinite ranges are truncated at [`X_MAX`]: past x ≈ 38.6 every bound and
//! Φ itself round to 1 in f64.

mod extremum;
mod grid;
mod search;
mod table;
mod verify;

pub use extremum::{
    error_ratio_ei_vs_star, error_ratio_with, h_eidous, h_prime, h_prime_root, max_abs_error,
    max_abs_error_with, ExtremumReport, RatioReport, SearchOptions,
};
pub use grid::{Grid, GridConstruction, GridSummary, Spacing};
pub use table::{make_table, make_table1, Table, TABLE_ABSCISSAE};
pub use verify::{
    crossover_point, verify_crossover, verify_upper_bound, verify_upper_bound_with,
    CrossoverReport, VerificationReport, PRINTED_CROSSOVER,
};

use crate::bounds::{eval_bound_flagged, BoundKind};
use crate::error::Result;
use crate::exec::{try_map, Execution};
use crate::reference::phi_ref;

/// Right end used in place of +∞.
pub const X_MAX: f64 = 40.0;

/// One evaluation of a bound against the reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRow {
    pub kind: BoundKind,
    pub x: f64,
    pub bound_value: f64,
    pub reference_value: f64,
    /// `bound_value - reference_value`, as computed.
    pub error: f64,
    pub out_of_validity: bool,
}

pub fn error_at(kind: BoundKind, x: f64) -> Result<ErrorRow> {
    let bound = eval_bound_flagged(kind, x)?;
    let reference_value = phi_ref(x)?;
    Ok(ErrorRow {
        kind,
        x,
        bound_value: bound.value,
        reference_value,
        error: bound.value - reference_value,
        out_of_validity: bound.out_of_validity,
    })
}

/// One row per grid point, in grid order.
pub fn scan_errors(kind: BoundKind, grid: &Grid) -> Result<Vec<ErrorRow>> {
    scan_errors_with(kind, grid, Execution::default())
}

pub fn scan_errors_with(kind: BoundKind, grid: &Grid, exec: Execution) -> Result<Vec<ErrorRow>> {
    try_map(exec, grid.points(), |x| error_at(kind, x))
}

pub(crate) fn signed_errors(kind: BoundKind, xs: &[f64], exec: Execution) -> Result<Vec<f64>> {
    try_map(exec, xs, |x| error_at(kind, x).map(|r| r.error))
}
