use std::f64::consts::PI;

use super::grid::{Grid, GridSummary};
use super::search::brent_root;
use super::{signed_errors, X_MAX};
use crate::bounds::{eval_bound, BoundKind};
use crate::error::{Error, Result};
use crate::exec::{try_map, Execution};

/// Outcome of checking Φ_U(x) ≥ Φ(x) − slack over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport {
    pub kind: BoundKind,
    pub grid: GridSummary,
    /// `worst_violation >= -slack`
    pub passed: bool,
    /// Most negative h over the grid, or 0 when h never goes negative.
    pub worst_violation: f64,
    /// Abscissa of the smallest h (first one on ties).
    pub worst_location: f64,
    pub slack: f64,
    /// Grid points outside the bound's validity interval.
    pub out_of_validity_points: usize,
}

pub fn verify_upper_bound(kind: BoundKind, grid: &Grid, slack: f64) -> Result<VerificationReport> {
    verify_upper_bound_with(kind, grid, slack, Execution::default())
}

pub fn verify_upper_bound_with(
    kind: BoundKind,
    grid: &Grid,
    slack: f64,
    exec: Execution,
) -> Result<VerificationReport> {
    if !(slack >= 0.0 && slack.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "slack",
            value: slack,
        });
    }
    let xs = grid.points();
    let errs = signed_errors(kind, xs, exec)?;
    let mut worst = 0;
    for (i, e) in errs.iter().enumerate() {
        if *e < errs[worst] {
            worst = i;
        }
    }
    let worst_violation = errs[worst].min(0.0);
    let validity = kind.validity_interval();
    Ok(VerificationReport {
        kind,
        grid: grid.summary(),
        passed: worst_violation >= -slack,
        worst_violation,
        worst_location: xs[worst],
        slack,
        out_of_validity_points: xs.iter().filter(|x| !validity.contains(**x)).count(),
    })
}

/// The crossover as printed alongside its closed form.
pub const PRINTED_CROSSOVER: f64 = 4.74915;

/// √((π − 3)/(7π/30 + 40001/(10000π) − 2)): the abscissa where c2 + c4·x² = 0,
/// below which Φ_EI ≤ Φ_PO.
pub fn crossover_point() -> f64 {
    ((PI - 3.0) / (7.0 * PI / 30.0 + 40001.0 / (10000.0 * PI) - 2.0)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossoverReport {
    pub exact: f64,
    pub printed: f64,
    /// Where Φ_EI − Φ_PO first turns positive, located numerically.
    pub numeric_flip: Option<f64>,
    /// max(Φ_EI − Φ_PO) on [0, exact]
    pub max_gap_below: f64,
    /// min(Φ_EI − Φ_PO) on [exact, X_MAX]
    pub min_gap_above: f64,
    /// max(Φ_EI − Φ_PO) on [0, printed]
    pub max_gap_below_printed: f64,
    pub slack: f64,
}

impl CrossoverReport {
    pub fn below_ok(&self) -> bool {
        self.max_gap_below <= self.slack
    }

    pub fn above_ok(&self) -> bool {
        self.min_gap_above >= -self.slack
    }

    /// Whether the printed value would also satisfy the "below" half.
    pub fn printed_consistent(&self) -> bool {
        self.max_gap_below_printed <= self.slack
    }

    pub fn sign_flip_ok(&self) -> bool {
        self.below_ok() && self.above_ok()
    }
}

fn gap(x: f64) -> Result<f64> {
    Ok(eval_bound(BoundKind::Eidous, x)? - eval_bound(BoundKind::Polya, x)?)
}

fn gaps(lo: f64, hi: f64, points: usize) -> Result<(Grid, Vec<f64>)> {
    let g = Grid::linear(lo, hi, points)?;
    let v = try_map(Execution::default(), g.points(), gap)?;
    Ok((g, v))
}

/// Checks the sign of Φ_EI − Φ_PO on `points`-point grids on either side of
/// the closed-form crossover and locates the numerical sign flip.
pub fn verify_crossover(points: usize, slack: f64) -> Result<CrossoverReport> {
    let exact = crossover_point();
    let fold_max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let (_, below) = gaps(0.0, exact, points)?;
    let (_, above) = gaps(exact, X_MAX, points)?;
    let (_, below_printed) = gaps(0.0, PRINTED_CROSSOVER, points)?;

    // First strictly positive gap on a fine grid around the crossover, then
    // Brent on the cell that contains the sign change.
    let (g, v) = gaps(0.0, 2.0 * exact, points)?;
    let numeric_flip = match v.iter().position(|d| *d > 0.0) {
        Some(i) if i > 0 => {
            let r = brent_root(
                "eidous-polya gap",
                gap,
                g.points()[i - 1],
                g.points()[i],
                1e-12,
                200,
            )?;
            Some(r.x)
        }
        _ => None,
    };

    Ok(CrossoverReport {
        exact,
        printed: PRINTED_CROSSOVER,
        numeric_flip,
        max_gap_below: fold_max(&below),
        min_gap_above: above.iter().copied().fold(f64::INFINITY, f64::min),
        max_gap_below_printed: fold_max(&below_printed),
        slack,
    })
}
