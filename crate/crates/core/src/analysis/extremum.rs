use std::f64::consts::PI;

use super::grid::Grid;
use super::search::{brent_root, golden_max, Refined};
use super::{error_at, signed_errors, X_MAX};
use crate::bounds::{BoundKind, EidousCoefficients};
use crate::error::{finite, Error, Result};
use crate::exec::Execution;
use crate::reference::pdf;

/// Two coarse-scan values closer than this count as a tie.
const TIE: f64 = 1e-18;

/// Location of an extremum of h (or a root of h′) and how it was found.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumReport {
    pub kind: BoundKind,
    pub location: f64,
    /// Signed error h(location), re-evaluated at report time.
    pub value: f64,
    pub bracket: (f64, f64),
    pub x_tolerance: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Points in the coarse scan that picks the bracket to refine.
    pub scan_points: usize,
    pub max_iterations: usize,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            scan_points: 4097,
            max_iterations: 200,
            execution: Execution::default(),
        }
    }
}

/// Global maximiser of |h_U| on `interval`: coarse scan, then golden-section
/// refinement of the best coarse cell and its neighbour.
pub fn max_abs_error(
    kind: BoundKind,
    interval: (f64, f64),
    x_tolerance: f64,
) -> Result<ExtremumReport> {
    max_abs_error_with(kind, interval, x_tolerance, &SearchOptions::default())
}

pub fn max_abs_error_with(
    kind: BoundKind,
    interval: (f64, f64),
    x_tolerance: f64,
    opts: &SearchOptions,
) -> Result<ExtremumReport> {
    let (lo, hi) = interval;
    if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || hi <= lo {
        return Err(Error::InvalidInterval {
            lo,
            hi,
            reason: "need finite 0 <= lo < hi",
        });
    }
    if !(x_tolerance > 0.0 && x_tolerance.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "x_tolerance",
            value: x_tolerance,
        });
    }

    let grid = Grid::linear(lo, hi, opts.scan_points)?;
    let xs = grid.points();
    let errs = signed_errors(kind, xs, opts.execution)?;
    let mut best = 0;
    for (i, e) in errs.iter().enumerate().skip(1) {
        if e.abs() > errs[best].abs() + TIE {
            best = i;
        }
    }
    let a = xs[best.saturating_sub(1)];
    let b = xs[(best + 1).min(xs.len() - 1)];

    let refined = golden_max(
        |x| error_at(kind, x).map(|r| r.error.abs()),
        a,
        b,
        x_tolerance,
        opts.max_iterations,
    )?;
    report(kind, refined, x_tolerance)
}

fn report(kind: BoundKind, r: Refined, x_tolerance: f64) -> Result<ExtremumReport> {
    Ok(ExtremumReport {
        kind,
        location: r.x,
        value: error_at(kind, r.x)?.error,
        bracket: (r.lo, r.hi),
        x_tolerance,
        iterations: r.iterations,
        converged: r.converged,
    })
}

/// h_EI(x) = Φ_EI(x) − Φ(x).
pub fn h_eidous(x: f64) -> Result<f64> {
    Ok(error_at(BoundKind::Eidous, x)?.error)
}

/// Analytic derivative of h_EI.
///
/// With E(x) = −(2x²/π)·p(x):
///
/// ```text
/// h′(x) = exp(E)·(−E′) / (4·√(1 − exp(E))) − φ(x),   E′ = −(2/π)(2x·p + x²·p′)
/// ```
///
/// Both terms tend to 1/√(2π) as x → 0, so h′(0) = 0.
pub fn h_prime(x: f64) -> Result<f64> {
    finite("h_prime", x)?;
    if x < 0.0 {
        return Err(Error::Domain {
            what: "h_prime (x must be >= 0)",
            value: x,
        });
    }
    let c = EidousCoefficients::exact();
    let p = c.eval(x);
    let e = -(2.0 / PI) * x * x * p;
    let radicand = -e.exp_m1();
    if radicand == 0.0 {
        return Ok(0.0);
    }
    let neg_de = (2.0 / PI) * (2.0 * x * p + x * x * c.derivative(x));
    Ok(e.exp() * neg_de / (4.0 * radicand.sqrt()) - pdf(x))
}

/// Root of h′ inside `bracket`; `value` carries h at the root.
pub fn h_prime_root(bracket: (f64, f64), x_tolerance: f64) -> Result<ExtremumReport> {
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || hi <= lo {
        return Err(Error::InvalidInterval {
            lo,
            hi,
            reason: "need finite 0 <= lo < hi",
        });
    }
    if !(x_tolerance > 0.0 && x_tolerance.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "x_tolerance",
            value: x_tolerance,
        });
    }
    let r = brent_root("h_prime", h_prime, lo, hi, x_tolerance, 200)?;
    report(BoundKind::Eidous, r, x_tolerance)
}

/// max|h_EI| / max|h_EI*| over [0, X_MAX].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioReport {
    pub ratio: f64,
    pub eidous: ExtremumReport,
    pub eidous_star: ExtremumReport,
}

pub fn error_ratio_ei_vs_star() -> Result<RatioReport> {
    error_ratio_with(1e-8, &SearchOptions::default())
}

pub fn error_ratio_with(x_tolerance: f64, opts: &SearchOptions) -> Result<RatioReport> {
    let eidous = max_abs_error_with(BoundKind::Eidous, (0.0, X_MAX), x_tolerance, opts)?;
    let eidous_star = max_abs_error_with(BoundKind::EidousStar, (0.0, X_MAX), x_tolerance, opts)?;
    Ok(RatioReport {
        ratio: eidous.value.abs() / eidous_star.value.abs(),
        eidous,
        eidous_star,
    })
}
