//! Standard normal density and a high-accuracy reference for Φ, Q, erf and erfc.
//!
//! Below the tail switch the positive-term series
//!
//! ```text
//! erf(y)   = 2/√π · exp(-y²) · Σ 2ⁿ y^(2n+1) / (2n+1)!!
//! Φ(x) - ½ = φ(x) · Σ x^(2n+1) / (2n+1)!!
//! ```
//!
//! is accumulated in double-double arithmetic. Every term is positive, so
//! nothing cancels. Above the switch the Mills ratio comes from the Laplace
//! continued fraction, evaluated bottom-up in double-double after a modified
//! Lentz pass has fixed the depth; this keeps `Q` and `erfc` relatively
//! accurate all the way down to underflow.
//!
//! Between 0 and the switch, `Q` and `erfc` are formed as ½ − (Φ − ½) and
//! 1 − erf, so there they are only absolutely accurate (to ~1e-17).
//!
//! This module must not depend on [`crate::bounds`]: it is the yardstick the
//! bounds are measured against.

mod twofold;

use std::f64::consts::SQRT_2;

use crate::error::{finite, Error, Result};
use twofold::Twofold;

/// 1/√(2π)
pub const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

const INV_SQRT_2PI: Twofold = Twofold::new(0.398_942_280_401_432_7, -2.492_327_202_277_73e-17);
const TWO_OVER_SQRT_PI: Twofold =
    Twofold::new(std::f64::consts::FRAC_2_SQRT_PI, 1.533_545_961_316_588e-17);
const INV_SQRT_PI: Twofold = Twofold::new(0.564_189_583_547_756_3, 7.667_729_806_582_94e-18);

const MAX_TERMS: u32 = 100_000;

/// Accuracy knobs for the reference oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceAccuracy {
    target_relative_error: f64,
    series_tail_switch: f64,
}

impl ReferenceAccuracy {
    /// `series_tail_switch` is measured in erf-argument units (`y = x/√2`).
    pub fn new(target_relative_error: f64, series_tail_switch: f64) -> Result<Self> {
        if !(target_relative_error > 0.0 && target_relative_error.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "target_relative_error",
                value: target_relative_error,
            });
        }
        if !(series_tail_switch > 0.0 && series_tail_switch.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "series_tail_switch",
                value: series_tail_switch,
            });
        }
        Ok(Self {
            target_relative_error,
            series_tail_switch,
        })
    }

    pub fn target_relative_error(&self) -> f64 {
        self.target_relative_error
    }

    pub fn series_tail_switch(&self) -> f64 {
        self.series_tail_switch
    }

    /// Truncation budget for the series and the continued fraction, a small
    /// fraction of the target so rounding dominates.
    fn stop_tolerance(&self) -> f64 {
        self.target_relative_error / 64.0
    }
}

impl Default for ReferenceAccuracy {
    fn default() -> Self {
        Self {
            target_relative_error: 4.0 * f64::EPSILON,
            series_tail_switch: 3.0,
        }
    }
}

/// Reference evaluator for Φ, Q, erf and erfc at a fixed accuracy setting.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Reference {
    accuracy: ReferenceAccuracy,
}

impl Reference {
    pub const fn new(accuracy: ReferenceAccuracy) -> Self {
        Self { accuracy }
    }

    pub fn accuracy(&self) -> ReferenceAccuracy {
        self.accuracy
    }

    /// Φ(x). Rounds to exactly 1.0 once Q(x) drops below half an ulp of 1.
    pub fn phi(&self, x: f64) -> Result<f64> {
        finite("phi_ref", x)?;
        let a = x.abs();
        let v = if a < self.x_switch() {
            let half = self.central_mass(a);
            HALF + if x >= 0.0 { half } else { -half }
        } else {
            let tail = self.upper_tail(a);
            if x >= 0.0 {
                ONE - tail
            } else {
                tail
            }
        };
        Ok(v.value())
    }

    /// Q(x) = 1 - Φ(x), evaluated directly in the tail. Returns 0 once the true
    /// value underflows.
    pub fn q(&self, x: f64) -> Result<f64> {
        finite("q_ref", x)?;
        let a = x.abs();
        let v = if a < self.x_switch() {
            let half = self.central_mass(a);
            HALF + if x >= 0.0 { -half } else { half }
        } else {
            let tail = self.upper_tail(a);
            if x >= 0.0 {
                tail
            } else {
                ONE - tail
            }
        };
        Ok(v.value())
    }

    pub fn erf(&self, y: f64) -> Result<f64> {
        finite("erf_ref", y)?;
        let a = y.abs();
        let v = if a < self.accuracy.series_tail_switch {
            self.erf_series(a)
        } else {
            ONE - self.erfc_tail(a)
        };
        Ok(v.value().copysign(y))
    }

    pub fn erfc(&self, y: f64) -> Result<f64> {
        finite("erfc_ref", y)?;
        let a = y.abs();
        let c = if a < self.accuracy.series_tail_switch {
            ONE - self.erf_series(a)
        } else {
            self.erfc_tail(a)
        };
        Ok(if y < 0.0 { TWO - c } else { c }.value())
    }

    fn x_switch(&self) -> f64 {
        self.accuracy.series_tail_switch * SQRT_2
    }

    fn tol(&self) -> f64 {
        self.accuracy.stop_tolerance()
    }

    /// Φ(a) - ½ for a ≥ 0.
    fn central_mass(&self, a: f64) -> Twofold {
        INV_SQRT_2PI * gauss(a, 0.5) * odd_series(a, 1.0, self.tol())
    }

    /// Q(a) for a > 0 by continued fraction.
    fn upper_tail(&self, a: f64) -> Twofold {
        let g = gauss(a, 0.5);
        if g.hi == 0.0 {
            return Twofold::ZERO;
        }
        INV_SQRT_2PI * g / tail_fraction(a, 1.0, self.tol())
    }

    fn erf_series(&self, a: f64) -> Twofold {
        TWO_OVER_SQRT_PI * gauss(a, 1.0) * odd_series(a, 2.0, self.tol())
    }

    fn erfc_tail(&self, a: f64) -> Twofold {
        let g = gauss(a, 1.0);
        if g.hi == 0.0 {
            return Twofold::ZERO;
        }
        INV_SQRT_PI * g / tail_fraction(a, 0.5, self.tol())
    }
}

/// φ(x) = exp(-x²/2)/√(2π). Underflows to 0 for |x| beyond about 38.6.
pub fn std_normal_pdf(x: f64) -> Result<f64> {
    finite("std_normal_pdf", x)?;
    Ok(pdf(x))
}

pub(crate) fn pdf(x: f64) -> f64 {
    (INV_SQRT_2PI * gauss(x, 0.5)).value()
}

/// Φ(x) at default accuracy.
pub fn phi_ref(x: f64) -> Result<f64> {
    Reference::default().phi(x)
}

/// Q(x) at default accuracy.
pub fn q_ref(x: f64) -> Result<f64> {
    Reference::default().q(x)
}

pub fn erf_ref(y: f64) -> Result<f64> {
    Reference::default().erf(y)
}

pub fn erfc_ref(y: f64) -> Result<f64> {
    Reference::default().erfc(y)
}

const HALF: Twofold = Twofold::new(0.5, 0.0);
const ONE: Twofold = Twofold::new(1.0, 0.0);
const TWO: Twofold = Twofold::new(2.0, 0.0);

/// exp(-scale·z²) for scale ∈ {½, 1}. z² is split exactly into hi + lo and
/// the lo part applied as a first-order correction, so the only error left is
/// that of `exp` itself.
fn gauss(z: f64, scale: f64) -> Twofold {
    let sq = Twofold::square(z);
    let e = (-scale * sq.hi).exp();
    if e == 0.0 {
        return Twofold::ZERO;
    }
    Twofold::from_f64(e) - Twofold::from_f64(e).mul_f64(scale * sq.lo)
}

/// Σ_{n≥0} z^(2n+1)·rⁿ / (2n+1)!! for z ≥ 0, r ∈ {1, 2}.
fn odd_series(z: f64, r: f64, tol: f64) -> Twofold {
    let step = Twofold::square(z).mul_f64(r);
    let mut term = Twofold::from_f64(z);
    let mut sum = term;
    for n in 1..MAX_TERMS {
        let denom = f64::from(2 * n + 1);
        term = (term * step).div_f64(denom);
        sum = sum + term;
        // Remaining terms shrink at least geometrically by `ratio` once it is < 1.
        let ratio = step.hi / (denom + 2.0);
        if ratio < 1.0 && term.hi * ratio / (1.0 - ratio) <= tol * sum.hi {
            break;
        }
    }
    sum
}

/// z + a/(z + 2a/(z + 3a/(z + …))) for z > 0.
///
/// With (z, a) = (x, 1) this is φ(x)/Q(x); with (y, ½) it is
/// exp(-y²)/(√π·erfc(y)). A modified Lentz pass in f64 picks the depth, then
/// the fraction is evaluated bottom-up in double-double with some margin.
fn tail_fraction(z: f64, a: f64, tol: f64) -> Twofold {
    let depth = lentz_depth(z, a, tol);
    let depth = depth + depth / 2 + 4;
    let zd = Twofold::from_f64(z);
    let mut f = zd;
    for k in (1..=depth).rev() {
        f = zd + Twofold::from_f64(a * f64::from(k)) / f;
    }
    f
}

fn lentz_depth(z: f64, a: f64, tol: f64) -> u32 {
    const TINY: f64 = 1e-300;
    let mut c = z;
    let mut d = 0.0;
    for k in 1..MAX_TERMS {
        let ak = a * f64::from(k);
        d = z + ak * d;
        if d.abs() < TINY {
            d = TINY;
        }
        d = d.recip();
        c = z + ak / c;
        if c.abs() < TINY {
            c = TINY;
        }
        if (c * d - 1.0).abs() <= tol {
            return k;
        }
    }
    MAX_TERMS
}
