//! Closed-form upper bounds for Φ(x), x ≥ 0, and the Q / erf wrappers built
//! on them.
//!
//! The three radical-form members (Polya, Eidous, EidousStar) are all
//!
//! ```text
//! ½ · (1 + √(1 − exp(−(2x²/π)·p(x))))
//! ```
//!
//! with p ≡ 1 for Polya. Printed without the leading `1 +` the expression is 0
//! at the origin and tends to ½, which is not a CDF bound at all; with it, the
//! values reproduce the published error table. The radicand is evaluated as
//! `-expm1(E)` because `1 - exp(E)` loses enough digits near the origin to
//! dip below Φ by ~7e-14.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::error::{finite, Error, Result};
use crate::reference::{pdf, FRAC_1_SQRT_2PI};

/// Bercu's bound is stated for 0 ≤ x/√2 ≤ 4.418.
pub const BERCU_Y_LIMIT: f64 = 4.418;

/// Upper end of Bercu's validity interval in x units (≈ 6.248).
pub fn bercu_x_limit() -> f64 {
    BERCU_Y_LIMIT * SQRT_2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Polya,
    Kouba,
    Alzer,
    Abreu,
    Neumann,
    Yang,
    Bercu,
    Eidous,
    EidousStar,
}

impl BoundKind {
    pub const ALL: [BoundKind; 9] = [
        BoundKind::Polya,
        BoundKind::Kouba,
        BoundKind::Alzer,
        BoundKind::Abreu,
        BoundKind::Neumann,
        BoundKind::Yang,
        BoundKind::Bercu,
        BoundKind::Eidous,
        BoundKind::EidousStar,
    ];

    /// Column order of the published comparison table.
    pub const TABLE_COLUMNS: [BoundKind; 8] = [
        BoundKind::Kouba,
        BoundKind::Alzer,
        BoundKind::Abreu,
        BoundKind::Neumann,
        BoundKind::Yang,
        BoundKind::Bercu,
        BoundKind::Polya,
        BoundKind::Eidous,
    ];

    /// Lowercase identifier used on the command line and in output files.
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Polya => "polya",
            BoundKind::Kouba => "kouba",
            BoundKind::Alzer => "alzer",
            BoundKind::Abreu => "abreu",
            BoundKind::Neumann => "neumann",
            BoundKind::Yang => "yang",
            BoundKind::Bercu => "bercu",
            BoundKind::Eidous => "eidous",
            BoundKind::EidousStar => "eidous_star",
        }
    }

    /// Two-letter subscript used in table headers (`h_KO`, `h_EI`, ...).
    pub fn label(self) -> &'static str {
        match self {
            BoundKind::Polya => "PO",
            BoundKind::Kouba => "KO",
            BoundKind::Alzer => "AL",
            BoundKind::Abreu => "AB",
            BoundKind::Neumann => "NE",
            BoundKind::Yang => "YA",
            BoundKind::Bercu => "BE",
            BoundKind::Eidous => "EI",
            BoundKind::EidousStar => "EI*",
        }
    }

    /// False only for the refitted approximation, which crosses Φ.
    pub fn guaranteed_upper_bound(self) -> bool {
        !matches!(self, BoundKind::EidousStar)
    }

    pub fn validity_interval(self) -> ValidityInterval {
        match self {
            BoundKind::Bercu => ValidityInterval {
                lower: 0.0,
                upper: bercu_x_limit(),
            },
            _ => ValidityInterval {
                lower: 0.0,
                upper: f64::INFINITY,
            },
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownBound(s.to_owned()))
    }
}

/// Closed x-range on which a bound's inequality is claimed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityInterval {
    pub lower: f64,
    pub upper: f64,
}

impl ValidityInterval {
    pub fn contains(&self, x: f64) -> bool {
        x >= self.lower && x <= self.upper
    }
}

/// Coefficients of p(x) = 1 + c2·x² + c4·x⁴ in the Eidous exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EidousCoefficients {
    pub c2: f64,
    pub c4: f64,
}

impl EidousCoefficients {
    /// c2 = (3 − π)/(3π), c4 = 7/90 + 40001/(30000π²) − 2/(3π), at full precision.
    pub fn exact() -> Self {
        Self {
            c2: (3.0 - PI) / (3.0 * PI),
            c4: 7.0 / 90.0 + 40001.0 / (30000.0 * PI * PI) - 2.0 / (3.0 * PI),
        }
    }

    /// The six-decimal roundings −0.015023 and 0.000666.
    pub const ROUNDED: Self = Self {
        c2: -0.015023,
        c4: 0.000666,
    };

    /// Refitted coefficients of the approximation Φ*_EI.
    pub const STAR: Self = Self {
        c2: -0.01506,
        c4: 0.00063,
    };

    pub fn eval(&self, x: f64) -> f64 {
        let x2 = x * x;
        1.0 + x2 * (self.c2 + self.c4 * x2)
    }

    /// p′(x) = 2·c2·x + 4·c4·x³
    pub fn derivative(&self, x: f64) -> f64 {
        let x2 = x * x;
        x * (2.0 * self.c2 + 4.0 * self.c4 * x2)
    }
}

/// A bound value together with whether x fell outside the bound's validity
/// interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub out_of_validity: bool,
}

/// p(x) = 1 + c2·x² + c4·x⁴ with the exact Eidous coefficients.
pub fn exponent_polynomial(x: f64) -> Result<f64> {
    finite("exponent_polynomial", x)?;
    Ok(EidousCoefficients::exact().eval(x))
}

/// Φ_U(x) for x ≥ 0. Values outside the validity interval are still returned;
/// use [`eval_bound_flagged`] to see the flag.
pub fn eval_bound(kind: BoundKind, x: f64) -> Result<f64> {
    check_argument(x)?;
    Ok(formula(kind, x))
}

pub fn eval_bound_flagged(kind: BoundKind, x: f64) -> Result<BoundValue> {
    check_argument(x)?;
    Ok(BoundValue {
        value: formula(kind, x),
        out_of_validity: !kind.validity_interval().contains(x),
    })
}

/// 1 − Φ_U(x); a lower bound on Q(x) when `kind` is a guaranteed upper bound.
pub fn q_bound_lower(kind: BoundKind, x: f64) -> Result<f64> {
    Ok(1.0 - eval_bound(kind, x)?)
}

/// 2·Φ_U(√2·y) − 1; an upper bound on erf(y) when `kind` is a guaranteed upper
/// bound.
pub fn erf_bound_upper(kind: BoundKind, y: f64) -> Result<f64> {
    check_argument(y)?;
    Ok(2.0 * eval_bound(kind, SQRT_2 * y)? - 1.0)
}

fn check_argument(x: f64) -> Result<f64> {
    finite("eval_bound", x)?;
    if x < 0.0 {
        return Err(Error::Domain {
            what: "eval_bound (x must be >= 0)",
            value: x,
        });
    }
    Ok(x)
}

/// −(2x²/π)·p(x), the exponent of the radical-form bounds.
pub(crate) fn radical_exponent(x: f64, p: f64) -> f64 {
    -(2.0 / PI) * x * x * p
}

pub(crate) fn radical_form(x: f64, p: f64) -> f64 {
    0.5 * (1.0 + (-radical_exponent(x, p).exp_m1()).sqrt())
}

fn formula(kind: BoundKind, x: f64) -> f64 {
    match kind {
        BoundKind::Polya => radical_form(x, 1.0),
        BoundKind::Eidous => radical_form(x, EidousCoefficients::exact().eval(x)),
        BoundKind::EidousStar => radical_form(x, EidousCoefficients::STAR.eval(x)),
        BoundKind::Kouba => {
            let half = 0.5 * x;
            let t = (1.0 + half * half).sqrt() + half;
            1.0 - pdf(x) / t
        }
        BoundKind::Alzer => 0.5 + 1.0407 * ((2.0 / PI).sqrt() * x).tanh() / 2.0,
        BoundKind::Abreu => 1.0 - (-x * x).exp() / 12.0 - pdf(x) / (1.0 + x),
        BoundKind::Neumann => 0.5 + (x / 3.0) * (2.0 + (-x * x / 2.0).exp()) * FRAC_1_SQRT_2PI,
        BoundKind::Yang => {
            0.5 + (x / 9.0) * (4.0 + 5.0 * (-3.0 * x * x / 10.0).exp()) * FRAC_1_SQRT_2PI
        }
        BoundKind::Bercu => {
            let y = x * FRAC_1_SQRT_2;
            let y2 = y * y;
            // Horner form of 29y⁸ − 660y⁶ + 1260y⁴ + 37800y² + 113400
            let den = (((29.0 * y2 - 660.0) * y2 + 1260.0) * y2 + 37800.0) * y2 + 113400.0;
            0.5 + (1.0 / PI.sqrt()) * 113400.0 * y / den
        }
    }
}
