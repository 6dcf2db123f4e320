//! Double-double arithmetic: an unevaluated sum `hi + lo` with |lo| ≤ ½ulp(hi),
//! giving about 106 significant bits from error-free transformations.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Twofold {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Twofold {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub fn from_f64(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }

    fn normalized(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    /// Exact square of a double.
    pub fn square(z: f64) -> Self {
        let (hi, lo) = two_prod(z, z);
        Self { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        Self::normalized(p, e + self.lo * b)
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - Self::from_f64(b).mul_f64(q1);
        let q2 = r.hi / b;
        let r = r - Self::from_f64(b).mul_f64(q2);
        let q3 = r.hi / b;
        Self::normalized(q1, q2) + Self::from_f64(q3)
    }

    /// Rounded to the nearest double.
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }
}

impl Add for Twofold {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::normalized(s, e + f)
    }
}

impl Neg for Twofold {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Twofold {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for Twofold {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        Self::normalized(p, e + (self.hi * o.lo + self.lo * o.hi))
    }
}

impl Div for Twofold {
    type Output = Self;

    fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self - o.mul_f64(q1);
        let q2 = r.hi / o.hi;
        let r = r - o.mul_f64(q2);
        let q3 = r.hi / o.hi;
        Self::normalized(q1, q2) + Self::from_f64(q3)
    }
}
