//! Extended-precision oracle for the integration tests.
//!
//! Everything here runs at 320 bits and shares no code path with the library:
//! erf comes from the alternating Maclaurin series
//! 2/√π · Σ (−1)ⁿ y^(2n+1) / (n!·(2n+1)), and Φ_EI is rebuilt from the exact
//! rational-in-π coefficients.

#![allow(dead_code)]

use astro_float::{BigFloat, Consts, RoundingMode};

pub const PREC: usize = 320;
const RM: RoundingMode = RoundingMode::ToEven;

pub struct Oracle {
    cc: Consts,
    pi: BigFloat,
}

impl Oracle {
    pub fn new() -> Self {
        let mut cc = Consts::new().expect("constants cache");
        let pi = cc.pi(PREC, RM);
        Self { cc, pi }
    }

    pub fn big(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, PREC)
    }

    fn int(&self, n: u32) -> BigFloat {
        BigFloat::from_u32(n, PREC)
    }

    pub fn to_f64(&self, v: &BigFloat) -> f64 {
        format!("{v}")
            .parse()
            .expect("decimal rendering of a finite BigFloat")
    }

    /// erf(y), alternating Maclaurin series. Fine for |y| up to ~8 at this
    /// precision (the largest partial term is about e^(y²)).
    pub fn erf_big(&mut self, y: &BigFloat) -> BigFloat {
        let y2 = y.mul(y, PREC, RM);
        let neg_y2 = y2.neg();
        let mut term = y.clone();
        let mut sum = y.clone();
        let floor = -(PREC as i32 + 16);
        for n in 1..100_000u32 {
            term = term.mul(&neg_y2, PREC, RM).div(&self.int(n), PREC, RM);
            let contrib = term.div(&self.int(2 * n + 1), PREC, RM);
            sum = sum.add(&contrib, PREC, RM);
            if contrib.is_zero() || contrib.exponent().unwrap() < floor {
                break;
            }
        }
        let two_over_sqrt_pi = self.int(2).div(&self.pi.sqrt(PREC, RM), PREC, RM);
        sum.mul(&two_over_sqrt_pi, PREC, RM)
    }

    pub fn erf(&mut self, y: f64) -> BigFloat {
        let y = self.big(y);
        self.erf_big(&y)
    }

    fn erf_of_x_over_sqrt2(&mut self, x: f64) -> BigFloat {
        let two = self.int(2);
        let y = self.big(x).div(&two.sqrt(PREC, RM), PREC, RM);
        self.erf_big(&y)
    }

    pub fn phi(&mut self, x: f64) -> BigFloat {
        let e = self.erf_of_x_over_sqrt2(x);
        let one = self.int(1);
        one.add(&e, PREC, RM).div(&self.int(2), PREC, RM)
    }

    pub fn q(&mut self, x: f64) -> BigFloat {
        let e = self.erf_of_x_over_sqrt2(x);
        let one = self.int(1);
        one.sub(&e, PREC, RM).div(&self.int(2), PREC, RM)
    }

    pub fn pdf(&mut self, x: f64) -> BigFloat {
        let x = self.big(x);
        let e = x
            .mul(&x, PREC, RM)
            .div(&self.int(2), PREC, RM)
            .neg()
            .exp(PREC, RM, &mut self.cc);
        let two_pi = self.pi.mul(&self.int(2), PREC, RM);
        e.div(&two_pi.sqrt(PREC, RM), PREC, RM)
    }

    /// ½(1 + √(1 − exp(−(2x²/π)·p(x)))) with
    /// p = 1 + (3 − π)/(3π)·x² + (7/90 + 40001/(30000π²) − 2/(3π))·x⁴.
    pub fn eidous(&mut self, x: f64) -> BigFloat {
        let pi = self.pi.clone();
        let three = self.int(3);
        let c2 = three
            .sub(&pi, PREC, RM)
            .div(&three.mul(&pi, PREC, RM), PREC, RM);
        let pi2 = pi.mul(&pi, PREC, RM);
        let c4 = self
            .int(7)
            .div(&self.int(90), PREC, RM)
            .add(
                &self
                    .int(40001)
                    .div(&self.int(30000).mul(&pi2, PREC, RM), PREC, RM),
                PREC,
                RM,
            )
            .sub(
                &self.int(2).div(&three.mul(&pi, PREC, RM), PREC, RM),
                PREC,
                RM,
            );
        let xb = self.big(x);
        let x2 = xb.mul(&xb, PREC, RM);
        let p = self.int(1).add(&c2.mul(&x2, PREC, RM), PREC, RM).add(
            &c4.mul(&x2.mul(&x2, PREC, RM), PREC, RM),
            PREC,
            RM,
        );
        let expo = self
            .int(2)
            .mul(&x2, PREC, RM)
            .div(&pi, PREC, RM)
            .mul(&p, PREC, RM)
            .neg();
        let radicand = self.int(1).sub(&expo.exp(PREC, RM, &mut self.cc), PREC, RM);
        self.int(1)
            .add(&radicand.sqrt(PREC, RM), PREC, RM)
            .div(&self.int(2), PREC, RM)
    }

    /// h_EI(x) = Φ_EI(x) − Φ(x) at full oracle precision.
    pub fn h(&mut self, x: f64) -> BigFloat {
        let ei = self.eidous(x);
        let phi = self.phi(x);
        ei.sub(&phi, PREC, RM)
    }

    /// Central difference (h(x+δ) − h(x−δ))/(2δ), with x±δ rounded to f64
    /// and the actual spacing used in the quotient.
    pub fn h_central_difference(&mut self, x: f64, step: f64) -> f64 {
        let (lo, hi) = (x - step, x + step);
        let num = self.h(hi).sub(&self.h(lo), PREC, RM);
        let den = self.big(hi).sub(&self.big(lo), PREC, RM);
        self.to_f64(&num.div(&den, PREC, RM))
    }
}

/// Distance between two doubles in units of the larger one's ulp.
pub fn ulps(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        return 0.0;
    }
    let ulp = scale.next_up() - scale;
    (a - b).abs() / ulp
}

/// Composite Simpson for (2/√π)∫₀^y exp(−t²) dt with a compensated sum.
pub fn erf_by_quadrature(y: f64, panels: usize) -> f64 {
    let n = panels + panels % 2;
    let h = y / n as f64;
    let f = |t: f64| (-t * t).exp();
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    let mut add = |v: f64| {
        let t = sum + v;
        comp += if sum.abs() >= v.abs() {
            (sum - t) + v
        } else {
            (v - t) + sum
        };
        sum = t;
    };
    add(f(0.0));
    add(f(y));
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        add(w * f(i as f64 * h));
    }
    (sum + comp) * h / 3.0 * std::f64::consts::FRAC_2_SQRT_PI
}
