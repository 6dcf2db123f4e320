//! Bracketed one-dimensional search: golden-section maximisation and
//! Brent–Dekker root finding.

use crate::error::{Error, Result};

/// Final state of a bracketed search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Refined {
    pub x: f64,
    pub fx: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
    pub converged: bool,
}

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Maximises `f` on `[lo, hi]` assuming a single local maximum there.
/// The best of the two interior probes and the final bracket ends is
/// returned; ties go to the smaller abscissa.
pub(crate) fn golden_max<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<Refined>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_GOLDEN * (b - a);
    let mut d = a + INV_GOLDEN * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut iterations = 0;
    while b - a > tol && iterations < max_iter {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_GOLDEN * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_GOLDEN * (b - a);
            fd = f(d)?;
        }
        iterations += 1;
    }
    let mut best = (a, f(a)?);
    for cand in [(c, fc), (d, fd), (b, f(b)?)] {
        if cand.1 > best.1 {
            best = cand;
        }
    }
    Ok(Refined {
        x: best.0,
        fx: best.1,
        lo: a,
        hi: b,
        iterations,
        converged: b - a <= tol,
    })
}

/// Brent–Dekker root finding on a sign-changing bracket. Converged when the
/// bracket around the root is no wider than `tol` (or f hits exactly 0).
pub(crate) fn brent_root<F>(
    what: &'static str,
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<Refined>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(exact_hit(a, 0));
    }
    if fb == 0.0 {
        return Ok(exact_hit(b, 0));
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange { what, lo, hi });
    }

    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    for iter in 1..=max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.25 * tol;
        let xm = 0.5 * (c - b);
        if (c - b).abs() <= tol || fb == 0.0 {
            return Ok(Refined {
                x: b,
                fx: fb,
                lo: b.min(c),
                hi: b.max(c),
                iterations: iter - 1,
                converged: true,
            });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
    }
    Ok(Refined {
        x: b,
        fx: fb,
        lo: b.min(c),
        hi: b.max(c),
        iterations: max_iter,
        converged: false,
    })
}

fn exact_hit(x: f64, iterations: usize) -> Refined {
    Refined {
        x,
        fx: 0.0,
        lo: x,
        hi: x,
        iterations,
        converged: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let r = golden_max(|x| Ok(-(x - 0.3) * (x - 0.3)), 0.0, 1.0, 1e-9, 200).unwrap();
        assert!(r.converged);
        assert!((r.x - 0.3).abs() < 1e-4);
        assert!(r.lo <= r.x && r.x <= r.hi && r.hi - r.lo <= 1e-9);
    }

    #[test]
    fn golden_handles_boundary_maximum() {
        let r = golden_max(|x| Ok(-x), 2.0, 3.0, 1e-10, 200).unwrap();
        assert_eq!(r.x, 2.0);
    }

    #[test]
    fn golden_reports_non_convergence() {
        let r = golden_max(|x| Ok(x.sin()), 0.0, 3.0, 1e-12, 5).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 5);
    }

    #[test]
    fn brent_cubic() {
        let r = brent_root("cubic", |x| Ok(x * x * x - 2.0), 0.0, 2.0, 1e-12, 100).unwrap();
        assert!(r.converged);
        assert!((r.x - 2f64.cbrt()).abs() < 1e-12);
        assert!(r.hi - r.lo <= 1e-12);
    }

    #[test]
    fn brent_rejects_same_sign() {
        let err = brent_root("sq", |x| Ok(x * x + 1.0), -1.0, 1.0, 1e-8, 100).unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }

    #[test]
    fn brent_exact_endpoint() {
        let r = brent_root("lin", |x| Ok(x - 1.0), 1.0, 3.0, 1e-8, 100).unwrap();
        assert_eq!(r.x, 1.0);
    }
}
