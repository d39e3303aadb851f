//! Explicit second-derivative bound for exponential sums over dyadic blocks
//! (Cheng-Graham), its application to sum_{a<n<=2a} n^{-it}, and a direct
//! interval summation used as the validation oracle.
//!
//! The block sum is sum e^{2 pi i f(n)} with f(x) = -(2 pi)^{-1} t log x, so
//! each term is n^{-it}; |f''(x)| = t/(2 pi x^2) is bracketed on [a+1, 2a] by
//! 1/W <= |f''| <= 1/V with V = 2 pi a^2 / t and W = 8 pi a^2 / t. W > 1 is
//! exactly the applicability condition 8 pi a^2 > t.

use crate::complex::{cpow_neg, ComplexInterval};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// A dyadic block: the sum ranges over a < n <= 2a against frequency t.
#[derive(Debug, Clone, Copy)]
pub struct DyadicBlock {
    a: u64,
    t: f64,
}

impl DyadicBlock {
    /// Validates 8 pi a^2 > t with outward rounding (uncertain cases are
    /// rejected).
    pub fn new(a: u64, t: f64) -> Result<Self> {
        if a < 1 {
            return Err(Error::Domain("block start must be >= 1"));
        }
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain("frequency t must be positive and finite"));
        }
        let eight_pi_a2 = Interval::pi()
            .mul(&Interval::point(8.0))
            .mul(&Interval::point(a as f64).sqr());
        if !(eight_pi_a2.lo > t) {
            return Err(Error::Domain("block requires 8 pi a^2 > t"));
        }
        Ok(DyadicBlock { a, t })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn t(&self) -> f64 {
        self.t
    }
}

/// The Cheng-Graham bound (1/5)(a/V + 1)(8 W^{1/2} + 15).
///
/// The derivative hypotheses (1/W <= |f''| <= 1/V on [a+1, 2a], W > 1) are
/// the caller's responsibility; this evaluates the bound rigorously.
pub fn cheng_graham(a: u64, v: &Interval, w: &Interval) -> Result<Interval> {
    if !(w.lo > 1.0) {
        return Err(Error::Domain("Cheng-Graham requires W > 1"));
    }
    if !(v.lo > 0.0) || !(v.hi < w.lo) {
        return Err(Error::Domain("Cheng-Graham requires 0 < V < W"));
    }
    let a_over_v = Interval::point(a as f64).div(v)?;
    let first = a_over_v.add(&Interval::ONE);
    let second = w
        .sqrt()?
        .mul(&Interval::point(8.0))
        .add(&Interval::point(15.0));
    first
        .mul(&second)
        .div(&Interval::point(5.0))
}

/// Upper bound for |sum_{a<n<=2a} n^{-it}| via [`cheng_graham`] with
/// V = 2 pi a^2/t, W = 8 pi a^2/t.
pub fn dyadic_bound(block: &DyadicBlock) -> Result<Interval> {
    let t = Interval::point(block.t);
    let a2 = Interval::point(block.a as f64).sqr();
    let two_pi_a2 = Interval::pi().mul(&Interval::point(2.0)).mul(&a2);
    let v = two_pi_a2.div(&t)?;
    let w = two_pi_a2.mul(&Interval::point(4.0)).div(&t)?;
    cheng_graham(block.a, &v, &w)
}

/// Direct interval summation of sum_{a<n<=2a} n^{-it}; the oracle against
/// which [`dyadic_bound`] is validated. Guarded at a <= 10^6.
pub fn expsum_bruteforce(block: &DyadicBlock) -> Result<ComplexInterval> {
    if block.a > 1_000_000 {
        return Err(Error::Resource("brute-force block summation capped at a <= 10^6"));
    }
    let s = ComplexInterval::new(Interval::ZERO, Interval::point(block.t));
    let mut acc = ComplexInterval::ZERO;
    for n in (block.a + 1)..=(2 * block.a) {
        acc = acc.add(&cpow_neg(n, &s)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheng_graham_exact_dyadic_inputs() {
        let r = cheng_graham(1, &Interval::point(1.0), &Interval::point(4.0)).unwrap();
        assert!(r.contains(12.4) && r.width() < 1e-12);
        let r = cheng_graham(100, &Interval::point(50.0), &Interval::point(100.0)).unwrap();
        assert!(r.contains(57.0) && r.width() < 1e-10);
    }

    #[test]
    fn cheng_graham_structural_floor() {
        // a/V > 0 and W > 1 force the bound above (1/5) * 1 * 23 = 4.6.
        for (a, v, w) in [(1u64, 0.5, 1.5), (7, 3.0, 9.0), (1000, 1e6, 4e6)] {
            let r = cheng_graham(a, &Interval::point(v), &Interval::point(w)).unwrap();
            assert!(r.lo >= 4.6);
        }
    }

    #[test]
    fn cheng_graham_domain_errors() {
        assert!(cheng_graham(1, &Interval::point(0.5), &Interval::point(1.0)).is_err());
        assert!(cheng_graham(1, &Interval::point(4.0), &Interval::point(2.0)).is_err());
    }

    #[test]
    fn block_applicability_boundary() {
        // 8 pi 10^2 = 2513.27...
        assert!(DyadicBlock::new(10, 2513.0).is_ok());
        assert!(DyadicBlock::new(10, 2514.0).is_err());
    }

    #[test]
    fn bruteforce_single_term_has_unit_modulus() {
        let b = DyadicBlock::new(1, 10.0).unwrap();
        let s = expsum_bruteforce(&b).unwrap();
        let m = s.abs_enclosure();
        assert!(m.contains(1.0) && m.width() < 1e-12);
    }

    #[test]
    fn bruteforce_cost_guard() {
        let b = DyadicBlock { a: 2_000_000, t: 1.0 };
        assert!(matches!(expsum_bruteforce(&b), Err(Error::Resource(_))));
    }

    #[test]
    fn derivative_window_bracket() {
        // 1/W <= t/(2 pi x^2) <= 1/V on [a+1, 2a], checked at the endpoints.
        for (a, t) in [(20u64, 500.0), (100, 1000.0), (5000, 1e7)] {
            let b = DyadicBlock::new(a, t).unwrap();
            let ti = Interval::point(b.t);
            let a2 = Interval::point(a as f64).sqr();
            let two_pi = Interval::pi().mul(&Interval::point(2.0));
            let v = two_pi.mul(&a2).div(&ti).unwrap();
            let w = two_pi.mul(&a2).mul(&Interval::point(4.0)).div(&ti).unwrap();
            let fpp = |x: f64| {
                ti.div(&two_pi.mul(&Interval::point(x).sqr())).unwrap()
            };
            let at_lo = fpp((a + 1) as f64);
            let at_hi = fpp(2.0 * a as f64);
            assert!(at_lo.hi <= v.recip().unwrap().hi * (1.0 + 1e-14));
            assert!(at_hi.lo >= w.recip().unwrap().lo * (1.0 - 1e-14));
        }
    }
}
