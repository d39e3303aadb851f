//! Rectangular complex enclosures: a box `re x im` in the complex plane.
//!
//! Multiplication uses the four-products rectangle formula; the resulting
//! overestimation only ever weakens downstream claims, never unsounds them.

use crate::error::{Error, Result};
use crate::interval::Interval;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub const ZERO: ComplexInterval = ComplexInterval {
        re: Interval::ZERO,
        im: Interval::ZERO,
    };
    pub const ONE: ComplexInterval = ComplexInterval {
        re: Interval::ONE,
        im: Interval::ZERO,
    };

    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn point(re: f64, im: f64) -> Self {
        ComplexInterval::new(Interval::point(re), Interval::point(im))
    }

    pub fn from_real(re: Interval) -> Self {
        ComplexInterval::new(re, Interval::ZERO)
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexInterval::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexInterval::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn neg(&self) -> Self {
        ComplexInterval::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexInterval::new(re, im)
    }

    pub fn mul_real(&self, r: &Interval) -> Self {
        ComplexInterval::new(self.re.mul(r), self.im.mul(r))
    }

    /// Division via the conjugate; fails if |o|^2 may vanish.
    pub fn div(&self, o: &Self) -> Result<Self> {
        let den = o.re.sqr().add(&o.im.sqr());
        if den.contains_zero() {
            return Err(Error::Domain(
                "complex division by a box that may contain zero",
            ));
        }
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im)).div(&den)?;
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im)).div(&den)?;
        Ok(ComplexInterval::new(re, im))
    }

    /// Complex exponential: e^(x+iy) = e^x (cos y + i sin y).
    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        ComplexInterval::new(m.mul(&c), m.mul(&s))
    }

    /// Enclosure of |w| over the box.
    pub fn abs_enclosure(&self) -> Interval {
        let radicand = self.re.sqr().add(&self.im.sqr());
        // Outward rounding of the sum may push an exact zero a step below;
        // the true radicand is a sum of squares.
        Interval::new(radicand.lo.max(0.0), radicand.hi)
            .sqrt()
            .expect("radicand is non-negative")
    }

    pub fn width(&self) -> f64 {
        f64::max(self.re.width(), self.im.width())
    }

    pub fn hull(&self, o: &Self) -> Self {
        ComplexInterval::new(self.re.hull(&o.re), self.im.hull(&o.im))
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(ComplexInterval::new(
            self.re.intersect(&o.re)?,
            self.im.intersect(&o.im)?,
        ))
    }

    pub fn contains_box(&self, o: &Self) -> bool {
        self.re.contains_interval(&o.re) && self.im.contains_interval(&o.im)
    }
}

/// Enclosure of n^{-s} = exp(-s ln n) for a positive integer n.
pub fn cpow_neg(n: u64, s: &ComplexInterval) -> Result<ComplexInterval> {
    if n == 0 {
        return Err(Error::Domain("cpow_neg requires n >= 1"));
    }
    if n == 1 {
        return Ok(ComplexInterval::ONE);
    }
    let ln_n = Interval::point(n as f64).ln()?;
    let exponent = ComplexInterval::new(self_neg_mul(&s.re, &ln_n), self_neg_mul(&s.im, &ln_n));
    Ok(exponent.exp())
}

#[inline]
fn self_neg_mul(a: &Interval, b: &Interval) -> Interval {
    a.neg().mul(b)
}
