//! Closed intervals of extended reals with outward rounding.
//!
//! Every operation returns an interval that contains the exact mathematical
//! result applied to any points of the operand intervals. Endpoints are
//! hardware doubles; after each arithmetic operation the endpoints are pushed
//! one ulp outward, which dominates the half-ulp error of round-to-nearest.
//! Elementary functions evaluated through libm are faithfully rounded within
//! one ulp, so their endpoints are pushed two ulps outward.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

#[inline]
fn down1(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn up1(x: f64) -> f64 {
    x.next_up()
}

#[inline]
fn down2(x: f64) -> f64 {
    x.next_down().next_down()
}

#[inline]
fn up2(x: f64) -> f64 {
    x.next_up().next_up()
}

/// Product with the convention 0 * inf = 0, which is sound for interval
/// endpoint candidates: an exact zero operand forces a zero product set.
#[inline]
fn prod(x: f64, y: f64) -> f64 {
    if x == 0.0 || y == 0.0 {
        0.0
    } else {
        x * y
    }
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };
    pub const ENTIRE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    /// A checked interval; panics on NaN or inverted endpoints.
    pub fn new(lo: f64, hi: f64) -> Interval {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN interval endpoint");
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        assert!(lo < f64::INFINITY && hi > f64::NEG_INFINITY);
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Interval {
        Interval::new(x, x)
    }

    /// Enclosure of pi.
    pub fn pi() -> Interval {
        Interval::new(
            core::f64::consts::PI.next_down(),
            core::f64::consts::PI.next_up(),
        )
    }

    /// Enclosure of ln 2.
    pub fn ln2() -> Interval {
        Interval::new(
            core::f64::consts::LN_2.next_down(),
            core::f64::consts::LN_2.next_up(),
        )
    }

    /// Tight enclosure of an exact rational, verified by exact comparison.
    pub fn from_ratio(r: &BigRational) -> Interval {
        let approx = ratio_to_f64_approx(r);
        let mut lo = approx;
        let mut hi = approx;
        while cmp_f64_ratio(lo, r) == Ordering::Greater {
            lo = lo.next_down();
        }
        while cmp_f64_ratio(hi, r) == Ordering::Less {
            hi = hi.next_up();
        }
        Interval::new(lo, hi)
    }

    // ---- queries ----

    #[inline]
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    #[inline]
    pub fn mid(&self) -> f64 {
        if self.lo == self.hi {
            self.lo
        } else {
            0.5 * self.lo + 0.5 * self.hi
        }
    }

    /// Largest absolute value of any point in the interval.
    #[inline]
    pub fn mag(&self) -> f64 {
        f64::max(self.lo.abs(), self.hi.abs())
    }

    #[inline]
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    #[inline]
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    #[inline]
    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(Interval::new(lo, hi))
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    // ---- arithmetic ----

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi, -self.lo)
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(down1(self.lo + o.lo), up1(self.hi + o.hi))
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::new(down1(self.lo - o.hi), up1(self.hi - o.lo))
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            prod(self.lo, o.lo),
            prod(self.lo, o.hi),
            prod(self.hi, o.lo),
            prod(self.hi, o.hi),
        ];
        let mut lo = c[0];
        let mut hi = c[0];
        for &v in &c[1..] {
            if v.is_nan() {
                return Interval::ENTIRE;
            }
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if c[0].is_nan() {
            return Interval::ENTIRE;
        }
        Interval::new(down1(lo), up1(hi))
    }

    pub fn div(&self, o: &Interval) -> Result<Interval> {
        if o.contains_zero() {
            return Err(Error::Domain("division by an interval containing zero"));
        }
        let q = |x: f64, y: f64| -> f64 {
            if x == 0.0 {
                0.0
            } else if y.is_infinite() {
                if x.is_infinite() {
                    f64::NAN
                } else {
                    0.0
                }
            } else {
                x / y
            }
        };
        let c = [
            q(self.lo, o.lo),
            q(self.lo, o.hi),
            q(self.hi, o.lo),
            q(self.hi, o.hi),
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in &c {
            if v.is_nan() {
                return Ok(Interval::ENTIRE);
            }
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Ok(Interval::new(down1(lo), up1(hi)))
    }

    pub fn recip(&self) -> Result<Interval> {
        Interval::ONE.div(self)
    }

    /// Tight square; handles sign-mixed intervals correctly. The lower
    /// endpoint never dips below zero.
    pub fn sqr(&self) -> Interval {
        if self.lo >= 0.0 {
            Interval::new(down1(self.lo * self.lo).max(0.0), up1(prod(self.hi, self.hi)))
        } else if self.hi <= 0.0 {
            Interval::new(down1(self.hi * self.hi).max(0.0), up1(prod(self.lo, self.lo)))
        } else {
            let m = f64::max(prod(self.lo, self.lo), prod(self.hi, self.hi));
            Interval::new(0.0, up1(m))
        }
    }

    /// Interval absolute value.
    pub fn abs_val(&self) -> Interval {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            self.neg()
        } else {
            Interval::new(0.0, self.mag())
        }
    }

    /// Integer power by repeated squaring.
    pub fn pow_int(&self, n: i32) -> Result<Interval> {
        if n == 0 {
            return Ok(Interval::ONE);
        }
        if n < 0 {
            return self.pow_int(-n)?.recip();
        }
        let mut acc: Option<Interval> = None;
        let mut base = *self;
        let mut e = n as u32;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.sqr();
        }
        Ok(acc.unwrap())
    }

    // ---- elementary functions ----

    /// Natural logarithm; requires lo > 0.
    pub fn ln(&self) -> Result<Interval> {
        if self.lo <= 0.0 {
            return Err(Error::Domain("ln requires a strictly positive interval"));
        }
        let f = |x: f64, down: bool| -> f64 {
            if x == 1.0 {
                0.0
            } else if x.is_infinite() {
                f64::INFINITY
            } else if down {
                down2(libm::log(x))
            } else {
                up2(libm::log(x))
            }
        };
        Ok(Interval::new(f(self.lo, true), f(self.hi, false)))
    }

    /// Exponential.
    pub fn exp(&self) -> Interval {
        let f = |x: f64, down: bool| -> f64 {
            if x == 0.0 {
                1.0
            } else if x == f64::NEG_INFINITY {
                0.0
            } else if x == f64::INFINITY {
                f64::INFINITY
            } else if down {
                down2(libm::exp(x)).max(0.0)
            } else {
                up2(libm::exp(x))
            }
        };
        Interval::new(f(self.lo, true), f(self.hi, false))
    }

    /// Square root; requires lo >= 0. libm's sqrt is correctly rounded, so a
    /// single outward ulp suffices.
    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::Domain("sqrt requires a non-negative interval"));
        }
        let lo = if self.lo == 0.0 {
            0.0
        } else {
            down1(libm::sqrt(self.lo)).max(0.0)
        };
        let hi = if self.hi.is_infinite() {
            f64::INFINITY
        } else {
            up1(libm::sqrt(self.hi))
        };
        Ok(Interval::new(lo, hi))
    }

    /// Simultaneous (sin, cos) enclosure.
    pub fn sin_cos(&self) -> (Interval, Interval) {
        if self.is_point() && self.lo == 0.0 {
            return (Interval::ZERO, Interval::ONE);
        }
        let two_pi_hi = up1(2.0 * core::f64::consts::PI);
        if !self.lo.is_finite() || !self.hi.is_finite() || self.width() >= two_pi_hi {
            return (
                Interval::new(-1.0, 1.0),
                Interval::new(-1.0, 1.0),
            );
        }
        let (s_lo, c_lo) = libm::sincos(self.lo);
        let (s_hi, c_hi) = libm::sincos(self.hi);
        let widen = |v: f64| Interval::new(down2(v).max(-1.0), up2(v).min(1.0));
        let mut sin = widen(s_lo).hull(&widen(s_hi));
        let mut cos = widen(c_lo).hull(&widen(c_hi));

        // cos has extrema at integer multiples of pi inside the interval.
        let d = self.div(&Interval::pi()).expect("pi interval excludes zero");
        let Some(ks) = int_range(&d) else {
            return (Interval::new(-1.0, 1.0), Interval::new(-1.0, 1.0));
        };
        for k in ks {
            if (k as i64).rem_euclid(2) == 0 {
                cos.hi = 1.0;
            } else {
                cos.lo = -1.0;
            }
        }
        // sin has extrema where x - pi/2 crosses integer multiples of pi.
        let half_pi = Interval::pi().mul(&Interval::point(0.5));
        let ds = self
            .sub(&half_pi)
            .div(&Interval::pi())
            .expect("pi interval excludes zero");
        let Some(ks) = int_range(&ds) else {
            return (Interval::new(-1.0, 1.0), cos);
        };
        for k in ks {
            if (k as i64).rem_euclid(2) == 0 {
                sin.hi = 1.0;
            } else {
                sin.lo = -1.0;
            }
        }
        (sin, cos)
    }

    pub fn cos(&self) -> Interval {
        self.sin_cos().1
    }

    pub fn sin(&self) -> Interval {
        self.sin_cos().0
    }
}

/// Integers contained in `d`. Callers pass intervals of width below
/// (2 pi)/pi + slop < 3, so more than 8 hits means something upstream went
/// sideways; returning None makes the caller fall back to [-1, 1], never
/// drop an extremum.
fn int_range(d: &Interval) -> Option<impl Iterator<Item = f64>> {
    let lo = libm::ceil(d.lo);
    let hi = libm::floor(d.hi);
    let n = if hi >= lo { (hi - lo) as u64 + 1 } else { 0 };
    if n > 8 {
        return None;
    }
    Some((0..n).map(move |i| lo + i as f64))
}

/// Exact comparison of a float against a rational.
fn cmp_f64_ratio(x: f64, r: &BigRational) -> Ordering {
    if x == f64::INFINITY {
        return Ordering::Greater;
    }
    if x == f64::NEG_INFINITY {
        return Ordering::Less;
    }
    BigRational::from_float(x)
        .expect("finite float")
        .cmp(r)
}

/// Round-trip-quality approximation of a big rational, safe for any size.
fn ratio_to_f64_approx(r: &BigRational) -> f64 {
    let n = r.numer();
    let d = r.denom();
    if n.is_zero() {
        return 0.0;
    }
    let neg = n.is_negative();
    let na = n.abs();
    let nb = na.bits() as i64;
    let db = d.bits() as i64;
    // Scale so the integer quotient carries ~64 significant bits.
    let shift = 64 - (nb - db);
    let q: BigInt = if shift >= 0 {
        (na << shift as u64) / d
    } else {
        na / (d.clone() << (-shift) as u64)
    };
    let qf = q.to_f64().unwrap_or(f64::INFINITY);
    let v = libm::scalbn(qf, (-shift).clamp(i32::MIN as i64, i32::MAX as i64) as i32);
    if neg {
        -v
    } else {
        v
    }
}
