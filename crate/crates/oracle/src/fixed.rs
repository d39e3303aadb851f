use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Fractional bits of the fixed-point representation.
pub const FRAC_BITS: u64 = 192;

/// Fixed-point real number: the stored integer `m` represents `m / 2^192`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fx(BigInt);

fn shr_floor(x: &BigInt, bits: u64) -> BigInt {
    // BigInt >> is not guaranteed to round toward -inf for negatives,
    // so divide explicitly.
    let d = BigInt::one() << bits;
    x.div_floor(&d)
}

/// Truncation toward zero. Multiplication and division must use this rather
/// than floor rounding: series terms that decay to zero through negative
/// values reach exact zero instead of stalling at -1 in the last place.
fn shr_trunc(x: &BigInt, bits: u64) -> BigInt {
    x / (BigInt::one() << bits)
}

impl Fx {
    pub fn zero() -> Self {
        Fx(BigInt::zero())
    }

    pub fn one() -> Self {
        Fx(BigInt::one() << FRAC_BITS)
    }

    pub fn from_i64(v: i64) -> Self {
        Fx(BigInt::from(v) << FRAC_BITS)
    }

    pub fn from_u64(v: u64) -> Self {
        Fx(BigInt::from(v) << FRAC_BITS)
    }

    /// Exact ratio of two integers.
    pub fn from_ratio(num: i64, den: u64) -> Self {
        assert!(den != 0);
        let n = BigInt::from(num) << FRAC_BITS;
        Fx(n / BigInt::from(den))
    }

    /// Exact conversion: every finite f64 is a dyadic rational.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite());
        if v == 0.0 {
            return Fx::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if biased == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1 << 52), biased - 1075)
        };
        let shift = exp + FRAC_BITS as i64;
        let m = BigInt::from(mant);
        let m = if shift >= 0 {
            m << (shift as u64)
        } else {
            shr_floor(&m, (-shift) as u64)
        };
        Fx(m * sign)
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let neg = self.0.is_negative();
        let mag = self.0.abs();
        let bl = mag.bits();
        // Keep 56 significant bits, track the dropped exponent.
        let (top, exp) = if bl > 56 {
            (shr_floor(&mag, bl - 56), (bl - 56) as i64)
        } else {
            (mag, 0)
        };
        let t = top.to_f64().unwrap();
        let v = crate::fixed::ldexp(t, exp - FRAC_BITS as i64);
        if neg {
            -v
        } else {
            v
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fx(self.0.abs())
    }

    /// Multiply by 2^k (k may be negative).
    pub fn scale2(&self, k: i64) -> Self {
        if k >= 0 {
            Fx(&self.0 << (k as u64))
        } else {
            Fx(shr_trunc(&self.0, (-k) as u64))
        }
    }

    pub fn mul_u64(&self, v: u64) -> Self {
        Fx(&self.0 * BigInt::from(v))
    }

    pub fn div_u64(&self, v: u64) -> Self {
        assert!(v != 0);
        Fx(&self.0 / BigInt::from(v))
    }

    /// Nearest integer (ties toward +inf; irrelevant at this precision).
    pub fn round_int(&self) -> BigInt {
        let half = BigInt::one() << (FRAC_BITS - 1);
        shr_floor(&(&self.0 + half), FRAC_BITS)
    }

    pub fn floor_int(&self) -> BigInt {
        shr_floor(&self.0, FRAC_BITS)
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        Fx(v << FRAC_BITS)
    }

    /// |self| < 2^-bits, used as a series termination test.
    pub fn below_2pow(&self, bits: u64) -> bool {
        debug_assert!(bits <= FRAC_BITS);
        self.0.abs().bits() <= FRAC_BITS.saturating_sub(bits) as u64
    }

    /// Decimal expansion with `digits` fractional digits, truncated.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let neg = self.0.is_negative();
        let mag = self.0.abs();
        let pow10 = BigInt::from(10u32).pow(digits);
        let scaled = shr_floor(&(mag * pow10), FRAC_BITS);
        let s = scaled.to_string();
        let s = if s.len() <= digits as usize {
            format!("0.{:0>width$}", s, width = digits as usize)
        } else {
            let (int, frac) = s.split_at(s.len() - digits as usize);
            format!("{}.{}", int, frac)
        };
        if neg {
            format!("-{}", s)
        } else {
            s
        }
    }

    // ---- constants ----

    /// pi via Machin's formula: pi/4 = 4 atan(1/5) - atan(1/239).
    pub fn pi() -> Self {
        let a = Fx::atan_inv(5);
        let b = Fx::atan_inv(239);
        (a.mul_u64(4) - b).mul_u64(4)
    }

    /// ln 2 = 2 atanh(1/3).
    pub fn ln2() -> Self {
        Fx::atanh_inv(3).mul_u64(2)
    }

    /// atan(1/k) for integer k >= 2, by the alternating power series.
    fn atan_inv(k: u64) -> Self {
        let k2 = BigInt::from(k) * BigInt::from(k);
        let mut term = Fx::from_ratio(1, k);
        let mut sum = term.clone();
        let mut n = 1u64;
        loop {
            term = Fx(&term.0 / &k2);
            if term.is_zero() {
                break;
            }
            let piece = term.div_u64(2 * n + 1);
            if n % 2 == 1 {
                sum = sum - piece;
            } else {
                sum = sum + piece;
            }
            n += 1;
        }
        sum
    }

    /// atanh(1/k) for integer k >= 2.
    fn atanh_inv(k: u64) -> Self {
        let k2 = BigInt::from(k) * BigInt::from(k);
        let mut term = Fx::from_ratio(1, k);
        let mut sum = term.clone();
        let mut n = 1u64;
        loop {
            term = Fx(&term.0 / &k2);
            if term.is_zero() {
                break;
            }
            sum = sum + term.div_u64(2 * n + 1);
            n += 1;
        }
        sum
    }

    // ---- elementary functions ----

    pub fn exp(&self) -> Self {
        let ln2 = Fx::ln2();
        let k = (self.clone() / ln2.clone()).round_int();
        let k64 = k.to_i64().expect("exp argument out of range");
        let r = self.clone() - Fx(ln2.0 * &k) ;
        // |r| <= ln2/2; Taylor series.
        let mut term = Fx::one();
        let mut sum = Fx::one();
        let mut i = 1u64;
        loop {
            term = (term * r.clone()).div_u64(i);
            if term.is_zero() {
                break;
            }
            sum = sum + term.clone();
            i += 1;
        }
        sum.scale2(k64)
    }

    pub fn ln(&self) -> Self {
        assert!(self.0.is_positive(), "ln of non-positive value");
        // Normalize to y in [sqrt(1/2), sqrt(2)).
        let mut e: i64 = self.0.bits() as i64 - 1 - FRAC_BITS as i64;
        let mut y = self.scale2(-e);
        let lo = Fx::from_f64(0.7071067811865476);
        let hi = Fx::from_f64(1.4142135623730951);
        while y < lo {
            y = y.scale2(1);
            e -= 1;
        }
        while y >= hi {
            y = y.scale2(-1);
            e += 1;
        }
        // ln y = 2 atanh((y-1)/(y+1)), |z| <= 0.1716.
        let z = (y.clone() - Fx::one()) / (y + Fx::one());
        let z2 = z.clone() * z.clone();
        let mut term = z.clone();
        let mut sum = z;
        let mut n = 1u64;
        loop {
            term = term * z2.clone();
            if term.is_zero() {
                break;
            }
            sum = sum + term.div_u64(2 * n + 1);
            n += 1;
        }
        sum.scale2(1) + Fx(Fx::ln2().0 * BigInt::from(e))
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.0.is_negative(), "sqrt of negative value");
        if self.is_zero() {
            return Fx::zero();
        }
        // Newton iterations from an f64 seed; precision doubles each step.
        let seed = self.to_f64().sqrt();
        let mut y = Fx::from_f64(if seed > 0.0 { seed } else { f64::MIN_POSITIVE });
        for _ in 0..6 {
            y = (y.clone() + self.clone() / y).scale2(-1);
        }
        y
    }

    /// (sin x, cos x) with argument reduction modulo pi/2.
    pub fn sincos(&self) -> (Self, Self) {
        let half_pi = Fx::pi().scale2(-1);
        let q = (self.clone() / half_pi.clone() + Fx::from_ratio(1, 2)).floor_int();
        let r = self.clone() - Fx(half_pi.0 * &q);
        let (s, c) = Fx::sincos_small(&r);
        let qm = q.mod_floor(&BigInt::from(4u32)).to_u8().unwrap();
        match qm {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn sincos_small(r: &Fx) -> (Fx, Fx) {
        // |r| <= pi/4 + epsilon. Joint Taylor expansion.
        let r2 = r.clone() * r.clone();
        let mut term = r.clone();
        let mut sin = r.clone();
        let mut n = 1u64;
        loop {
            term = (term * r2.clone()).div_u64((2 * n) * (2 * n + 1));
            if term.is_zero() {
                break;
            }
            if n % 2 == 1 {
                sin = sin - term.clone();
            } else {
                sin = sin + term.clone();
            }
            n += 1;
        }
        let mut term = Fx::one();
        let mut cos = Fx::one();
        let mut n = 1u64;
        loop {
            term = (term * r2.clone()).div_u64((2 * n - 1) * (2 * n));
            if term.is_zero() {
                break;
            }
            if n % 2 == 1 {
                cos = cos - term.clone();
            } else {
                cos = cos + term.clone();
            }
            n += 1;
        }
        (sin, cos)
    }
}

pub(crate) fn ldexp(x: f64, e: i64) -> f64 {
    let e = e.clamp(-2100, 2100) as i32;
    // Split the scaling to stay clear of overflow in intermediate steps.
    let (a, b) = (e / 2, e - e / 2);
    x * f64::powi(2.0, a) * f64::powi(2.0, b)
}

impl Add for Fx {
    type Output = Fx;
    fn add(self, rhs: Fx) -> Fx {
        Fx(self.0 + rhs.0)
    }
}

impl Sub for Fx {
    type Output = Fx;
    fn sub(self, rhs: Fx) -> Fx {
        Fx(self.0 - rhs.0)
    }
}

impl Neg for Fx {
    type Output = Fx;
    fn neg(self) -> Fx {
        Fx(-self.0)
    }
}

impl Mul for Fx {
    type Output = Fx;
    fn mul(self, rhs: Fx) -> Fx {
        Fx(shr_trunc(&(self.0 * rhs.0), FRAC_BITS))
    }
}

impl Div for Fx {
    type Output = Fx;
    fn div(self, rhs: Fx) -> Fx {
        assert!(!rhs.0.is_zero(), "division by zero");
        Fx((self.0 << FRAC_BITS) / &rhs.0)
    }
}

impl fmt::Debug for Fx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fx({})", self.to_decimal_string(30))
    }
}

impl fmt::Display for Fx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(50))
    }
}

#[allow(unused)]
fn cmp_fx(a: &Fx, b: &Fx) -> Ordering {
    a.0.cmp(&b.0)
}
