use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::Fx;

/// Fixed-point complex number.
#[derive(Clone, Debug)]
pub struct Cx {
    pub re: Fx,
    pub im: Fx,
}

impl Cx {
    pub fn new(re: Fx, im: Fx) -> Self {
        Cx { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Cx::new(Fx::from_f64(re), Fx::from_f64(im))
    }

    pub fn zero() -> Self {
        Cx::new(Fx::zero(), Fx::zero())
    }

    pub fn one() -> Self {
        Cx::new(Fx::one(), Fx::zero())
    }

    pub fn scale(&self, f: &Fx) -> Self {
        Cx::new(self.re.clone() * f.clone(), self.im.clone() * f.clone())
    }

    pub fn abs(&self) -> Fx {
        (self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()).sqrt()
    }

    /// e^self = e^re (cos im + i sin im).
    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sincos();
        Cx::new(m.clone() * c, m * s)
    }

    /// n^{-self} = exp(-self ln n).
    pub fn pow_neg_of(&self, n: u64) -> Self {
        let ln_n = Fx::from_u64(n).ln();
        Cx::new(-(self.re.clone() * ln_n.clone()), -(self.im.clone() * ln_n)).exp()
    }
}

impl Add for Cx {
    type Output = Cx;
    fn add(self, rhs: Cx) -> Cx {
        Cx::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Cx {
    type Output = Cx;
    fn sub(self, rhs: Cx) -> Cx {
        Cx::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx::new(-self.re, -self.im)
    }
}

impl Mul for Cx {
    type Output = Cx;
    fn mul(self, rhs: Cx) -> Cx {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Cx::new(re, im)
    }
}

impl Div for Cx {
    type Output = Cx;
    fn div(self, rhs: Cx) -> Cx {
        let den = rhs.re.clone() * rhs.re.clone() + rhs.im.clone() * rhs.im.clone();
        let re = (self.re.clone() * rhs.re.clone() + self.im.clone() * rhs.im.clone())
            / den.clone();
        let im = (self.im * rhs.re - self.re * rhs.im) / den;
        Cx::new(re, im)
    }
}
