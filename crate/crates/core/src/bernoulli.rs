//! Exact Bernoulli numbers and rigorous sup-norm bounds for the periodic
//! Bernoulli polynomials.
//!
//! Convention: B_1 = -1/2, the one under which the Euler-Maclaurin formula
//! in [`crate::zeta`] has its stated signs. Numbers are exact rationals,
//! never floats; they enter certified formulas only through
//! [`Interval::from_ratio`].

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Exact fraction in lowest terms with positive denominator.
pub type ExactRational = BigRational;

/// Table of Bernoulli numbers B_0..B_max computed once by the defining
/// recurrence sum_{i=0}^{n} C(n+1, i) B_i = 0. Immutable after construction,
/// so a shared reference is safe across threads.
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    /// Table holding B_0 ..= B_max.
    pub fn up_to(max: usize) -> Self {
        let mut values: Vec<ExactRational> = Vec::with_capacity(max + 1);
        values.push(BigRational::one());
        for n in 1..=max {
            // B_n = -1/(n+1) * sum_{i<n} C(n+1, i) B_i.
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(n+1, 0)
            for (i, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * &binom;
                }
                // C(n+1, i+1) = C(n+1, i) * (n+1-i) / (i+1)
                binom = binom * BigInt::from(n + 1 - i) / BigInt::from(i + 1);
            }
            let b_n = -acc / BigRational::from_integer(BigInt::from(n + 1));
            values.push(b_n);
        }
        BernoulliTable { values }
    }

    /// Covers every Euler-Maclaurin order the crate admits (k <= 64 needs
    /// B_{k+1}).
    pub fn standard() -> Self {
        BernoulliTable::up_to(66)
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// Exact B_j; panics if the table was built too small.
    pub fn number(&self, j: usize) -> &ExactRational {
        &self.values[j]
    }

    /// Tight interval enclosure of B_j.
    pub fn number_interval(&self, j: usize) -> Interval {
        Interval::from_ratio(&self.values[j])
    }
}

/// Rigorous upper bound on sup_{x} |B_n({x})| for n >= 2.
///
/// For even n the supremum is |B_n| exactly (the Fourier expansion gives
/// sup |B_n({x})| = 2 n! zeta(n) / (2 pi)^n = |B_n| by Euler's formula, the
/// maximum sitting at integer x). For odd n the same Fourier bound is used
/// with zeta(n) enclosed by 1 + 2^-n + 3^-n + 3^{1-n}/(n-1).
pub fn periodic_bernoulli_sup(table: &BernoulliTable, n: usize) -> Result<Interval> {
    if n < 2 {
        return Err(Error::Domain("periodic Bernoulli sup bound requires n >= 2"));
    }
    if n % 2 == 0 {
        let b = table.number_interval(n).abs_val();
        return Ok(b);
    }
    // 2 n! zeta(n) / (2 pi)^n, outward rounded.
    let mut fact = Interval::ONE;
    for i in 2..=n {
        fact = fact.mul(&Interval::point(i as f64));
    }
    let zeta_n = zeta_tail_enclosure(n)?;
    let two_pi_n = Interval::pi()
        .mul(&Interval::point(2.0))
        .pow_int(n as i32)?;
    fact.mul(&Interval::point(2.0)).mul(&zeta_n).div(&two_pi_n)
}

/// Enclosure of zeta(n) for integer n >= 2 via three explicit terms plus an
/// integral tail bound.
fn zeta_tail_enclosure(n: usize) -> Result<Interval> {
    let ni = n as i32;
    let p2 = Interval::point(2.0).pow_int(-ni)?;
    let p3 = Interval::point(3.0).pow_int(-ni)?;
    // integral_3^inf x^-n dx = 3^{1-n}/(n-1)
    let tail = p3
        .mul(&Interval::point(3.0))
        .div(&Interval::point((n - 1) as f64))?;
    let lo_part = Interval::ONE.add(&p2).add(&p3);
    let hi_part = lo_part.add(&tail);
    Ok(Interval::new(lo_part.lo, hi_part.hi))
}
