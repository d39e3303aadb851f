//! Certified numerical bounds for the Riemann zeta function on the line
//! Re(s) = 1.
//!
//! The crate provides a small self-contained interval arithmetic kernel with
//! a containment guarantee, exact Bernoulli numbers, rigorous enclosures of
//! zeta(s) by Euler-Maclaurin summation with explicit remainders, explicit
//! second-derivative exponential-sum bounds on dyadic blocks of n^{-it},
//! closed-form evaluators for the inequalities that combine them into a bound
//! of the shape |zeta(1+it)| <= c log t, a grid optimizer for the constants
//! in that bound, and a bisection verifier that certifies the inequality on
//! finite t-ranges and emits auditable certificates.
//!
//! Everything quantitative goes through [`Interval`]: an operation's result
//! interval always contains the exact mathematical result for any points of
//! the operand intervals, so a certified comparison is a proof up to the
//! correctness of the kernel.
//!
//! The crate is `no_std` (with `alloc`); all parallelism and IO live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bernoulli;
pub mod bounds;
pub mod complex;
pub mod error;
pub mod expsum;
pub mod interval;
pub mod optimizer;
pub mod verifier;
pub mod zeta;

pub use bernoulli::BernoulliTable;
pub use complex::ComplexInterval;
pub use error::{Error, Result};
pub use interval::Interval;
