//! Reference arithmetic for the test suites.
//!
//! Everything in this crate is deliberately independent of `zetabound-core`:
//! it is the yardstick the interval kernel is measured against, so it shares
//! no code with it. Values are big-integer fixed-point numbers with a 192-bit
//! fractional part (roughly 57 decimal digits), enough to quote 50-digit
//! reference values with room for series truncation.
//!
//! This is *not* rigorous interval arithmetic. Each primitive is accurate to
//! a few units in the last (192nd) binary place; consumers that need an error
//! budget (the zeta reference generator) account for truncation separately.

mod complex;
mod fixed;
mod zeta;

pub use complex::Cx;
pub use fixed::Fx;
pub use zeta::{zeta_em, ZetaRef};
