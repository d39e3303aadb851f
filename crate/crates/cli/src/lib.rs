//! Library side of the zetabound CLI: exact decimal parsing, parallel
//! drivers, and the output formats. The binary in `main.rs` is a thin
//! argument layer over these.

pub mod decimal;
pub mod drivers;
pub mod output;
pub mod reports;
