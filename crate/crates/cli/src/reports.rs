//! Typed result payloads, one per subcommand. JSON output serializes these
//! directly; the CSV writer flattens the same serialized tree, so the two
//! formats carry identical numeric payloads by construction.

use serde::Serialize;
use zetabound_core::verifier::Certificate;

#[derive(Serialize)]
pub struct EvalReport {
    pub sigma: f64,
    pub t: f64,
    pub target_width: f64,
    pub re_lo: f64,
    pub re_hi: f64,
    pub im_lo: f64,
    pub im_hi: f64,
    pub abs_lo: f64,
    pub abs_hi: f64,
    pub width: f64,
    pub width_met: bool,
    pub em_n: u64,
    pub em_k: u32,
}

#[derive(Serialize)]
pub struct OptimizeReport {
    pub t0: f64,
    pub k: u32,
    pub m: u32,
    pub a1: f64,
    pub ratio_lo: f64,
    pub ratio_hi: f64,
    pub feasible_evaluated: u64,
    pub infeasible_skipped: u64,
    pub refined: bool,
}

#[derive(Serialize)]
pub struct BacklundReport {
    pub m: u32,
    pub threshold_lo: f64,
    pub threshold_hi: f64,
    /// The right side is certified negative from the threshold up to here.
    pub negative_verified_to: f64,
}

#[derive(Serialize)]
pub struct ExpsumReport {
    pub a: u64,
    pub t: f64,
    pub bound_lo: f64,
    pub bound_hi: f64,
    pub sum_abs_lo: f64,
    pub sum_abs_hi: f64,
    pub bound_dominates: bool,
}

#[derive(Serialize)]
pub struct CrossingReport {
    pub coeff: f64,
    pub search_lo: f64,
    pub search_hi: f64,
    pub crossing_lo: f64,
    pub crossing_hi: f64,
}

#[derive(Serialize)]
pub struct CheckCertReport {
    pub status: String,
    pub leaves: usize,
    pub valid: bool,
}

/// Everything a run can produce.
pub enum Report {
    Eval(EvalReport),
    Verify(Certificate),
    Optimize(OptimizeReport),
    Backlund(BacklundReport),
    Expsum(ExpsumReport),
    Crossing(CrossingReport),
    CheckCert(CheckCertReport),
}

impl Report {
    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            Report::Eval(r) => serde_json::to_value(r),
            Report::Verify(c) => serde_json::to_value(c),
            Report::Optimize(r) => serde_json::to_value(r),
            Report::Backlund(r) => serde_json::to_value(r),
            Report::Expsum(r) => serde_json::to_value(r),
            Report::Crossing(r) => serde_json::to_value(r),
            Report::CheckCert(r) => serde_json::to_value(r),
        }
        .expect("reports serialize")
    }
}
