//! Parallel execution of the range verifier. Cells are planned once,
//! processed independently (possibly out of order), and merged in ascending
//! order, so the certificate is byte-identical at every parallelism level.

use rayon::prelude::*;
use zetabound_core::verifier::{assemble_certificate, Certificate, Verifier};
use zetabound_core::zeta::ZetaEvaluator;
use zetabound_core::{BernoulliTable, Error};

pub fn verify_parallel(
    bern: &BernoulliTable,
    t_lo: f64,
    t_hi: f64,
    c: f64,
    max_depth: u32,
    parallelism: usize,
) -> Result<Certificate, Error> {
    if parallelism <= 1 {
        let ev = ZetaEvaluator::new(bern);
        return Verifier::new(&ev).verify_range(t_lo, t_hi, c, max_depth);
    }
    // Validate arguments through the sequential path's checks on a planner
    // call with the same preconditions.
    if !(t_lo >= 2.0) || !(t_lo < t_hi) || !t_hi.is_finite() || !(c > 0.0) {
        let ev = ZetaEvaluator::new(bern);
        return Verifier::new(&ev).verify_range(t_lo, t_hi, c, max_depth);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|_| Error::Resource("could not build thread pool"))?;
    let cells = Verifier::plan_cells(t_lo, t_hi);
    let outcomes: Result<Vec<_>, Error> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(a, b)| {
                let ev = ZetaEvaluator::new(bern);
                Verifier::new(&ev).verify_cell(a, b, c, max_depth)
            })
            .collect()
    });
    Ok(assemble_certificate(t_lo, t_hi, c, max_depth, outcomes?))
}
