//! Exhaustive constrained search over (k, m, A1) minimizing the certified
//! supremum of the master ratio for a fixed t0. The space is tiny and every
//! evaluation is certified, so grid search beats anything cleverer.

use alloc::vec::Vec;

use crate::bernoulli::BernoulliTable;
use crate::bounds::{theorem_sup_ratio, TheoremParams};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// The grid to search. Every candidate violating the feasibility constraints
/// is skipped and counted, not an error.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    pub k_min: u32,
    pub k_max: u32,
    pub m_min: u32,
    pub m_max: u32,
    pub a1_grid: Vec<f64>,
    pub t0: f64,
}

impl SearchSpace {
    /// Integer A1 grid 1..=a1_max.
    pub fn integer_a1(k_max: u32, m_max: u32, a1_max: u32, t0: f64) -> Self {
        SearchSpace {
            k_min: 1,
            k_max,
            m_min: 1,
            m_max,
            a1_grid: (1..=a1_max).map(|a| a as f64).collect(),
            t0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OptimizeOutcome {
    pub params: TheoremParams,
    pub ratio: Interval,
    pub feasible_evaluated: u64,
    pub infeasible_skipped: u64,
}

/// Feasibility of a candidate tuple (the `TheoremParams` constraints).
pub fn feasible(k: u32, m: u32, a1: f64, t0: f64) -> bool {
    TheoremParams::new(k, m, a1, t0).is_ok()
}

/// Scan the whole grid; the winner minimizes the upper endpoint of the
/// certified sup ratio, with deterministic tie-breaks toward smaller k,
/// then m, then A1.
pub fn optimize(space: &SearchSpace, bern: &BernoulliTable) -> Result<OptimizeOutcome> {
    let cells = enumerate(space);
    let mut feasible_evaluated = 0u64;
    let mut infeasible_skipped = 0u64;
    let mut best: Option<(TheoremParams, Interval)> = None;
    for (k, m, a1) in cells {
        let Ok(params) = TheoremParams::new(k, m, a1, space.t0) else {
            infeasible_skipped += 1;
            continue;
        };
        feasible_evaluated += 1;
        let ratio = theorem_sup_ratio(&params, bern)?;
        best = Some(match best {
            None => (params, ratio),
            Some(cur) => pick_better(cur, (params, ratio)),
        });
    }
    let (params, ratio) = best.ok_or(Error::NotFound("the feasible set is empty"))?;
    Ok(OptimizeOutcome {
        params,
        ratio,
        feasible_evaluated,
        infeasible_skipped,
    })
}

/// Grid cells in deterministic (k, m, A1) order.
pub fn enumerate(space: &SearchSpace) -> Vec<(u32, u32, f64)> {
    let mut v = Vec::new();
    for k in space.k_min..=space.k_max {
        for m in space.m_min..=space.m_max {
            for &a1 in &space.a1_grid {
                v.push((k, m, a1));
            }
        }
    }
    v
}

/// Total order used for the reduction: upper endpoint first, then the
/// tie-break chain. Associative and commutative, so any parallel reduction
/// over the grid yields the same winner.
pub fn pick_better(
    a: (TheoremParams, Interval),
    b: (TheoremParams, Interval),
) -> (TheoremParams, Interval) {
    let ka = (a.1.hi, a.0.k, a.0.m, a.0.a1);
    let kb = (b.1.hi, b.0.k, b.0.m, b.0.a1);
    if kb < ka {
        b
    } else {
        a
    }
}

/// One refinement pass: re-grid A1 with the given step around the incumbent.
pub fn refine_a1(
    space: &SearchSpace,
    incumbent: &TheoremParams,
    step: f64,
    bern: &BernoulliTable,
) -> Result<OptimizeOutcome> {
    let n_side = libm::round(1.0 / step) as i32;
    let mut grid = Vec::new();
    for i in -n_side..=n_side {
        let a = incumbent.a1 + i as f64 * step;
        if a > 0.0 {
            grid.push(a);
        }
    }
    let refined = SearchSpace {
        k_min: incumbent.k,
        k_max: incumbent.k,
        m_min: incumbent.m,
        m_max: incumbent.m,
        a1_grid: grid,
        t0: space.t0,
    };
    optimize(&refined, bern)
}
