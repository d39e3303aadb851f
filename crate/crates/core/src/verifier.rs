//! Certified verification of |zeta(1+it)| <= c log t over finite t-ranges by
//! adaptive interval bisection, and localization of the crossing points where
//! the inequality starts to hold.
//!
//! Each leaf [a, b] is decided by comparing an enclosure of |zeta(1+it)| over
//! the whole leaf against c log a (log is increasing, so that is the sound
//! side for certification) or against c log b (for falsification). Leaves
//! that cannot be decided are split at the representable midpoint up to
//! `max_depth`.

use alloc::vec::Vec;

use crate::complex::ComplexInterval;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::zeta::{EMConfig, ZetaEvaluator};

/// Width below which a violating leaf counts as a falsification witness.
pub const FALSIFICATION_WIDTH: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum LeafVerdict {
    Certified,
    Falsified,
    Inconclusive,
}

/// One decided subinterval with the numbers that decided it.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Leaf {
    pub t_lo: f64,
    pub t_hi: f64,
    pub zeta_abs_lo: f64,
    pub zeta_abs_hi: f64,
    pub rhs_lo: f64,
    pub rhs_hi: f64,
    pub verdict: LeafVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum CertStatus {
    Certified,
    Falsified,
    Inconclusive,
}

/// Deterministic operation counters (no timing: certificates are
/// byte-reproducible).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WallStats {
    pub cells: u64,
    pub zeta_evals: u64,
    pub splits: u64,
    pub deepest: u32,
}

impl WallStats {
    pub fn absorb(&mut self, o: &WallStats) {
        self.cells += o.cells;
        self.zeta_evals += o.zeta_evals;
        self.splits += o.splits;
        self.deepest = self.deepest.max(o.deepest);
    }
}

/// Auditable record of a verification run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub t_lo: f64,
    pub t_hi: f64,
    pub c: f64,
    pub status: CertStatus,
    pub max_depth: u32,
    pub wall_stats: WallStats,
    pub leaves: Vec<Leaf>,
}

/// Result of processing one top-level cell.
#[derive(Debug, Clone)]
pub struct CellOutcome {
    pub leaves: Vec<Leaf>,
    pub stats: WallStats,
}

pub struct Verifier<'a> {
    zeta: &'a ZetaEvaluator<'a>,
}

impl<'a> Verifier<'a> {
    pub fn new(zeta: &'a ZetaEvaluator<'a>) -> Self {
        Verifier { zeta }
    }

    /// Initial partition: cells of width min(0.25, range/64) tiling
    /// [t_lo, t_hi] with machine-exactly shared endpoints.
    pub fn plan_cells(t_lo: f64, t_hi: f64) -> Vec<(f64, f64)> {
        let range = t_hi - t_lo;
        let h = 0.25f64.min(range / 64.0);
        let n = libm::ceil(range / h).max(1.0) as u64;
        let mut edges = Vec::with_capacity(n as usize + 1);
        for i in 0..=n {
            let frac = i as f64 / n as f64;
            edges.push(t_lo + range * frac);
        }
        *edges.first_mut().unwrap() = t_lo;
        *edges.last_mut().unwrap() = t_hi;
        let mut cells = Vec::with_capacity(n as usize);
        for w in edges.windows(2) {
            if w[1] > w[0] {
                cells.push((w[0], w[1]));
            }
        }
        cells
    }

    /// Fixed leaf evaluation: enclosure of |zeta(1+it)| for t in [a, b].
    /// Depends only on the leaf, never on the coefficient, which keeps
    /// certificates monotone under strengthening of c.
    fn leaf_abs(&self, a: f64, b: f64) -> Result<Interval> {
        let n = ((b / 3.0) as u64 + 1).max(16);
        let k = 6u32;
        let s = ComplexInterval::new(Interval::ONE, Interval::new(a, b));
        let z = self.zeta.zeta_fixed(&s, EMConfig::new(n, k)?)?;
        Ok(z.abs_enclosure())
    }

    /// Process one cell recursively.
    pub fn verify_cell(&self, a: f64, b: f64, c: f64, max_depth: u32) -> Result<CellOutcome> {
        let mut out = CellOutcome {
            leaves: Vec::new(),
            stats: WallStats {
                cells: 1,
                ..WallStats::default()
            },
        };
        self.recurse(a, b, c, 0, max_depth, &mut out)?;
        Ok(out)
    }

    fn recurse(
        &self,
        a: f64,
        b: f64,
        c: f64,
        depth: u32,
        max_depth: u32,
        out: &mut CellOutcome,
    ) -> Result<()> {
        out.stats.deepest = out.stats.deepest.max(depth);
        let c_iv = Interval::point(c);
        let rhs_lo = c_iv.mul(&Interval::point(a).ln()?);
        let rhs_hi = c_iv.mul(&Interval::point(b).ln()?);
        let za = self.leaf_abs(a, b)?;
        out.stats.zeta_evals += 1;

        let leaf = |verdict: LeafVerdict| Leaf {
            t_lo: a,
            t_hi: b,
            zeta_abs_lo: za.lo,
            zeta_abs_hi: za.hi,
            rhs_lo: rhs_lo.lo,
            rhs_hi: rhs_hi.hi,
            verdict,
        };

        if za.hi < rhs_lo.lo {
            out.leaves.push(leaf(LeafVerdict::Certified));
            return Ok(());
        }
        if za.lo > rhs_hi.hi {
            // Every point of [a, b] violates the bound. Shrink to a
            // point-like witness around the midpoint.
            if b - a <= FALSIFICATION_WIDTH {
                out.leaves.push(leaf(LeafVerdict::Falsified));
                return Ok(());
            }
            let mid = 0.5 * (a + b);
            let (wa, wb) = (mid - 0.4 * FALSIFICATION_WIDTH, mid + 0.4 * FALSIFICATION_WIDTH);
            let wz = self.leaf_abs(wa, wb)?;
            out.stats.zeta_evals += 1;
            let w_rhs_hi = c_iv.mul(&Interval::point(wb).ln()?);
            if wz.lo > w_rhs_hi.hi {
                out.leaves.push(Leaf {
                    t_lo: wa,
                    t_hi: wb,
                    zeta_abs_lo: wz.lo,
                    zeta_abs_hi: wz.hi,
                    rhs_lo: c_iv.mul(&Interval::point(wa).ln()?).lo,
                    rhs_hi: w_rhs_hi.hi,
                    verdict: LeafVerdict::Falsified,
                });
                return Ok(());
            }
            // Fall through to splitting if the witness was too loose.
        }
        let mid = 0.5 * (a + b);
        if depth >= max_depth || mid <= a || mid >= b {
            out.leaves.push(leaf(LeafVerdict::Inconclusive));
            return Ok(());
        }
        out.stats.splits += 1;
        self.recurse(a, mid, c, depth + 1, max_depth, out)?;
        self.recurse(mid, b, c, depth + 1, max_depth, out)
    }

    /// Sequential end-to-end verification. A parallel driver can run
    /// [`Self::verify_cell`] over [`Self::plan_cells`] itself and assemble
    /// with [`assemble_certificate`]; the output is identical.
    pub fn verify_range(
        &self,
        t_lo: f64,
        t_hi: f64,
        c: f64,
        max_depth: u32,
    ) -> Result<Certificate> {
        check_range_args(t_lo, t_hi, c)?;
        let cells = Self::plan_cells(t_lo, t_hi);
        let mut outcomes = Vec::with_capacity(cells.len());
        for &(a, b) in &cells {
            outcomes.push(self.verify_cell(a, b, c, max_depth)?);
        }
        Ok(assemble_certificate(t_lo, t_hi, c, max_depth, outcomes))
    }

    /// Interval of width <= 10^-3 containing the largest zero of
    /// h(t) = |zeta(1+it)| - c log t inside the search window.
    ///
    /// Requires verified opposite signs of h at the window endpoints; the
    /// "largest" claim is certified by running the range verifier on
    /// (root, search.hi], which proves h < 0 there.
    pub fn find_crossing(&self, c: f64, search: Interval) -> Result<Interval> {
        if !(c > 0.0) || !(search.lo > 1.0) || !(search.lo < search.hi) {
            return Err(Error::Domain("crossing search needs c > 0 and 1 < lo < hi"));
        }
        let sign = |t: f64| -> Result<i8> {
            let s = ComplexInterval::new(Interval::ONE, Interval::point(t));
            let za = self.zeta.zeta_point(&s, 1e-10)?.value.abs_enclosure();
            let rhs = Interval::point(c).mul(&Interval::point(t).ln()?);
            let h = za.sub(&rhs);
            Ok(if h.lo > 0.0 {
                1
            } else if h.hi < 0.0 {
                -1
            } else {
                0
            })
        };
        let s_lo = sign(search.lo)?;
        let s_hi = sign(search.hi)?;
        if s_lo == 0 || s_hi == 0 || s_lo == s_hi {
            return Err(Error::NotFound(
                "no verified sign change of |zeta(1+it)| - c log t at the window endpoints",
            ));
        }
        let (mut lo, mut hi) = (search.lo, search.hi);
        while hi - lo > 1e-3 * 0.9 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match sign(mid)? {
                s if s == s_lo => lo = mid,
                s if s == s_hi => hi = mid,
                _ => return Err(Error::NotFound("sign undecidable near the crossing")),
            }
        }
        // Certify there is no later zero in the window.
        let sweep_lo = hi.max(2.0);
        if sweep_lo < search.hi {
            let cert = self.verify_range(sweep_lo, search.hi, c, 60)?;
            if cert.status != CertStatus::Certified {
                return Err(Error::NotFound(
                    "could not certify sign-definiteness beyond the located zero",
                ));
            }
        }
        Ok(Interval::new(lo, hi))
    }
}

fn check_range_args(t_lo: f64, t_hi: f64, c: f64) -> Result<()> {
    if !(t_lo >= 2.0) || !(t_lo < t_hi) || !t_hi.is_finite() {
        return Err(Error::Domain("verification range must satisfy 2 <= t_lo < t_hi"));
    }
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::Domain("coefficient must be positive and finite"));
    }
    Ok(())
}

/// Merge per-cell outcomes (in ascending cell order) into a certificate.
pub fn assemble_certificate(
    t_lo: f64,
    t_hi: f64,
    c: f64,
    max_depth: u32,
    outcomes: Vec<CellOutcome>,
) -> Certificate {
    let mut stats = WallStats::default();
    let mut leaves = Vec::new();
    let mut any_falsified = false;
    let mut any_inconclusive = false;
    for o in outcomes {
        stats.absorb(&o.stats);
        for l in &o.leaves {
            match l.verdict {
                LeafVerdict::Falsified => any_falsified = true,
                LeafVerdict::Inconclusive => any_inconclusive = true,
                LeafVerdict::Certified => {}
            }
        }
        leaves.extend(o.leaves);
    }
    let status = if any_falsified {
        CertStatus::Falsified
    } else if any_inconclusive {
        CertStatus::Inconclusive
    } else {
        CertStatus::Certified
    };
    Certificate {
        t_lo,
        t_hi,
        c,
        status,
        max_depth,
        wall_stats: stats,
        leaves,
    }
}

/// Structural re-validation of a certificate: recomputes the right side per
/// leaf, rechecks every recorded inequality and (for certified runs) the
/// exact tiling of the range.
pub fn check_certificate(cert: &Certificate) -> Result<()> {
    let c_iv = Interval::point(cert.c);
    let mut any_falsified = false;
    let mut any_inconclusive = false;
    for l in &cert.leaves {
        if !(l.t_lo < l.t_hi) {
            return Err(Error::Domain("leaf with empty interior"));
        }
        let rhs_lo = c_iv.mul(&Interval::point(l.t_lo).ln()?);
        let rhs_hi = c_iv.mul(&Interval::point(l.t_hi).ln()?);
        match l.verdict {
            LeafVerdict::Certified => {
                if !(l.zeta_abs_hi < l.rhs_lo) || !(l.rhs_lo <= rhs_lo.hi) {
                    return Err(Error::Domain("certified leaf fails its inequality"));
                }
            }
            LeafVerdict::Falsified => {
                any_falsified = true;
                if !(l.t_hi - l.t_lo <= FALSIFICATION_WIDTH)
                    || !(l.zeta_abs_lo > l.rhs_hi)
                    || !(l.rhs_hi >= rhs_hi.lo)
                {
                    return Err(Error::Domain("falsification witness fails its inequality"));
                }
            }
            LeafVerdict::Inconclusive => any_inconclusive = true,
        }
    }
    let status = if any_falsified {
        CertStatus::Falsified
    } else if any_inconclusive {
        CertStatus::Inconclusive
    } else {
        CertStatus::Certified
    };
    if status != cert.status {
        return Err(Error::Domain("certificate status does not match its leaves"));
    }
    if cert.status == CertStatus::Certified {
        // Leaves must tile [t_lo, t_hi] exactly.
        let mut cursor = cert.t_lo;
        for l in &cert.leaves {
            if l.t_lo != cursor {
                return Err(Error::Domain("certified leaves do not tile the range"));
            }
            cursor = l.t_hi;
        }
        if cursor != cert.t_hi {
            return Err(Error::Domain("certified leaves stop short of the range"));
        }
    }
    Ok(())
}
