use crate::{Cx, Fx};

/// Reference value of zeta(s) with a bound on the truncation error of the
/// Euler-Maclaurin evaluation that produced it. The arithmetic error of the
/// fixed-point machinery (~1e-50 here) is far below `trunc_err` for every
/// configuration this crate is used with.
pub struct ZetaRef {
    pub value: Cx,
    /// Upper bound on |computed - zeta(s)| from series truncation.
    pub trunc_err: f64,
}

// B_1 .. B_9 with the B_1 = -1/2 convention; odd indices >= 3 vanish.
const BERN: [(i64, u64); 9] = [
    (-1, 2),
    (1, 6),
    (0, 1),
    (-1, 30),
    (0, 1),
    (1, 42),
    (0, 1),
    (-1, 30),
    (0, 1),
];

/// Loose upper bound on sup |B_n({x})| via 2 n! zeta(n) / (2 pi)^n.
fn periodic_bernoulli_sup_f64(n: u32) -> f64 {
    let mut fact = 1.0f64;
    for i in 2..=n {
        fact *= i as f64;
    }
    // zeta(n) <= 1 + 2^-n + 3^-n + integral_3^inf x^-n dx.
    let p3 = 3f64.powi(-(n as i32));
    let zeta_n = 1.0 + 2f64.powi(-(n as i32)) + p3 + 3.0 * p3 / (n as f64 - 1.0);
    2.0 * fact * zeta_n / (2.0 * core::f64::consts::PI).powi(n as i32) * 1.0001
}

/// Natural logs of 1..=n, index 0 unused.
pub fn ln_table(n: u64) -> Vec<Fx> {
    let mut t = Vec::with_capacity(n as usize + 1);
    t.push(Fx::zero());
    for i in 1..=n {
        t.push(Fx::from_u64(i).ln());
    }
    t
}

/// Euler-Maclaurin evaluation of zeta(s), truncating the Dirichlet series at
/// `n_trunc` and using `k` derivative correction terms, `1 <= k <= 8`.
/// Requires Re(s) > 0 and s != 1.
pub fn zeta_em(s: &Cx, n_trunc: u64, k: u32) -> ZetaRef {
    let lns = ln_table(n_trunc);
    zeta_em_cached(s, n_trunc, k, &lns)
}

/// Same as [`zeta_em`] but with a precomputed log table (`lns[n]` = ln n).
pub fn zeta_em_cached(s: &Cx, n_trunc: u64, k: u32, lns: &[Fx]) -> ZetaRef {
    assert!((1..=8).contains(&k));
    assert!(n_trunc >= 2);
    let sigma = s.re.to_f64();
    let t_im = s.im.to_f64();
    assert!(sigma > 0.0);

    let neg_s_lnn = |n: u64| -> Cx {
        let ln_n = &lns[n as usize];
        Cx::new(
            -(s.re.clone() * ln_n.clone()),
            -(s.im.clone() * ln_n.clone()),
        )
    };

    // Partial sum of n^{-s}.
    let mut sum = Cx::one();
    for n in 2..=n_trunc {
        sum = sum + neg_s_lnn(n).exp();
    }

    // n_trunc^{-s} and helpers.
    let npow = neg_s_lnn(n_trunc).exp();
    let s_minus_1 = Cx::new(s.re.clone() - Fx::one(), s.im.clone());
    // N^{1-s}/(s-1) = N * N^{-s} / (s-1).
    let integral = npow.scale(&Fx::from_u64(n_trunc)) / s_minus_1;

    let mut tail = integral;
    let inv_n = Fx::one() / Fx::from_u64(n_trunc);
    let mut rising = Cx::one(); // s(s+1)...(s+r-1)
    let mut npow_r = npow; // N^{-s-r}
    let mut fact = 1u64; // (r+1)!
    for r in 0..=k {
        fact *= (r + 1) as u64;
        let (bn, bd) = BERN[r as usize];
        if bn != 0 {
            let coeff = Fx::from_ratio(bn, bd * fact);
            tail = tail + (rising.clone() * npow_r.clone()).scale(&coeff);
        }
        rising = rising * Cx::new(s.re.clone() + Fx::from_u64(r as u64), s.im.clone());
        npow_r = npow_r.scale(&inv_n);
    }

    // |R_k| <= sup|B_{k+1}| |s(s+1)...(s+k)| N^{-sigma-k} / ((k+1)! (sigma+k)).
    let mut prod_abs = 1.0f64;
    for j in 0..=k {
        let a = sigma + j as f64;
        prod_abs *= (a * a + t_im * t_im).sqrt();
    }
    let mut fact_k1 = 1.0f64;
    for i in 2..=(k + 1) {
        fact_k1 *= i as f64;
    }
    let n_f = n_trunc as f64;
    let trunc_err = periodic_bernoulli_sup_f64(k + 1) * prod_abs
        / (fact_k1 * (sigma + k as f64))
        * n_f.powf(-(sigma + k as f64))
        * 1.0001;

    ZetaRef {
        value: sum + tail,
        trunc_err,
    }
}
