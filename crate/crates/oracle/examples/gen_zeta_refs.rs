//! Generates the frozen zeta reference table used by the acceptance suite:
//! 50-digit Euler-Maclaurin values (N = 10^5, k = 2) of zeta(1+it) for
//! t = 5, 10, ..., 250, plus a handful of standalone reference values.
//!
//! Run: cargo run -p zetabound-oracle --example gen_zeta_refs

use rayon::prelude::*;
use zetabound_oracle::{zeta_em, Cx};

fn main() {
    // Standalone references.
    let s = Cx::from_f64(1.0, 10.0);
    let p = s.pow_neg_of(3);
    println!("// 3^-(1+10i):");
    println!("//   re = {}", p.re.to_decimal_string(50));
    println!("//   im = {}", p.im.to_decimal_string(50));

    let ts: Vec<u64> = (1..=50).map(|i| i * 5).collect();
    let rows: Vec<String> = ts
        .par_iter()
        .map(|&t| {
            let s = Cx::from_f64(1.0, t as f64);
            let r = zeta_em(&s, 100_000, 2);
            format!(
                "    ({}.0, \"{}\", \"{}\", {:e}),",
                t,
                r.value.re.to_decimal_string(50),
                r.value.im.to_decimal_string(50),
                r.trunc_err
            )
        })
        .collect();

    println!("pub const ZETA_REFS: &[(f64, &str, &str, f64)] = &[");
    for row in rows {
        println!("{row}");
    }
    println!("];");
}
