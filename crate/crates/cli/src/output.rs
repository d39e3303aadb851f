//! Output formats. JSON is the serialized report; CSV is a flattening of the
//! same JSON tree (scalar fields as `field,value` rows, arrays of records as
//! a header plus rows), so both carry the same numbers in the same printed
//! form. The table format is a human summary.

use serde_json::Value;
use zetabound_core::verifier::{CertStatus, Certificate};

use crate::reports::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json_value())
                .expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => csv_of_value(&report.to_json_value()),
        Format::Table => table_of(report),
    }
}

fn scalar_str(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Flatten a JSON object: scalars become `name,value` lines; arrays of
/// uniform objects become a blank-line-separated table.
fn csv_of_value(v: &Value) -> String {
    let mut out = String::from("field,value\n");
    let mut tables = String::new();
    if let Value::Object(map) = v {
        for (k, val) in map {
            match val {
                Value::Array(items) => {
                    tables.push('\n');
                    tables.push_str(&csv_table(k, items));
                }
                Value::Object(inner) => {
                    for (ik, iv) in inner {
                        out.push_str(&format!("{k}.{ik},{}\n", scalar_str(iv)));
                    }
                }
                scalar => out.push_str(&format!("{k},{}\n", scalar_str(scalar))),
            }
        }
    } else {
        out.push_str(&format!("value,{}\n", scalar_str(v)));
    }
    out + &tables
}

fn csv_table(name: &str, items: &[Value]) -> String {
    let Some(Value::Object(first)) = items.first() else {
        let mut s = format!("{name}\n");
        for it in items {
            s.push_str(&scalar_str(it));
            s.push('\n');
        }
        return s;
    };
    let headers: Vec<&String> = first.keys().collect();
    let mut s = headers
        .iter()
        .map(|h| format!("{name}.{h}"))
        .collect::<Vec<_>>()
        .join(",");
    s.push('\n');
    for it in items {
        if let Value::Object(row) = it {
            let line = headers
                .iter()
                .map(|h| row.get(*h).map(scalar_str).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(",");
            s.push_str(&line);
            s.push('\n');
        }
    }
    s
}

fn table_of(report: &Report) -> String {
    match report {
        Report::Eval(r) => format!(
            "zeta({} + {}i)\n  re  in [{}, {}]\n  im  in [{}, {}]\n  |.| in [{}, {}]\n  width {}  target {}  met {}\n  EM config: N = {}, k = {}\n",
            r.sigma, r.t, r.re_lo, r.re_hi, r.im_lo, r.im_hi, r.abs_lo, r.abs_hi,
            r.width, r.target_width, r.width_met, r.em_n, r.em_k
        ),
        Report::Verify(c) => cert_table(c),
        Report::Optimize(r) => format!(
            "optimum over the grid (t0 = {})\n  k = {}, m = {}, A1 = {}\n  certified sup ratio in [{}, {}]\n  feasible points {}  infeasible skipped {}  refined {}\n",
            r.t0, r.k, r.m, r.a1, r.ratio_lo, r.ratio_hi,
            r.feasible_evaluated, r.infeasible_skipped, r.refined
        ),
        Report::Backlund(r) => format!(
            "Backlund threshold for m = {}\n  largest root of the right side in [{}, {}]\n  right side verified negative on [{}, {}]\n",
            r.m, r.threshold_lo, r.threshold_hi, r.threshold_hi, r.negative_verified_to
        ),
        Report::Expsum(r) => format!(
            "dyadic block a = {} (sum over {} < n <= {}), t = {}\n  bound        in [{}, {}]\n  direct |sum| in [{}, {}]\n  bound dominates: {}\n",
            r.a, r.a, 2 * r.a, r.t, r.bound_lo, r.bound_hi, r.sum_abs_lo, r.sum_abs_hi,
            r.bound_dominates
        ),
        Report::Crossing(r) => format!(
            "largest crossing of |zeta(1+it)| = {} log t in [{}, {}]\n  located in [{}, {}] (width {})\n",
            r.coeff, r.search_lo, r.search_hi, r.crossing_lo, r.crossing_hi,
            r.crossing_hi - r.crossing_lo
        ),
        Report::CheckCert(r) => format!(
            "certificate check: status {}, {} leaves, valid {}\n",
            r.status, r.leaves, r.valid
        ),
    }
}

fn cert_table(c: &Certificate) -> String {
    let status = match c.status {
        CertStatus::Certified => "certified",
        CertStatus::Falsified => "falsified",
        CertStatus::Inconclusive => "inconclusive",
    };
    let mut s = format!(
        "|zeta(1+it)| <= {} log t on [{}, {}]: {}\n  leaves {}  deepest {}  zeta evaluations {}  splits {}  cells {}\n",
        c.c,
        c.t_lo,
        c.t_hi,
        status,
        c.leaves.len(),
        c.wall_stats.deepest,
        c.wall_stats.zeta_evals,
        c.wall_stats.splits,
        c.wall_stats.cells,
    );
    if c.status != CertStatus::Certified {
        for l in c.leaves.iter().filter(|l| {
            matches!(
                l.verdict,
                zetabound_core::verifier::LeafVerdict::Falsified
                    | zetabound_core::verifier::LeafVerdict::Inconclusive
            )
        }) {
            s.push_str(&format!(
                "  {:?} [{}, {}]: |zeta| in [{}, {}] vs rhs in [{}, {}]\n",
                l.verdict, l.t_lo, l.t_hi, l.zeta_abs_lo, l.zeta_abs_hi, l.rhs_lo, l.rhs_hi
            ));
            if s.len() > 20_000 {
                s.push_str("  ...\n");
                break;
            }
        }
    }
    s
}
