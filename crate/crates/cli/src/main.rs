//! zetabound: certified numerical bounds for the Riemann zeta function on
//! the line Re(s) = 1.
//!
//! Exit codes: 0 success/certified, 1 falsified or not found,
//! 2 inconclusive, 64 usage error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zetabound::decimal::{parse_f64, parse_interval};
use zetabound::drivers::verify_parallel;
use zetabound::output::{render, Format};
use zetabound::reports::{
    BacklundReport, CheckCertReport, CrossingReport, EvalReport, ExpsumReport, OptimizeReport,
    Report,
};
use zetabound_core::bounds::backlund_threshold_with_width;
use zetabound_core::expsum::{dyadic_bound, expsum_bruteforce, DyadicBlock};
use zetabound_core::optimizer::{optimize, refine_a1, SearchSpace};
use zetabound_core::verifier::{check_certificate, CertStatus, Certificate, Verifier};
use zetabound_core::zeta::ZetaEvaluator;
use zetabound_core::{BernoulliTable, ComplexInterval, Error, Interval};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1; // falsified / not found
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "zetabound",
    about = "Certified bounds for |zeta(1+it)|",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enclose zeta(sigma + it) at a point.
    Eval(EvalArgs),
    /// Certify |zeta(1+it)| <= coeff * log t over a t-range.
    Verify(VerifyArgs),
    /// Grid-search (k, m, A1) minimizing the certified sup of the master
    /// ratio for a given t0.
    Optimize(OptimizeArgs),
    /// Locate where the Backlund right side turns (and stays) negative.
    Backlund(BacklundArgs),
    /// Compare the dyadic exponential-sum bound against direct summation.
    ExpsumCheck(ExpsumArgs),
    /// Locate the largest crossing of |zeta(1+it)| = coeff * log t.
    Crossing(CrossingArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Imaginary part t of s = sigma + it.
    #[arg(long)]
    t: String,
    /// Real part sigma (default 1).
    #[arg(long, default_value = "1")]
    sigma: String,
    /// Target enclosure width.
    #[arg(long, default_value = "1e-10")]
    target_width: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Lower end of the t-range (>= 2).
    #[arg(long, default_value = "3")]
    from: String,
    /// Upper end of the t-range.
    #[arg(long, default_value = "1e4")]
    to: String,
    /// Bound coefficient c in |zeta(1+it)| <= c log t.
    #[arg(long, default_value = "0.75")]
    coeff: String,
    /// Maximum bisection depth per cell.
    #[arg(long, default_value_t = 48)]
    max_depth: u32,
    /// Worker threads (default: ZETABOUND_PARALLELISM or 1).
    #[arg(long)]
    parallelism: Option<usize>,
    /// Re-validate a previously emitted JSON certificate instead of running.
    #[arg(long)]
    check_cert: Option<String>,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Validity threshold t0.
    #[arg(long)]
    t0: String,
    #[arg(long, default_value_t = 1)]
    k_min: u32,
    #[arg(long, default_value_t = 20)]
    k_max: u32,
    #[arg(long, default_value_t = 1)]
    m_min: u32,
    #[arg(long, default_value_t = 12)]
    m_max: u32,
    /// A1 is searched over the integers 1..=a1-max.
    #[arg(long, default_value_t = 100)]
    a1_max: u32,
    /// Refine A1 near the incumbent with step 0.1.
    #[arg(long, default_value_t = false)]
    refine: bool,
}

#[derive(Args)]
struct BacklundArgs {
    /// Block divisor m.
    #[arg(long)]
    m: u32,
    /// Width of the returned threshold interval.
    #[arg(long, default_value = "1e-3")]
    width: String,
}

#[derive(Args)]
struct ExpsumArgs {
    /// Block start; the sum ranges over a < n <= 2a.
    #[arg(long)]
    a: u64,
    /// Frequency t (requires 8 pi a^2 > t).
    #[arg(long)]
    t: String,
}

#[derive(Args)]
struct CrossingArgs {
    /// Bound coefficient.
    #[arg(long)]
    coeff: String,
    /// Search window start.
    #[arg(long)]
    from: String,
    /// Search window end.
    #[arg(long)]
    to: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version, 64 for usage errors.
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return ExitCode::from(if is_help { EXIT_OK } else { EXIT_USAGE });
        }
    };
    let format: Format = cli.format.into();
    match run(cli.command) {
        Ok((report, code)) => {
            let text = render(&report, format);
            match &cli.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("zetabound: cannot write {path}: {e}");
                        return ExitCode::from(EXIT_NEGATIVE);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(RunError::Usage(msg)) => {
            eprintln!("zetabound: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(RunError::Math(e)) => {
            eprintln!("zetabound: {e}");
            ExitCode::from(EXIT_NEGATIVE)
        }
    }
}

enum RunError {
    Usage(String),
    Math(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Math(e)
    }
}

fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

fn parsed_f64(s: &str, what: &str) -> Result<f64, RunError> {
    parse_f64(s).map_err(|e| usage(format!("{what}: {e}")))
}

fn run(cmd: Command) -> Result<(Report, u8), RunError> {
    match cmd {
        Command::Eval(a) => run_eval(a),
        Command::Verify(a) => run_verify(a),
        Command::Optimize(a) => run_optimize(a),
        Command::Backlund(a) => run_backlund(a),
        Command::ExpsumCheck(a) => run_expsum(a),
        Command::Crossing(a) => run_crossing(a),
    }
}

fn run_eval(a: EvalArgs) -> Result<(Report, u8), RunError> {
    let t = parse_interval(&a.t).map_err(usage)?;
    let sigma = parse_interval(&a.sigma).map_err(usage)?;
    let width = parsed_f64(&a.target_width, "target width")?;
    if !(width > 0.0) {
        return Err(usage("target width must be positive"));
    }
    if !(sigma.lo > 0.0) {
        return Err(usage("sigma must be positive"));
    }
    if sigma.contains(1.0) && t.contains(0.0) {
        return Err(usage("s = 1 is the pole of zeta"));
    }
    let bern = BernoulliTable::standard();
    let ev = ZetaEvaluator::new(&bern);
    let z = ev.zeta_point(&ComplexInterval::new(sigma, t), width)?;
    let abs = z.value.abs_enclosure();
    let report = EvalReport {
        sigma: sigma.mid(),
        t: t.mid(),
        target_width: width,
        re_lo: z.value.re.lo,
        re_hi: z.value.re.hi,
        im_lo: z.value.im.lo,
        im_hi: z.value.im.hi,
        abs_lo: abs.lo,
        abs_hi: abs.hi,
        width: z.value.width(),
        width_met: z.width_met,
        em_n: z.cfg.n,
        em_k: z.cfg.k,
    };
    Ok((Report::Eval(report), EXIT_OK))
}

fn cert_exit(status: CertStatus) -> u8 {
    match status {
        CertStatus::Certified => EXIT_OK,
        CertStatus::Falsified => EXIT_NEGATIVE,
        CertStatus::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn run_verify(a: VerifyArgs) -> Result<(Report, u8), RunError> {
    if let Some(path) = &a.check_cert {
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
        let cert: Certificate = serde_json::from_str(&text)
            .map_err(|e| usage(format!("not a certificate: {e}")))?;
        let valid = check_certificate(&cert).is_ok();
        let status = match cert.status {
            CertStatus::Certified => "certified",
            CertStatus::Falsified => "falsified",
            CertStatus::Inconclusive => "inconclusive",
        };
        let code = if valid {
            cert_exit(cert.status)
        } else {
            EXIT_NEGATIVE
        };
        let report = CheckCertReport {
            status: status.to_string(),
            leaves: cert.leaves.len(),
            valid,
        };
        return Ok((Report::CheckCert(report), code));
    }
    let t_lo = parsed_f64(&a.from, "--from")?;
    let t_hi = parsed_f64(&a.to, "--to")?;
    let c = parsed_f64(&a.coeff, "--coeff")?;
    if !(t_lo >= 2.0 && t_lo < t_hi && t_hi.is_finite()) {
        return Err(usage("need 2 <= from < to"));
    }
    if !(c > 0.0) {
        return Err(usage("coefficient must be positive"));
    }
    if a.max_depth > 64 {
        return Err(usage("max depth is capped at 64"));
    }
    let parallelism = a
        .parallelism
        .or_else(|| {
            std::env::var("ZETABOUND_PARALLELISM")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1);
    if parallelism == 0 {
        return Err(usage("parallelism must be >= 1"));
    }
    let bern = BernoulliTable::standard();
    let cert = verify_parallel(&bern, t_lo, t_hi, c, a.max_depth, parallelism)?;
    let code = cert_exit(cert.status);
    Ok((Report::Verify(cert), code))
}

fn run_optimize(a: OptimizeArgs) -> Result<(Report, u8), RunError> {
    let t0 = parsed_f64(&a.t0, "--t0")?;
    if !(t0 >= 3.0) || a.k_min < 1 || a.k_min > a.k_max || a.m_min < 1 || a.m_min > a.m_max {
        return Err(usage("need t0 >= 3 and nonempty k/m ranges with k, m >= 1"));
    }
    if a.k_max > 60 {
        return Err(usage("k-max is capped at 60"));
    }
    if a.a1_max < 1 {
        return Err(usage("a1-max must be >= 1"));
    }
    let bern = BernoulliTable::standard();
    let mut space = SearchSpace::integer_a1(a.k_max, a.m_max, a.a1_max, t0);
    space.k_min = a.k_min;
    space.m_min = a.m_min;
    let out = optimize(&space, &bern)?;
    let (final_out, refined) = if a.refine {
        (refine_a1(&space, &out.params, 0.1, &bern)?, true)
    } else {
        (out, false)
    };
    let report = OptimizeReport {
        t0,
        k: final_out.params.k,
        m: final_out.params.m,
        a1: final_out.params.a1,
        ratio_lo: final_out.ratio.lo,
        ratio_hi: final_out.ratio.hi,
        feasible_evaluated: final_out.feasible_evaluated,
        infeasible_skipped: final_out.infeasible_skipped,
        refined,
    };
    Ok((Report::Optimize(report), EXIT_OK))
}

fn run_backlund(a: BacklundArgs) -> Result<(Report, u8), RunError> {
    if a.m < 1 {
        return Err(usage("m must be >= 1"));
    }
    let width = parsed_f64(&a.width, "--width")?;
    if !(width > 0.0 && width <= 1.0) {
        return Err(usage("width must be in (0, 1]"));
    }
    let r = backlund_threshold_with_width(a.m, width)?;
    let report = BacklundReport {
        m: a.m,
        threshold_lo: r.lo,
        threshold_hi: r.hi,
        negative_verified_to: 10.0 * r.hi,
    };
    Ok((Report::Backlund(report), EXIT_OK))
}

fn run_expsum(a: ExpsumArgs) -> Result<(Report, u8), RunError> {
    let t = parsed_f64(&a.t, "--t")?;
    if a.a < 1 {
        return Err(usage("a must be >= 1"));
    }
    if a.a > 1_000_000 {
        return Err(usage("direct summation is capped at a <= 10^6"));
    }
    if !(t > 0.0) {
        return Err(usage("t must be positive"));
    }
    let block = DyadicBlock::new(a.a, t)?;
    let bound = dyadic_bound(&block)?;
    let brute = expsum_bruteforce(&block)?.abs_enclosure();
    let dominates = bound.hi >= brute.lo;
    let report = ExpsumReport {
        a: a.a,
        t,
        bound_lo: bound.lo,
        bound_hi: bound.hi,
        sum_abs_lo: brute.lo,
        sum_abs_hi: brute.hi,
        bound_dominates: dominates,
    };
    let code = if dominates { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((Report::Expsum(report), code))
}

fn run_crossing(a: CrossingArgs) -> Result<(Report, u8), RunError> {
    let c = parsed_f64(&a.coeff, "--coeff")?;
    let lo = parsed_f64(&a.from, "--from")?;
    let hi = parsed_f64(&a.to, "--to")?;
    if !(c > 0.0) || !(lo > 1.0) || !(lo < hi) || !hi.is_finite() {
        return Err(usage("need coeff > 0 and 1 < from < to"));
    }
    let bern = BernoulliTable::standard();
    let ev = ZetaEvaluator::new(&bern);
    let v = Verifier::new(&ev);
    let r = v.find_crossing(c, Interval::new(lo, hi))?;
    let report = CrossingReport {
        coeff: c,
        search_lo: lo,
        search_hi: hi,
        crossing_lo: r.lo,
        crossing_hi: r.hi,
    };
    Ok((Report::Crossing(report), EXIT_OK))
}
