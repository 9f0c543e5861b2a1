//! Job configuration and dispatch behind the `wfock` binary.
//!
//! The binary is a thin argument parser; everything observable lives here
//! so it can be tested directly.  Output is deterministic for a fixed
//! config and cache state: all maps iterate in sorted order and the
//! arithmetic is exact.
//!
//! Exit codes: 0 success/verified, 1 verification failure, 2 usage error.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::{Poly, RatFun, Scalar};
use crate::screening::{singular_vector, vacuum_module_specs, ScreeningSpec, TParam};
use crate::symfunc::{
    cauchy_truncated, dual_norm_b, integral_norm_c, jack, jack_norm, load_jack_cache,
    save_jack_cache, skew_jack,
};
use crate::verify::{check_mode_algebra, check_singular_with};
use num_rational::BigRational;
use num_traits::Signed;
use std::fmt::Write as _;
use std::path::PathBuf;

/// Output rendering selected on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

/// What to run.
#[derive(Clone, Debug)]
pub enum Command {
    Jack { partition: Partition },
    Skew { lambda: Partition, mu: Partition },
    Singular { spec: ScreeningSpec },
    Verify { spec: ScreeningSpec },
    Oracle { spec: ScreeningSpec },
    Example3 { count: usize },
    Selftest,
}

/// A fully validated job.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub command: Command,
    pub t: TParam,
    pub format: OutputFormat,
    pub cache: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub precision: u32,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            t: TParam::Symbolic,
            format: OutputFormat::Text,
            cache: None,
            jobs: None,
            precision: 128,
        }
    }
}

/// Result of a run: exit code plus the full serialized output.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub output: String,
}

fn usage(msg: String) -> RunOutcome {
    RunOutcome {
        exit_code: 2,
        output: format!("error: {msg}"),
    }
}

/// Validate and dispatch a job.
pub fn run(config: &JobConfig) -> RunOutcome {
    // The Jack parameter must avoid the non-positive rationals.
    if let TParam::Rational(t0) = &config.t {
        if !t0.is_positive() {
            return usage(format!(
                "t = {t0} rejected: {}",
                Error::ParameterOutsideDomain(t0.to_string())
            ));
        }
    }
    if let Some(path) = &config.cache {
        if path.exists() {
            if let Err(e) = load_jack_cache(path) {
                return usage(format!("cache at {}: {e}", path.display()));
            }
        }
    }
    let body = || match &config.command {
        Command::Jack { partition } => run_jack(config, partition),
        Command::Skew { lambda, mu } => run_skew(config, lambda, mu),
        Command::Singular { spec } => run_singular(config, spec),
        Command::Verify { spec } => run_verify(config, spec, false),
        Command::Oracle { spec } => run_verify(config, spec, true),
        Command::Example3 { count } => run_example3(config, *count),
        Command::Selftest => Ok(run_selftest()),
    };
    let outcome = match config.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build();
            match pool {
                Ok(pool) => pool.install(body),
                Err(e) => return usage(format!("thread pool: {e}")),
            }
        }
        None => body(),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return usage(e.to_string()),
    };
    if let Some(path) = &config.cache {
        let horizon = cache_horizon(&config.command);
        if let Some(d) = horizon {
            if let Err(e) = save_jack_cache(path, d) {
                return usage(format!("writing cache at {}: {e}", path.display()));
            }
        }
    }
    outcome
}

/// Degree through which the cache file is (re)written after a command.
fn cache_horizon(command: &Command) -> Option<u64> {
    match command {
        Command::Jack { partition } => Some(partition.weight()),
        Command::Skew { lambda, .. } => Some(lambda.weight()),
        Command::Singular { spec } | Command::Verify { spec } | Command::Oracle { spec } => {
            Some(spec.grade())
        }
        _ => None,
    }
}

fn run_jack(config: &JobConfig, lambda: &Partition) -> Result<RunOutcome> {
    let j = jack(lambda);
    let b = dual_norm_b(lambda);
    let output = match config.format {
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "J{lambda} = {j}").unwrap();
            writeln!(out, "b{lambda} = {b}").unwrap();
            write!(out, "norm{lambda} = {}", jack_norm(lambda)).unwrap();
            maybe_specialized_note(config, &mut out, &j)?;
            out
        }
        OutputFormat::Json => serde_json::to_string_pretty(&serde_json::json!({
            "partition": lambda.parts().to_vec(),
            "jack": j.to_json(),
            "dual_norm_b": b.to_string(),
        }))
        .unwrap(),
        OutputFormat::Latex => format!("J_{{{}}} = {}", latex_partition(lambda), latex_symfunc(&j)),
    };
    Ok(RunOutcome {
        exit_code: 0,
        output,
    })
}

fn run_skew(config: &JobConfig, lambda: &Partition, mu: &Partition) -> Result<RunOutcome> {
    let f = skew_jack(lambda, mu);
    let output = match config.format {
        OutputFormat::Text => format!("J{lambda}/{mu} = {f}"),
        OutputFormat::Json => serde_json::to_string_pretty(&serde_json::json!({
            "lambda": lambda.parts().to_vec(),
            "mu": mu.parts().to_vec(),
            "skew_jack": f.to_json(),
        }))
        .unwrap(),
        OutputFormat::Latex => format!(
            "J_{{{}/{}}} = {}",
            latex_partition(lambda),
            latex_partition(mu),
            latex_symfunc(&f)
        ),
    };
    Ok(RunOutcome {
        exit_code: 0,
        output,
    })
}

/// Append exact specialized values (and decimals) when `t` is rational.
fn maybe_specialized_note(
    config: &JobConfig,
    out: &mut String,
    f: &crate::symfunc::SymFunc,
) -> Result<()> {
    if let TParam::Rational(t0) = &config.t {
        writeln!(out).unwrap();
        writeln!(out, "at t = {t0}:").unwrap();
        for (lam, c) in f.terms() {
            let v = c.eval_quad(t0, 1)?;
            writeln!(
                out,
                "  p{lam} : {v} ~ {}",
                v.to_decimal_string(config.precision)
            )
            .unwrap();
        }
    }
    Ok(())
}

fn run_singular(config: &JobConfig, spec: &ScreeningSpec) -> Result<RunOutcome> {
    let v = singular_vector(spec)?;
    let theta = spec.target_weight();
    let output = match config.format {
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "{}", spec.to_line(&config.t)).unwrap();
            writeln!(out, "grade = {}", spec.grade()).unwrap();
            writeln!(out, "target weight = {theta}").unwrap();
            match &config.t {
                TParam::Symbolic => {
                    write!(out, "{v}").unwrap();
                }
                TParam::Rational(t0) => {
                    let mut first = true;
                    for (mono, c) in v.terms() {
                        if !first {
                            writeln!(out).unwrap();
                        }
                        first = false;
                        let q = c.eval_quad(t0, 1)?;
                        write!(out, "{mono} : {q}").unwrap();
                    }
                }
            }
            out
        }
        OutputFormat::Json => {
            let mut value = serde_json::json!({
                "spec": spec.to_line(&config.t),
                "grade": spec.grade(),
                "vector": v.to_json(),
            });
            if let TParam::Rational(t0) = &config.t {
                let specialized: Vec<serde_json::Value> = v
                    .terms()
                    .map(|(mono, c)| -> Result<serde_json::Value> {
                        Ok(serde_json::json!({
                            "monomial": mono.to_string(),
                            "value": c.eval_quad(t0, 1)?.to_string(),
                        }))
                    })
                    .collect::<Result<_>>()?;
                value["specialized"] = serde_json::Value::Array(specialized);
            }
            serde_json::to_string_pretty(&value).unwrap()
        }
        OutputFormat::Latex => {
            let mut terms = Vec::new();
            for (mono, c) in v.terms() {
                let coeff = match &config.t {
                    TParam::Symbolic => format!("\\left({}\\right)", latex_scalar(c)),
                    TParam::Rational(t0) => {
                        format!("\\left({}\\right)", latex_quad(&c.eval_quad(t0, 1)?))
                    }
                };
                terms.push(format!("{coeff} {}", latex_monomial(mono)));
            }
            format!(
                "\\left[ {} \\right] |\\theta\\rangle",
                terms.join(" + ")
            )
        }
    };
    Ok(RunOutcome {
        exit_code: 0,
        output,
    })
}

fn run_verify(config: &JobConfig, spec: &ScreeningSpec, oracle: bool) -> Result<RunOutcome> {
    let v = singular_vector(spec)?;
    // At rational t, also insist the coefficients specialize cleanly.
    if let TParam::Rational(t0) = &config.t {
        for (_, c) in v.terms() {
            c.eval_quad(t0, 1)?;
        }
    }
    let report = check_singular_with(&v, spec, &config.t, oracle)?;
    let exit_code = if report.passed { 0 } else { 1 };
    let output = match config.format {
        OutputFormat::Json => report.to_json(),
        _ => {
            let mut out = String::new();
            writeln!(out, "{}", report.spec).unwrap();
            for check in &report.checks {
                writeln!(
                    out,
                    "{} {}  (residual terms: {})",
                    if check.passed { "ok  " } else { "FAIL" },
                    check.label,
                    check.residual_terms
                )
                .unwrap();
            }
            if let Some(dim) = report.oracle_dimension {
                writeln!(out, "kernel dimension = {dim}").unwrap();
                writeln!(
                    out,
                    "{} formula output in kernel span",
                    if report.oracle_match == Some(true) { "ok  " } else { "FAIL" }
                )
                .unwrap();
            }
            write!(out, "{}", if report.passed { "VERIFIED" } else { "NOT VERIFIED" }).unwrap();
            out
        }
    };
    Ok(RunOutcome { exit_code, output })
}

fn run_example3(config: &JobConfig, count: usize) -> Result<RunOutcome> {
    let TParam::Rational(t0) = &config.t else {
        return Err(Error::Usage(
            "example3 needs a rational t = u/v".to_string(),
        ));
    };
    let (u, v): (u32, u32) = {
        let nu = t0.numer();
        let de = t0.denom();
        let to_u32 = |x: &num_bigint::BigInt| -> Result<u32> {
            u32::try_from(x.clone())
                .map_err(|_| Error::Usage(format!("t = {t0} out of range for u/v")))
        };
        (to_u32(nu)?, to_u32(de)?)
    };
    let specs: Vec<ScreeningSpec> = vacuum_module_specs(u, v)?.take(count).collect();
    let output = match config.format {
        OutputFormat::Json => {
            let list: Vec<serde_json::Value> = specs
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "spec": s.to_line(&config.t),
                        "grade": s.grade(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::Value::Array(list)).unwrap()
        }
        _ => specs
            .iter()
            .map(|s| format!("{} grade={}", s.to_line(&config.t), s.grade()))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(RunOutcome {
        exit_code: 0,
        output,
    })
}

/// The golden suite: worked examples and bounded property checks, with a
/// one-line result per entry.
pub fn run_selftest() -> RunOutcome {
    let mut rows: Vec<(String, bool)> = Vec::new();
    let mut record = |name: &str, ok: bool| rows.push((name.to_string(), ok));

    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());

    // Potts-point constants
    {
        let ok = Scalar::alpha_plus()
            .eval_quad(&q(4, 5), 1)
            .map(|v| v.b == q(1, 2) && v.radicand == 5u32.into())
            .unwrap_or(false);
        record("alpha_+ at t=4/5 is sqrt(5)/2", ok);
    }

    // Jack goldens
    {
        let j11 = jack(&Partition::new(vec![1, 1]));
        let ok = j11.coefficient(&Partition::new(vec![1, 1]))
            == Scalar::from_rational(q(1, 2))
            && j11.coefficient(&Partition::new(vec![2])) == Scalar::from_rational(q(-1, 2));
        record("J[1,1] expansion", ok);

        let j21 = jack(&Partition::new(vec![2, 1]));
        let tp2 = Poly::from_coeffs(vec![q(2, 1), q(1, 1)]);
        let ok = j21.coefficient(&Partition::new(vec![1, 1, 1]))
            == Scalar::from_ratfun(RatFun::new(Poly::one(), tp2));
        record("J[2,1] expansion", ok);

        let c = integral_norm_c(&Partition::new(vec![1, 1]), 2);
        let expect = Scalar::from_ratfun(RatFun::new(
            Poly::from_coeffs(vec![q(2, 1)]),
            Poly::from_coeffs(vec![q(0, 1), q(1, 1), q(1, 1)]),
        ));
        record("c[1,1](2) evaluation norm", c == expect);
    }

    // Duality at small weight
    {
        let mut ok = true;
        for n in 0..=4u64 {
            for lam in crate::partition::partitions_of(n) {
                if !(&jack_norm(&lam) * &dual_norm_b(&lam)).is_one() {
                    ok = false;
                }
            }
        }
        record("duality <J,J> b = 1 (weight <= 4)", ok);
    }

    // Cauchy kernel at low degree
    {
        let (lhs, rhs) = cauchy_truncated(3, 2, 2);
        record("Cauchy kernel identity (degree <= 3)", lhs == rhs);
    }

    // Worked singular vectors
    let spec1 = ScreeningSpec::plus(3, vec![1, 1], vec![-1, -1]).unwrap();
    let spec2 = ScreeningSpec::plus(3, vec![2, 1], vec![-1, -1]).unwrap();
    {
        let v = singular_vector(&spec1).unwrap();
        let c11 = v
            .coefficient(
                &crate::heisenberg::CreationMonomial::identity(2)
                    .with_created(1, 1)
                    .with_created(1, 1),
            )
            .eval_quad(&q(4, 5), 1)
            .map(|x| x.is_rational() && x.a == q(5, 8))
            .unwrap_or(false);
        record("grade-2 vector coefficient 5/8 at t=4/5", c11);
        let report = check_singular_with(&v, &spec1, &TParam::Symbolic, true).unwrap();
        record("grade-2 vector annihilation + kernel oracle", report.passed);
    }
    {
        let v = singular_vector(&spec2).unwrap();
        let report = check_singular_with(&v, &spec2, &TParam::Symbolic, false).unwrap();
        record("grade-3 vector annihilation (symbolic t)", report.passed);
    }

    // Vacuum family structure at t = 3/2
    {
        let specs: Vec<_> = vacuum_module_specs(3, 2).unwrap().take(1).collect();
        let s0 = &specs[0];
        let ok = s0.grade() == 6
            && s0
                .target_weight()
                .labels()
                .iter()
                .all(|l| l.eval_quad(&q(3, 2), 1).map(|x| x.is_zero()).unwrap_or(false));
        record("vacuum family first spec (grade 6, weight -> 0)", ok);
    }

    // Mode algebra
    {
        let report = check_mode_algebra(2).unwrap();
        record("mode algebra relations (grade <= 2)", report.passed);
    }

    let passed = rows.iter().all(|(_, ok)| *ok);
    let mut out = String::new();
    for (name, ok) in &rows {
        writeln!(out, "{} {}", if *ok { "ok  " } else { "FAIL" }, name).unwrap();
    }
    write!(
        out,
        "{} ({} checks)",
        if passed { "SELFTEST PASSED" } else { "SELFTEST FAILED" },
        rows.len()
    )
    .unwrap();
    RunOutcome {
        exit_code: if passed { 0 } else { 1 },
        output: out,
    }
}

// ---- LaTeX rendering ----

pub fn latex_partition(p: &Partition) -> String {
    format!(
        "[{}]",
        p.parts()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn latex_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag_str = if mag.denom() == &num_bigint::BigInt::from(1) {
            mag.numer().to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        let unit = num_traits::One::is_one(&mag);
        match (k, unit) {
            (0, _) => out.push_str(&mag_str),
            (1, true) => out.push('t'),
            (1, false) => out.push_str(&format!("{mag_str} t")),
            (_, true) => out.push_str(&format!("t^{{{k}}}")),
            (_, false) => out.push_str(&format!("{mag_str} t^{{{k}}}")),
        }
    }
    out
}

fn latex_ratfun(f: &RatFun) -> String {
    if f.denominator().is_one() {
        latex_poly(f.numerator())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            latex_poly(f.numerator()),
            latex_poly(f.denominator())
        )
    }
}

pub fn latex_scalar(s: &Scalar) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let plain = s.plain_part();
    let root = s.root_part();
    if root.is_zero() {
        return latex_ratfun(plain);
    }
    let root_str = if root.is_one() {
        "\\alpha_+".to_string()
    } else {
        format!("{} \\alpha_+", latex_ratfun(root))
    };
    if plain.is_zero() {
        root_str
    } else {
        format!("{} + {}", latex_ratfun(plain), root_str)
    }
}

pub fn latex_quad(v: &crate::scalar::Quad) -> String {
    if v.b == num_traits::Zero::zero() {
        return frac_latex(&v.a);
    }
    let root = format!("\\sqrt{{{}}}", v.radicand);
    let b_str = if num_traits::One::is_one(&v.b) {
        root
    } else {
        format!("{} {root}", frac_latex(&v.b))
    };
    if num_traits::Zero::is_zero(&v.a) {
        b_str
    } else {
        format!("{} + {}", frac_latex(&v.a), b_str)
    }
}

fn frac_latex(x: &BigRational) -> String {
    if x.denom() == &num_bigint::BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("\\tfrac{{{}}}{{{}}}", x.numer(), x.denom())
    }
}

pub fn latex_symfunc(f: &crate::symfunc::SymFunc) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (lam, c) in f.terms() {
        let base = if lam.is_empty() {
            String::new()
        } else {
            format!(" p_{{{}}}", latex_partition(lam))
        };
        terms.push(format!("\\left({}\\right){}", latex_scalar(c), base));
    }
    terms.join(" + ")
}

/// Monomial in `a^{k}_{-m}` notation.
pub fn latex_monomial(m: &crate::heisenberg::CreationMonomial) -> String {
    if m.is_identity() {
        return String::new();
    }
    let mut out = String::new();
    for (ci, lam) in m.colors().iter().enumerate() {
        let k = ci + 1;
        for &p in lam.parts() {
            out.push_str(&format!("a^{{{k}}}_{{-{p}}} "));
        }
    }
    out.trim_end().to_string()
}
