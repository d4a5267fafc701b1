//! The `qsusy` command line. Every subcommand produces one [`Output`]:
//! `{schema, command, inputs, results, summary, data?}`. Results keep
//! insertion order, so identical inputs give byte-identical JSON.
//!
//! Exit codes: 0 when nothing failed, 1 when a check failed, 2 on a usage
//! error (including a malformed rational).

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{CATALOG, OUTSIDE_SUITES};
use crate::error::{Error, Result};
use crate::ground_state::{
    classify_normalizability, closed_form, ground_state_suite, solve_zero_mode, td_gaussian,
    verify_annihilation, Branch, MIN_CLASSIFY_ORDER,
};
use crate::report::{Check, Report, Status, Summary};
use crate::ring::Rational;
use crate::scalar::{parse_rational, rational_to_f64, ExactScalar};
use crate::special::{
    pq_exp_as_phi, pq_factorial, pq_factorial_at, pq_number, pq_number_at, q_pochhammer,
    special_function_suite, td_exp_as_bibasic, td_exp_coeff, td_exp_f64, td_factorial, td_number,
    twin_pochhammer, Evaluation, Mode, Normalizer,
};
use crate::spectra::{
    energy_checks, find_degeneracies, scan_degeneracies, spectra_suite, td_energy,
    verify_fock_algebra,
};
use crate::susy::{
    build_model, degeneration_checks, heisenberg_suite, superoscillator_identity_suite,
    verify_intertwining, verify_susy_algebra, CrossCheck, ModelKind, Sign, Superpotential,
};
use crate::{QLaurent, Ring, Series};

pub const SCHEMA: &str = "1";

#[derive(Parser, Debug)]
#[command(
    name = "qsusy",
    version,
    about = "Exact verification of q-deformed supersymmetric quantum mechanics"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Undeformed,
    Spiridonov,
    Td,
}

impl From<KindArg> for ModelKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Undeformed => ModelKind::Undeformed,
            KindArg::Spiridonov => ModelKind::Spiridonov,
            KindArg::Td => ModelKind::Td,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    F,
    #[value(name = "f_tilde", alias = "f-tilde")]
    FTilde,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::F => Branch::F,
            BranchArg::FTilde => Branch::FTilde,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctionArg {
    /// The whole special-function identity suite.
    Suite,
    TdNumber,
    TdFactorial,
    TdExp,
    PqNumber,
    PqFactorial,
    /// `exp_{p,q}` summed as a twin-basic series.
    PqExp,
    TwinPochhammer,
    QPochhammer,
    /// The bibasic series whose `p -> 1` limit is the TD-exponent.
    BibasicTd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizerArg {
    P,
    Q,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Supersymmetry algebra and intertwining for one model.
    VerifySusy {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Polynomial superpotential, e.g. "-x" or "x^3-x".
        #[arg(long, default_value = "x", allow_hyphen_values = true)]
        w: String,
        /// Cross-check values of q (repeatable, "num/den").
        #[arg(long, allow_hyphen_values = true)]
        q: Vec<String>,
        /// Highest monomial degree for the cross-check.
        #[arg(long, default_value_t = 24)]
        degree: usize,
        /// Also check the intertwining relations.
        #[arg(long)]
        intertwining: bool,
    },
    /// Reconstruction of X and P from the TD ladder operators.
    VerifyHeisenberg {
        #[arg(long, allow_hyphen_values = true)]
        q: Vec<String>,
        #[arg(long, default_value_t = 50)]
        max_degree: usize,
    },
    /// Superoscillator identity lists.
    Superoscillator {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Sign of `W = ±x`; each list has its own default.
        #[arg(long, value_enum)]
        sign: Option<SignArg>,
        #[arg(long, allow_hyphen_values = true)]
        q: Vec<String>,
        #[arg(long, default_value_t = 24)]
        degree: usize,
    },
    /// Zero-mode series of the TD lowering operator.
    GroundState {
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, value_enum)]
        branch: Option<BranchArg>,
    },
    /// The ground state written as a TD-exponent.
    TdGaussian {
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Evaluate a q-special function.
    Specfun {
        #[arg(long, value_enum)]
        function: FunctionArg,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Terms of the exact partial sum.
        #[arg(long, default_value_t = 30)]
        terms: usize,
        /// Relative stopping tolerance of the float sum.
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        max_terms: usize,
        #[arg(long, value_enum, default_value_t = NormalizerArg::P)]
        normalizer: NormalizerArg,
        /// Sample count for `--function suite`.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Fock realization and energy levels of the TD oscillator.
    Spectrum {
        #[arg(long, default_value_t = 16)]
        dim: usize,
        #[arg(long, default_value = "1/2")]
        q: String,
        #[arg(long, default_value_t = 8)]
        levels: u64,
    },
    /// Roots of `E_n(q) = E_m(q)`.
    Degeneracy {
        #[arg(long, required_unless_present = "scan")]
        n: Option<u64>,
        #[arg(long, required_unless_present = "scan")]
        m: Option<u64>,
        /// Search interval "lo,hi" with rational endpoints.
        #[arg(long, default_value = "0,1")]
        interval: String,
        /// Scan every pair `n < m <= n_max`.
        #[arg(long)]
        scan: bool,
        #[arg(long, default_value_t = 5)]
        n_max: u64,
    },
    /// Every suite, plus a coverage manifest.
    All {
        #[arg(long, default_value_t = 80)]
        order: usize,
        #[arg(long, default_value_t = 50)]
        max_degree: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifySusy { .. } => "verify-susy",
            Command::VerifyHeisenberg { .. } => "verify-heisenberg",
            Command::Superoscillator { .. } => "superoscillator",
            Command::GroundState { .. } => "ground-state",
            Command::TdGaussian { .. } => "td-gaussian",
            Command::Specfun { .. } => "specfun",
            Command::Spectrum { .. } => "spectrum",
            Command::Degeneracy { .. } => "degeneracy",
            Command::All { .. } => "all",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Output {
    pub schema: &'static str,
    pub command: &'static str,
    pub inputs: Value,
    pub results: Vec<Check>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Output {
    fn new(command: &'static str, inputs: Value, report: Report, data: Option<Value>) -> Self {
        Output {
            schema: SCHEMA,
            command,
            inputs,
            summary: report.summary(),
            results: report.checks,
            data,
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("qsusy {} (schema {})\n", self.command, self.schema);
        for c in &self.results {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Informational => "INFO",
            };
            s.push_str(&format!("{tag} {} [{}]\n", c.id, c.paper_ref));
            if let Some(d) = &c.detail {
                s.push_str(&format!("     {d}\n"));
            }
            if let Some(r) = &c.residual {
                s.push_str(&format!("     residual: {r}\n"));
            }
        }
        let Summary {
            passed,
            failed,
            informational,
        } = self.summary;
        s.push_str(&format!(
            "{passed} passed, {failed} failed, {informational} informational\n"
        ));
        if let Some(d) = &self.data {
            s.push_str(&serde_json::to_string_pretty(d).expect("data serializes"));
            s.push('\n');
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut j = self.to_json();
                j.push('\n');
                j
            }
            Format::Text => self.to_text(),
        }
    }
}

/// Parses `argv` (including the program name), runs, writes the report and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("qsusy: {e}");
            return 2;
        }
    };
    let text = out.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("qsusy: cannot write report: {e}");
        return 2;
    }
    out.exit_code()
}

/// Runs one command. `Err` means the inputs were unusable (exit code 2);
/// mathematical failures such as poles come back as failing checks.
pub fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::VerifySusy {
            kind,
            w,
            q,
            degree,
            intertwining,
        } => {
            let w: Superpotential = w.parse()?;
            let qs = parse_all(q)?;
            let cross = (!qs.is_empty()).then(|| CrossCheck::new(qs.clone(), *degree));
            let model = build_model((*kind).into(), &w);
            let mut r = verify_susy_algebra(&model, cross.as_ref());
            if *intertwining {
                r.extend(verify_intertwining(&model, cross.as_ref()));
            }
            let inputs = json!({
                "kind": ModelKind::from(*kind).name(), "w": w.to_string(), "q": strings(&qs),
                "degree": degree, "intertwining": intertwining,
            });
            Ok(Output::new(cmd.name(), inputs, r, None))
        }
        Command::VerifyHeisenberg { q, max_degree } => {
            let mut qs = parse_all(q)?;
            if qs.is_empty() {
                qs = default_heisenberg_q();
            }
            let r = heisenberg_suite(&qs, *max_degree);
            let inputs = json!({ "q": strings(&qs), "max_degree": max_degree });
            Ok(Output::new(cmd.name(), inputs, r, None))
        }
        Command::Superoscillator {
            kind,
            sign,
            q,
            degree,
        } => {
            let qs = parse_all(q)?;
            let cross = (!qs.is_empty()).then(|| CrossCheck::new(qs.clone(), *degree));
            let sign = sign.map(|s| match s {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            });
            let r = superoscillator_identity_suite((*kind).into(), sign, cross.as_ref());
            let inputs = json!({
                "kind": ModelKind::from(*kind).name(),
                "sign": sign.map(|s| if s == Sign::Plus { "plus" } else { "minus" }),
                "q": strings(&qs), "degree": degree,
            });
            Ok(Output::new(cmd.name(), inputs, r, None))
        }
        Command::GroundState { order, q, branch } => {
            ground_state_command(*order, q.as_deref(), *branch)
        }
        Command::TdGaussian { order, q } => td_gaussian_command(*order, q.as_deref()),
        Command::Specfun { .. } => specfun_command(cmd),
        Command::Spectrum { dim, q, levels } => {
            let q0 = parse_rational(q)?;
            let mut r = Report::new();
            match verify_fock_algebra(*dim, &q0) {
                Ok(f) => r.extend(f),
                Err(e) => r.push(Check::fail("run.error", e.to_string())),
            }
            r.extend(energy_checks(*levels));
            let rows: Vec<Value> = (0..=*levels)
                .map(|n| {
                    let e = td_energy(n);
                    let at = e
                        .eval(&q0)
                        .map(|v| v.to_string())
                        .unwrap_or_else(|e| e.to_string());
                    json!({ "n": n, "energy": e.to_string(), "at_q": at })
                })
                .collect();
            let inputs = json!({ "dim": dim, "q": q0.to_string(), "levels": levels });
            Ok(Output::new(
                cmd.name(),
                inputs,
                r,
                Some(json!({ "levels": rows })),
            ))
        }
        Command::Degeneracy {
            n,
            m,
            interval,
            scan,
            n_max,
        } => {
            let (lo, hi) = parse_interval(interval)?;
            let iv = (rational_to_f64(&lo), rational_to_f64(&hi));
            let mut r = Report::new();
            let inputs;
            let data;
            if *scan {
                inputs = json!({ "scan": true, "n_max": n_max, "interval": [lo.to_string(), hi.to_string()] });
                data = match scan_degeneracies(*n_max, iv) {
                    Ok(s) => {
                        r.push(Check::from_outcome(
                            "degeneracy.verified",
                            s.unverified.is_empty(),
                            || format!("{:?}", s.unverified),
                        ));
                        r.push(Check::from_outcome(
                            "degeneracy.pairwise",
                            s.triple.is_empty(),
                            || format!("{:?}", s.triple),
                        ));
                        let roots: Vec<Value> = s.roots.iter().map(root_json).collect();
                        Some(json!({ "roots": roots }))
                    }
                    Err(e) => {
                        r.push(Check::fail("run.error", e.to_string()));
                        None
                    }
                };
            } else {
                let (n, m) = (n.expect("clap requires n"), m.expect("clap requires m"));
                inputs = json!({ "n": n, "m": m, "interval": [lo.to_string(), hi.to_string()] });
                data = match find_degeneracies(n, m, iv) {
                    Ok(roots) if roots.is_empty() => {
                        r.push(Check::informational(
                            "degeneracy.none",
                            None,
                            format!("E_{n} - E_{m} has no sign change on the search grid"),
                        ));
                        Some(json!({ "n": n, "m": m, "roots": [] }))
                    }
                    Ok(roots) => {
                        for d in &roots {
                            r.push(
                                Check::from_outcome(
                                    "degeneracy.verified",
                                    d.residual < crate::spectra::RESIDUAL_TOL,
                                    || format!("{:e}", d.residual),
                                )
                                .with_detail(format!("q = {}", d.q_root_string())),
                            );
                        }
                        let first = &roots[0];
                        let all: Vec<Value> = roots.iter().map(root_json).collect();
                        Some(json!({
                            "n": n, "m": m, "q_root": first.q_root_string(), "residual": first.residual,
                            "roots": all,
                        }))
                    }
                    Err(e) => {
                        r.push(Check::fail("run.error", e.to_string()));
                        None
                    }
                };
            }
            Ok(Output::new(cmd.name(), inputs, r, data))
        }
        Command::All {
            order,
            max_degree,
            samples,
            seed,
        } => Ok(all_command(*order, *max_degree, *samples, *seed)),
    }
}

fn root_json(d: &crate::spectra::Degeneracy) -> Value {
    json!({ "n": d.n, "m": d.m, "q_root": d.q_root_string(), "residual": d.residual })
}

fn parse_all(qs: &[String]) -> Result<Vec<Rational>> {
    qs.iter().map(|s| parse_rational(s)).collect()
}

fn parse_opt(s: Option<&str>) -> Result<Option<Rational>> {
    s.map(parse_rational).transpose()
}

fn strings(qs: &[Rational]) -> Vec<String> {
    qs.iter().map(ToString::to_string).collect()
}

fn parse_interval(s: &str) -> Result<(Rational, Rational)> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| Error::InvalidInterval(format!("{s:?}: expected \"lo,hi\"")))?;
    let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
    if lo >= hi {
        return Err(Error::InvalidInterval(format!(
            "{s:?}: lo must be below hi"
        )));
    }
    Ok((lo, hi))
}

fn default_heisenberg_q() -> Vec<Rational> {
    use crate::scalar::rat;
    vec![rat(1, 2), rat(3, 5), rat(5, 3), rat(2, 1)]
}

fn series_strings(s: &Series<QLaurent>, q0: Option<&Rational>) -> Vec<String> {
    s.coeffs()
        .iter()
        .map(|c| match q0 {
            Some(q0) => c
                .eval(q0)
                .map(|v| v.to_string())
                .unwrap_or_else(|e| format!("error: {e}")),
            None => c.to_string(),
        })
        .collect()
}

fn ground_state_command(
    order: usize,
    q: Option<&str>,
    branch: Option<BranchArg>,
) -> Result<Output> {
    let q0 = parse_opt(q)?;
    let branches: Vec<Branch> = match branch {
        Some(b) => vec![b.into()],
        None => Branch::ALL.to_vec(),
    };
    let mut r = Report::new();
    let mut rows = Vec::new();
    for b in branches {
        let sol = solve_zero_mode(b, order);
        r.push(Check::from_outcome(
            &format!("ground.closed_form.{b}"),
            sol.coeffs == closed_form(b, order),
            || "recurrence and closed form differ".into(),
        ));
        r.push(verify_annihilation(&sol, &Superpotential::x()));
        let classification = match &q0 {
            Some(q0) if order >= MIN_CLASSIFY_ORDER => match classify_normalizability(&sol, q0) {
                Ok(c) => serde_json::to_value(c).expect("classification serializes"),
                Err(e) => json!({ "error": e.to_string() }),
            },
            Some(_) => {
                json!({ "error": format!("order below {MIN_CLASSIFY_ORDER}: insufficient data") })
            }
            None => Value::Null,
        };
        rows.push(json!({
            "branch": b.name(), "c0": sol.c0,
            "coefficients": series_strings(&sol.coeffs, q0.as_ref()),
            "classification": classification,
        }));
    }
    let inputs = json!({ "order": order, "q": q0.as_ref().map(ToString::to_string), "branch": branch.map(|b| Branch::from(b).name()) });
    let data = json!({ "q": q0.as_ref().map(ToString::to_string), "solutions": rows });
    Ok(Output::new("ground-state", inputs, r, Some(data)))
}

fn td_gaussian_command(order: usize, q: Option<&str>) -> Result<Output> {
    let q0 = parse_opt(q)?;
    let g = td_gaussian(order);
    let mut r = Report::new();
    r.push(Check::from_outcome(
        "ground.td_gaussian",
        g == closed_form(Branch::F, order),
        || "TD-exponent and zero mode differ".into(),
    ));
    let inputs = json!({ "order": order, "q": q0.as_ref().map(ToString::to_string) });
    let data = json!({ "q": q0.as_ref().map(ToString::to_string), "coefficients": series_strings(&g, q0.as_ref()) });
    Ok(Output::new("td-gaussian", inputs, r, Some(data)))
}

fn need(name: &str, v: Option<&String>) -> Result<Rational> {
    let s =
        v.ok_or_else(|| Error::Precondition(format!("--{name} is required for this function")))?;
    parse_rational(s)
}

fn scalar(r: &Rational) -> ExactScalar {
    ExactScalar::rational(r.clone())
}

fn eval_json<F: ToString>(e: &Evaluation<F>) -> (String, usize, bool) {
    (e.value.to_string(), e.terms_used, e.converged)
}

fn specfun_command(cmd: &Command) -> Result<Output> {
    let Command::Specfun {
        function,
        n,
        a,
        b,
        p,
        q,
        z,
        mode,
        terms,
        tol,
        max_terms,
        normalizer,
        samples,
        seed,
    } = cmd
    else {
        unreachable!("specfun_command is only called for specfun")
    };
    let fname = function
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    if *function == FunctionArg::Suite {
        let r = special_function_suite(*samples, *seed);
        let inputs = json!({ "function": fname, "samples": samples, "seed": seed });
        return Ok(Output::new("specfun", inputs, r, None));
    }
    let series_fn = matches!(
        function,
        FunctionArg::TdExp | FunctionArg::PqExp | FunctionArg::BibasicTd
    );
    let mode_arg = mode.unwrap_or(if series_fn {
        ModeArg::Float
    } else {
        ModeArg::Exact
    });
    let mode = match mode_arg {
        ModeArg::Exact => Mode::ExactPartial { n_terms: *terms },
        ModeArg::Float => Mode::Float {
            tol: *tol,
            max_terms: *max_terms,
        },
    };
    let nn = || n.ok_or_else(|| Error::Precondition("--n is required for this function".into()));

    let mut params = BTreeMap::new();
    for (k, v) in [("a", a), ("b", b), ("p", p), ("q", q), ("z", z)] {
        if let Some(v) = v {
            params.insert(k.to_string(), Value::String(parse_rational(v)?.to_string()));
        }
    }
    if let Some(n) = n {
        params.insert("n".into(), json!(n));
    }

    // (value, terms_used, converged)
    let outcome: Result<(String, usize, bool)> = match function {
        FunctionArg::Suite => unreachable!("handled above"),
        FunctionArg::TdNumber | FunctionArg::TdFactorial => {
            let n = nn()? as u64;
            let sym = if *function == FunctionArg::TdNumber {
                td_number(n)
            } else {
                td_factorial(n)
            };
            match parse_opt(q.as_deref())? {
                Some(q0) => sym.eval(&q0).map(|v| (v.to_string(), 0, true)),
                None => Ok((sym.to_string(), 0, true)),
            }
        }
        FunctionArg::PqNumber | FunctionArg::PqFactorial => {
            let n = nn()?;
            match (parse_opt(p.as_deref())?, parse_opt(q.as_deref())?) {
                (Some(p0), Some(q0)) => {
                    let (p0, q0) = (scalar(&p0), scalar(&q0));
                    let v = if *function == FunctionArg::PqNumber {
                        pq_number_at(n, &p0, &q0)
                    } else {
                        pq_factorial_at(n, &p0, &q0)
                    };
                    Ok((v.to_string(), 0, true))
                }
                _ => {
                    let sym = if *function == FunctionArg::PqNumber {
                        pq_number(n)
                    } else {
                        pq_factorial(n)
                    };
                    Ok((sym.to_string(), 0, true))
                }
            }
        }
        FunctionArg::TwinPochhammer => {
            let n = nn()?;
            let (a0, b0, p0, q0) = (
                need("a", a.as_ref())?,
                need("b", b.as_ref())?,
                need("p", p.as_ref())?,
                need("q", q.as_ref())?,
            );
            let v = twin_pochhammer(&scalar(&a0), &scalar(&b0), &scalar(&p0), &scalar(&q0), n);
            Ok((v.to_string(), 0, true))
        }
        FunctionArg::QPochhammer => {
            let n = nn()?;
            let (a0, q0) = (need("a", a.as_ref())?, need("q", q.as_ref())?);
            Ok((
                q_pochhammer(&scalar(&a0), &scalar(&q0), n).to_string(),
                0,
                true,
            ))
        }
        FunctionArg::TdExp => {
            let (q0, z0) = (need("q", q.as_ref())?, need("z", z.as_ref())?);
            match mode {
                Mode::ExactPartial { n_terms } => {
                    let zs = scalar(&z0);
                    let mut sum = ExactScalar::zero();
                    let mut zp = ExactScalar::one();
                    let mut err = None;
                    for k in 0..n_terms as u64 {
                        match td_exp_coeff(&QLaurent::one(), 1, k).eval(&q0) {
                            Ok(c) => sum = &sum + &(&c * &zp),
                            Err(e) => {
                                err = Some(e);
                                break;
                            }
                        }
                        zp = &zp * &zs;
                    }
                    match err {
                        Some(e) => Err(e),
                        None => Ok((sum.to_string(), n_terms, false)),
                    }
                }
                Mode::Float { tol, max_terms } => {
                    td_exp_f64(rational_to_f64(&q0), rational_to_f64(&z0), tol, max_terms)
                        .map(|(v, k)| (v.to_string(), k, true))
                }
            }
        }
        FunctionArg::PqExp => {
            let (p0, q0, z0) = (
                need("p", p.as_ref())?,
                need("q", q.as_ref())?,
                need("z", z.as_ref())?,
            );
            match mode {
                Mode::ExactPartial { .. } => pq_exp_as_phi(scalar(&p0), scalar(&q0), scalar(&z0))
                    .eval(mode)
                    .map(|e| eval_json(&e)),
                Mode::Float { .. } => {
                    let f = |r: &Rational| rational_to_f64(r);
                    pq_exp_as_phi(f(&p0), f(&q0), f(&z0))
                        .eval(mode)
                        .map(|e| eval_json(&e))
                }
            }
        }
        FunctionArg::BibasicTd => {
            let (p0, q0, z0) = (
                need("p", p.as_ref())?,
                need("q", q.as_ref())?,
                need("z", z.as_ref())?,
            );
            let norm = match normalizer {
                NormalizerArg::P => Normalizer::P,
                NormalizerArg::Q => Normalizer::Q,
            };
            params.insert(
                "normalizer".into(),
                json!(if *normalizer == NormalizerArg::P {
                    "p"
                } else {
                    "q"
                }),
            );
            let pole = || Error::ZeroDenominator("q = 0".into());
            match mode {
                Mode::ExactPartial { .. } => {
                    td_exp_as_bibasic(scalar(&p0), scalar(&q0), scalar(&z0), norm)
                        .ok_or_else(pole)
                        .and_then(|s| s.eval(mode))
                        .map(|e| eval_json(&e))
                }
                Mode::Float { .. } => {
                    let f = |r: &Rational| rational_to_f64(r);
                    td_exp_as_bibasic(f(&p0), f(&q0), f(&z0), norm)
                        .ok_or_else(pole)
                        .and_then(|s| s.eval(mode))
                        .map(|e| eval_json(&e))
                }
            }
        }
    };
    let mode_name = if mode_arg == ModeArg::Exact {
        "exact"
    } else {
        "float"
    };
    let mut r = Report::new();
    let data = match outcome {
        Ok((value, terms_used, converged)) => json!({
            "function": fname, "parameters": params, "mode": mode_name,
            "value": value, "terms_used": terms_used, "converged": converged,
        }),
        Err(e @ (Error::Precondition(_) | Error::InvalidRational(_))) => return Err(e),
        Err(e) => {
            r.push(Check::fail("run.error", e.to_string()));
            json!({
                "function": fname, "parameters": params, "mode": mode_name,
                "value": Value::Null, "terms_used": 0, "converged": false,
            })
        }
    };
    let inputs = json!({ "function": fname, "parameters": params, "mode": mode_name });
    Ok(Output::new("specfun", inputs, r, Some(data)))
}

/// Runs every suite with default parameters.
pub fn full_report(order: usize, max_degree: usize, samples: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let ws: Vec<Superpotential> = ["-x", "x", "x^3-x"]
        .iter()
        .map(|s| s.parse().expect("built-in superpotential parses"))
        .collect();
    for w in &ws {
        for kind in ModelKind::ALL {
            let m = build_model(kind, w);
            let tag = |mut rep: Report| {
                for c in &mut rep.checks {
                    c.detail = Some(match c.detail.take() {
                        Some(d) => format!("W = {w}: {d}"),
                        None => format!("W = {w}"),
                    });
                }
                rep
            };
            r.extend(tag(verify_susy_algebra(&m, None)));
            r.extend(tag(verify_intertwining(&m, None)));
        }
        r.extend(degeneration_checks(w));
    }
    r.extend(superoscillator_identity_suite(
        ModelKind::Spiridonov,
        None,
        None,
    ));
    r.extend(superoscillator_identity_suite(ModelKind::Td, None, None));
    r.extend(heisenberg_suite(&default_heisenberg_q(), max_degree));
    r.extend(ground_state_suite(order));
    r.extend(special_function_suite(samples, seed));
    for q0 in [crate::scalar::rat(1, 2), crate::scalar::rat(2, 1)] {
        match spectra_suite(32, &q0, 8) {
            Ok(s) => r.extend(s),
            Err(e) => r.push(Check::fail("run.error", e.to_string())),
        }
    }
    r
}

/// Equation numbers and section references exercised by `report`, plus the
/// suite ids it never reached (empty for a complete run).
pub fn coverage_manifest(report: &Report) -> Value {
    let run: BTreeSet<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    let mut equations = BTreeSet::new();
    let mut sections = BTreeSet::new();
    let mut by_ref: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for c in &report.checks {
        by_ref
            .entry(c.paper_ref.as_str())
            .or_default()
            .insert(c.id.as_str());
        for eq in equation_numbers(&c.paper_ref) {
            equations.insert(eq);
        }
        for sec in c.paper_ref.split([',', ' ']).filter(|t| t.starts_with('§')) {
            sections.insert(sec.to_string());
        }
    }
    let uncovered: Vec<&str> = CATALOG
        .iter()
        .map(|(id, _)| *id)
        .filter(|id| !run.contains(id) && !OUTSIDE_SUITES.contains(id))
        .collect();
    json!({
        "equations": equations.iter().map(|n| format!("Eq. {n}")).collect::<Vec<_>>(),
        "sections": sections,
        "checks_by_ref": by_ref,
        "uncovered_ids": uncovered,
    })
}

/// Numbers following `"Eq. "` or `"Eqs "` (ranges such as `39-44` expand).
fn equation_numbers(s: &str) -> Vec<u32> {
    let mut out = Vec::new();
    for marker in ["Eq. ", "Eqs. ", "Eqs "] {
        let mut rest = s;
        while let Some(i) = rest.find(marker) {
            rest = &rest[i + marker.len()..];
            let span: String = rest
                .chars()
                .take_while(|c| c.is_ascii_digit() || matches!(c, '-' | '/' | ',' | ' '))
                .collect();
            for part in span.split([',', '/', ' ']).filter(|t| !t.is_empty()) {
                match part.split_once('-') {
                    Some((a, b)) => {
                        if let (Ok(a), Ok(b)) = (a.parse::<u32>(), b.parse::<u32>()) {
                            out.extend(a..=b);
                        }
                    }
                    None => out.extend(part.parse::<u32>().ok()),
                }
            }
        }
    }
    out
}

fn all_command(order: usize, max_degree: usize, samples: usize, seed: u64) -> Output {
    let r = full_report(order, max_degree, samples, seed);
    let coverage = coverage_manifest(&r);
    let inputs =
        json!({ "order": order, "max_degree": max_degree, "samples": samples, "seed": seed });
    Output::new("all", inputs, r, Some(json!({ "coverage": coverage })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Output> {
        let cli =
            Cli::try_parse_from(std::iter::once("qsusy").chain(args.iter().copied())).unwrap();
        execute(&cli.command)
    }

    #[test]
    fn equation_numbers_expand_ranges() {
        assert_eq!(equation_numbers("Eq. 12 (TD analogue)"), vec![12]);
        assert_eq!(equation_numbers("Eqs 39-41"), vec![39, 40, 41]);
        assert_eq!(equation_numbers("Eq. 48/49"), vec![48, 49]);
        assert!(equation_numbers("§2.1, E_n").is_empty());
    }

    #[test]
    fn decimals_are_usage_errors() {
        assert!(matches!(
            exec(&["verify-susy", "--kind", "td", "--q", "0.5"]),
            Err(Error::InvalidRational(_))
        ));
        assert!(exec(&["spectrum", "--q", "1.5"]).is_err());
    }

    #[test]
    fn susy_td_minus_x() {
        let o = exec(&["verify-susy", "--kind", "td", "--w", "-x", "--q", "3/5"]).unwrap();
        assert_eq!(o.results.len(), 5);
        assert!(o.ok());
    }

    #[test]
    fn gaussian_at_q_one() {
        let o = exec(&[
            "ground-state",
            "--order",
            "12",
            "--q",
            "1/1",
            "--branch",
            "f",
        ])
        .unwrap();
        let c = &o.data.as_ref().unwrap()["solutions"][0]["coefficients"];
        let want = [
            "1", "0", "-1/2", "0", "1/8", "0", "-1/48", "0", "1/384", "0", "-1/3840", "0",
            "1/46080",
        ];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(c[k], *w, "k = {k}");
        }
    }

    #[test]
    fn specfun_pole_is_a_failing_check() {
        let o = exec(&[
            "specfun",
            "--function",
            "pq-exp",
            "--p",
            "1",
            "--q",
            "1",
            "--z",
            "1/10",
            "--mode",
            "exact",
        ])
        .unwrap();
        assert!(!o.ok(), "p = q makes every denominator vanish");
    }
}
