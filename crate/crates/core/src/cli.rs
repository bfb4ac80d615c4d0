//! The `tgrs` command line.
//!
//! Exit status: 0 on success, 1 for invalid input or a refused hypothesis,
//! 2 when an internal invariant fails.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{analyze, render_text, OracleBudget, BUDGET_ENV, DEFAULT_BUDGET};
use crate::code::TgrsCode;
use crate::codespec::CodeSpecFile;
use crate::constructions::{
    construct, sweep, worked_example, BuildOptions, ConstructionSpec, T31Params, T33Params,
    T35Params, T36Params, MAX_EXTENSION_DEGREE,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::nt;
use crate::poly::DEFAULT_SEED;
use crate::text::split_top_level;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_INTERNAL: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tgrs",
    version,
    about = "Construct, classify and verify twisted generalized Reed-Solomon codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on column subsets per size for the distance oracles.
    #[arg(long, global = true, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Skip the distance oracles.
    #[arg(long, global = true)]
    pub no_oracle: bool,
    /// Seed for randomized root finding (results do not depend on it).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Cap on the degree of splitting fields over the prime field.
    #[arg(long, global = true, default_value_t = MAX_EXTENSION_DEGREE)]
    pub max_degree: usize,
    /// Print timing and provenance to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "UPPER")]
pub enum Family {
    T31,
    T33,
    T35,
    T36,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code from a construction family and report on it.
    Construct(ConstructArgs),
    /// Full report on a code spec file.
    Classify(FileArgs),
    /// Check the invariants of a code spec file; exit 0 only if self-dual.
    Verify(FileArgs),
    /// Rebuild a worked example (3.10 or 3.11) and compare with its
    /// published verdicts.
    Example {
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and report on every point of a parameter grid.
    Sweep(SweepArgs),
    /// Print G, H and the products G H^T and G G^T.
    Matrices(FileArgs),
}

#[derive(Args, Debug)]
pub struct FileArgs {
    /// Code spec JSON file.
    pub spec: PathBuf,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, ignore_case = true, required_unless_present = "spec")]
    pub family: Option<Family>,
    /// Construction spec JSON file instead of family flags.
    #[arg(long, conflicts_with = "family")]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub l: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long = "q-prime")]
    pub q_prime: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    /// Write the code spec file here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

/// Lists are comma separated; `a..b` is an inclusive integer range.
#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, ignore_case = true)]
    pub family: Family,
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub l: Option<String>,
    /// Default: every nonzero element of the base field.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Default: every nonzero element of the base field.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long = "q-prime")]
    pub q_prime: Option<String>,
    /// Values in a range that are not odd prime powers are skipped.
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// T36 default: every even n with (n+1) | (q-1).
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub j: Option<String>,
    /// Run the distance oracles on built rows (within --budget).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses arguments, runs, and maps the outcome to an exit code.
pub fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    let format = cli.common.format;
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            if format == Format::Json {
                println!("{}", pretty(&error_json(&e)));
            }
            eprintln!("error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_INVALID
            }
        }
    }
}

fn error_json(e: &Error) -> serde_json::Value {
    let kind = match e {
        Error::Hypothesis { .. } => "hypothesis",
        Error::Parse(_) => "parse",
        Error::Internal(_) => "internal",
        _ => "validation",
    };
    let hypothesis = e.hypothesis_name();
    json!({
        "schema": 1,
        "error": { "kind": kind, "hypothesis": hypothesis, "message": e.to_string() }
    })
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Parse(format!("{}: {e}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_err(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn load_code(path: &Path) -> Result<TgrsCode> {
    CodeSpecFile::from_json(&read(path)?)
        .and_then(|s| s.to_code())
        .map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            e => e,
        })
}

impl Common {
    fn budget(&self) -> Option<OracleBudget> {
        (!self.no_oracle).then(|| OracleBudget::new(self.budget))
    }

    fn build_options(&self) -> BuildOptions {
        BuildOptions {
            seed: self.seed,
            max_extension_degree: self.max_degree,
        }
    }
}

fn dispatch(cli: &Cli) -> Result<u8> {
    let common = &cli.common;
    let started = Instant::now();
    let code = match &cli.command {
        Command::Construct(args) => cmd_construct(common, args),
        Command::Classify(args) => cmd_classify(common, args),
        Command::Verify(args) => cmd_verify(common, args),
        Command::Example { id, out } => cmd_example(common, id, out.as_deref()),
        Command::Sweep(args) => cmd_sweep(common, args),
        Command::Matrices(args) => cmd_matrices(common, args),
    }?;
    if common.verbose {
        eprintln!("elapsed: {:.3} s", started.elapsed().as_secs_f64());
    }
    Ok(code)
}

fn required<T: Clone>(v: &Option<T>, flag: &str, family: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::Parse(format!("--{flag} is required for family {family}")))
}

fn construction_spec(args: &ConstructArgs) -> Result<ConstructionSpec> {
    if let Some(path) = &args.spec {
        return serde_json::from_str(&read(path)?).map_err(|e| {
            Error::Parse(format!(
                "{}: line {} column {}: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        });
    }
    let family = args.family.expect("clap requires --family without --spec");
    Ok(match family {
        Family::T31 => ConstructionSpec::T31(T31Params {
            p: required(&args.p, "p", "T31")?,
            t: args.t.unwrap_or(1),
            l: required(&args.l, "l", "T31")?,
            b: required(&args.b, "b", "T31")?,
            c: required(&args.c, "c", "T31")?,
        }),
        Family::T33 => ConstructionSpec::T33(T33Params {
            p: required(&args.p, "p", "T33")?,
            s: args.s,
        }),
        Family::T35 => ConstructionSpec::T35(T35Params {
            q_prime: required(&args.q_prime, "q-prime", "T35")?,
            b: required(&args.b, "b", "T35")?,
            n: required(&args.n, "n", "T35")?,
        }),
        Family::T36 => ConstructionSpec::T36(T36Params {
            q: required(&args.q, "q", "T36")?,
            beta: args.beta.clone().unwrap_or_else(|| "1".into()),
            n: required(&args.n, "n", "T36")?,
            j: args.j.unwrap_or(0),
        }),
    })
}

fn render_report(common: &Common, report: &crate::analysis::CodeReport) -> String {
    match common.format {
        Format::Json => pretty(report),
        Format::Text => render_text(report),
    }
}

fn check_invariants(report: &crate::analysis::CodeReport) -> Result<()> {
    let v = report.invariant_violations();
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Internal(v.join("; ")))
    }
}

fn cmd_construct(common: &Common, args: &ConstructArgs) -> Result<u8> {
    let spec = construction_spec(args)?;
    let built = construct(&spec, &common.build_options())?;
    if common.verbose {
        eprintln!("built {}: {}", spec.label(), built.provenance.description);
        eprintln!(
            "conditions checked: {}",
            built.provenance.conditions_checked.join(", ")
        );
    }
    if let Some(path) = &args.out {
        emit(
            Some(path),
            &CodeSpecFile::from_construction(&built).to_json(),
        )?;
    }
    let report = analyze(&built.code, common.budget())?;
    emit(args.report.as_deref(), &render_report(common, &report))?;
    check_invariants(&report)?;
    Ok(EXIT_OK)
}

fn cmd_classify(common: &Common, args: &FileArgs) -> Result<u8> {
    let code = load_code(&args.spec)?;
    let report = analyze(&code, common.budget())?;
    emit(args.out.as_deref(), &render_report(common, &report))?;
    check_invariants(&report)?;
    Ok(EXIT_OK)
}

fn cmd_verify(common: &Common, args: &FileArgs) -> Result<u8> {
    let code = load_code(&args.spec)?;
    let report = analyze(&code, common.budget())?;
    let violations = report.invariant_violations();
    let verdict = if !violations.is_empty() {
        "invariant violation"
    } else if report.self_dual {
        "self-dual"
    } else {
        "not self-dual"
    };
    let text = match common.format {
        Format::Json => pretty(&json!({
            "schema": 1,
            "verdict": verdict,
            "invariant_violations": violations,
            "report": report,
        })),
        Format::Text => {
            let mut s = render_text(&report);
            for v in &violations {
                s.push_str(&format!("violation: {v}\n"));
            }
            s.push_str(&format!("verdict: {verdict}\n"));
            s
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(if !violations.is_empty() {
        EXIT_INTERNAL
    } else if report.self_dual {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

fn cmd_example(common: &Common, id: &str, out: Option<&Path>) -> Result<u8> {
    let example = worked_example(id)?;
    let outcome = example.run(OracleBudget::new(common.budget))?;
    let text = match common.format {
        Format::Json => pretty(&outcome),
        Format::Text => outcome.table(),
    };
    emit(out, &text)?;
    check_invariants(&outcome.report)?;
    Ok(if outcome.passed {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect()
}

fn cmd_matrices(common: &Common, args: &FileArgs) -> Result<u8> {
    let code = load_code(&args.spec)?;
    let g = code.generator_matrix();
    let h = code.check_matrix();
    let ght = g.mul_transpose(h)?;
    let ggt = g.mul_transpose(g)?;
    let text = match common.format {
        Format::Json => pretty(&json!({
            "schema": 1,
            "field": code.field().to_string(),
            "case_tag": code.case_tag(),
            "G": matrix_rows(g),
            "H": matrix_rows(h),
            "G_Ht": matrix_rows(&ght),
            "G_Gt": matrix_rows(&ggt),
            "G_Ht_zero": ght.is_zero(),
            "G_Gt_zero": ggt.is_zero(),
        })),
        Format::Text => format!(
            "field: {}\ncase_tag: {}\nG ({}x{}):\n{}H ({}x{}):\n{}G H^T (zero: {}):\n{}G G^T (zero: {}):\n{}",
            code.field(),
            code.case_tag(),
            g.rows(),
            g.cols(),
            g,
            h.rows(),
            h.cols(),
            h,
            ght.is_zero(),
            ght,
            ggt.is_zero(),
            ggt
        ),
    };
    emit(args.out.as_deref(), &text)?;
    if !ght.is_zero() {
        return Err(Error::Internal("G H^T != 0".into()));
    }
    Ok(EXIT_OK)
}

/// Comma list of integers and inclusive `a..b` ranges. Range members
/// failing `keep` are dropped; listed values are kept as given.
fn int_list(s: &str, flag: &str, keep: impl Fn(u64) -> bool) -> Result<Vec<u64>> {
    let bad = |item: &str| Error::Parse(format!("--{flag}: invalid item `{item}`"));
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        match item.split_once("..") {
            Some((a, b)) => {
                let a: u64 = a.trim().parse().map_err(|_| bad(item))?;
                let b: u64 = b.trim().parse().map_err(|_| bad(item))?;
                out.extend((a..=b).filter(|&x| keep(x)));
            }
            None => out.push(item.parse().map_err(|_| bad(item))?),
        }
    }
    Ok(out)
}

fn usize_list(s: &str, flag: &str) -> Result<Vec<usize>> {
    Ok(int_list(s, flag, |_| true)?
        .into_iter()
        .map(|x| x as usize)
        .collect())
}

/// Comma list of field elements; integer `a..b` ranges expand.
fn element_list(s: &str, flag: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for item in split_top_level(s)
        .into_iter()
        .map(str::trim)
        .filter(|i| !i.is_empty())
    {
        if item.contains("..") {
            out.extend(
                int_list(item, flag, |_| true)?
                    .iter()
                    .map(ToString::to_string),
            );
        } else {
            out.push(item.to_string());
        }
    }
    Ok(out)
}

fn odd_prime_power(q: u64) -> bool {
    nt::prime_power(q).is_some_and(|(p, _)| p != 2)
}

/// Every nonzero element of `F_q`, as text, in index order.
fn nonzero_elements(q: u64) -> Result<Vec<String>> {
    let (p, s) =
        nt::prime_power(q).ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
    let field = Field::new(p, s as usize)?;
    Ok((1..q).map(|i| field.from_index(i).to_string()).collect())
}

fn need<'a>(v: &'a Option<String>, flag: &str, family: &str) -> Result<&'a str> {
    v.as_deref()
        .ok_or_else(|| Error::Parse(format!("--{flag} is required for a {family} sweep")))
}

/// Expands the sweep flags into construction specs, in nested-loop order.
pub fn sweep_grid(args: &SweepArgs) -> Result<Vec<ConstructionSpec>> {
    let mut specs = Vec::new();
    match args.family {
        Family::T31 => {
            let ts = match &args.t {
                Some(t) => usize_list(t, "t")?,
                None => vec![1],
            };
            for p in int_list(need(&args.p, "p", "T31")?, "p", nt::is_prime)? {
                for &t in &ts {
                    for l in int_list(need(&args.l, "l", "T31")?, "l", |_| true)? {
                        let default = || {
                            if nt::is_prime(p) {
                                nonzero_elements(p.pow(t as u32))
                            } else {
                                Ok(vec!["1".to_string()])
                            }
                        };
                        let bs = match &args.b {
                            Some(b) => element_list(b, "b")?,
                            None => default()?,
                        };
                        let cs = match &args.c {
                            Some(c) => element_list(c, "c")?,
                            None => default()?,
                        };
                        for b in &bs {
                            for c in &cs {
                                specs.push(ConstructionSpec::T31(T31Params {
                                    p,
                                    t,
                                    l,
                                    b: b.clone(),
                                    c: c.clone(),
                                }));
                            }
                        }
                    }
                }
            }
        }
        Family::T33 => {
            for p in int_list(need(&args.p, "p", "T33")?, "p", nt::is_prime)? {
                specs.push(ConstructionSpec::T33(T33Params { p, s: None }));
            }
        }
        Family::T35 => {
            let ns = usize_list(need(&args.n, "n", "T35")?, "n")?;
            let qs = int_list(
                need(&args.q_prime, "q-prime", "T35")?,
                "q-prime",
                odd_prime_power,
            )?;
            for q_prime in qs {
                let bs = match &args.b {
                    Some(b) => element_list(b, "b")?,
                    None if odd_prime_power(q_prime) => nonzero_elements(q_prime)?,
                    None => vec!["1".to_string()],
                };
                for &n in &ns {
                    for b in &bs {
                        specs.push(ConstructionSpec::T35(T35Params {
                            q_prime,
                            b: b.clone(),
                            n,
                        }));
                    }
                }
            }
        }
        Family::T36 => {
            let betas = match &args.beta {
                Some(b) => element_list(b, "beta")?,
                None => vec!["1".to_string()],
            };
            let js = match &args.j {
                Some(j) => usize_list(j, "j")?,
                None => vec![0],
            };
            for q in int_list(need(&args.q, "q", "T36")?, "q", odd_prime_power)? {
                let ns = match &args.n {
                    Some(n) => usize_list(n, "n")?,
                    None => (2..q.saturating_sub(1) as usize)
                        .step_by(2)
                        .filter(|&n| (q - 1) % (n as u64 + 1) == 0)
                        .collect(),
                };
                for &n in &ns {
                    for beta in &betas {
                        for &j in &js {
                            specs.push(ConstructionSpec::T36(T36Params {
                                q,
                                beta: beta.clone(),
                                n,
                                j,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(specs)
}

fn cmd_sweep(common: &Common, args: &SweepArgs) -> Result<u8> {
    let specs = sweep_grid(args)?;
    let budget = if args.oracle { common.budget() } else { None };
    let table = sweep(&specs, &common.build_options(), budget);
    let text = match common.format {
        Format::Json => pretty(&table),
        Format::Text => table.render_text(),
    };
    emit(args.out.as_deref(), &text)?;
    let violations = table.violations();
    if !violations.is_empty() {
        return Err(Error::Internal(violations.join("; ")));
    }
    Ok(EXIT_OK)
}
