//! Command-line front end: argument parsing, job dispatch and report
//! formatting. `main` only parses arguments and forwards to [`run`].

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bernstein::{bfunction, symmetry_check, BOutcome, BReport, BResult};
use crate::error::{Error, Result};
use crate::fixtures::named;
use crate::geometry::{
    chain_assemble, conormal_order, euler_at_point, point_context, strong_euler_at_point, OrderForm,
    INADMISSIBLE_MESSAGE,
};
use crate::liealg::{character, classify_discriminant, discriminant, validate_algebra, GeneratorSet, SquarefreeOptions};
use crate::poly::{parse_unipoly, rational_root_spectrum, MultiPoly, UniPoly};
use crate::quiver::QuiverSpec;
use crate::rational::{format_rational, parse_vector, serde_vec, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MATH: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "prehomog", version, about = "Discriminants and b-functions of prehomogeneous determinants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SourceArgs {
    /// Built-in fixture; repeat to tabulate several.
    #[arg(long = "fixture", value_name = "NAME", conflicts_with = "input")]
    pub fixture: Vec<String>,
    /// JSON file with either generators or a quiver.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub trials: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, trials: 8, json: false }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Discriminant, degree, reducedness and specialness.
    Classify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        options: Options,
    },
    /// The b-function from the functional equation `f*(d) f^{s+1} = b(s) f^s`.
    Bfunction {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        options: Options,
    },
    /// Whether a polynomial in `s` is symmetric about -1.
    Symmetry {
        #[arg(long, value_name = "POLY")]
        poly: String,
        #[command(flatten)]
        options: Options,
    },
    /// Euler homogeneity at a point.
    Euler {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_name = "r,r,...")]
        point: String,
        #[command(flatten)]
        options: Options,
    },
    /// Order of `f^s` along the conormal through a point and covector.
    Microlocal {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_name = "r,r,...")]
        point: String,
        #[arg(long, value_name = "r,r,...", default_value = "", allow_hyphen_values = true)]
        covector: String,
        #[command(flatten)]
        options: Options,
    },
    /// Monic product of edge factors along a chain of conormals.
    Chain {
        #[arg(required = true, value_name = "FACTOR")]
        factors: Vec<String>,
        #[command(flatten)]
        options: Options,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Fixtures(Vec<String>),
    File(PathBuf),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JobCommand {
    Classify,
    Bfunction,
    Symmetry { poly: String },
    Euler { point: String },
    Microlocal { point: String, covector: String },
    Chain { factors: Vec<String> },
}

/// One validated unit of work.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub source: Source,
    pub command: JobCommand,
    pub seed: u64,
    pub trials: u32,
    pub json: bool,
}

impl JobSpec {
    pub fn from_cli(cli: Cli) -> Result<JobSpec> {
        let (source, command, options) = match cli.command {
            Command::Classify { source, options } => (Some(source), JobCommand::Classify, options),
            Command::Bfunction { source, options } => (Some(source), JobCommand::Bfunction, options),
            Command::Symmetry { poly, options } => (None, JobCommand::Symmetry { poly }, options),
            Command::Euler { source, point, options } => (Some(source), JobCommand::Euler { point }, options),
            Command::Microlocal { source, point, covector, options } => {
                (Some(source), JobCommand::Microlocal { point, covector }, options)
            }
            Command::Chain { factors, options } => (None, JobCommand::Chain { factors }, options),
        };
        let source = match source {
            None => Source::None,
            Some(SourceArgs { fixture, input: Some(path) }) if fixture.is_empty() => Source::File(path),
            Some(SourceArgs { fixture, input: None }) if !fixture.is_empty() => {
                let single = !matches!(command, JobCommand::Classify | JobCommand::Bfunction);
                if single && fixture.len() > 1 {
                    return Err(Error::Parse("this command takes a single --fixture".into()));
                }
                Source::Fixtures(fixture)
            }
            Some(_) => return Err(Error::Parse("give exactly one of --fixture or --input".into())),
        };
        Ok(JobSpec { source, command, seed: options.seed, trials: options.trials, json: options.json })
    }

    fn squarefree(&self) -> SquarefreeOptions {
        SquarefreeOptions { trials: self.trials, seed: self.seed }
    }
}

/// Exit code plus the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn ok(stdout: String) -> Self {
        RunOutput { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn input_error(e: &Error) -> Self {
        RunOutput { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// A generator set together with how it was named.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub label: Option<String>,
    pub reductive: Option<bool>,
    pub generators: GeneratorSet,
}

/// Reads a generator set (`{n, variables, generators}`) or a quiver
/// (`{vertices, edges, dimensions}`); an optional `"reductive"` flag is
/// carried along as metadata.
pub fn load_json(text: &str, name: &str) -> Result<Loaded> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let reductive = value.get("reductive").and_then(serde_json::Value::as_bool);
    let generators = if value.get("vertices").is_some() {
        let q: QuiverSpec = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        q.generators()?
    } else {
        serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?
    };
    Ok(Loaded { name: name.to_string(), label: None, reductive, generators })
}

fn load(source: &Source) -> Result<Vec<Loaded>> {
    match source {
        Source::Fixtures(names) => names
            .iter()
            .map(|n| {
                let fx = named(n)?;
                Ok(Loaded {
                    name: fx.name.clone(),
                    label: Some(fx.label.clone()),
                    reductive: Some(fx.reductive),
                    generators: fx.generators()?,
                })
            })
            .collect(),
        Source::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            Ok(vec![load_json(&text, &path.display().to_string())?])
        }
        Source::None => Err(Error::Parse("no input given".into())),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub name: String,
    pub f: String,
    pub degree: u64,
    pub kind: crate::liealg::DivisorKind,
    pub reduced: bool,
    pub special: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BFunctionReport {
    pub name: String,
    pub n: usize,
    pub f: String,
    pub label: Option<String>,
    pub reductive: Option<bool>,
    pub special: bool,
    pub message: Option<String>,
    pub result: BReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub monic: UniPoly,
    #[serde(serialize_with = "serialize_roots", deserialize_with = "crate::poly::deserialize_roots")]
    pub roots: Vec<(Rational, u32)>,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub name: String,
    #[serde(with = "serde_vec")]
    pub point: Vec<Rational>,
    pub isotropy_dimension: usize,
    #[serde(with = "crate::rational::serde_opt_vec")]
    pub witness: Option<Vec<Rational>>,
    pub strong_euler: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MicrolocalReport {
    pub name: String,
    #[serde(with = "serde_vec")]
    pub point: Vec<Rational>,
    #[serde(with = "serde_vec")]
    pub covector: Vec<Rational>,
    pub order: Option<OrderForm>,
    pub order_polynomial: Option<UniPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub monic: UniPoly,
    #[serde(serialize_with = "serialize_roots", deserialize_with = "crate::poly::deserialize_roots")]
    pub roots: Vec<(Rational, u32)>,
    pub residual: UniPoly,
}

fn serialize_roots<S: serde::Serializer>(roots: &[(Rational, u32)], s: S) -> std::result::Result<S::Ok, S::Error> {
    roots.iter().map(|(r, m)| (format_rational(r), *m)).collect::<Vec<_>>().serialize(s)
}

/// Runs a job, turning every error into an exit code.
pub fn run(job: &JobSpec) -> RunOutput {
    let result = match &job.command {
        JobCommand::Classify => run_classify(job),
        JobCommand::Bfunction => run_bfunction(job),
        JobCommand::Symmetry { poly } => run_symmetry(job, poly),
        JobCommand::Euler { point } => run_euler(job, point),
        JobCommand::Microlocal { point, covector } => run_microlocal(job, point, covector),
        JobCommand::Chain { factors } => run_chain(job, factors),
    };
    result.unwrap_or_else(|e| RunOutput::input_error(&e))
}

fn run_classify(job: &JobSpec) -> Result<RunOutput> {
    let mut reports = Vec::new();
    for l in load(&job.source)? {
        validate_algebra(&l.generators)?;
        let f = discriminant(&l.generators)?;
        let c = classify_discriminant(&l.generators, &f, job.squarefree())?;
        reports.push(ClassifyReport {
            name: l.name,
            degree: f.total_degree().unwrap_or(0),
            f: f.to_string(),
            kind: c.kind,
            reduced: c.reduced,
            special: c.special,
        });
    }
    if job.json {
        return Ok(RunOutput::ok(to_json(&reports)));
    }
    let mut out = String::new();
    for r in &reports {
        writeln!(out, "{}", r.name).unwrap();
        writeln!(out, "  f = {}", r.f).unwrap();
        writeln!(out, "  degree: {}", r.degree).unwrap();
        writeln!(out, "  kind: {}", r.kind).unwrap();
        writeln!(out, "  reduced: {}", yes_no(r.reduced)).unwrap();
        writeln!(out, "  special: {}", yes_no(r.special)).unwrap();
    }
    Ok(RunOutput::ok(out))
}

/// A row of the b-function table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub f: String,
    pub reductive: Option<bool>,
    pub spectrum: String,
}

const F_WIDTH: usize = 36;

fn truncate(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let mut t: String = s.chars().take(width - 3).collect();
        t.push_str("...");
        t
    }
}

/// Aligned text table with columns `n | f | reductive | spectrum`.
pub fn report_table(rows: &[TableRow]) -> String {
    let header = ["n", "f", "reductive", "spectrum"];
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                truncate(&r.f, F_WIDTH),
                r.reductive.map_or("?", yes_no).to_string(),
                r.spectrum.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cols: [&str; 4]| {
        let mut s = String::new();
        for (k, (c, w)) in cols.iter().zip(widths).enumerate() {
            if k > 0 {
                s.push_str(" | ");
            }
            if k == 3 {
                s.push_str(c);
            } else {
                write!(s, "{c:<w$}").unwrap();
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header);
    for row in &cells {
        out.push_str(&line([&row[0], &row[1], &row[2], &row[3]]));
    }
    out
}

fn run_bfunction(job: &JobSpec) -> Result<RunOutput> {
    let mut reports = Vec::new();
    let mut code = EXIT_OK;
    for l in load(&job.source)? {
        validate_algebra(&l.generators)?;
        let r = bfunction(&l.generators)?;
        let message = match &r.outcome {
            BOutcome::Held(_) => None,
            BOutcome::Failed(reason) => Some(reason.clone()),
            BOutcome::DualDegenerate => Some(Error::DualDegenerate.to_string()),
        };
        if message.is_some() {
            code = EXIT_MATH;
        }
        reports.push(BFunctionReport {
            name: l.name,
            n: l.generators.n(),
            f: r.f.to_string(),
            label: l.label,
            reductive: l.reductive,
            special: r.special,
            message,
            result: BReport::from_outcome(&r.outcome),
        });
    }
    let stdout = if job.json {
        to_json(&reports)
    } else if reports.len() > 1 {
        let rows: Vec<TableRow> = reports
            .iter()
            .map(|r| TableRow {
                n: r.n,
                f: r.label.clone().unwrap_or_else(|| r.f.clone()),
                reductive: r.reductive,
                spectrum: match &r.message {
                    None => describe_roots(&r.result.roots, &r.result.residual),
                    Some(m) => m.clone(),
                },
            })
            .collect();
        report_table(&rows)
    } else {
        let r = &reports[0];
        let mut out = String::new();
        writeln!(out, "{}", r.name).unwrap();
        writeln!(out, "  f = {}", r.f).unwrap();
        match &r.message {
            None => {
                writeln!(out, "  b(s) = {}", r.result.monic_coefficients).unwrap();
                writeln!(out, "  spectrum: {}", describe_roots(&r.result.roots, &r.result.residual)).unwrap();
                writeln!(out, "  symmetric: {}", yes_no(r.result.symmetric_about_minus_one)).unwrap();
                writeln!(out, "  functional equation: holds").unwrap();
            }
            Some(m) => {
                writeln!(out, "  special: {}", yes_no(r.special)).unwrap();
                writeln!(out, "  functional equation: {m}").unwrap();
            }
        }
        out
    };
    Ok(RunOutput { code, stdout, stderr: String::new() })
}

fn describe_roots(roots: &[(Rational, u32)], residual: &UniPoly) -> String {
    let spectrum = crate::poly::Spectrum { monic: UniPoly::one(), roots: roots.to_vec(), residual: residual.clone() };
    spectrum.describe()
}

fn run_symmetry(job: &JobSpec, poly: &str) -> Result<RunOutput> {
    let p = parse_unipoly(poly)?;
    if p.is_zero() {
        return Err(Error::Parse("the zero polynomial has no spectrum".into()));
    }
    let monic = p.monic();
    let spectrum = rational_root_spectrum(&monic)?;
    let report = SymmetryReport { symmetric: symmetry_check(&monic), roots: spectrum.roots.clone(), monic };
    if job.json {
        return Ok(RunOutput::ok(to_json(&report)));
    }
    Ok(RunOutput::ok(format!(
        "b(s) = {}\nspectrum: {}\nsymmetric: {}\n",
        report.monic,
        spectrum.describe(),
        yes_no(report.symmetric)
    )))
}

fn single(job: &JobSpec) -> Result<(Loaded, MultiPoly)> {
    let l = load(&job.source)?.into_iter().next().expect("one source");
    validate_algebra(&l.generators)?;
    let f = discriminant(&l.generators)?;
    if f.is_zero() {
        return Err(Error::Domain("discriminant vanishes".into()));
    }
    Ok((l, f))
}

fn run_euler(job: &JobSpec, point: &str) -> Result<RunOutput> {
    let (l, f) = single(job)?;
    let g = &l.generators;
    let x0 = parse_vector(point)?;
    let c = character(g, &f)?;
    let ctx = point_context(g, &x0)?;
    let witness = euler_at_point(g, &c, &ctx);
    let report = EulerReport {
        name: l.name,
        point: x0,
        isotropy_dimension: ctx.isotropy.len(),
        witness: witness.as_ref().map(|w| w.coordinates.clone()),
        strong_euler: strong_euler_at_point(g, &c, &ctx)?,
    };
    if job.json {
        return Ok(RunOutput::ok(to_json(&report)));
    }
    let mut out = String::new();
    writeln!(out, "{}", report.name).unwrap();
    writeln!(out, "  point: {}", fmt_vec(&report.point)).unwrap();
    writeln!(out, "  isotropy dimension: {}", report.isotropy_dimension).unwrap();
    match &witness {
        Some(w) => writeln!(out, "  witness: {}", w.matrix).unwrap(),
        None => writeln!(out, "  witness: none (character vanishes on the isotropy; inconclusive)").unwrap(),
    }
    writeln!(out, "  strong euler: {}", yes_no(report.strong_euler)).unwrap();
    Ok(RunOutput::ok(out))
}

fn fmt_vec(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn run_microlocal(job: &JobSpec, point: &str, covector: &str) -> Result<RunOutput> {
    let (l, f) = single(job)?;
    let g = &l.generators;
    let x0 = parse_vector(point)?;
    let y0 = parse_vector(covector)?;
    let c = character(g, &f)?;
    let ctx = point_context(g, &x0)?;
    let (order, failure) = match conormal_order(g, &c, &ctx, &y0) {
        Ok(Some(o)) => (Some(o), None),
        Ok(None) => (None, Some(INADMISSIBLE_MESSAGE.to_string())),
        Err(Error::NotApplicable(m)) => (None, Some(format!("{INADMISSIBLE_MESSAGE}: {m}"))),
        Err(e) => return Err(e),
    };
    let code = if failure.is_some() { EXIT_MATH } else { EXIT_OK };
    let report = MicrolocalReport {
        name: l.name,
        point: x0,
        covector: y0,
        order_polynomial: order.as_ref().map(OrderForm::as_poly),
        order,
    };
    let stdout = if job.json {
        to_json(&report)
    } else {
        let mut out = String::new();
        writeln!(out, "{}", report.name).unwrap();
        writeln!(out, "  point: {}", fmt_vec(&report.point)).unwrap();
        writeln!(out, "  normal coordinates: {}", ctx.normal_dim()).unwrap();
        match (&report.order, &failure) {
            (Some(o), _) => {
                writeln!(out, "  ord f^s = {o}").unwrap();
                writeln!(out, "  m = {}, half_mu = {}", format_rational(&o.m), format_rational(&o.half_mu)).unwrap();
            }
            (None, Some(m)) => writeln!(out, "  {m}").unwrap(),
            (None, None) => unreachable!(),
        }
        out
    };
    Ok(RunOutput { code, stdout, stderr: String::new() })
}

fn run_chain(job: &JobSpec, factors: &[String]) -> Result<RunOutput> {
    let polys = factors.iter().map(|f| parse_unipoly(f)).collect::<Result<Vec<_>>>()?;
    let BResult { b, spectrum, .. } = chain_assemble(&polys)?;
    let report = ChainReport { monic: b, roots: spectrum.roots.clone(), residual: spectrum.residual.clone() };
    if job.json {
        return Ok(RunOutput::ok(to_json(&report)));
    }
    Ok(RunOutput::ok(format!("b(s) = {}\nspectrum: {}\n", report.monic, spectrum.describe())))
}
