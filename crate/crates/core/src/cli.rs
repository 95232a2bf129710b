//! Command-line front end.
//!
//! [`run`] takes the argument vector and returns the exit status together
//! with everything that would be written to stdout and stderr, so the binary
//! and the tests share one code path. Exit status 0 means success, 1 a
//! verification mismatch or failed computation, 2 a usage or input error.

pub mod golden;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::code::{CodeError, LinearCode, DEFAULT_BUDGET};
use crate::design::{
    blocks_from_code, design_report, generalized_design_check, is_generalized_t_homogeneous, weight_design_check,
    BlockMode, DesignError, GeneralizedDesign,
};
use crate::field::{FieldError, FieldSpec};
use crate::jacobi::{
    jacobi_multi, jacobi_via_polarization, macwilliams_transform, polarize, weight_enumerator, JacobiError, ReferenceSet,
};
use crate::molien::{
    group_closure, molien_bivariate, named_generators, parse_generators, parse_univariate, verify_denominator,
    GroupElement, MolienError, DEFAULT_CLOSURE_BOUND, DEFAULT_MAX_DEGREE,
};
use crate::poly::{PolyError, SparsePoly, Style};

/// Environment variable holding the default enumeration budget.
pub const BUDGET_ENV: &str = "JACOBI_CODES_BUDGET";

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Jacobi(#[from] JacobiError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Molien(#[from] MolienError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl CliError {
    fn status(&self) -> i32 {
        match self {
            CliError::Mismatch(_)
            | CliError::Jacobi(JacobiError::NonIntegral)
            | CliError::Molien(MolienError::NonIntegral { .. })
            | CliError::Code(CodeError::BudgetExceeded { .. })
            | CliError::Jacobi(JacobiError::Code(CodeError::BudgetExceeded { .. }))
            | CliError::Design(DesignError::Code(CodeError::BudgetExceeded { .. })) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "jacobi-codes", version, about = "Jacobi polynomials, designs and Molien series of linear codes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the weight enumerator of a code.
    We(WeArgs),
    /// Print a Jacobi polynomial, by enumeration or by polarization.
    Jacobi(JacobiArgs),
    /// Apply the MacWilliams transform.
    Mw(MwArgs),
    /// Apply polarization operators to a weight enumerator.
    Polarize(PolarizeArgs),
    /// Block spectra, packing/covering statements and generalized designs.
    Design(DesignArgs),
    /// Bivariate Molien series of a 2×2 matrix group.
    Molien(MolienArgs),
    /// List the built-in codes, or print one as a generator-matrix file.
    Catalog(CatalogArgs),
    /// Re-derive golden values and report mismatches.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct CodeSource {
    /// Built-in code, e.g. `tetracode`, `i2^3` or `hexacode+i2`.
    #[arg(long, conflicts_with = "code")]
    catalog: Option<String>,
    /// Generator-matrix file.
    #[arg(long)]
    code: Option<PathBuf>,
    /// Maximum number of codewords to enumerate.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Args)]
struct WeArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Print `x_{bits}` variable names.
    #[arg(long)]
    raw: bool,
}

#[derive(Debug, Args)]
struct ReferenceArgs {
    /// Reference set T as 1-based coordinates, e.g. `1,2`.
    #[arg(long = "T", value_name = "COORDS", conflicts_with_all = ["refs", "t"])]
    set: Option<String>,
    /// Reference vectors separated by `;`, symbols by spaces or commas.
    #[arg(long, value_name = "VECTORS", conflicts_with = "t")]
    refs: Option<String>,
    /// Strengths t_1,…,t_ℓ; reference j is supported on the next t_j coordinates.
    #[arg(long, value_name = "STRENGTHS")]
    t: Option<String>,
}

#[derive(Debug, Args)]
struct JacobiArgs {
    #[command(flatten)]
    source: CodeSource,
    #[command(flatten)]
    refs: ReferenceArgs,
    /// Compute through polarization of the weight enumerator and compare
    /// with direct enumeration.
    #[arg(long)]
    via_polarization: bool,
    #[arg(long)]
    raw: bool,
}

#[derive(Debug, Args)]
struct MwArgs {
    #[command(flatten)]
    source: CodeSource,
    #[command(flatten)]
    refs: ReferenceArgs,
    /// Transform this polynomial instead of a code's enumerator.
    #[arg(long, conflicts_with_all = ["catalog", "code"])]
    poly: Option<String>,
    /// Number of reference vectors of `--poly`.
    #[arg(long, default_value_t = 0)]
    ell: usize,
    /// Field of `--poly`, e.g. `q=3^1`.
    #[arg(long, requires = "poly")]
    field: Option<String>,
    /// Code size |C| of `--poly`.
    #[arg(long, requires = "poly")]
    size: Option<u128>,
    #[arg(long)]
    raw: bool,
}

#[derive(Debug, Args)]
struct PolarizeArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Weight enumerator in x and y instead of a code.
    #[arg(long, conflicts_with_all = ["catalog", "code"])]
    poly: Option<String>,
    /// Strengths t_1,…,t_ℓ.
    #[arg(long, value_name = "STRENGTHS")]
    t: String,
    /// Skip the division by n(n−1)⋯(n−t+1).
    #[arg(long)]
    unnormalized: bool,
    #[arg(long)]
    raw: bool,
}

#[derive(Debug, Args)]
struct DesignArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Block size (codeword weight).
    #[arg(long)]
    k: Option<usize>,
    /// Strength.
    #[arg(long)]
    t: Option<usize>,
    /// `support-set` or `multiset`.
    #[arg(long, default_value = "support-set")]
    mode: String,
    /// Coordinate partition, parts separated by `;`, e.g. `1-6;7-12`.
    #[arg(long)]
    partition: Option<String>,
    /// Per-part block sizes for the generalized design check.
    #[arg(long, requires = "partition")]
    kvec: Option<String>,
    /// Per-part strengths for the generalized design check.
    #[arg(long, requires = "partition")]
    tvec: Option<String>,
}

#[derive(Debug, Args)]
struct MolienArgs {
    /// `g3`, `g4` or `identity`.
    #[arg(long, conflicts_with = "group_file")]
    group: Option<String>,
    /// File of generators.
    #[arg(long)]
    group_file: Option<PathBuf>,
    /// Truncation degree of the series.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Print only the homogeneous part f[d].
    #[arg(long)]
    part: Option<usize>,
    /// Check a denominator d(u)d(v), e.g. `(1-u)^2`.
    #[arg(long)]
    denominator: Option<String>,
    /// Print only the group order.
    #[arg(long)]
    order: bool,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    /// Print this code as a generator-matrix file.
    #[arg(long)]
    show: Option<String>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `golden` for every built-in suite, or one suite name.
    #[arg(long, default_value = "golden")]
    suite: String,
    /// Read `*.toml` suites from this directory instead of the built-in ones.
    #[arg(long)]
    golden_dir: Option<PathBuf>,
    /// Keep only cases whose name contains this text.
    #[arg(long)]
    filter: Option<String>,
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(status) => Outcome { code: status, stdout: out, stderr: String::new() },
        Err(e) => Outcome { code: e.status(), stdout: out, stderr: format!("error: {e}\n") },
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::We(a) => cmd_we(a, json, out),
        Command::Jacobi(a) => cmd_jacobi(a, json, out),
        Command::Mw(a) => cmd_mw(a, json, out),
        Command::Polarize(a) => cmd_polarize(a, json, out),
        Command::Design(a) => cmd_design(a, json, out),
        Command::Molien(a) => cmd_molien(a, json, out),
        Command::Catalog(a) => cmd_catalog(a, json, out),
        Command::Verify(a) => cmd_verify(a, json, out),
    }
}

fn emit(out: &mut String, value: Value) {
    out.push_str(&serde_json::to_string_pretty(&value).expect("JSON values serialize"));
    out.push('\n');
}

fn line(out: &mut String, text: impl AsRef<str>) {
    out.push_str(text.as_ref());
    out.push('\n');
}

fn style(raw: bool) -> Style {
    if raw {
        Style::Raw
    } else {
        Style::Styled
    }
}

// ----- argument helpers -----

fn default_budget() -> Result<u64> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be an integer, found `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn load_code(source: &CodeSource) -> Result<LinearCode> {
    let code = match (&source.catalog, &source.code) {
        (Some(name), _) => LinearCode::catalog(name)?,
        (None, Some(path)) => LinearCode::from_file(path)?,
        (None, None) => return Err(CliError::Usage("give a code with --catalog NAME or --code FILE".into())),
    };
    let budget = match source.budget {
        Some(b) => b,
        None => default_budget()?,
    };
    Ok(code.with_budget(budget))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| CliError::Usage(format!("bad {what} entry `{s}`"))))
        .collect()
}

/// Parts such as `1-6;7,8,9`.
fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|part| {
            let mut coords = Vec::new();
            for item in part.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                match item.split_once('-') {
                    Some((a, b)) => {
                        let bad = || CliError::Usage(format!("bad range `{item}`"));
                        let a: usize = a.trim().parse().map_err(|_| bad())?;
                        let b: usize = b.trim().parse().map_err(|_| bad())?;
                        if a > b {
                            return Err(bad());
                        }
                        coords.extend(a..=b);
                    }
                    None => coords.push(item.parse().map_err(|_| CliError::Usage(format!("bad coordinate `{item}`")))?),
                }
            }
            Ok(coords)
        })
        .collect()
}

/// Supports `{1..t_1}`, `{t_1+1..t_1+t_2}`, … of consecutive coordinates.
pub(crate) fn consecutive_supports(t_vec: &[usize]) -> Vec<Vec<usize>> {
    let mut next = 1;
    t_vec
        .iter()
        .map(|&t| {
            let s: Vec<usize> = (next..next + t).collect();
            next += t;
            s
        })
        .collect()
}

enum Reference {
    Vectors(ReferenceSet),
    /// Strengths together with the consecutive supports they induce.
    Strengths(Vec<usize>, ReferenceSet),
}

impl Reference {
    fn set(&self) -> &ReferenceSet {
        match self {
            Reference::Vectors(r) | Reference::Strengths(_, r) => r,
        }
    }
}

fn parse_reference(args: &ReferenceArgs, code: &LinearCode) -> Result<Option<Reference>> {
    let n = code.length();
    if let Some(set) = &args.set {
        let t = parse_list(set, "--T")?;
        return Ok(Some(Reference::Vectors(ReferenceSet::from_supports(n, &[t])?)));
    }
    if let Some(refs) = &args.refs {
        let field = code.field();
        let vectors = refs
            .split(';')
            .map(|v| {
                v.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| field.parse_symbol(s).map_err(CliError::from))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Some(Reference::Vectors(ReferenceSet::new(n, vectors)?)));
    }
    if let Some(t) = &args.t {
        let t_vec = parse_list(t, "--t")?;
        let total: usize = t_vec.iter().sum();
        if total > n {
            return Err(CliError::Usage(format!("strengths sum to {total} but the code has length {n}")));
        }
        let set = ReferenceSet::from_supports(n, &consecutive_supports(&t_vec))?;
        return Ok(Some(Reference::Strengths(t_vec, set)));
    }
    Ok(None)
}

/// Strengths of disjoint references, or `None` when supports overlap.
fn disjoint_strengths(refs: &ReferenceSet) -> Option<Vec<usize>> {
    let supports = refs.supports();
    let mut seen = std::collections::HashSet::new();
    for s in &supports {
        for &i in s {
            if !seen.insert(i) {
                return None;
            }
        }
    }
    Some(supports.iter().map(Vec::len).collect())
}

// ----- subcommands -----

fn cmd_we(a: &WeArgs, json: bool, out: &mut String) -> Result<i32> {
    let code = load_code(&a.source)?;
    let w = weight_enumerator(&code)?.render(style(a.raw));
    if json {
        emit(out, json!({ "n": code.length(), "k": code.dimension(), "polynomial": w }));
    } else {
        line(out, w);
    }
    Ok(0)
}

fn cmd_jacobi(a: &JacobiArgs, json: bool, out: &mut String) -> Result<i32> {
    let code = load_code(&a.source)?;
    let reference = parse_reference(&a.refs, &code)?
        .ok_or_else(|| CliError::Usage("give reference coordinates with --T, --refs or --t".into()))?;
    let direct = jacobi_multi(&code, reference.set())?;
    if !a.via_polarization {
        let p = direct.render(style(a.raw));
        if json {
            emit(out, json!({ "polynomial": p }));
        } else {
            line(out, p);
        }
        return Ok(0);
    }
    let t_vec = match &reference {
        Reference::Strengths(t, _) => t.clone(),
        Reference::Vectors(r) => disjoint_strengths(r)
            .ok_or_else(|| CliError::Usage("polarization needs reference vectors with disjoint supports".into()))?,
    };
    let w = weight_enumerator(&code)?;
    let polarized = jacobi_via_polarization(&w, &t_vec, code.length())?;
    let matches = polarized == direct;
    let verdict = if matches { "MATCH" } else { "MISMATCH" };
    if json {
        emit(
            out,
            json!({
                "polynomial": polarized.render(style(a.raw)),
                "direct": direct.render(style(a.raw)),
                "match": matches,
            }),
        );
    } else {
        line(out, polarized.render(style(a.raw)));
        if !matches {
            line(out, format!("direct: {}", direct.render(style(a.raw))));
        }
        line(out, verdict);
    }
    Ok(if matches { 0 } else { 1 })
}

fn cmd_mw(a: &MwArgs, json: bool, out: &mut String) -> Result<i32> {
    if let Some(text) = &a.poly {
        let field = FieldSpec::parse(a.field.as_deref().unwrap_or("q=2^1"))?;
        let size = a.size.ok_or_else(|| CliError::Usage("--poly needs --size".into()))?;
        if size == 0 {
            return Err(CliError::Usage("--size must be positive".into()));
        }
        let p = SparsePoly::parse(text, a.ell)?;
        let image = macwilliams_transform(&p, field.order(), size).render(style(a.raw));
        if json {
            emit(out, json!({ "polynomial": image }));
        } else {
            line(out, image);
        }
        return Ok(0);
    }
    let code = load_code(&a.source)?;
    let refs = match parse_reference(&a.refs, &code)? {
        Some(r) => r.set().clone(),
        None => ReferenceSet::new(code.length(), Vec::new())?,
    };
    let size = code.size().ok_or_else(|| CliError::Usage("code too large for the MacWilliams bookkeeping".into()))?;
    let j = jacobi_multi(&code, &refs)?;
    let image = macwilliams_transform(&j, code.field().order(), size);
    let (verdict, ok) = if code.is_self_dual() {
        if image == j {
            ("SELF-DUAL-CONSISTENT", true)
        } else {
            ("SELF-DUAL-INCONSISTENT", false)
        }
    } else {
        let dual = jacobi_multi(&code.dual().with_budget(code.budget()), &refs)?;
        if image == dual {
            ("DUAL-MATCH", true)
        } else {
            ("DUAL-MISMATCH", false)
        }
    };
    let rendered = image.render(style(a.raw));
    if json {
        emit(out, json!({ "polynomial": rendered, "check": verdict, "ok": ok }));
    } else {
        line(out, rendered);
        line(out, verdict);
    }
    if ok {
        Ok(0)
    } else {
        Err(CliError::Mismatch(verdict.into()))
    }
}

fn cmd_polarize(a: &PolarizeArgs, json: bool, out: &mut String) -> Result<i32> {
    let (w, n) = match &a.poly {
        Some(text) => {
            let w = SparsePoly::parse(text, 0)?;
            let n = w.homogeneous_degree().ok_or_else(|| CliError::Usage("--poly must be homogeneous".into()))?;
            (w, n as usize)
        }
        None => {
            let code = load_code(&a.source)?;
            (weight_enumerator(&code)?, code.length())
        }
    };
    let t_vec = parse_list(&a.t, "--t")?;
    let p = if a.unnormalized {
        let mut p = w.embed(t_vec.len());
        for (j, &tj) in t_vec.iter().enumerate() {
            for _ in 0..tj {
                p = polarize(&p, j + 1);
            }
        }
        p
    } else {
        jacobi_via_polarization(&w, &t_vec, n)?
    };
    let rendered = p.render(style(a.raw));
    if json {
        emit(out, json!({ "polynomial": rendered }));
    } else {
        line(out, rendered);
    }
    Ok(0)
}

fn generalized_text(g: &GeneralizedDesign) -> String {
    match (&g.lambda, &g.witness) {
        (Some(l), _) => format!("generalized design: {} blocks, λ={l}", g.members),
        (None, Some(w)) => format!(
            "not a generalized design: {:?} lies in {} blocks but {:?} in {}",
            w.first, w.first_count, w.second, w.second_count
        ),
        (None, None) => format!("generalized design: {} blocks", g.members),
    }
}

fn generalized_json(g: &GeneralizedDesign) -> Value {
    json!({
        "blocks": g.members,
        "design": g.witness.is_none(),
        "lambda": g.lambda,
        "witness": g.witness.as_ref().map(|w| json!({
            "first": w.first, "first_count": w.first_count,
            "second": w.second, "second_count": w.second_count,
        })),
    })
}

fn cmd_design(a: &DesignArgs, json: bool, out: &mut String) -> Result<i32> {
    let code = load_code(&a.source)?;
    let mode: BlockMode = a.mode.parse().map_err(CliError::Usage)?;
    let Some(partition) = &a.partition else {
        let (k, t) = match (a.k, a.t) {
            (Some(k), Some(t)) => (k, t),
            _ => return Err(CliError::Usage("design needs --k and --t".into())),
        };
        let family = blocks_from_code(&code, k, mode)?;
        if family.is_empty() {
            if json {
                emit(out, json!({ "v": code.length(), "k": k, "t": t, "blocks": 0, "spectrum": [], "design": false, "statement": "no blocks" }));
            } else {
                line(out, format!("no blocks: the code has no codewords of weight {k}"));
            }
            return Ok(0);
        }
        let report = design_report(&family, t)?;
        if json {
            emit(out, serde_json::to_value(&report).expect("reports serialize"));
        } else {
            line(out, report.to_string());
        }
        return Ok(0);
    };
    let parts = parse_partition(partition)?;
    let result = match (&a.kvec, &a.tvec, a.k, a.t) {
        (Some(kv), Some(tv), _, _) => {
            generalized_design_check(&code, &parts, &parse_list(kv, "--kvec")?, &parse_list(tv, "--tvec")?)?
        }
        (None, Some(tv), Some(k), _) => weight_design_check(&code, &parts, k, &parse_list(tv, "--tvec")?)?,
        (None, None, _, Some(t)) => {
            let h = is_generalized_t_homogeneous(&code, &parts, t)?;
            if json {
                emit(
                    out,
                    json!({
                        "homogeneous": h.holds(),
                        "checked": h.checked,
                        "failure": h.failure.as_ref().map(|f| json!({ "kvec": f.k_vec, "tvec": f.t_vec })),
                    }),
                );
            } else {
                match &h.failure {
                    None => line(out, format!("generalized {t}-homogeneous ({} classes checked)", h.checked)),
                    Some(f) => line(out, format!("not generalized {t}-homogeneous: class {:?} fails at {:?}", f.k_vec, f.t_vec)),
                }
            }
            return Ok(0);
        }
        _ => {
            return Err(CliError::Usage(
                "with --partition give --kvec and --tvec, --k and --tvec, or --t alone".into(),
            ))
        }
    };
    if json {
        emit(out, generalized_json(&result));
    } else {
        line(out, generalized_text(&result));
    }
    Ok(0)
}

fn load_group(a: &MolienArgs) -> Result<Vec<GroupElement>> {
    let gens = match (&a.group, &a.group_file) {
        (Some(name), _) => named_generators(name)?,
        (None, Some(path)) => {
            let text = read(path)?;
            parse_generators(&text)?
        }
        (None, None) => return Err(CliError::Usage("give --group NAME or --group-file FILE".into())),
    };
    Ok(group_closure(&gens, DEFAULT_CLOSURE_BOUND)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn cmd_molien(a: &MolienArgs, json: bool, out: &mut String) -> Result<i32> {
    let group = load_group(a)?;
    if a.order {
        if json {
            emit(out, json!({ "order": group.len() }));
        } else {
            line(out, group.len().to_string());
        }
        return Ok(0);
    }
    let max_degree = a.max_degree.or(a.part).unwrap_or(DEFAULT_MAX_DEGREE);
    let table = molien_bivariate(&group, max_degree)?;
    if let Some(text) = &a.denominator {
        let d_u = parse_univariate(text)?;
        let check = verify_denominator(&table, &d_u, &d_u, max_degree);
        let verdict = if check.holds() { "DENOMINATOR-CONSISTENT" } else { "DENOMINATOR-INCONSISTENT" };
        if json {
            emit(
                out,
                json!({
                    "consistent": check.holds(),
                    "checked": check.checked,
                    "violation": check.violation.as_ref().map(|(i, j, v)| json!({ "i": i, "j": j, "value": v.to_string() })),
                }),
            );
        } else {
            match &check.violation {
                None => line(out, format!("{verdict} ({} coefficients checked up to degree {max_degree})", check.checked)),
                Some((i, j, v)) => line(out, format!("{verdict}: coefficient of u^{i}v^{j} is {v}")),
            }
        }
        return Ok(if check.holds() { 0 } else { 1 });
    }
    if let Some(d) = a.part {
        let part = table.homogeneous_part(d)?.render_named(["u", "v"]);
        if json {
            emit(out, json!({ "order": group.len(), "degree": d, "polynomial": part }));
        } else {
            line(out, part);
        }
        return Ok(0);
    }
    if json {
        let rows: Vec<Value> = (0..=max_degree)
            .flat_map(|d| (0..=d).rev().map(move |i| (i, d - i)))
            .map(|(i, j)| json!([i, j, table.coefficient(i, j)]))
            .collect();
        emit(out, json!({ "order": group.len(), "max_degree": max_degree, "coefficients": rows }));
    } else {
        out.push_str(&table.to_csv());
    }
    Ok(0)
}

fn cmd_catalog(a: &CatalogArgs, json: bool, out: &mut String) -> Result<i32> {
    if let Some(name) = &a.show {
        let code = LinearCode::catalog(name)?;
        if json {
            emit(out, json!({ "name": name, "text": code.to_text() }));
        } else {
            out.push_str(&code.to_text());
        }
        return Ok(0);
    }
    let mut entries = Vec::new();
    for name in LinearCode::catalog_names() {
        let code = LinearCode::catalog(name)?;
        let d = code.minimum_distance()?;
        let kind = code.type_check()?.map(|t| t.to_string());
        entries.push((name, code, d, kind));
    }
    if json {
        let list: Vec<Value> = entries
            .iter()
            .map(|(name, c, d, kind)| {
                json!({
                    "name": name, "q": c.field().order(), "n": c.length(), "k": c.dimension(),
                    "d": d, "inner_product": c.inner_product().to_string(), "type": kind,
                })
            })
            .collect();
        emit(out, json!(list));
    } else {
        for (name, c, d, kind) in &entries {
            let d = d.map_or_else(|| "-".to_string(), |d| d.to_string());
            line(
                out,
                format!(
                    "{name:<10} q={} n={} k={} d={d} ip={} type={}",
                    c.field().order(),
                    c.length(),
                    c.dimension(),
                    c.inner_product(),
                    kind.as_deref().unwrap_or("-")
                ),
            );
        }
        line(out, "names combine as `a^m` (direct power) and `a+b` (direct sum)");
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, json: bool, out: &mut String) -> Result<i32> {
    let mut sources: Vec<(String, String)> = match &a.golden_dir {
        Some(dir) => {
            let entries = std::fs::read_dir(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
            let mut files = Vec::new();
            for entry in entries {
                let path = entry.map_err(|e| CliError::Usage(e.to_string()))?.path();
                if path.extension().is_some_and(|x| x == "toml") {
                    let stem = path.file_stem().expect("file has a stem").to_string_lossy().into_owned();
                    files.push((stem, read(&path)?));
                }
            }
            files
        }
        None => golden::BUILTIN.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect(),
    };
    sources.sort_by(|x, y| x.0.cmp(&y.0));
    if a.suite != "golden" {
        sources.retain(|(name, _)| *name == a.suite);
    }
    // (suite, case, verdict)
    let mut results: Vec<(String, String, golden::Verdict)> = Vec::new();
    for (suite, text) in &sources {
        match golden::load(text) {
            Ok(cases) => {
                for case in cases {
                    if a.filter.as_ref().is_some_and(|f| !case.name.contains(f.as_str())) {
                        continue;
                    }
                    let verdict = case.run();
                    results.push((suite.clone(), case.name, verdict));
                }
            }
            Err(e) => results.push((suite.clone(), "<file>".into(), golden::Verdict::Fail(format!("unreadable suite: {e}")))),
        }
    }
    if results.is_empty() {
        return Err(CliError::Usage("the selection contains no golden cases".into()));
    }
    let failed = results.iter().filter(|r| r.2 != golden::Verdict::Pass).count();
    if json {
        let cases: Vec<Value> = results
            .iter()
            .map(|(s, c, v)| {
                let reason = match v {
                    golden::Verdict::Pass => None,
                    golden::Verdict::Fail(why) => Some(why.clone()),
                };
                json!({ "suite": s, "case": c, "pass": reason.is_none(), "reason": reason })
            })
            .collect();
        emit(out, json!({ "passed": results.len() - failed, "failed": failed, "cases": cases }));
    } else {
        for (suite, case, verdict) in &results {
            match verdict {
                golden::Verdict::Pass => line(out, format!("PASS {suite}/{case}")),
                golden::Verdict::Fail(why) => line(out, format!("FAIL {suite}/{case}: {why}")),
            }
        }
        line(out, format!("{} passed, {failed} failed", results.len() - failed));
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
