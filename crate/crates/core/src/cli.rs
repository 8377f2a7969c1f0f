//! The `coxlab` command line. [`run`] does all the work and returns the
//! exit status with the text it would print, so it can be tested directly.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{
    cartan_matrix, coxeter_matrix, elements_to_positions, question_probe, report_json,
    verify_with, AnalysisError, BijectionReport, OrderingChoice, ProbeReport,
};
use crate::homalg::{HomalgError, IncidenceHomology};
use crate::linalg::{bruhat, has_pu_form, permanent_with_limit, Matrix, Permutation};
use crate::poset::{self, birkhoff, generators, lattice_structure, Poset, PosetError};

/// Default element cap for verbs that compute resolutions.
pub const HOMOLOGY_MAX_ELEMENTS: usize = 20;
pub const DEFAULT_MAX_PERMANENT_N: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "coxlab", version, about = "Coxeter matrices and homology of incidence algebras")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Size, boundedness, lattice and distributivity of a poset
    Info(Input),
    /// Cartan matrix
    Cartan(Input),
    /// Coxeter matrix
    Coxeter(Input),
    /// Bruhat factorisation of the Coxeter matrix (or of --matrix)
    Bruhat(Input),
    /// Permanent of the Coxeter matrix (or of --matrix)
    Permanent(Input),
    /// Grades, dimensions and Gorenstein data
    Homology(Input),
    /// Grade, Coxeter and rowmotion permutations with their coincidences
    Bijections(Input),
    /// Checks of the main theorems
    Verify(Input),
    /// Print a generated poset
    Gen(Input),
    /// AG verdict against PU form over a corpus
    Survey(SurveyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// linext, admissible, or a file of labels (optionally prefixed `file:`)
    #[arg(long, default_value = "linext")]
    order: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, env = "COXLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Defaults to 20 for homology verbs and 64 otherwise
    #[arg(long)]
    max_elements: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MAX_PERMANENT_N)]
    max_permanent_n: usize,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Poset file (text or JSON)
    file: Option<String>,
    /// Generator: family[:param[:param]]
    #[arg(long)]
    gen: Option<String>,
    /// Matrix file in the `rows cols` text format (bruhat, permanent)
    #[arg(long)]
    matrix: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, clap::Args)]
struct SurveyArgs {
    /// Generator spec; repeatable
    #[arg(long = "gen")]
    gens: Vec<String>,
    /// ideals:N (every J(q), |q| ≤ N), bounded:N (every poset on N
    /// elements with 0̂ and 1̂ adjoined) or nondistributive:COUNT:MAXCORE
    #[arg(long)]
    corpus: Vec<String>,
    #[command(flatten)]
    common: Common,
}

/// Exit status and output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<HomalgError> for CliError {
    fn from(e: HomalgError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<crate::linalg::LinalgError> for CliError {
    fn from(e: crate::linalg::LinalgError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Runs one command line (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.verb) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(CliError::Usage(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(CliError::Domain(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

/// Parses a generator spec such as `boolean:3` or `product:2:3`.
pub fn gen_spec(spec: &str, seed: u64) -> Result<Poset, PosetError> {
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or("");
    let params: Vec<&str> = parts.collect();
    let invalid = |m: String| PosetError::InvalidParameter(format!("{spec}: {m}"));
    let nums = params
        .iter()
        .map(|s| s.parse::<usize>().map_err(|_| invalid(format!("{s:?} is not a number"))))
        .collect::<Result<Vec<_>, _>>()?;
    let arity = |k: usize| -> Result<(), PosetError> {
        if nums.len() == k {
            Ok(())
        } else {
            Err(invalid(format!("{family} takes {k} parameter(s)")))
        }
    };
    match family {
        "boolean" => {
            arity(1)?;
            Ok(generators::boolean(nums[0])?.into_poset())
        }
        "chain" => {
            arity(1)?;
            generators::chain(nums[0])
        }
        "antichain" => {
            arity(1)?;
            generators::antichain(nums[0])
        }
        "m3" => {
            arity(0)?;
            Ok(generators::m3().into_poset())
        }
        "n5" => {
            arity(0)?;
            Ok(generators::n5().into_poset())
        }
        "product" => {
            arity(2)?;
            Ok(generators::product_of_chains(nums[0], nums[1])?.into_poset())
        }
        "random" => {
            arity(1)?;
            generators::random_poset(nums[0], seed)
        }
        "jrandom" => {
            arity(1)?;
            Ok(generators::jrandom(nums[0], seed)?.into_poset())
        }
        "paper-poset10" => {
            arity(0)?;
            Ok(generators::paper_poset10())
        }
        "paper-lattice8" => {
            arity(0)?;
            Ok(generators::paper_lattice8().into_poset())
        }
        _ => Err(invalid("unknown family".into())),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
}

fn load_poset(input: &Input) -> Result<Poset, CliError> {
    match (&input.file, &input.gen) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either a file or --gen, not both".into())),
        (None, None) => Err(CliError::Usage("no input: give a poset file or --gen".into())),
        (Some(path), None) => {
            let text = read_file(path)?;
            poset::format::parse_poset(&text).map_err(|e| CliError::Domain(format!("{path}: {e}")))
        }
        (None, Some(spec)) => Ok(gen_spec(spec, input.common.seed)?),
    }
}

fn check_size(p: &Poset, common: &Common, homology: bool) -> Result<(), CliError> {
    let default = if homology { HOMOLOGY_MAX_ELEMENTS } else { poset::MAX_ELEMENTS };
    let limit = common.max_elements.unwrap_or(default);
    if p.len() > limit {
        return Err(CliError::Domain(format!(
            "{} elements exceed --max-elements {limit}",
            p.len()
        )));
    }
    Ok(())
}

fn needs_homology(order: &str) -> bool {
    order == "admissible"
}

fn ordering(p: &Poset, order: &str) -> Result<OrderingChoice, CliError> {
    match order {
        "linext" => Ok(OrderingChoice::LinearExtension),
        "admissible" => Ok(OrderingChoice::Admissible),
        other => {
            let path = other.strip_prefix("file:").unwrap_or(other);
            let text = read_file(path)?;
            Ok(OrderingChoice::from_labels(p, &text)?)
        }
    }
}

fn labels(p: &Poset, ord: &[usize]) -> Vec<String> {
    ord.iter().map(|&x| p.label(x).to_string()).collect()
}

fn json_out(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serialisable");
    s.push('\n');
    s
}

/// One-line and cycle notation of an element permutation, on positions of `ord`.
fn show_perm(p: &Poset, ord: &[usize], sigma: &Permutation) -> String {
    let pos = elements_to_positions(ord, sigma);
    let map: Vec<String> = ord
        .iter()
        .map(|&x| format!("{}->{}", p.label(x), p.label(sigma.apply(x))))
        .collect();
    format!("{pos}  {}  {}", pos.cycle_notation(), map.join(" "))
}

fn dispatch(verb: Verb) -> Result<(i32, String), CliError> {
    match verb {
        Verb::Info(i) => info(&i),
        Verb::Cartan(i) => matrix_verb(&i, false),
        Verb::Coxeter(i) => matrix_verb(&i, true),
        Verb::Bruhat(i) => bruhat_verb(&i),
        Verb::Permanent(i) => permanent_verb(&i),
        Verb::Homology(i) => homology_verb(&i),
        Verb::Bijections(i) => bijections_verb(&i),
        Verb::Verify(i) => verify_verb(&i),
        Verb::Gen(i) => gen_verb(&i),
        Verb::Survey(s) => survey_verb(&s),
    }
}

fn info(i: &Input) -> Result<(i32, String), CliError> {
    let p = load_poset(i)?;
    check_size(&p, &i.common, false)?;
    let lattice = lattice_structure(&p).ok();
    let distributive = lattice.as_ref().map(|l| l.is_distributive());
    let v = json!({
        "elements": p.len(),
        "covers": p.covers().len(),
        "bounded": p.is_bounded(),
        "lattice": lattice.is_some(),
        "distributive": distributive,
        "linext": labels(&p, p.linext()),
        "minimal": labels(&p, &p.minimal_elements()),
        "maximal": labels(&p, &p.maximal_elements()),
    });
    if i.common.format == Format::Json {
        return Ok((0, json_out(v)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "elements: {}", p.len());
    let _ = writeln!(s, "covers: {}", p.covers().len());
    let _ = writeln!(s, "bounded: {}", p.is_bounded());
    let _ = writeln!(s, "lattice: {}", lattice.is_some());
    if let Some(d) = distributive {
        let _ = writeln!(s, "distributive: {d}");
    }
    let _ = writeln!(s, "linext: {}", labels(&p, p.linext()).join(" "));
    let _ = writeln!(s, "minimal: {}", labels(&p, &p.minimal_elements()).join(" "));
    let _ = writeln!(s, "maximal: {}", labels(&p, &p.maximal_elements()).join(" "));
    Ok((0, s))
}

/// The poset, resolved ordering and optional homology engine.
fn prepare(i: &Input) -> Result<(Poset, Vec<usize>), CliError> {
    let p = load_poset(i)?;
    let heavy = needs_homology(&i.common.order);
    check_size(&p, &i.common, heavy)?;
    let choice = ordering(&p, &i.common.order)?;
    let ord = choice.resolve(&p, None)?;
    Ok((p, ord))
}

fn matrix_verb(i: &Input, coxeter: bool) -> Result<(i32, String), CliError> {
    let (p, ord) = prepare(i)?;
    let (key, m) = if coxeter {
        ("coxeter", coxeter_matrix(&p, &ord))
    } else {
        ("cartan", cartan_matrix(&p, &ord))
    };
    if i.common.format == Format::Json {
        let v = json!({ "ordering": labels(&p, &ord), key: m.to_int_rows() });
        return Ok((0, json_out(v)));
    }
    Ok((0, format!("ordering: {}\n{}", labels(&p, &ord).join(" "), m.to_aligned())))
}

/// `--matrix` when given, otherwise the Coxeter matrix of the input poset.
fn target_matrix(i: &Input) -> Result<(Option<Vec<String>>, Matrix), CliError> {
    if let Some(path) = &i.matrix {
        if i.file.is_some() || i.gen.is_some() {
            return Err(CliError::Usage("--matrix replaces the poset input".into()));
        }
        let text = read_file(path)?;
        let m = Matrix::parse_text(&text).map_err(|e| CliError::Domain(format!("{path}: {e}")))?;
        return Ok((None, m));
    }
    let (p, ord) = prepare(i)?;
    Ok((Some(labels(&p, &ord)), coxeter_matrix(&p, &ord)))
}

fn bruhat_verb(i: &Input) -> Result<(i32, String), CliError> {
    let (ord, m) = target_matrix(i)?;
    let f = bruhat(&m)?;
    let pu = has_pu_form(&m);
    if i.common.format == Format::Json {
        let v = json!({
            "ordering": ord,
            "u1": f.u1.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "p": f.p.one_based(),
            "u2": f.u2.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "size": m.rows(),
            "u1_is_identity": f.u1.is_identity(),
            "pu_form": pu,
        });
        return Ok((0, json_out(v)));
    }
    let mut s = String::new();
    if let Some(o) = ord {
        let _ = writeln!(s, "ordering: {}", o.join(" "));
    }
    let _ = write!(s, "U1:\n{}", f.u1.to_aligned());
    let _ = writeln!(s, "P: {}  {}", f.p, f.p.cycle_notation());
    let _ = write!(s, "U2:\n{}", f.u2.to_aligned());
    let _ = writeln!(s, "U1 = identity: {}", f.u1.is_identity());
    let _ = writeln!(s, "PU form: {pu}");
    Ok((0, s))
}

fn permanent_verb(i: &Input) -> Result<(i32, String), CliError> {
    let (_, m) = target_matrix(i)?;
    let v = permanent_with_limit(&m, i.common.max_permanent_n)?;
    if i.common.format == Format::Json {
        return Ok((0, json_out(json!({ "permanent": v.to_string() }))));
    }
    Ok((0, format!("{v}\n")))
}

fn homology_setup(i: &Input) -> Result<(Poset, IncidenceHomology), CliError> {
    let p = load_poset(i)?;
    check_size(&p, &i.common, true)?;
    let h = IncidenceHomology::new(&p)?;
    Ok((p, h))
}

fn homology_verb(i: &Input) -> Result<(i32, String), CliError> {
    let (p, h) = homology_setup(i)?;
    let prof = h.profile()?;
    if i.common.format == Format::Json {
        return Ok((0, json_out(serde_json::to_value(&prof).expect("serialisable"))));
    }
    let width = p.labels().iter().map(String::len).max().unwrap_or(1).max(7);
    let mut s = format!(
        "{:<width$}  grade  cograde  pdimI  idimP  pdimS  perfect\n",
        "element"
    );
    for x in 0..p.len() {
        let _ = writeln!(
            s,
            "{:<width$}  {:>5}  {:>7}  {:>5}  {:>5}  {:>5}  {}",
            p.label(x),
            prof.grade[x],
            prof.cograde[x],
            prof.pdim_injective[x],
            prof.idim_projective[x],
            prof.pdim_simple[x],
            prof.perfect[x]
        );
    }
    let _ = writeln!(s, "gldim: {}", prof.gldim);
    let _ = writeln!(s, "gorenstein level: {}", prof.gorenstein_level);
    let _ = writeln!(s, "auslander-gorenstein: {}", prof.is_auslander_gorenstein);
    if let Some(d) = prof.is_diagonal {
        let _ = writeln!(s, "diagonal: {d}");
    }
    if let Some(dn) = &prof.dominant_numbers {
        let dn: Vec<String> = dn.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(s, "dominant numbers: {}", dn.join(" "));
    }
    Ok((0, s))
}

fn bijections_verb(i: &Input) -> Result<(i32, String), CliError> {
    let (p, h) = homology_setup(i)?;
    let choice = ordering(&p, &i.common.order)?;
    let r = BijectionReport::new(&h, &choice, i.common.max_permanent_n)?;
    if i.common.format == Format::Json {
        return Ok((0, json_out(report_json(&p, &r))));
    }
    let ord = &r.ordering;
    let mut s = format!("ordering: {}\n", labels(&p, ord).join(" "));
    let mut line = |name: &str, sigma: Option<&Permutation>| {
        let shown = sigma.map_or("-".to_string(), |g| show_perm(&p, ord, g));
        let _ = writeln!(s, "{name:<16}{shown}");
    };
    line("grade (AR):", r.grade_perm.as_ref());
    line("grade (cor.):", r.grade_perm_corollary.as_ref());
    line("coxeter:", r.coxeter_perm.as_ref());
    line("bruhat P:", Some(&r.bruhat_perm));
    line("rowmotion:", r.rowmotion_perm.as_ref());
    let flag = |b: Option<bool>| b.map_or("-".to_string(), |v| v.to_string());
    let _ = writeln!(s, "U1 = identity: {}", r.u1_is_identity);
    let diag: Vec<String> = r.u2_diag.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(s, "diag(U2): {}", diag.join(" "));
    let _ = writeln!(
        s,
        "permanent: {}",
        r.permanent.as_ref().map_or("-".to_string(), |v| v.to_string())
    );
    let _ = writeln!(s, "grade routes agree: {}", flag(r.grade_routes_agree()));
    let _ = writeln!(s, "coxeter inverts grade: {}", flag(r.coxeter_inverts_grade()));
    let _ = writeln!(s, "coxeter inverts rowmotion: {}", flag(r.coxeter_inverts_rowmotion()));
    let _ = writeln!(s, "grade = rowmotion: {}", flag(r.grade_is_rowmotion()));
    Ok((0, s))
}

fn verify_verb(i: &Input) -> Result<(i32, String), CliError> {
    let (_, h) = homology_setup(i)?;
    let r = verify_with(&h)?;
    let code = if r.passed() { 0 } else { 2 };
    if i.common.format == Format::Json {
        return Ok((code, json_out(serde_json::to_value(&r).expect("serialisable"))));
    }
    let mut s = String::new();
    let _ = writeln!(s, "auslander-gorenstein: {}", r.auslander_gorenstein);
    let _ = writeln!(s, "lattice: {}", r.lattice);
    if let Some(d) = r.distributive {
        let _ = writeln!(s, "distributive: {d}");
    }
    for c in &r.checks {
        let status = match (c.holds, c.required) {
            (true, _) => "ok",
            (false, true) => "FAIL",
            (false, false) => "no",
        };
        let detail = if c.detail.is_empty() { String::new() } else { format!("  {}", c.detail) };
        let _ = writeln!(s, "{status:<5}{}{detail}", c.name);
    }
    let _ = writeln!(s, "{}", if r.passed() { "all required checks hold" } else { "required checks failed" });
    Ok((code, s))
}

fn gen_verb(i: &Input) -> Result<(i32, String), CliError> {
    let p = load_poset(i)?;
    check_size(&p, &i.common, false)?;
    Ok((
        0,
        match i.common.format {
            Format::Json => json_out(poset::format::to_json_value(&p)),
            Format::Text => poset::format::to_text(&p),
        },
    ))
}

/// Expands a `--corpus` spec into named posets.
pub fn corpus_spec(spec: &str, seed: u64) -> Result<Vec<(String, Poset)>, PosetError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let invalid = || PosetError::InvalidParameter(format!("unknown corpus {spec:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| invalid());
    match parts.as_slice() {
        ["ideals", n] => {
            let mut out = Vec::new();
            for k in 1..=num(n)? {
                for (j, q) in generators::all_posets(k).iter().enumerate() {
                    out.push((format!("J(q{k}.{j})"), birkhoff(q)?.into_poset()));
                }
            }
            Ok(out)
        }
        ["bounded", n] => generators::all_posets(num(n)?)
            .iter()
            .enumerate()
            .map(|(j, q)| Ok((format!("bounded{n}.{j}"), generators::with_bounds(q)?)))
            .collect(),
        ["nondistributive", count, max_core] => Ok(generators::non_distributive_lattices(num(count)?, num(max_core)?, seed)
            .into_iter()
            .enumerate()
            .map(|(j, l)| (format!("nd{j}"), l.into_poset()))
            .collect()),
        _ => Err(invalid()),
    }
}

fn survey_verb(a: &SurveyArgs) -> Result<(i32, String), CliError> {
    let mut corpus = Vec::new();
    for g in &a.gens {
        corpus.push((g.clone(), gen_spec(g, a.common.seed)?));
    }
    for c in &a.corpus {
        corpus.extend(corpus_spec(c, a.common.seed)?);
    }
    let limit = a.common.max_elements.unwrap_or(HOMOLOGY_MAX_ELEMENTS);
    if let Some((name, p)) = corpus.iter().find(|(_, p)| p.len() > limit) {
        return Err(CliError::Domain(format!(
            "{name} has {} elements, over --max-elements {limit}",
            p.len()
        )));
    }
    let report = question_probe(&corpus, a.common.max_permanent_n)?;
    let code = if report.invariant_failures.is_empty() { 0 } else { 2 };
    if a.common.format == Format::Json {
        return Ok((code, json_out(serde_json::to_value(&report).expect("serialisable"))));
    }
    Ok((code, survey_table(&report)))
}

fn survey_table(r: &ProbeReport) -> String {
    let width = r.rows.iter().map(|row| row.name.len()).max().unwrap_or(4).max(4);
    let mut s = format!("{:<width$}  elements  AG     PU     permanent  agree\n", "name");
    for row in &r.rows {
        let _ = writeln!(
            s,
            "{:<width$}  {:>8}  {:<5}  {:<5}  {:>9}  {}{}",
            row.name,
            row.elements,
            row.auslander_gorenstein,
            row.pu_form_linext,
            row.permanent.as_deref().unwrap_or("-"),
            row.agree,
            if row.invariants_hold { "" } else { "  INVARIANT FAILURE" }
        );
    }
    let _ = writeln!(
        s,
        "{} posets, {} agree, {} disagree, {} invariant failures",
        r.rows.len(),
        r.agreements,
        r.counterexamples.len(),
        r.invariant_failures.len()
    );
    if !r.counterexamples.is_empty() {
        let _ = writeln!(s, "COUNTEREXAMPLE CANDIDATES: {}", r.counterexamples.join(" "));
    }
    s
}
