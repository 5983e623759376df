//! The `dilata` front end: instance files in, reports and exit codes out.
//!
//! Exit codes: 0 when every certificate passes, 1 when a verification fails
//! or a request errors, 2 on a parse error, 3 when a resource budget runs out.

mod parse;

use std::path::PathBuf;
use std::sync::Arc;

use clap::Parser;
use rayon::prelude::*;

use crate::algebra::PresentedAlgebra;
use crate::congruence::{congruent_iso_check, normalizer_check};
use crate::dilatation::{
    base_change_compare, check_exceptional, conic_iso, dilate, forget_map, iterate_iso, localize_compare, monopoly_iso,
    open_immersion_iso, two_stage_iso, universal_factor, DilatationResult, UniversalOutcome,
};
use crate::error::{Error, Result};
use crate::oracle::{compare_with_symbolic, enumerate_center, universal_property_scan, FiniteRing, DEFAULT_SIZE_CAP};
use crate::poly::{Limits, Polynomial};
use crate::report::Report;
use crate::rost::{rost_subalgebra_check, RostInput, MAX_BIDEGREE};

pub use parse::{Filtration, InstanceFile, IsoRequest, Request, RequestKind, UniversalTarget};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Verify dilatation identities on an instance file.
#[derive(Parser, Debug, Clone)]
#[command(name = "dilata", version)]
pub struct Args {
    /// Instance file.
    pub file: PathBuf,

    /// A request to run instead of the file's `request` lines, e.g.
    /// `present C` or `iso monopoly C`.
    pub command: Vec<String>,

    /// Largest S-pair degree the Gröbner kernel processes.
    #[arg(long, default_value_t = Limits::default().degree_cap)]
    pub degree_cap: u32,

    /// Largest number of S-pairs per Gröbner run.
    #[arg(long, default_value_t = Limits::default().pair_cap)]
    pub pair_cap: usize,

    /// Largest finite ring the oracle enumerates.
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    pub oracle_size_cap: usize,

    /// Bidegree bound for `rost`.
    #[arg(long, default_value_t = MAX_BIDEGREE)]
    pub bidegree_bound: u32,

    /// Requests run concurrently.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,

    /// Print only the machine section.
    #[arg(long)]
    pub machine_only: bool,
}

/// Budgets and output options shared by every request.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub limits: Limits,
    pub oracle_size_cap: usize,
    pub bidegree_bound: u32,
    pub jobs: usize,
    pub machine_only: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limits: Limits::default(),
            oracle_size_cap: DEFAULT_SIZE_CAP,
            bidegree_bound: MAX_BIDEGREE,
            jobs: 1,
            machine_only: false,
        }
    }
}

impl From<&Args> for Config {
    fn from(a: &Args) -> Config {
        Config {
            limits: Limits {
                degree_cap: a.degree_cap,
                pair_cap: a.pair_cap,
            },
            oracle_size_cap: a.oracle_size_cap,
            bidegree_bound: a.bidegree_bound,
            jobs: a.jobs.max(1),
            machine_only: a.machine_only,
        }
    }
}

/// What one request produced.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub request: String,
    pub report: Option<Report>,
    /// Human-only lines printed before the report.
    pub notes: Vec<String>,
    pub error: Option<Error>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match (&self.error, &self.report) {
            (Some(e), _) if e.is_resource_limit() => EXIT_RESOURCE,
            (Some(_), _) => EXIT_FAIL,
            (None, Some(r)) if r.passed() => EXIT_PASS,
            _ => EXIT_FAIL,
        }
    }

    pub fn machine_lines(&self) -> Vec<String> {
        match (&self.report, &self.error) {
            (_, Some(e)) => vec![format!("error: {e}")],
            (Some(r), None) => r.machine_lines(),
            (None, None) => Vec::new(),
        }
    }
}

/// The printed report and the combined exit code.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub outcomes: Vec<Outcome>,
    pub text: String,
    pub exit_code: i32,
}

impl RunOutput {
    /// Everything after the machine marker.
    pub fn machine_section(&self) -> String {
        render(&self.outcomes, true)
    }
}

/// Parses `text`; with `command` nonempty, runs that instead of the file's
/// requests.
pub fn load(text: &str, command: &[String], config: &Config) -> Result<InstanceFile> {
    let mut inst = InstanceFile::parse_str(text, config.limits)?;
    if !command.is_empty() {
        inst.requests.clear();
        inst.push_request(&command.join(" "))?;
    }
    if inst.requests.is_empty() {
        return Err(Error::parse(0, 0, "no request in the file and none on the command line"));
    }
    Ok(inst)
}

/// Runs every request, in parallel up to `config.jobs`, and assembles the
/// report in declaration order.
pub fn run(inst: &InstanceFile, config: &Config) -> RunOutput {
    let go = || -> Vec<Outcome> { inst.requests.par_iter().map(|r| run_request(r, config)).collect() };
    let outcomes = if config.jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build() {
            Ok(pool) => pool.install(go),
            Err(_) => go(),
        }
    } else {
        inst.requests.iter().map(|r| run_request(r, config)).collect()
    };
    let exit_code = if outcomes.iter().any(|o| o.exit_code() == EXIT_RESOURCE) {
        EXIT_RESOURCE
    } else if outcomes.iter().any(|o| o.exit_code() != EXIT_PASS) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    };
    let text = render(&outcomes, config.machine_only);
    RunOutput {
        outcomes,
        text,
        exit_code,
    }
}

fn render(outcomes: &[Outcome], machine_only: bool) -> String {
    let mut out = String::new();
    if !machine_only {
        for (k, o) in outcomes.iter().enumerate() {
            out.push_str(&format!("== request {}: {} ==\n", k + 1, o.request));
            for n in &o.notes {
                out.push_str(n);
                out.push('\n');
            }
            if let Some(r) = &o.report {
                out.push_str(&r.to_string());
            }
            if let Some(e) = &o.error {
                out.push_str(&format!("error: {e}\n"));
            }
            out.push('\n');
        }
        out.push_str("--- machine ---\n");
    }
    for (k, o) in outcomes.iter().enumerate() {
        out.push_str(&format!("# request {}: {}\n", k + 1, o.request));
        for l in o.machine_lines() {
            out.push_str(&l);
            out.push('\n');
        }
    }
    out
}

/// Parses the process arguments, runs, prints, and returns the exit code.
pub fn main_with_args(args: impl IntoIterator<Item = String>) -> i32 {
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let config = Config::from(&args);
    let path = args.file.display().to_string();
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{path}: {e}");
            return EXIT_PARSE;
        }
    };
    let inst = match load(&text, &args.command, &config) {
        Ok(i) => i,
        Err(Error::Parse { line, column, message }) => {
            match line {
                0 => eprintln!("{path}: command line, column {column}: {message}"),
                _ => eprintln!("{path}:{line}:{column}: {message}"),
            }
            return EXIT_PARSE;
        }
        Err(e) if e.is_resource_limit() => {
            eprintln!("{path}: {e}");
            return EXIT_RESOURCE;
        }
        Err(e) => {
            eprintln!("{path}: {e}");
            return EXIT_PARSE;
        }
    };
    let out = run(&inst, &config);
    print!("{}", out.text);
    out.exit_code
}

fn run_request(req: &Request, config: &Config) -> Outcome {
    let mut notes = Vec::new();
    let result = execute(&req.kind, config, &mut notes);
    let (report, error) = match result {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e)),
    };
    Outcome {
        request: req.text.clone(),
        report,
        notes,
        error,
    }
}

/// `factor` wrapped in parentheses unless it is a single term.
fn factor(p: &Polynomial) -> String {
    if p.nterms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

fn join(ps: &[Polynomial]) -> String {
    if ps.is_empty() {
        return "0".into();
    }
    ps.iter().map(Polynomial::to_string).collect::<Vec<_>>().join(", ")
}

/// The presentation facts shared by `present`, `check` and `rost`: the
/// relations as built (`g − a·x` form) when saturation added nothing,
/// otherwise the reduced basis, which is always printed as `groebner`.
fn presentation_facts(rep: &mut Report, d: &DilatationResult, notes: &mut Vec<String>) -> Result<()> {
    let alg = d.algebra();
    let gb = alg.relations().groebner()?.to_vec();
    let relations = if d.saturation_changed() || d.is_zero_ring() {
        join(&gb)
    } else {
        let reg = alg.registry();
        let mut rels: Vec<String> = d
            .base()
            .relations()
            .gens()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.to_string())
            .collect();
        for fv in d.fractions() {
            let c = &d.center().centers()[fv.center];
            let g = c.ideal.gens()[fv.generator].clone();
            let a = &c.denominator;
            let x = &reg.vars()[fv.var];
            let ax = if a.is_one() { x.clone() } else { format!("{}*{x}", factor(a)) };
            rels.push(if g.is_zero() { format!("-{ax}") } else { format!("{g} - {ax}") });
        }
        if rels.is_empty() {
            "0".into()
        } else {
            rels.join(", ")
        }
    };
    rep.fact("variables", alg.registry().vars().join(", "));
    rep.fact("relations", &relations);
    rep.fact("groebner", join(&gb));
    rep.fact("zero_ring", d.is_zero_ring());
    rep.fact("saturation_changed", d.saturation_changed());
    notes.push(format!("A' = {alg}"));
    for (var, meaning) in d.dictionary() {
        rep.fact(format!("fraction.{var}"), &meaning);
        notes.push(format!("  {var} = {meaning}"));
    }
    Ok(())
}

fn execute(kind: &RequestKind, config: &Config, notes: &mut Vec<String>) -> Result<Report> {
    match kind {
        RequestKind::Present(c) => {
            let d = dilate(c)?;
            let mut rep = Report::new("present");
            rep.fact("center", c);
            presentation_facts(&mut rep, &d, notes)?;
            Ok(rep)
        }
        RequestKind::Check(c) => {
            let d = dilate(c)?;
            let mut rep = check_exceptional(&d, &[])?;
            presentation_facts(&mut rep, &d, notes)?;
            let nilpotent = c.base().relations().radical_contains(&c.product())?;
            rep.clause(
                "zero_ring_criterion",
                nilpotent == d.is_zero_ring(),
                (nilpotent != d.is_zero_ring()).then(|| {
                    format!("product of denominators nilpotent: {nilpotent}, zero ring: {}", d.is_zero_ring())
                }),
            );
            Ok(rep)
        }
        RequestKind::Iso(c, iso) => match iso {
            IsoRequest::Monopoly => Ok(monopoly_iso(c)?.report),
            IsoRequest::TwoStage(first) => two_stage_iso(c, first),
            IsoRequest::Localize => localize_compare(c),
            IsoRequest::OpenImmersion { keep, assignment } => open_immersion_iso(c, keep, assignment),
            IsoRequest::Iterate { element, t } => iterate_iso(c, element, *t),
            IsoRequest::Conic => conic_iso(c),
            IsoRequest::BaseChange(h) => base_change_compare(c, h),
            IsoRequest::Forget(keep) => Ok(forget_map(&dilate(c)?, keep)?.report),
        },
        RequestKind::Oracle(c) => compare_with_symbolic(c, config.oracle_size_cap),
        RequestKind::Universal(c, UniversalTarget::Hom(h)) => {
            let d = dilate(c)?;
            match universal_factor(&d, h, None)? {
                UniversalOutcome::Factored { hom, report } => {
                    let mut rep = report;
                    rep.fact("factors", true);
                    let vars = d.algebra().registry().vars();
                    for (v, img) in vars.iter().zip(hom.images()) {
                        rep.fact(format!("image.{v}"), img);
                    }
                    Ok(rep)
                }
                UniversalOutcome::Refused { reason } => {
                    let mut rep = Report::new("universal");
                    rep.fact("factors", false);
                    rep.fact("reason", &reason);
                    rep.skip("factorization", reason);
                    Ok(rep)
                }
            }
        }
        RequestKind::Universal(c, UniversalTarget::Scan(n)) => {
            let (a, fc) = enumerate_center(c, config.oracle_size_cap)?;
            let catalog = (1..=*n).map(FiniteRing::integers_mod).collect::<Result<Vec<_>>>()?;
            universal_property_scan(&a, &fc, &catalog)
        }
        RequestKind::Congruence { s, r } => {
            let hs: Vec<_> = s.levels.iter().map(|(h, _)| h.clone()).collect();
            let sl: Vec<u32> = s.levels.iter().map(|(_, v)| *v).collect();
            let rl: Vec<u32> = r.levels.iter().map(|(_, v)| *v).collect();
            congruent_iso_check(&s.group, &hs, &sl, &rl, &s.ring)
        }
        RequestKind::Normalizer { filtration, k } => {
            normalizer_check(&filtration.group, k, &filtration.levels, &filtration.ring)
        }
        RequestKind::Rost { base, i, j } => rost(base, i, j, config, notes),
    }
}

fn rost(
    base: &Arc<PresentedAlgebra>,
    i: &crate::ideal::Ideal,
    j: &crate::ideal::Ideal,
    config: &Config,
    notes: &mut Vec<String>,
) -> Result<Report> {
    let r = RostInput::new(base, i.clone(), j.clone())?;
    let mut rep = rost_subalgebra_check(&r, config.bidegree_bound)?;
    let d = dilate(&r.center()?)?;
    presentation_facts(&mut rep, &d, notes)?;
    Ok(rep)
}
