//! `sier`: inspect finite rings, query domain predicates, run verification suites.

mod output;
mod select;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sier_core::paperlab::suites;
use sier_core::ring::fixtures;
use sier_core::{
    run_all, run_suite, suite_ids, CacheStatus, Error, FiniteModule, FiniteRing, Lab, RingProfile, SuiteReport,
    SuiteStatus,
};

use output::{Format, Printer};
use select::Names;

#[derive(Parser, Debug)]
#[command(
    name = "sier",
    version,
    about = "Subinjectivity and subprojectivity domains over finite rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Built-in ring name (F2, Z4, Z8, E2, R8, T2, K4, Q8bar, M2(F2)) or a path to a ring JSON file.
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Largest module size in the catalog.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    max_size: u64,

    /// Largest number of generators in the catalog.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    max_gens: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for catalog and memo caches.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Seed for the complement order in hull constructions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Ring size, radical, simple modules and structural flags.
    RingInfo,
    /// Evaluate a predicate on selected modules.
    Check {
        #[arg(value_enum)]
        predicate: Predicate,
        /// Module selector; repeatable. `all` selects every catalog class.
        #[arg(long = "module")]
        modules: Vec<String>,
        /// First argument of a binary predicate.
        #[arg(long)]
        b: Option<String>,
        /// Second argument of a binary predicate.
        #[arg(long)]
        a: Option<String>,
    },
    /// Run a verification suite (or `all`) and report.
    Verify {
        suite: String,
        /// Run over a ring corpus instead of `--ring`; only `builtin` exists.
        #[arg(long)]
        corpus: Option<String>,
        /// Write one JSON report per ring and suite here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Record wall time in reports (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// List suite ids.
    Suites,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Predicate {
    Sier,
    Sper,
    Subinjective,
    Subprojective,
    InjectiveHull,
    Classify,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::UnknownSelector(_) | Error::UnknownSuite(_) | Error::MalformedSpec(_)) => 2,
            CliError::Core(Error::NonAssociative(..) | Error::BadUnit(_) | Error::CharNotPrimePower(_)) => 2,
            CliError::Core(Error::BoundExceeded(_)) => 3,
            CliError::Core(_) => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    let mut out = Printer::new(cli.format, command_name(&cli.cmd));
    let code = match &cli.cmd {
        Cmd::Suites => {
            let all = suites();
            for s in &all {
                out.line(format!("{:<44} {}", s.id, s.statement));
            }
            out.set_payload(json!(all
                .iter()
                .map(|s| json!({ "id": s.id, "statement": s.statement, "requires": s.requires, "out_of_scope": s.is_out_of_scope() }))
                .collect::<Vec<_>>()));
            0
        }
        Cmd::RingInfo => {
            let ring = load_ring(required_ring(cli)?)?;
            let lab = open_lab(cli, &ring)?;
            ring_info(&ring, &lab, &mut out)?;
            finish_lab(cli, &lab)?;
            0
        }
        Cmd::Check {
            predicate,
            modules,
            b,
            a,
        } => {
            let ring = load_ring(required_ring(cli)?)?;
            let lab = open_lab(cli, &ring)?;
            check(*predicate, modules, b.as_deref(), a.as_deref(), &ring, &lab, &mut out)?;
            finish_lab(cli, &lab)?;
            0
        }
        Cmd::Verify {
            suite,
            corpus,
            out_dir,
            timing,
        } => {
            if suite != "all" && !suite_ids().contains(&suite.as_str()) {
                return Err(Error::UnknownSuite(suite.clone()).into());
            }
            let rings: Vec<Arc<FiniteRing>> = match (corpus.as_deref(), cli.ring.as_deref()) {
                (Some("builtin"), _) | (None, None) => fixtures::corpus(),
                (Some(other), _) => {
                    return Err(CliError::Usage(format!(
                        "unknown corpus {other}; only `builtin` exists"
                    )))
                }
                (None, Some(r)) => vec![load_ring(r)?],
            };
            let mut failed = false;
            for ring in &rings {
                let lab = open_lab(cli, ring)?;
                let mut reports = verify(suite, &lab)?;
                if !timing {
                    reports = reports.iter().map(SuiteReport::without_timing).collect();
                }
                failed |= reports.iter().any(|r| !r.is_pass());
                if let Some(dir) = out_dir {
                    write_reports(dir, ring, &reports)?;
                }
                for r in &reports {
                    out.text(r.to_table());
                }
                let summary = summary(&reports);
                out.line(summary.clone());
                out.push_run(header(cli, ring), json!({ "reports": reports, "summary": summary }));
                finish_lab(cli, &lab)?;
            }
            u8::from(failed)
        }
    };
    out.finish();
    Ok(code)
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::RingInfo => "ring-info",
        Cmd::Check { .. } => "check",
        Cmd::Verify { .. } => "verify",
        Cmd::Suites => "suites",
    }
}

fn required_ring(cli: &Cli) -> CliResult<&str> {
    cli.ring
        .as_deref()
        .ok_or_else(|| CliError::Usage("--ring is required for this command".into()))
}

fn load_ring(src: &str) -> CliResult<Arc<FiniteRing>> {
    if let Some(r) = fixtures::by_name(src) {
        return Ok(r);
    }
    let path = Path::new(src);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(Error::from)?;
        return Ok(FiniteRing::from_json(&text)?);
    }
    Err(CliError::Usage(format!(
        "unknown ring {src}: not a built-in name or a readable file"
    )))
}

fn open_lab(cli: &Cli, ring: &Arc<FiniteRing>) -> CliResult<Lab> {
    let (lab, status) = Lab::open(
        ring,
        cli.max_size,
        cli.max_gens as usize,
        cli.cache_dir.as_deref(),
        cli.seed,
    )?;
    match status {
        CacheStatus::Built | CacheStatus::Loaded => {}
        CacheStatus::Rebuilt(why) => eprintln!("note: stale cache for {} ignored ({why})", ring.name()),
    }
    Ok(lab)
}

fn finish_lab(cli: &Cli, lab: &Lab) -> CliResult<()> {
    if let Some(dir) = &cli.cache_dir {
        lab.save(dir)?;
    }
    Ok(())
}

fn header(cli: &Cli, ring: &Arc<FiniteRing>) -> Value {
    json!({
        "ring": ring.name(),
        "hash": ring.content_hash(),
        "max_size": cli.max_size,
        "max_gens": cli.max_gens,
        "seed": cli.seed,
    })
}

fn ring_info(ring: &Arc<FiniteRing>, lab: &Lab, out: &mut Printer) -> CliResult<()> {
    let profile = RingProfile::compute(ring, lab.catalog())?;
    let reg = FiniteModule::regular(ring);
    let rad = reg.radical();
    let simples = lab.catalog().simples();
    out.line(format!(
        "ring {} (size {}, hash {})",
        ring.name(),
        ring.size(),
        ring.content_hash()
    ));
    out.line(format!(
        "radical J: size {}, basis {:?}",
        reg.submodule(&rad).size(),
        rad.basis
    ));
    out.line(format!(
        "simple modules: {} (sizes {:?})",
        simples.len(),
        simples.iter().map(|s| s.size()).collect::<Vec<_>>()
    ));
    out.line(format!(
        "catalog: {} classes up to size {}, {} generators",
        lab.catalog().len(),
        lab.bound(),
        lab.catalog().max_gens()
    ));
    for (name, f) in profile.flags() {
        out.line(format!(
            "  {:<18} {} [{}]",
            name,
            if f.value { "yes" } else { "no" },
            f.provenance
        ));
    }
    out.push_run(
        json!({ "ring": ring.name(), "hash": ring.content_hash(), "max_size": lab.bound(), "max_gens": lab.catalog().max_gens(), "seed": lab.seed() }),
        json!({
            "size": ring.size().to_string(),
            "radical_basis": rad.basis,
            "radical_size": reg.submodule(&rad).size().to_string(),
            "simple_sizes": simples.iter().map(|s| s.size().to_string()).collect::<Vec<_>>(),
            "catalog_classes": lab.catalog().len(),
            "profile": profile,
        }),
    );
    Ok(())
}

fn expand(sels: &[String], ring: &Arc<FiniteRing>, lab: &Lab) -> CliResult<Vec<(String, FiniteModule)>> {
    if sels.is_empty() {
        return Err(CliError::Usage("at least one --module selector is required".into()));
    }
    let mut out = Vec::new();
    for s in sels {
        if s == "all" {
            out.extend(
                lab.catalog()
                    .ids()
                    .map(|i| (format!("c{i}"), lab.catalog().class(i).clone())),
            );
        } else {
            out.push((s.clone(), select::resolve(s, ring, lab)?));
        }
    }
    Ok(out)
}

fn check(
    pred: Predicate,
    modules: &[String],
    b: Option<&str>,
    a: Option<&str>,
    ring: &Arc<FiniteRing>,
    lab: &Lab,
    out: &mut Printer,
) -> CliResult<()> {
    let names = Names::new(ring, lab)?;
    let hdr = json!({ "ring": ring.name(), "hash": ring.content_hash(), "max_size": lab.bound(), "max_gens": lab.catalog().max_gens(), "seed": lab.seed() });
    let mut rows = Vec::new();
    match pred {
        Predicate::Subinjective | Predicate::Subprojective => {
            let (Some(b), Some(a)) = (b, a) else {
                return Err(CliError::Usage("binary predicates need --b and --a".into()));
            };
            let kb = lab.key_of(&select::resolve(b, ring, lab)?)?;
            let ka = lab.key_of(&select::resolve(a, ring, lab)?)?;
            let (name, value) = if pred == Predicate::Subinjective {
                ("subinjective", lab.subinjective(kb, ka))
            } else {
                ("subprojective", lab.subprojective(kb, ka))
            };
            out.line(format!(
                "{name}({}, {}) = {value} [bound {}]",
                names.label(lab, kb),
                names.label(lab, ka),
                lab.bound()
            ));
            rows.push(json!({ "predicate": name, "b": names.short(lab, kb), "a": names.short(lab, ka), "value": value, "bound": lab.bound() }));
        }
        Predicate::Sier | Predicate::Sper => {
            let subinj = pred == Predicate::Sier;
            for (sel, m) in expand(modules, ring, lab)? {
                let k = lab.key_of(&m)?;
                let v = if subinj {
                    lab.sier_verdict(k)?
                } else {
                    lab.sper_verdict(k)?
                };
                let kind = if v.is_certified() {
                    "CertifiedUpToBound"
                } else {
                    "Counterexample"
                };
                out.line(format!(
                    "{sel} = {}: {kind} [bound {}, {} generators]",
                    names.label(lab, k),
                    v.bound,
                    v.max_gens
                ));
                let mut ws = Vec::new();
                // witnesses on distinguished modules first, then catalog order
                let mut wit: Vec<_> = v.witnesses.iter().collect();
                wit.sort_by_key(|w| !names.is_named(w.b));
                for w in wit {
                    let b_mod = lab.module(w.b);
                    let a_key = match w.a_class {
                        Some(c) => c,
                        None => lab.key_of(&b_mod.submodule(&w.sub))?,
                    };
                    let c_key = match w.c_class {
                        Some(c) => c,
                        None => lab.key_of(&b_mod.quotient_module(&w.sub))?,
                    };
                    let (sa, sb, sc) = (names.short(lab, a_key), names.short(lab, w.b), names.short(lab, c_key));
                    out.line(format!(
                        "  witness 0 -> {sa} -> {sb} -> {sc} -> 0, failing map {:?}",
                        w.failing_map
                    ));
                    ws.push(json!({ "a": sa, "b": sb, "c": sc, "sub": w.sub.basis, "failing_map": w.failing_map }));
                }
                rows.push(json!({
                    "module": sel, "class": names.short(lab, k), "predicate": if subinj { "sier" } else { "sper" },
                    "verdict": kind, "bound": v.bound, "max_gens": v.max_gens, "witnesses": ws,
                }));
            }
        }
        Predicate::InjectiveHull => {
            for (sel, m) in expand(modules, ring, lab)? {
                let k = lab.key_of(&m)?;
                let h = lab.hull(k);
                let kh = lab.key_of(&h.hull)?;
                let essential = h.hull.is_essential(&h.embedding.image())?;
                out.line(format!(
                    "{sel} = {}: hull {} (size {}, essential {essential})",
                    names.label(lab, k),
                    names.label(lab, kh),
                    h.hull.size()
                ));
                rows.push(json!({
                    "module": sel, "class": names.short(lab, k), "hull": names.short(lab, kh),
                    "hull_size": h.hull.size().to_string(), "essential": essential,
                }));
            }
        }
        Predicate::Classify => {
            for (sel, m) in expand(modules, ring, lab)? {
                let k = lab.key_of(&m)?;
                let c = lab.classify(k);
                let v = serde_json::to_value(&c).map_err(Error::from)?;
                let set: Vec<&str> = v
                    .as_object()
                    .into_iter()
                    .flatten()
                    .filter(|(_, x)| x.as_bool() == Some(true))
                    .map(|(n, _)| n.as_str())
                    .collect();
                out.line(format!(
                    "{sel} = {}: {}",
                    names.label(lab, k),
                    if set.is_empty() { "-".into() } else { set.join(", ") }
                ));
                rows.push(json!({ "module": sel, "class": names.short(lab, k), "classification": v }));
            }
        }
    }
    out.push_run(hdr, json!({ "results": rows }));
    Ok(())
}

fn verify(suite: &str, lab: &Lab) -> CliResult<Vec<SuiteReport>> {
    if suite == "all" {
        return Ok(run_all(lab)?);
    }
    match run_suite(suite, lab) {
        Ok(r) => Ok(vec![r]),
        Err(Error::InapplicableSuite { suite, ring, reason }) => {
            let statement = suites()
                .iter()
                .find(|s| s.id == suite)
                .map(|s| s.statement)
                .unwrap_or_default();
            Ok(vec![SuiteReport {
                suite_id: suite,
                statement: statement.to_string(),
                ring,
                bound: lab.bound(),
                max_gens: lab.catalog().max_gens(),
                seed: lab.seed(),
                status: SuiteStatus::Skipped {
                    reason: format!("inapplicable: {reason}"),
                },
                checks: Vec::new(),
                passed: 0,
                failed: 0,
                wall_time_ms: 0,
            }])
        }
        Err(e) => Err(e.into()),
    }
}

fn summary(reports: &[SuiteReport]) -> String {
    let ring = reports.first().map_or("", |r| r.ring.as_str());
    let ran = reports.iter().filter(|r| !r.is_skipped()).count();
    let skipped = reports.len() - ran;
    let failed = reports.iter().filter(|r| !r.is_pass()).count();
    format!("{ring}: {ran} suites ran, {skipped} skipped, {failed} failed")
}

fn file_safe(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn write_reports(dir: &Path, ring: &Arc<FiniteRing>, reports: &[SuiteReport]) -> CliResult<()> {
    let sub = dir.join(file_safe(ring.name()));
    std::fs::create_dir_all(&sub).map_err(Error::from)?;
    for r in reports {
        let text = serde_json::to_string_pretty(r).map_err(Error::from)?;
        std::fs::write(sub.join(format!("{}.json", r.suite_id)), text + "\n").map_err(Error::from)?;
    }
    Ok(())
}
