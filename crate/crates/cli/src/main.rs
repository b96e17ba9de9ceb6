//! `uninorm`: validate, check, decompose and certify uninorms on finite chains.
//!
//! Exit status: 0 when the verdict is true, 1 when a law or condition fails,
//! 2 on usage and parse errors, 3 when a resource limit refuses the work or
//! cuts it short, 4 on an internal consistency failure.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use uninorm_core::certify::{golden_file_name, golden_text, FIXTURES_ENV};
use uninorm_core::distributivity::{classify_and_check_with, theorem_conditions};
use uninorm_core::format::{
    parse_decomposition, parse_table, structured, write_decomposition, write_named_tables, write_pair,
    DecompositionDoc,
};
use uninorm_core::report::WitnessPolicy;
use uninorm_core::search::{enumerate_parallel, SearchLimits, SearchStats};
use uninorm_core::uninorm::validate_uninorm_with;
use uninorm_core::{
    build_family, certify, compose, decompose, scan_pairs, CertificationReport, CertifyOptions, ChainScale,
    CheckReport, Decomposition, EnumerationTask, Error, Filters, TheoremCase, Uninorm,
};

#[derive(Parser)]
#[command(name = "uninorm", version, about = "Exact uninorms on finite chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for search and pair checking; 0 uses every core
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    workers: usize,

    /// Override the hard scale limit for enumeration and certification
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    /// Report every witness rather than the first per law
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Check the uninorm axioms on a table
    Validate {
        /// Table file
        #[arg(long, required_unless_present = "u1")]
        table: Option<PathBuf>,
        /// Family spec or table file, instead of --table
        #[arg(long, conflicts_with = "table")]
        u1: Option<String>,
    },
    /// Name the neutral-element case of a pair and evaluate its structural conditions
    Classify {
        #[arg(long)]
        u1: String,
        #[arg(long)]
        u2: String,
    },
    /// Check distributivity of u1 over u2 and compare with the structural conditions
    Check {
        #[arg(long)]
        u1: String,
        #[arg(long)]
        u2: String,
    },
    /// Split a distributive pair with distinct neutral elements into its parts
    Decompose {
        #[arg(long)]
        u1: String,
        #[arg(long)]
        u2: String,
    },
    /// Rebuild a pair from a decomposition file
    Compose {
        /// Decomposition file, as written by `decompose`
        #[arg(long)]
        table: PathBuf,
    },
    /// List every uninorm on L_n with neutral element e
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        idempotent: bool,
        #[arg(long)]
        locally_internal: bool,
        #[arg(long)]
        conjunctive: bool,
    },
    /// Find every distributive pair with the given neutral elements
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e1: usize,
        #[arg(long)]
        e2: usize,
    },
    /// Check every ordered pair on L_n against the structural conditions
    Certify {
        #[arg(long)]
        n: usize,
        /// Compare the canonical report with the golden file in $UNINORM_FIXTURES
        #[arg(long)]
        golden: bool,
        /// Stop after this many pairs; the report is then marked partial
        #[arg(long, value_name = "PAIRS")]
        pair_budget: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass = 0,
    Fail = 1,
    Usage = 2,
    Refused = 3,
    Internal = 4,
}

/// A finished computation: the document to emit and a one-line summary.
struct Done {
    status: Status,
    doc: String,
    summary: String,
}

struct Failure {
    status: Status,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { status: Status::Usage, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::ScaleLimit { .. } => Status::Refused,
            Error::Internal(_) => Status::Internal,
            _ => Status::Usage,
        };
        Failure { status, message: e.to_string() }
    }
}

type Outcome = Result<Done, Failure>;

struct Ctx {
    format: Format,
    workers: usize,
    limits: SearchLimits,
    policy: WitnessPolicy,
}

impl Ctx {
    fn emit<T: Serialize>(&self, kind: &str, body: &T, text: impl FnOnce() -> String) -> String {
        match self.format {
            Format::Text => text(),
            Format::Structured => structured(kind, body),
        }
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// A uninorm from a table file path or, failing that, a family spec.
fn load(arg: &str) -> Result<Uninorm, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let doc = parse_table(&read(path)?).map_err(|e| Failure::usage(format!("{arg}:{e}")))?;
        return doc
            .into_uninorm()
            .map_err(|e| Failure::usage(format!("{arg}: {e}")));
    }
    build_family(arg).map_err(|e| match e {
        Error::Parse(p) => Failure::usage(format!("'{arg}' is neither a readable file nor a family spec: {p}")),
        other => Failure::usage(format!("{arg}: {other}")),
    })
}

#[derive(Serialize)]
struct ValidationDoc<'a> {
    scale: usize,
    neutral: usize,
    #[serde(flatten)]
    report: &'a CheckReport,
}

fn validate(ctx: &Ctx, table: Option<PathBuf>, u1: Option<String>) -> Outcome {
    let table = table.or_else(|| u1.as_deref().filter(|a| Path::new(a).is_file()).map(PathBuf::from));
    let (label, table, neutral) = match (table, u1) {
        (Some(path), _) => {
            let doc = parse_table(&read(&path)?)
                .map_err(|e| Failure::usage(format!("{}:{e}", path.display())))?;
            (path.display().to_string(), doc.table, doc.neutral)
        }
        (None, Some(spec)) => {
            let u = load(&spec)?;
            (spec, u.table().clone(), u.neutral())
        }
        (None, None) => return Err(Failure::usage("give --table or --u1")),
    };
    let report = validate_uninorm_with(&table, neutral, ctx.policy);
    let summary = match report.violations().first() {
        None => format!("{label}: uninorm on L_{} with neutral {neutral}", table.n()),
        Some(v) => format!("{label}: not a uninorm, first violation {v}"),
    };
    let body = ValidationDoc { scale: table.n(), neutral, report: &report };
    let doc = ctx.emit("validation", &body, || report.to_string());
    Ok(Done { status: verdict(report.verdict()), doc, summary })
}

#[derive(Serialize)]
struct ClassifyDoc<'a> {
    case: TheoremCase,
    e1: usize,
    e2: usize,
    conditions: &'a CheckReport,
}

fn classify(ctx: &Ctx, u1: &Uninorm, u2: &Uninorm) -> Outcome {
    let case = TheoremCase::of(u1.neutral(), u2.neutral());
    let conditions = theorem_conditions(u1, u2, ctx.policy)?;
    let summary = format!("case: {case}; conditions hold: {}", conditions.verdict());
    let body = ClassifyDoc { case, e1: u1.neutral(), e2: u2.neutral(), conditions: &conditions };
    let doc = ctx.emit("classification", &body, || format!("case: {case}\nconditions {conditions}"));
    Ok(Done { status: verdict(conditions.verdict()), doc, summary })
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    case: TheoremCase,
    distributive: bool,
    theorem_agrees: bool,
    report: &'a CheckReport,
    conditions: &'a CheckReport,
}

fn check(ctx: &Ctx, u1: &Uninorm, u2: &Uninorm) -> Outcome {
    let pc = classify_and_check_with(u1, u2, ctx.policy)?;
    let report = pc.report();
    let body = CheckDoc {
        case: pc.case,
        distributive: pc.distributive(),
        theorem_agrees: pc.agreement(),
        report: &report,
        conditions: &pc.theorem,
    };
    let doc = ctx.emit("check", &body, || format!("{pc}\n{report}"));
    Ok(Done { status: verdict(report.verdict()), doc, summary: pc.to_string() })
}

#[derive(Serialize)]
struct DecompositionBody<'a> {
    scale: usize,
    e1: usize,
    e2: usize,
    decomposition: &'a Decomposition,
}

fn decompose_cmd(ctx: &Ctx, u1: &Uninorm, u2: &Uninorm) -> Outcome {
    let d = match decompose(u1, u2) {
        Ok(d) => d,
        Err(Error::NotDistributive(report)) => {
            let doc = ctx.emit("check", &report, || report.to_string());
            return Ok(Done { status: Status::Fail, doc, summary: "not distributive, nothing to decompose".into() });
        }
        Err(e) => return Err(e.into()),
    };
    let doc = DecompositionDoc { scale: u1.scale(), e1: u1.neutral(), e2: u2.neutral(), decomposition: d };
    let body = DecompositionBody { scale: doc.scale.n(), e1: doc.e1, e2: doc.e2, decomposition: &doc.decomposition };
    let text = ctx.emit("decomposition", &body, || write_decomposition(&doc));
    let summary = format!(
        "{}: inner uninorm on L_{} with neutral {}, {} selection points",
        doc.decomposition.case,
        doc.decomposition.inner.n(),
        doc.decomposition.inner.neutral(),
        doc.decomposition.selection.len()
    );
    Ok(Done { status: Status::Pass, doc: text, summary })
}

#[derive(Serialize)]
struct PairBody<'a> {
    u1: &'a Uninorm,
    u2: &'a Uninorm,
}

fn compose_cmd(ctx: &Ctx, path: &Path) -> Outcome {
    let doc = parse_decomposition(&read(path)?).map_err(|e| match e {
        Error::Parse(p) => Failure::usage(format!("{}:{p}", path.display())),
        other => Failure::usage(format!("{}: {other}", path.display())),
    })?;
    match compose(&doc.decomposition, doc.scale, doc.e1, doc.e2) {
        Ok((u1, u2)) => {
            let text = ctx.emit("pair", &PairBody { u1: &u1, u2: &u2 }, || write_pair(&u1, &u2));
            let summary = format!("composed a distributive pair on {} with neutrals {} and {}", doc.scale, doc.e1, doc.e2);
            Ok(Done { status: Status::Pass, doc: text, summary })
        }
        Err(Error::CompositionRejected(r) | Error::CompositionInvalid(r)) => {
            let summary = match r.violations().first() {
                Some(v) => format!("composition failed: {v}"),
                None => "composition failed".into(),
            };
            Ok(Done { status: Status::Fail, doc: ctx.emit("check", &r, || r.to_string()), summary })
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct EnumerationBody<'a> {
    scale: usize,
    e: usize,
    filters: Filters,
    count: usize,
    search: SearchStats,
    uninorms: &'a [Uninorm],
}

fn enumerate_cmd(ctx: &Ctx, n: usize, e: usize, filters: Filters) -> Outcome {
    let scale = ChainScale::new(n)?;
    scale.check(e)?;
    let task = EnumerationTask::new(scale, e).with_filters(filters);
    let (found, search) = enumerate_parallel(&task, &ctx.limits, ctx.workers)?;
    let body = EnumerationBody { scale: n, e, filters, count: found.len(), search, uninorms: &found };
    let doc = ctx.emit("enumeration", &body, || {
        write_named_tables(found.iter().enumerate().map(|(i, u)| ((i + 1).to_string(), u)))
    });
    let summary = format!("{} uninorms on {scale} with neutral {e} ({} search nodes)", found.len(), search.nodes);
    Ok(Done { status: Status::Pass, doc, summary })
}

fn scan_cmd(ctx: &Ctx, n: usize, e1: usize, e2: usize) -> Outcome {
    let scale = ChainScale::new(n)?;
    let pairs = scan_pairs(scale, e1, e2, &ctx.limits, ctx.workers)?;
    let broken = pairs.iter().filter(|p| !p.necessity.verdict()).count();
    let doc = ctx.emit("scan", &pairs, || {
        let mut out = String::new();
        for (i, p) in pairs.iter().enumerate() {
            let k = i + 1;
            let _ = writeln!(out, "# pair {k}: necessary conditions {}", if p.necessity.verdict() { "hold" } else { "FAIL" });
            for v in p.necessity.violations() {
                let _ = writeln!(out, "#   {v}");
            }
            out.push_str(&write_named_tables([(format!("{k}.u1"), &p.u1), (format!("{k}.u2"), &p.u2)]));
        }
        out
    });
    let summary = format!(
        "{} distributive pairs on {scale} with neutrals {e1} and {e2}; {broken} break a necessary condition",
        pairs.len()
    );
    Ok(Done { status: verdict(broken == 0), doc, summary })
}

fn certification_text(r: &CertificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "certification of {}: {}", r.scale, if r.complete { "complete" } else { "PARTIAL" });
    let counts: Vec<String> = r.uninorm_counts.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "uninorms per neutral element: {}", counts.join(" "));
    let _ = writeln!(
        out,
        "pairs checked: {} of {}; agreements: {}; divergences: {}",
        r.pairs_checked,
        r.expected_pairs(),
        r.agreements,
        r.divergences.len()
    );
    let _ = writeln!(out, "{:<16} {:>8} {:>13} {:>11} {:>11}", "case", "pairs", "distributive", "conditions", "agreements");
    for (case, c) in &r.by_case {
        let _ = writeln!(
            out,
            "{:<16} {:>8} {:>13} {:>11} {:>11}",
            case.name(),
            c.pairs,
            c.distributive,
            c.theorem_true,
            c.agreements
        );
    }
    let _ = writeln!(out, "{:>3} {:>3} {:<16} {:>8} {:>13}", "e1", "e2", "case", "pairs", "distributive");
    for c in &r.by_neutrals {
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:<16} {:>8} {:>13}",
            c.e1,
            c.e2,
            c.case.name(),
            c.counts.pairs,
            c.counts.distributive
        );
    }
    for d in &r.divergences {
        let _ = writeln!(
            out,
            "# DIVERGENCE e1={} #{} e2={} #{}: conditions {}, brute force {}",
            d.e1, d.index1, d.e2, d.index2, d.theorem, d.distributive
        );
        for (name, rows) in [("u1", &d.u1), ("u2", &d.u2)] {
            let _ = writeln!(out, "[{name}]");
            for row in rows {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
        }
    }
    out
}

fn certify_cmd(ctx: &Ctx, n: usize, golden: bool, pair_budget: Option<u64>) -> Outcome {
    let scale = ChainScale::new(n)?;
    let golden_path = if golden {
        let dir = std::env::var_os(FIXTURES_ENV)
            .ok_or_else(|| Failure::usage(format!("--golden needs ${FIXTURES_ENV} to name the fixtures directory")))?;
        Some(PathBuf::from(dir).join(golden_file_name(scale)))
    } else {
        None
    };
    let opts = CertifyOptions { workers: ctx.workers, limits: ctx.limits, pair_budget };
    let start = Instant::now();
    let report = certify(scale, &opts)?;
    let canonical = golden_text(&report);
    let doc = match ctx.format {
        Format::Text => certification_text(&report),
        Format::Structured => canonical.clone(),
    };
    let mut summary = format!(
        "{}: {} pairs, {} agreements, {} divergences, {:.2?}",
        scale,
        report.pairs_checked,
        report.agreements,
        report.divergences.len(),
        start.elapsed()
    );
    let mut status = if !report.complete {
        summary.push_str(", PARTIAL (pair budget reached)");
        Status::Refused
    } else {
        verdict(report.consistent())
    };
    if let Some(path) = golden_path {
        let expected = read(&path)?;
        if expected == canonical {
            summary.push_str(&format!(", matches {}", path.display()));
        } else {
            summary.push_str(&format!(", DIFFERS from {}", path.display()));
            if status == Status::Pass {
                status = Status::Fail;
            }
        }
    }
    Ok(Done { status, doc, summary })
}

fn run(cli: Cli) -> Outcome {
    let mut limits = SearchLimits::default();
    if let Some(n) = cli.max_n {
        limits.max_enumerate_n = n;
        limits.max_certify_n = n;
    }
    let ctx = Ctx {
        format: cli.format,
        workers: cli.workers,
        limits,
        policy: if cli.verbose { WitnessPolicy::All } else { WitnessPolicy::First },
    };
    match cli.command {
        Command::Validate { table, u1 } => validate(&ctx, table, u1),
        Command::Classify { u1, u2 } => classify(&ctx, &load(&u1)?, &load(&u2)?),
        Command::Check { u1, u2 } => check(&ctx, &load(&u1)?, &load(&u2)?),
        Command::Decompose { u1, u2 } => decompose_cmd(&ctx, &load(&u1)?, &load(&u2)?),
        Command::Compose { table } => compose_cmd(&ctx, &table),
        Command::Enumerate { n, e, idempotent, locally_internal, conjunctive } => {
            enumerate_cmd(&ctx, n, e, Filters { idempotent, locally_internal, conjunctive })
        }
        Command::Scan { n, e1, e2 } => scan_cmd(&ctx, n, e1, e2),
        Command::Certify { n, golden, pair_budget } => certify_cmd(&ctx, n, golden, pair_budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let status = match run(cli) {
        Ok(done) => {
            let written = match &out {
                Some(path) => fs::write(path, &done.doc).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", done.doc);
                    Ok(())
                }
            };
            match written {
                Ok(()) => {
                    eprintln!("{}", done.summary);
                    done.status
                }
                Err(msg) => {
                    eprintln!("error: {msg}");
                    Status::Usage
                }
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.status
        }
    };
    ExitCode::from(status as u8)
}
