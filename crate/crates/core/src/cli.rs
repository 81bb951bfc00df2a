//! The `finring` command line. [`run`] does all the work and returns the
//! buffered output, so the binary is a thin shell and tests need no process.
//!
//! Exit codes: 0 success, 1 mathematical counterexample, 2 usage, parse or
//! limit error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::axioms::DEFAULT_SEED;
use crate::classes::{classify, is_two_sqrt_ju, RingClass};
use crate::constructions::zmod;
use crate::error::{Error, Result};
use crate::expr::{evaluate, parse};
use crate::harness::{run_suite, Corpus, SuiteConfig};
use crate::limits::{Limits, DEFAULT_MAX_ORDER};
use crate::ring::FiniteRing;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "finring",
    version,
    about = "Finite ring analysis and claim verification"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest ring order any construction may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER, value_parser = positive)]
    max_order: usize,

    /// Seed for sampled axiom checks (decimal or 0x-prefixed hex).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED, value_parser = seed)]
    seed: u64,

    /// Also print addition and multiplication tables (analyze, table) or the
    /// tables of corpus rings that fail the axioms (verify).
    #[arg(long, global = true)]
    dump_tables: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural summary and class predicates of a ring.
    Analyze { expr: String },
    /// One structural set, or the addition or multiplication table.
    Table { expr: String, what: TableKind },
    /// Run the claim suite over a corpus.
    Verify {
        /// Comma-separated claim ids or names.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// Corpus file; the built-in corpus is used otherwise.
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Sweep a family of rings up to a bound.
    Enumerate { family: Family, max: usize },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    Units,
    Jacobson,
    Sqrtj,
    Nilpotents,
    Idempotents,
    Center,
    Add,
    Mul,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Zmod,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse::<u64>(),
    };
    parsed.map_err(|e| e.to_string())
}

/// Buffered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(message: String) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: message,
            code: EXIT_ERROR,
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::error(text)
            } else {
                Outcome::ok(text, EXIT_OK)
            };
        }
    };
    let limits = Limits::default().with_max_order(cli.max_order);
    let result = match &cli.command {
        Command::Analyze { expr } => analyze(&cli, expr, &limits),
        Command::Table { expr, what } => table(&cli, expr, *what, &limits),
        Command::Verify { claims, corpus } => {
            verify(&cli, claims.as_deref(), corpus.as_deref(), &limits)
        }
        Command::Enumerate { family, max } => enumerate(&cli, *family, *max, &limits),
    };
    match result {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(render_error(&cli.command, &e)),
    }
}

fn render_error(command: &Command, e: &Error) -> String {
    let mut out = format!("error: {e}\n");
    if let (Error::Parse(p), Command::Analyze { expr } | Command::Table { expr, .. }) = (e, command)
    {
        let _ = writeln!(out, "  {expr}");
        let _ = writeln!(
            out,
            "  {}^",
            " ".repeat(expr[..p.offset.min(expr.len())].chars().count())
        );
    }
    out
}

fn build(expr: &str, limits: &Limits) -> Result<FiniteRing> {
    evaluate(&parse(expr)?, limits)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn table_rows(r: &FiniteRing, mul: bool) -> Vec<Vec<usize>> {
    (0..r.order())
        .map(|a| {
            (0..r.order())
                .map(|b| if mul { r.mul(a, b) } else { r.add(a, b) })
                .collect()
        })
        .collect()
}

fn analyze(cli: &Cli, expr: &str, limits: &Limits) -> Result<Outcome> {
    let r = build(expr, limits)?;
    let report = classify(&r);
    let counts = [
        ("units", r.units().len()),
        ("jacobson", r.jacobson().len()),
        ("sqrtJacobson", r.sqrt_jacobson().len()),
        ("nilpotents", r.nilpotents().len()),
        ("idempotents", r.idempotents().len()),
        ("center", r.center().len()),
    ];
    let violation = report.implication_violation();
    let code = if violation.is_some() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    };
    if cli.json {
        let mut predicates = Map::new();
        let mut witnesses = Map::new();
        for class in RingClass::ALL {
            predicates.insert(class.key().into(), json!(report.holds(class)));
            witnesses.insert(class.key().into(), json!(report.witness(class)));
        }
        let mut obj = json!({
            "expr": r.label(),
            "order": r.order(),
            "characteristic": r.characteristic(),
            "counts": counts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>(),
            "predicates": predicates,
            "witnesses": witnesses,
        });
        if let Some(v) = violation {
            obj["implicationViolation"] = json!(v);
        }
        if cli.dump_tables {
            obj["tables"] = json!({"add": table_rows(&r, false), "mul": table_rows(&r, true)});
        }
        return Ok(Outcome::ok(pretty(&obj), code));
    }
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", r.label());
    let _ = writeln!(out, "order: {}", r.order());
    let _ = writeln!(out, "characteristic: {}", r.characteristic());
    let _ = writeln!(
        out,
        "|U| = {}, |J| = {}, |√J| = {}, |N| = {}, |Id| = {}, |C| = {}",
        counts[0].1, counts[1].1, counts[2].1, counts[3].1, counts[4].1, counts[5].1
    );
    let _ = writeln!(out, "predicates:");
    for class in RingClass::ALL {
        let holds = report.holds(class);
        let _ = match report.witness(class) {
            Some(w) => writeln!(out, "  {:<16} no   witness {w}", class.name()),
            None => writeln!(
                out,
                "  {:<16} {}",
                class.name(),
                if holds { "yes" } else { "no" }
            ),
        };
    }
    if let Some(v) = violation {
        let _ = writeln!(out, "implication violated: {v}");
    }
    if cli.dump_tables {
        out.push_str(&r.dump_tables());
    }
    Ok(Outcome::ok(out, code))
}

fn table(cli: &Cli, expr: &str, what: TableKind, limits: &Limits) -> Result<Outcome> {
    let r = build(expr, limits)?;
    let set = match what {
        TableKind::Units => Some(&r.units().set),
        TableKind::Jacobson => Some(r.jacobson()),
        TableKind::Sqrtj => Some(r.sqrt_jacobson()),
        TableKind::Nilpotents => Some(r.nilpotents()),
        TableKind::Idempotents => Some(r.idempotents()),
        TableKind::Center => Some(r.center()),
        TableKind::Add | TableKind::Mul => None,
    };
    let what_name = what
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let mul = matches!(what, TableKind::Mul);
    let mut out = if cli.json {
        let mut obj = json!({"expr": r.label(), "what": what_name});
        match set {
            Some(s) => obj["elements"] = json!(s.members()),
            None => obj["table"] = json!(table_rows(&r, mul)),
        }
        if cli.dump_tables {
            obj["tables"] = json!({"add": table_rows(&r, false), "mul": table_rows(&r, true)});
        }
        return Ok(Outcome::ok(pretty(&obj), EXIT_OK));
    } else {
        match set {
            Some(s) => {
                let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                items.join(" ") + "\n"
            }
            None => r.dump_table(mul),
        }
    };
    if cli.dump_tables {
        out.push_str(&r.dump_tables());
    }
    Ok(Outcome::ok(out, EXIT_OK))
}

fn verify(
    cli: &Cli,
    claims: Option<&[String]>,
    corpus: Option<&str>,
    limits: &Limits,
) -> Result<Outcome> {
    let corpus = match corpus {
        Some(path) => Corpus::load(path, limits)?,
        None => Corpus::default_corpus(limits)?,
    };
    let config = SuiteConfig {
        limits: *limits,
        seed: cli.seed,
        ..SuiteConfig::default()
    };
    let report = run_suite(&corpus, claims, &config)?;
    let code = if report.success() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    if cli.json {
        let mut obj = serde_json::to_value(&report).expect("report serializes");
        obj["passed"] = json!(report.passed());
        obj["failed"] = json!(report.failed());
        obj["skippedCount"] = json!(report.skipped.len());
        obj["success"] = json!(report.success());
        obj["summary"] = json!(report.summary_line());
        return Ok(Outcome::ok(pretty(&obj), code));
    }
    let mut out = report.render_text(claims.is_some());
    if cli.dump_tables {
        for a in &report.axiom_failures {
            if let Some(e) = corpus.entries().iter().find(|e| e.label() == a.label) {
                let _ = writeln!(out, "tables of {}:", a.label);
                out.push_str(&e.ring.dump_tables());
            }
        }
    }
    Ok(Outcome::ok(out, code))
}

/// `n = 2^a 3^b`.
pub fn is_two_three_smooth(mut n: usize) -> bool {
    for p in [2, 3] {
        while n > 1 && n.is_multiple_of(p) {
            n /= p;
        }
    }
    n == 1
}

fn enumerate(cli: &Cli, family: Family, max: usize, limits: &Limits) -> Result<Outcome> {
    let Family::Zmod = family;
    if max < 2 {
        return Err(Error::argument(format!(
            "max must be at least 2, got {max}"
        )));
    }
    if max > limits.max_order {
        return Err(Error::Limit {
            what: format!("Z/{max}"),
            order: max.to_string(),
            limit: limits.max_order,
        });
    }
    let mut rows = Vec::new();
    for n in 2..=max {
        let r = zmod(n, limits)?;
        let holds = is_two_sqrt_ju(&r);
        let law = is_two_three_smooth(n);
        rows.push((n, holds, law, r.units().len(), r.jacobson().len()));
    }
    let deviations = rows.iter().filter(|row| row.1 != row.2).count();
    let code = if deviations == 0 {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    if cli.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|&(n, holds, law, units, jac)| {
                json!({"n": n, "2sqrtJU": holds, "law": law, "units": units, "jacobson": jac, "agree": holds == law})
            })
            .collect();
        let obj = json!({"family": "zmod", "max": max, "rows": rows, "deviations": deviations});
        return Ok(Outcome::ok(pretty(&obj), code));
    }
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut out = format!(
        "{:<6} {:<6} {:<7} {:<6} {:<4} status\n",
        "n", "2-√JU", "2^a3^b", "|U|", "|J|"
    );
    for (n, holds, law, units, jac) in rows {
        let status = if holds == law { "ok" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{n:<6} {:<6} {:<7} {units:<6} {jac:<4} {status}",
            yn(holds),
            yn(law)
        );
    }
    let _ = writeln!(out, "{deviations} deviations from the 2^a3^b law");
    Ok(Outcome::ok(out, code))
}
