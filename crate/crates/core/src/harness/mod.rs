//! Replays the ring-theoretic claims over a corpus of constructed rings.
//!
//! Each claim is a universally quantified statement checked exhaustively over
//! the corpus and over rings derived from it (quotients, corners, subrings,
//! products and extensions). A passing claim means no counterexample was found
//! over the listed instances, nothing more.

mod checks;
mod claims;
mod corpus;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use checks::{
    bivariate_dual_numbers, bt_isomorphism, describe, matrix_witness, te_formulas,
    three_in_jacobson, two_in_jacobson, two_sqrt_ju, BtIsomorphism, MatrixWitness, TeFormulas,
};
pub use claims::{run_claim, ClaimId, ClaimResult, Instance, SkippedClaim, SKIPPED};
pub use corpus::{Corpus, CorpusEntry, DEFAULT_CORPUS};

use crate::axioms::{verify_axioms, AxiomReport, CheckPolicy, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Notes on how ambiguous statements are read. Printed with every report.
pub const NOTES: [&str; 5] = [
    "matrix rings: the theorem header says M_n(R) is 2-√JU iff n ≥ 2 while its proof shows \
     M_2(R) never is; C13 checks the proof's negative statement",
    "C14: the displayed √J formula for T(R, M) is checked as written (z ∈ J(R)) and with \
     z ∈ √J(R); an instance passes if either holds and the note on C14 says which did",
    "C18: \"2 is in the Jacobson radical\" is read as 1 + 1 ∈ J(R)",
    "C19: the conclusion u² ∈ 1 + √J is read in RG. Outside the checked instances, \
     GR(Z/3, C4) meets the hypothesis but is not 2-√JU, so the statement needs G \
     elementary abelian; the instances here use C2 and C2 x C2 only",
    "a 2-group is recognised by its order being a power of two",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub limits: Limits,
    pub seed: u64,
    pub samples: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            limits: Limits::default(),
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub corpus: String,
    pub corpus_size: usize,
    pub seed: u64,
    /// Corpus rings whose axiom check failed. They are left out of every claim.
    pub axiom_failures: Vec<AxiomReport>,
    pub claims: Vec<ClaimResult>,
    pub skipped: Vec<SkippedClaim>,
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.claims.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.claims.len() - self.passed()
    }

    /// True when every executed claim passed and every corpus ring is a ring.
    pub fn success(&self) -> bool {
        self.failed() == 0 && self.axiom_failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} passed, {} failed, {} skipped",
            self.passed(),
            self.failed(),
            self.skipped.len()
        )
    }

    /// Plain-text rendering. `verbose` lists every instance, not only failures.
    pub fn render_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "theorem suite over corpus `{}` ({} rings), seed {:#x}",
            self.corpus, self.corpus_size, self.seed
        );
        let _ = writeln!(
            out,
            "axioms: {} rings checked, {} failed",
            self.corpus_size,
            self.axiom_failures.len()
        );
        for a in &self.axiom_failures {
            for line in a.to_string().lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        for c in &self.claims {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<4} {:<22} {status}  {} ({:.0} ms)",
                c.id.code(),
                c.name,
                c.summary(),
                c.elapsed_ms
            );
            if verbose {
                let _ = writeln!(out, "     statement: {}", c.statement);
                let _ = writeln!(out, "     domain: {}", c.domain);
            }
            for i in c.instances.iter().filter(|i| verbose || !i.holds) {
                let mark = if i.holds { "ok" } else { "COUNTEREXAMPLE" };
                let _ = writeln!(out, "     {mark} [{}] {}", i.rings.join(" | "), i.detail);
            }
            for n in &c.notes {
                let _ = writeln!(out, "     note: {n}");
            }
        }
        for s in &self.skipped {
            let _ = writeln!(out, "{:<27} SKIPPED  {}", s.id, s.reason);
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out, "notes:");
            for n in &self.notes {
                let _ = writeln!(out, "  - {n}");
            }
        }
        let _ = writeln!(out, "{}", self.summary_line());
        out
    }
}

/// Runs the axiom preflight and then every selected claim, in parallel.
///
/// `filter` holds claim ids or names; `None` runs all claims and lists the
/// skipped ones. Unknown ids are an error.
pub fn run_suite(
    corpus: &Corpus,
    filter: Option<&[String]>,
    config: &SuiteConfig,
) -> Result<Report> {
    let start = Instant::now();
    let (ids, skipped) = match filter {
        None => (ClaimId::ALL.to_vec(), SKIPPED.to_vec()),
        Some(items) => {
            let mut ids = Vec::new();
            let mut skipped = Vec::new();
            for item in items {
                if let Some(s) = SKIPPED
                    .iter()
                    .find(|s| s.id.eq_ignore_ascii_case(item.trim()))
                {
                    skipped.push(*s);
                } else {
                    ids.push(ClaimId::parse(item)?);
                }
            }
            ids.sort_unstable();
            ids.dedup();
            skipped.dedup();
            (ids, skipped)
        }
    };
    if ids.is_empty() && skipped.is_empty() {
        return Err(Error::argument("empty claim filter"));
    }

    let policy = CheckPolicy::Auto {
        seed: config.seed,
        samples: config.samples,
    };
    let axioms: Vec<AxiomReport> = corpus
        .entries()
        .par_iter()
        .map(|e| verify_axioms(&e.ring, policy))
        .collect();
    let mut sound = Corpus::new(corpus.name.clone());
    for (e, a) in corpus.entries().iter().zip(&axioms) {
        if a.passed() {
            sound.push_entry(e.clone());
        }
    }

    let mut claims: Vec<ClaimResult> = ids
        .par_iter()
        .map(|&id| run_claim(id, &sound, &config.limits))
        .collect();
    claims.sort_by_key(|c| c.id);

    Ok(Report {
        corpus: corpus.name.clone(),
        corpus_size: corpus.len(),
        seed: config.seed,
        axiom_failures: axioms.into_iter().filter(|a| !a.passed()).collect(),
        claims,
        skipped,
        notes: NOTES.iter().map(|s| s.to_string()).collect(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
