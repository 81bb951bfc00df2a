use std::io::Write;

use finring::constructions::zmod;
use finring::expr::{evaluate, parse};
use finring::harness::{
    run_claim, run_suite, three_in_jacobson, two_in_jacobson, two_sqrt_ju, ClaimId, Corpus,
    SuiteConfig,
};
use finring::{Axiom, Error, FiniteRing, Limits};

fn filter(ids: &[&str]) -> Vec<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

fn small() -> Corpus {
    Corpus::parse(
        "small",
        "Z/2\nZ/4\nZ/5\nGF(2, 2)\nM(2, Z/2)\n",
        &Limits::default(),
    )
    .unwrap()
}

#[test]
fn corrupted_table_fails_the_axioms() {
    let mut corpus = small();
    let z4 = zmod(4, &Limits::default()).unwrap();
    let add: Vec<usize> = (0..16).map(|i| z4.add(i / 4, i % 4)).collect();
    let mut mul: Vec<usize> = (0..16).map(|i| z4.mul(i / 4, i % 4)).collect();
    mul[4 + 1] = 3;
    corpus.push_ring(FiniteRing::from_tables("corrupted", 1, add, mul).unwrap());
    let report = run_suite(&corpus, Some(&filter(&["C1"])), &SuiteConfig::default()).unwrap();
    assert!(!report.success());
    assert_eq!(report.axiom_failures.len(), 1);
    let failure = report.axiom_failures[0].failures().next().unwrap();
    assert_eq!(failure.axiom, Axiom::MulIdentity);
    assert_eq!(failure.witness, Some(vec![1]));
    // the corrupted ring never reaches the claims
    assert_eq!(report.claims[0].instances.len(), 5);
    assert!(report
        .render_text(false)
        .contains("FAIL one is a two-sided multiplicative identity"));
}

#[test]
fn filters() {
    let corpus = small();
    let config = SuiteConfig::default();
    let one = run_suite(&corpus, Some(&filter(&["C1"])), &config).unwrap();
    assert_eq!(one.claims.len(), 1);
    assert_eq!(one.claims[0].instances.len(), corpus.len());
    assert!(one.skipped.is_empty());
    assert_eq!(one.summary_line(), "1 passed, 0 failed, 0 skipped");

    let named = run_suite(
        &corpus,
        Some(&filter(&["matrix-never", "c13", "C-torsion"])),
        &config,
    )
    .unwrap();
    assert_eq!(named.claims.len(), 1);
    assert_eq!(named.skipped.len(), 1);

    let err = run_suite(&corpus, Some(&filter(&["C99"])), &config).unwrap_err();
    assert!(matches!(err, Error::UnknownClaim(ref id) if id == "C99"));
}

#[test]
fn reports_are_reproducible() {
    let corpus = small();
    let config = SuiteConfig::default();
    let ids = filter(&["C1", "C2", "C3", "C9", "C12"]);
    let a = run_suite(&corpus, Some(&ids), &config).unwrap();
    let b = run_suite(&corpus, Some(&ids), &config).unwrap();
    for (x, y) in a.claims.iter().zip(&b.claims) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.instances, y.instances);
        assert_eq!(x.notes, y.notes);
    }
    let ids: Vec<ClaimId> = a.claims.iter().map(|c| c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn division_claim_on_default_corpus() {
    let limits = Limits::default();
    let corpus = Corpus::default_corpus(&limits).unwrap();
    let r = run_claim(ClaimId::C6, &corpus, &limits);
    assert!(r.passed);
    let holds = |label: &str| {
        r.instances
            .iter()
            .find(|i| i.rings[0] == label)
            .map(|i| i.detail.ends_with(": 2-√JU"))
            .unwrap()
    };
    assert!(holds("Z/2") && holds("Z/3"));
    assert!(!holds("GF(2, 2)") && !holds("GF(3, 2)"));
}

#[test]
fn two_group_claim() {
    let limits = Limits::default();
    let r = run_claim(ClaimId::C18, &Corpus::new("empty"), &limits);
    assert!(r.passed);
    assert_eq!(r.instances.len(), 3);
    assert_eq!(r.instances[0].rings, vec!["GR(Z/4, C3)"]);
}

#[test]
fn cyclic_four_falls_outside_the_group_ring_theorem() {
    // Z/3 is 2-√JU with 3 ∈ J and C4 is a 2-group, yet Z/3[C4] is not 2-√JU.
    let l = Limits::default();
    let base = zmod(3, &l).unwrap();
    assert!(two_sqrt_ju(&base).holds && three_in_jacobson(&base));
    let rg = evaluate(&parse("GR(Z/3, C4)").unwrap(), &l).unwrap();
    let v = two_sqrt_ju(&rg);
    assert!(!v.holds);
    assert_eq!(v.witness.unwrap().to_string(), "3");
    assert!(two_in_jacobson(&zmod(4, &l).unwrap()));
}

#[test]
fn corpus_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# tiny corpus\nZ/2\n\nTE(Z/3)  # local\n").unwrap();
    let corpus = Corpus::load(file.path(), &Limits::default()).unwrap();
    assert_eq!(corpus.len(), 2);
    assert_eq!(corpus.entries()[1].label(), "TE(Z/3)");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "Z/2\nZ/3\nQQ(2)").unwrap();
    assert!(matches!(
        Corpus::load(bad.path(), &Limits::default()),
        Err(Error::Corpus { line: 3, .. })
    ));
    assert!(matches!(
        Corpus::load("/nonexistent/corpus.txt", &Limits::default()),
        Err(Error::Io(_))
    ));
}
