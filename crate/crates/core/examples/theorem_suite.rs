//! Run the claim suite over the built-in corpus, optionally filtered.
//!
//!     cargo run --release --example theorem_suite -- C13 C19

use finring::harness::{run_suite, Corpus, SuiteConfig};

fn main() -> finring::Result<()> {
    let config = SuiteConfig::default();
    let corpus = Corpus::default_corpus(&config.limits)?;
    let ids: Vec<String> = std::env::args().skip(1).collect();
    let filter = (!ids.is_empty()).then_some(ids.as_slice());
    let report = run_suite(&corpus, filter, &config)?;
    print!("{}", report.render_text(filter.is_some()));
    if !report.success() {
        std::process::exit(1);
    }
    Ok(())
}
