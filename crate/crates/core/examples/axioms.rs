//! Dump a ring's tables, read them back, and catch a corrupted entry.
//!
//!     cargo run --example axioms

use finring::constructions::zmod;
use finring::{verify_axioms, CheckPolicy, FiniteRing, Limits};

fn main() -> finring::Result<()> {
    let z4 = zmod(4, &Limits::default())?;
    let dump = z4.dump_tables();
    println!("{dump}");
    let back = FiniteRing::parse_dump("Z/4 (reread)", &dump)?;
    println!("{}", verify_axioms(&back, CheckPolicy::Exhaustive));

    // 3 * 3 should be 1
    let broken = dump.replacen("0 3 2 1", "0 3 2 2", 1);
    let bad = FiniteRing::parse_dump("Z/4 (corrupted)", &broken)?;
    println!("{}", verify_axioms(&bad, CheckPolicy::Exhaustive));
    Ok(())
}
