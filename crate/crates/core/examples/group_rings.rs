//! Group rings over small bases and which of them are 2-√JU.
//!
//!     cargo run --example group_rings

use finring::constructions::{cyclic, group_product, group_ring, q8, s3, zmod, GroupTable};
use finring::harness::{describe, two_in_jacobson, two_sqrt_ju};
use finring::Limits;

fn main() -> finring::Result<()> {
    let l = Limits::default();
    let groups: Vec<GroupTable> = vec![
        cyclic(2, &l)?,
        cyclic(3, &l)?,
        cyclic(4, &l)?,
        group_product(&cyclic(2, &l)?, &cyclic(2, &l)?, &l)?,
        s3(),
        q8(),
    ];
    for n in [2, 3, 4] {
        let base = zmod(n, &l)?;
        println!("base {} (2 ∈ J: {})", base.label(), two_in_jacobson(&base));
        for g in &groups {
            match group_ring(&base, g, &l) {
                Ok(rg) => println!(
                    "  {:<22} order {:>5}  {}",
                    rg.label(),
                    rg.order(),
                    describe(&two_sqrt_ju(&rg))
                ),
                Err(e) => println!("  {} over {}: {e}", g.label(), base.label()),
            }
        }
    }
    Ok(())
}
