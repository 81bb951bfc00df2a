//! Corners, quotients and generated subrings.
//!
//!     cargo run --example induced

use finring::constructions::{corner, matrix_ring, quotient, subring_closure, zmod};
use finring::{is_two_sqrt_ju, Limits};

fn main() -> finring::Result<()> {
    let l = Limits::default();
    let m = matrix_ring(2, &zmod(3, &l)?, &l)?;

    // E11 sits at index 1 in the little-endian matrix encoding
    let (c, embed) = corner(&m, 1, &l)?;
    println!(
        "{}: order {}, embedded as {:?}",
        c.label(),
        c.order(),
        embed
    );

    let (q, proj) = quotient(&m, m.jacobson(), &l)?;
    println!(
        "{} / J: order {} (J has {} elements)",
        m.label(),
        q.order(),
        m.jacobson().len()
    );
    println!("  image of the witness 13: {}", proj[13]);

    let z8 = zmod(8, &l)?;
    let (q, _) = quotient(&z8, z8.jacobson(), &l)?;
    println!(
        "Z/8 / J = {} with {} elements, 2-√JU: {}",
        q.label(),
        q.order(),
        is_two_sqrt_ju(&q)
    );

    // the diagonal matrix diag(1, 0) + E12 generates a small subring
    let (s, parents) = subring_closure(&m, &[1 + 3], &l)?;
    println!(
        "subring generated by 4 in {}: order {}, elements {:?}",
        m.label(),
        s.order(),
        parents
    );
    println!("  unit-closed: {}", m.is_unit_closed_subring(&s, &parents));
    println!(
        "  2-√JU: {} (the full matrix ring: {})",
        is_two_sqrt_ju(&s),
        is_two_sqrt_ju(&m)
    );
    Ok(())
}
