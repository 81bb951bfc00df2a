//! Build a few rings directly and print their structural sets.
//!
//!     cargo run --example structure

use finring::constructions::{matrix_ring, product, trivial_extension, upper_triangular, zmod};
use finring::{FiniteRing, Limits};

fn show(r: &FiniteRing) {
    println!(
        "{} (order {}, characteristic {})",
        r.label(),
        r.order(),
        r.characteristic()
    );
    println!("  units        {}", r.units().len());
    println!("  J            {:?}", r.jacobson().members());
    println!("  sqrt J       {:?}", r.sqrt_jacobson().members());
    println!("  nilpotents   {:?}", r.nilpotents().members());
    println!("  idempotents  {:?}", r.idempotents().members());
    println!("  center size  {}", r.center().len());
}

fn main() -> finring::Result<()> {
    let l = Limits::default();
    let z4 = zmod(4, &l)?;
    let z2 = zmod(2, &l)?;
    show(&zmod(12, &l)?);
    show(&product(&z4, &zmod(3, &l)?, &l)?);
    show(&trivial_extension(&z2, &l)?);
    // noncommutative: √J is not an ideal here, and not even closed under +
    show(&matrix_ring(2, &z2, &l)?);
    show(&upper_triangular(2, &z4, &l)?);
    Ok(())
}
