//! Ring and group constructions with canonical element encodings.
//!
//! | construction | element | index | one |
//! |---|---|---|---|
//! | `zmod(n)` | residue `i` | `i` | `1` |
//! | `gf(p, k)` | `sum c_i x^i` over `F_p` | `sum c_i p^i` | `1` |
//! | `product(A, B)` | `(a, b)` | `a·|B| + b` | `(1, 1)` |
//! | `matrix_ring(m, R)` | entries row-major `e_0 .. e_{m²-1}` | `sum e_t |R|^t` | identity |
//! | `upper_triangular(m, R)` | upper triangle `(1,1),(1,2),…,(m,m)` row-major | little-endian mixed radix | identity |
//! | `trivial_extension(R)` | `(x, m)` | `x·|R| + m` | `(1, 0)` |
//! | `bt(R)` | `(x, p, y, q)` = `((x, p), (y, q))` in `T(T(R,R), T(R,R))` | `((x·|R| + p)·|R| + y)·|R| + q` | `(1, 0, 0, 0)` |
//! | `poly_quotient(R, f)` | `sum c_i x^i`, `i < deg f` | `sum c_i |R|^i` | `1` |
//! | `group_ring(R, G)` | `sum a_g g` | `sum a_g |R|^g` | `1·e` |
//! | `quotient(R, I)` | coset | rank of its smallest member | coset of `1` |
//! | `corner(R, e)`, `subring_closure(R, S)` | parent element | rank among members | `e` / `1` |

mod basic;
mod extension;
mod group;
mod group_ring;
mod induced;
mod matrix;
mod poly;

pub use basic::{gf, is_prime, product, smallest_irreducible, zmod};
pub use extension::{bt, bt_index, trivial_extension};
pub use group::{cyclic, d4, group_product, q8, s3, GroupTable};
pub use group_ring::{group_ring, group_ring_embedding};
pub use induced::{corner, quotient, subring_closure};
pub use matrix::{matrix_ring, upper_triangular};
pub use poly::poly_quotient;

/// Little-endian mixed-radix digits of `index` in base `base`.
pub(crate) fn decode(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut digits = Vec::with_capacity(len);
    for _ in 0..len {
        digits.push(index % base);
        index /= base;
    }
    digits
}

pub(crate) fn encode(digits: &[usize], base: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * base + d)
}

/// Label for an operand of an infix ` x ` product sitting on the left.
pub(crate) fn left_operand(label: &str) -> String {
    if is_bare_product(label) {
        format!("({label})")
    } else {
        label.to_string()
    }
}

// True when a top-level ` x ` occurs outside any parentheses.
fn is_bare_product(label: &str) -> bool {
    let mut depth = 0i32;
    let bytes = label.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'x' if depth == 0 && i > 0 && bytes[i - 1] == b' ' => return true,
            _ => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_round_trip() {
        for base in 2usize..6 {
            for len in 1..4 {
                for idx in 0..base.pow(len as u32) {
                    let d = decode(idx, base, len);
                    assert!(d.iter().all(|&x| x < base));
                    assert_eq!(encode(&d, base), idx);
                }
            }
        }
    }

    #[test]
    fn left_operand_parenthesizes_products_only() {
        assert_eq!(left_operand("Z/2"), "Z/2");
        assert_eq!(left_operand("M(2, Z/2 x Z/3)"), "M(2, Z/2 x Z/3)");
        assert_eq!(left_operand("Z/2 x Z/3"), "(Z/2 x Z/3)");
    }
}
