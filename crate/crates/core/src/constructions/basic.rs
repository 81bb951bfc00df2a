use crate::error::{Error, Result};
use crate::limits::{checked_order_pow, Limits};
use crate::ring::{FiniteRing, Structure};

use super::left_operand;
use super::poly::PolyStructure;

struct Zmod {
    n: usize,
}

impl Structure for Zmod {
    fn order(&self) -> usize {
        self.n
    }
    fn one(&self) -> usize {
        1
    }
    fn add(&self, a: usize, b: usize) -> usize {
        (a + b) % self.n
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        ((a as u128 * b as u128) % self.n as u128) as usize
    }
    fn neg(&self, a: usize) -> usize {
        (self.n - a) % self.n
    }
}

/// Integers modulo `n`.
pub fn zmod(n: usize, limits: &Limits) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::argument(format!(
            "Z/{n}: modulus must be at least 2"
        )));
    }
    FiniteRing::from_structure(format!("Z/{n}"), Zmod { n }, limits)
}

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

// Coefficient vectors over F_p are little-endian; `rem` is reduced in place.
fn poly_rem(rem: &mut Vec<usize>, divisor: &[usize], p: usize) {
    let d = divisor.len() - 1;
    let lead_inv = (1..p)
        .find(|&t| divisor[d] * t % p == 1)
        .expect("leading coefficient is invertible");
    while rem.len() > d {
        let top = rem.len() - 1;
        let c = rem[top] * lead_inv % p;
        if c != 0 {
            for (i, &fi) in divisor.iter().enumerate() {
                let k = top - d + i;
                rem[k] = (rem[k] + p - c * fi % p) % p;
            }
        }
        rem.pop();
    }
    while rem.last() == Some(&0) {
        rem.pop();
    }
}

fn monic_polys(p: usize, degree: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = p.pow(degree as u32);
    (0..count).map(move |lower| {
        let mut coeffs = super::decode(lower, p, degree);
        coeffs.push(1);
        coeffs
    })
}

/// First monic irreducible polynomial of degree `k` over `F_p`, ordering
/// candidates by their lower coefficients read as a little-endian base-`p`
/// integer. Irreducibility is decided by trial division by every monic
/// polynomial of degree `1..k`.
pub fn smallest_irreducible(p: usize, k: usize) -> Vec<usize> {
    assert!(is_prime(p) && k >= 1);
    monic_polys(p, k)
        .find(|f| {
            (1..k).all(|d| {
                monic_polys(p, d).all(|g| {
                    let mut rem = f.clone();
                    poly_rem(&mut rem, &g, p);
                    !rem.is_empty()
                })
            })
        })
        .expect("an irreducible polynomial exists in every degree")
}

/// The field with `p^k` elements as `F_p[x]/(f)`, `f` from
/// [`smallest_irreducible`].
pub fn gf(p: usize, k: usize, limits: &Limits) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::argument(format!("GF({p}, {k}): {p} is not prime")));
    }
    if k == 0 {
        return Err(Error::argument("GF degree must be at least 1"));
    }
    let label = format!("GF({p}, {k})");
    limits.check_ring(&label, checked_order_pow(p, k))?;
    let base = zmod(p, limits)?;
    let f = smallest_irreducible(p, k);
    FiniteRing::from_structure(label, PolyStructure::new(base, f), limits)
}

struct Product {
    a: FiniteRing,
    b: FiniteRing,
}

impl Product {
    #[inline]
    fn split(&self, x: usize) -> (usize, usize) {
        let nb = self.b.order();
        (x / nb, x % nb)
    }
    #[inline]
    fn join(&self, x: usize, y: usize) -> usize {
        x * self.b.order() + y
    }
}

impl Structure for Product {
    fn order(&self) -> usize {
        self.a.order() * self.b.order()
    }
    fn one(&self) -> usize {
        self.join(self.a.one(), self.b.one())
    }
    fn add(&self, x: usize, y: usize) -> usize {
        let ((x1, x2), (y1, y2)) = (self.split(x), self.split(y));
        self.join(self.a.add(x1, y1), self.b.add(x2, y2))
    }
    fn mul(&self, x: usize, y: usize) -> usize {
        let ((x1, x2), (y1, y2)) = (self.split(x), self.split(y));
        self.join(self.a.mul(x1, y1), self.b.mul(x2, y2))
    }
    fn neg(&self, x: usize) -> usize {
        let (x1, x2) = self.split(x);
        self.join(self.a.neg(x1), self.b.neg(x2))
    }
}

/// Direct product with componentwise operations.
pub fn product(a: &FiniteRing, b: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    let label = format!("{} x {}", left_operand(a.label()), b.label());
    limits.check_ring(&label, a.order().checked_mul(b.order()))?;
    FiniteRing::from_structure(
        label,
        Product {
            a: a.clone(),
            b: b.clone(),
        },
        limits,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<usize> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn zmod_bounds() {
        assert!(zmod(1, &Limits::default()).is_err());
        assert!(zmod(0, &Limits::default()).is_err());
        assert!(matches!(
            zmod(20_000, &Limits::default()),
            Err(Error::Limit { .. })
        ));
    }

    #[test]
    fn irreducibles() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn gf_is_a_field() {
        let l = Limits::default();
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = gf(p, k, &l).unwrap();
            assert_eq!(f.order(), p.pow(k as u32));
            for x in 1..f.order() {
                assert!(
                    (0..f.order()).any(|y| f.mul(x, y) == f.one()),
                    "{p}^{k}: {x}"
                );
            }
        }
        assert!(gf(4, 1, &l).is_err());
        assert!(gf(2, 0, &l).is_err());
        assert!(matches!(gf(3, 9, &l), Err(Error::Limit { .. })));
    }

    #[test]
    fn product_encoding() {
        let l = Limits::default();
        let r = product(&zmod(2, &l).unwrap(), &zmod(3, &l).unwrap(), &l).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.one(), 4);
        assert_eq!(r.label(), "Z/2 x Z/3");
        // (1,2)*(1,2) = (1,1)
        assert_eq!(r.mul(5, 5), 4);
        assert_eq!(r.characteristic(), 6);
        let z4 = zmod(4, &l).unwrap();
        let nested = product(&r, &z4, &l).unwrap();
        assert_eq!(nested.label(), "(Z/2 x Z/3) x Z/4");
        assert_eq!(nested.characteristic(), 12);
    }
}
