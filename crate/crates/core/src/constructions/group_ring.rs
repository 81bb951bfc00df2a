use crate::error::Result;
use crate::limits::{checked_order_pow, Limits};
use crate::ring::{FiniteRing, Structure};

use super::{decode, encode, GroupTable};

/// Formal sums `sum a_g g`, multiplied by convolution over the group.
struct GroupRing {
    base: FiniteRing,
    group: GroupTable,
}

impl GroupRing {
    fn coeffs(&self, x: usize) -> Vec<usize> {
        decode(x, self.base.order(), self.group.order())
    }
}

impl Structure for GroupRing {
    fn order(&self) -> usize {
        self.base.order().pow(self.group.order() as u32)
    }
    fn one(&self) -> usize {
        self.base.one()
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let r = &self.base;
        let sum: Vec<usize> = self
            .coeffs(a)
            .into_iter()
            .zip(self.coeffs(b))
            .map(|(x, y)| r.add(x, y))
            .collect();
        encode(&sum, r.order())
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let r = &self.base;
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut out = vec![0usize; self.group.order()];
        for (g, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (h, &y) in cb.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let gh = self.group.op(g, h);
                out[gh] = r.add(out[gh], r.mul(x, y));
            }
        }
        encode(&out, r.order())
    }
    fn neg(&self, a: usize) -> usize {
        let r = &self.base;
        let n: Vec<usize> = self.coeffs(a).into_iter().map(|x| r.neg(x)).collect();
        encode(&n, r.order())
    }
}

/// Group ring `RG`.
pub fn group_ring(base: &FiniteRing, group: &GroupTable, limits: &Limits) -> Result<FiniteRing> {
    let label = format!("GR({}, {})", base.label(), group.label());
    limits.check_ring(&label, checked_order_pow(base.order(), group.order()))?;
    FiniteRing::from_structure(
        label,
        GroupRing {
            base: base.clone(),
            group: group.clone(),
        },
        limits,
    )
}

/// Maps each element of `RH` to `RG`, where `H` is the subgroup of `G` on the
/// sorted element list `subgroup` (so `H`'s index `i` is `subgroup[i]`).
pub fn group_ring_embedding(
    base_order: usize,
    subgroup: &[usize],
    group_order: usize,
) -> Vec<usize> {
    let h = subgroup.len();
    (0..base_order.pow(h as u32))
        .map(|x| {
            let local = decode(x, base_order, h);
            let mut coeffs = vec![0; group_order];
            for (i, c) in local.into_iter().enumerate() {
                coeffs[subgroup[i]] = c;
            }
            encode(&coeffs, base_order)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic, s3, zmod};

    #[test]
    fn f2_c2() {
        let l = Limits::default();
        let r = group_ring(&zmod(2, &l).unwrap(), &cyclic(2, &l).unwrap(), &l).unwrap();
        assert_eq!(r.order(), 4);
        // g = index 2, g^2 = 1; (1+g)^2 = 0
        assert_eq!(r.mul(2, 2), 1);
        assert_eq!(r.mul(3, 3), 0);
    }

    #[test]
    fn noncommutative_for_s3() {
        let l = Limits::default();
        let r = group_ring(&zmod(2, &l).unwrap(), &s3(), &l).unwrap();
        assert_eq!(r.order(), 64);
        assert!(!r.is_commutative());
    }

    #[test]
    fn embedding_is_multiplicative() {
        let l = Limits::default();
        let z3 = zmod(3, &l).unwrap();
        let g = cyclic(4, &l).unwrap();
        let sub = g.generated(&[2]);
        let h = g.subgroup(&sub, "C2").unwrap();
        let rg = group_ring(&z3, &g, &l).unwrap();
        let rh = group_ring(&z3, &h, &l).unwrap();
        let emb = group_ring_embedding(3, &sub, 4);
        for a in 0..rh.order() {
            for b in 0..rh.order() {
                assert_eq!(emb[rh.mul(a, b)], rg.mul(emb[a], emb[b]));
                assert_eq!(emb[rh.add(a, b)], rg.add(emb[a], emb[b]));
            }
        }
    }
}
