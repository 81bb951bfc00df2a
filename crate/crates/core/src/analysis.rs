//! Structural subsets of a finite ring: units, Jacobson radical, the set
//! `√J(R)` of elements with a power in `J(R)`, nilpotents, idempotents and
//! the center.
//!
//! Every set is computed at most once per ring and shared by all clones of
//! the ring handle. Computations are exhaustive scans over element indices.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::ring::{ElementSet, FiniteRing};

const NO_INVERSE: u32 = u32::MAX;

/// Unit group as a set together with the two-sided inverse of each unit.
#[derive(Debug, Clone)]
pub struct Units {
    pub set: ElementSet,
    inverse: Vec<u32>,
}

impl Units {
    pub fn inverse(&self, x: usize) -> Option<usize> {
        match self.inverse.get(x) {
            Some(&y) if y != NO_INVERSE => Some(y as usize),
            _ => None,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter()
    }
}

#[derive(Default)]
pub(crate) struct AnalysisCache {
    units: OnceLock<Units>,
    jacobson: OnceLock<ElementSet>,
    sqrt_jacobson: OnceLock<ElementSet>,
    nilpotents: OnceLock<ElementSet>,
    idempotents: OnceLock<ElementSet>,
    center: OnceLock<ElementSet>,
}

// Scans all indices in parallel and collects the ones satisfying `pred`.
fn scan(n: usize, pred: impl Fn(usize) -> bool + Sync + Send) -> ElementSet {
    let mask: Vec<bool> = (0..n).into_par_iter().map(pred).collect();
    ElementSet::from_mask(mask)
}

impl FiniteRing {
    /// `x` is a unit when some `y` has `x·y = 1`; the matching `y·x = 1` is
    /// confirmed rather than assumed.
    ///
    /// # Panics
    /// If a one-sided inverse is not two-sided, which no finite ring allows.
    pub fn units(&self) -> &Units {
        self.cache().units.get_or_init(|| {
            let n = self.order();
            let one = self.one();
            let inverse: Vec<u32> = (0..n)
                .into_par_iter()
                .map(|x| match (0..n).find(|&y| self.mul(x, y) == one) {
                    Some(y) => {
                        assert!(
                            self.mul(y, x) == one,
                            "internal consistency: {x}·{y} = 1 but {y}·{x} != 1 in {}",
                            self.label()
                        );
                        y as u32
                    }
                    None => NO_INVERSE,
                })
                .collect();
            let set = ElementSet::from_mask(inverse.iter().map(|&y| y != NO_INVERSE).collect());
            Units { set, inverse }
        })
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.units().contains(x)
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.units().inverse(x)
    }

    /// Quasi-regularity: `x ∈ J(R)` iff `1 - r·x` is a unit for every `r`.
    pub fn in_jacobson(&self, x: usize) -> bool {
        let units = self.units();
        let one = self.one();
        (0..self.order()).all(|r| units.contains(self.sub(one, self.mul(r, x))))
    }

    /// # Panics
    /// If the computed radical is not a two-sided ideal (an implementation bug).
    pub fn jacobson(&self) -> &ElementSet {
        self.cache().jacobson.get_or_init(|| {
            self.units();
            let j = scan(self.order(), |x| self.in_jacobson(x));
            if let Some((a, b)) = ideal_violation(self, &j) {
                panic!(
                    "internal consistency: J({}) is not an ideal at ({a}, {b})",
                    self.label()
                );
            }
            j
        })
    }

    /// True iff some power of `x` lies in `J(R)`; the search runs over the
    /// power orbit of `x`.
    pub fn in_sqrt_jacobson(&self, x: usize) -> bool {
        let j = self.jacobson();
        orbit_any(self, x, |p| j.contains(p))
    }

    pub fn sqrt_jacobson(&self) -> &ElementSet {
        self.cache().sqrt_jacobson.get_or_init(|| {
            let j = self.jacobson();
            scan(self.order(), |x| orbit_any(self, x, |p| j.contains(p)))
        })
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        orbit_any(self, x, |p| p == 0)
    }

    pub fn nilpotents(&self) -> &ElementSet {
        self.cache()
            .nilpotents
            .get_or_init(|| scan(self.order(), |x| self.is_nilpotent(x)))
    }

    pub fn idempotents(&self) -> &ElementSet {
        self.cache()
            .idempotents
            .get_or_init(|| scan(self.order(), |x| self.mul(x, x) == x))
    }

    pub fn is_central(&self, x: usize) -> bool {
        (0..self.order()).all(|r| self.mul(r, x) == self.mul(x, r))
    }

    pub fn center(&self) -> &ElementSet {
        self.cache()
            .center
            .get_or_init(|| scan(self.order(), |x| self.is_central(x)))
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[usize]) -> ElementSet {
        let n = self.order();
        let mut mask = vec![false; n];
        let mut members: Vec<usize> = Vec::new();
        let mut pending: Vec<usize> = vec![0];
        pending.extend(gens.iter().copied().filter(|&g| g < n));
        let mut processed = 0;
        loop {
            for x in pending.drain(..) {
                if !mask[x] {
                    mask[x] = true;
                    members.push(x);
                }
            }
            if processed == members.len() {
                break;
            }
            while processed < members.len() {
                let a = members[processed];
                processed += 1;
                for r in 0..n {
                    pending.push(self.mul(r, a));
                    pending.push(self.mul(a, r));
                }
                for &b in &members[..processed] {
                    pending.push(self.add(a, b));
                }
            }
        }
        ElementSet::from_mask(mask)
    }

    /// True iff `U(S) = U(R) ∩ S` for the subring `sub` whose element `i`
    /// is `embedding[i]` in this ring.
    ///
    /// A finite subring sharing the identity is always unit-closed, since a
    /// unit of finite multiplicative order has its inverse among its powers.
    pub fn is_unit_closed_subring(&self, sub: &FiniteRing, embedding: &[usize]) -> bool {
        let image_of_units: HashSet<usize> = sub.units().iter().map(|u| embedding[u]).collect();
        let parent_units_in_image: HashSet<usize> = embedding
            .iter()
            .copied()
            .filter(|&x| self.is_unit(x))
            .collect();
        image_of_units == parent_units_in_image
    }
}

fn orbit_any(r: &FiniteRing, x: usize, pred: impl Fn(usize) -> bool) -> bool {
    let mut seen = HashSet::new();
    let mut p = x;
    while seen.insert(p) {
        if pred(p) {
            return true;
        }
        p = r.mul(p, x);
    }
    false
}

/// First pair showing `set` is not a two-sided ideal, if any.
pub(crate) fn ideal_violation(r: &FiniteRing, set: &ElementSet) -> Option<(usize, usize)> {
    if !set.contains(0) {
        return Some((0, 0));
    }
    for a in set.iter() {
        for b in set.iter() {
            if !set.contains(r.sub(a, b)) {
                return Some((a, b));
            }
        }
    }
    for x in 0..r.order() {
        for a in set.iter() {
            if !set.contains(r.mul(x, a)) {
                return Some((x, a));
            }
            if !set.contains(r.mul(a, x)) {
                return Some((a, x));
            }
        }
    }
    None
}

pub fn is_ideal(r: &FiniteRing, set: &ElementSet) -> bool {
    set.ring_order() == r.order() && ideal_violation(r, set).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::limits::Limits;

    fn l() -> Limits {
        Limits::default()
    }

    fn z(n: usize) -> FiniteRing {
        zmod(n, &l()).unwrap()
    }

    fn m2f2() -> FiniteRing {
        matrix_ring(2, &z(2), &l()).unwrap()
    }

    #[test]
    fn units_examples() {
        assert_eq!(z(4).units().set.members(), &[1, 3]);
        assert_eq!(m2f2().units().len(), 6);
        let gr = group_ring(&z(2), &cyclic(2, &l()).unwrap(), &l()).unwrap();
        assert_eq!(gr.units().set.members(), &[1, 2]);
        let r = m2f2();
        for u in r.units().iter() {
            let v = r.inverse(u).unwrap();
            assert_eq!(r.mul(u, v), r.one());
            assert_eq!(r.mul(v, u), r.one());
        }
        assert_eq!(r.inverse(0), None);
    }

    #[test]
    fn jacobson_examples() {
        assert!(z(4).in_jacobson(2));
        assert!(!z(6).in_jacobson(2));
        assert!(m2f2().in_jacobson(0));
        assert_eq!(z(12).jacobson().members(), &[0, 6]);
        assert_eq!(z(6).jacobson().members(), &[0]);
        assert_eq!(m2f2().jacobson().members(), &[0]);
        let ut = upper_triangular(2, &z(2), &l()).unwrap();
        // strictly upper: E12 = index 2
        assert_eq!(ut.jacobson().members(), &[0, 2]);
    }

    #[test]
    fn sqrt_jacobson_examples() {
        let m = m2f2();
        // nilpotent 2x2 matrices over F2: 0, E12, E21, [[1,1],[1,1]]
        assert_eq!(m.sqrt_jacobson().members(), &[0, 2, 4, 15]);
        assert_eq!(m.nilpotents(), m.sqrt_jacobson());
        assert_eq!(z(4).sqrt_jacobson().members(), &[0, 2]);
        // E12 + E21 = 6 is a unit
        assert!(m.in_sqrt_jacobson(2) && m.in_sqrt_jacobson(4));
        assert_eq!(m.add(2, 4), 6);
        assert!(!m.in_sqrt_jacobson(6));
        assert!(m.is_unit(6));
    }

    #[test]
    fn other_sets() {
        assert_eq!(z(6).idempotents().members(), &[0, 1, 3, 4]);
        assert_eq!(m2f2().center().members(), &[0, 9]);
        let f4 = gf(2, 2, &l()).unwrap();
        assert_eq!(f4.nilpotents().members(), &[0]);
    }

    #[test]
    fn ideal_closures() {
        assert_eq!(z(12).ideal_closure(&[4]).members(), &[0, 4, 8]);
        assert_eq!(z(12).ideal_closure(&[]).members(), &[0]);
        assert_eq!(m2f2().ideal_closure(&[2]).len(), 16);
        let r = z(12);
        for g in 0..12 {
            assert!(is_ideal(&r, &r.ideal_closure(&[g])));
        }
    }

    #[test]
    fn unit_closed_subrings() {
        let m = m2f2();
        let (s, emb) = subring_closure(&m, &[2], &l()).unwrap();
        assert!(m.is_unit_closed_subring(&s, &emb));
        let z6 = z(6);
        let (s, emb) = subring_closure(&z6, &[3], &l()).unwrap();
        assert!(z6.is_unit_closed_subring(&s, &emb));

        let z4 = z(4);
        let te = trivial_extension(&z4, &l()).unwrap();
        // diagonal copy (x, 0) = x * 4
        let (s, emb) = subring_closure(&te, &[], &l()).unwrap();
        assert_eq!(emb, vec![0, 4, 8, 12]);
        assert!(te.is_unit_closed_subring(&s, &emb));

        let f4 = gf(2, 2, &l()).unwrap();
        let (s, emb) = subring_closure(&f4, &[], &l()).unwrap();
        assert!(f4.is_unit_closed_subring(&s, &emb));

        // a corner with e != 1 does not share the identity: E11 is a unit of
        // the corner but not of M2(F2)
        let (c, emb) = corner(&m, 1, &l()).unwrap();
        assert!(!m.is_unit_closed_subring(&c, &emb));
    }

    #[test]
    fn sqrt_jacobson_matches_high_power_oracle() {
        // J is an ideal and orbits have length <= n, so x ∈ √J iff x^n ∈ J.
        let rings = [
            z(12),
            z(36),
            m2f2(),
            upper_triangular(2, &z(4), &l()).unwrap(),
            group_ring(&z(2), &s3(), &l()).unwrap(),
        ];
        for r in rings {
            let n = r.order() as u64;
            for x in 0..r.order() {
                let hi = r.pow(x, n).unwrap();
                assert_eq!(
                    r.in_sqrt_jacobson(x),
                    r.jacobson().contains(hi),
                    "{} {x}",
                    r.label()
                );
            }
        }
    }

    #[test]
    fn concurrent_requests_share_one_result() {
        let r = upper_triangular(2, &z(5), &l()).unwrap();
        let ptrs: Vec<usize> = (0..8)
            .into_par_iter()
            .map(|_| r.clone().sqrt_jacobson() as *const ElementSet as usize)
            .collect();
        assert!(ptrs.windows(2).all(|w| w[0] == w[1]));
    }
}
