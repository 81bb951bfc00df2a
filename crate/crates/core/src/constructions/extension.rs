use crate::error::Result;
use crate::limits::{checked_order_pow, Limits};
use crate::ring::{FiniteRing, Structure};

/// `R ∝ R`: pairs `(x, m)` with `(x, m)(y, n) = (xy, xn + my)`.
struct TrivialExtension {
    base: FiniteRing,
}

impl TrivialExtension {
    #[inline]
    fn split(&self, a: usize) -> (usize, usize) {
        let n = self.base.order();
        (a / n, a % n)
    }
    #[inline]
    fn join(&self, x: usize, m: usize) -> usize {
        x * self.base.order() + m
    }
}

impl Structure for TrivialExtension {
    fn order(&self) -> usize {
        self.base.order() * self.base.order()
    }
    fn one(&self) -> usize {
        self.join(self.base.one(), 0)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let ((x, m), (y, n)) = (self.split(a), self.split(b));
        self.join(self.base.add(x, y), self.base.add(m, n))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let r = &self.base;
        let ((x, m), (y, n)) = (self.split(a), self.split(b));
        self.join(r.mul(x, y), r.add(r.mul(x, n), r.mul(m, y)))
    }
    fn neg(&self, a: usize) -> usize {
        let (x, m) = self.split(a);
        self.join(self.base.neg(x), self.base.neg(m))
    }
}

/// Trivial extension `T(R, R)`.
pub fn trivial_extension(base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    let label = format!("TE({})", base.label());
    limits.check_ring(&label, checked_order_pow(base.order(), 2))?;
    FiniteRing::from_structure(label, TrivialExtension { base: base.clone() }, limits)
}

/// `BT(R, R)`, defined as `T(T(R, R), T(R, R))`. A quadruple `(x, p, y, q)`
/// is the pair `((x, p), (y, q))`, so the product's last coordinate is
/// `x1 q2 + p1 y2 + y1 p2 + q1 x2`.
pub fn bt(base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    let label = format!("BT({})", base.label());
    limits.check_ring(&label, checked_order_pow(base.order(), 4))?;
    let inner = trivial_extension(base, limits)?;
    Ok(trivial_extension(&inner, limits)?.with_label(label))
}

/// Index in [`bt`] of the quadruple `(x, p, y, q)`.
pub fn bt_index(n: usize, x: usize, p: usize, y: usize, q: usize) -> usize {
    ((x * n + p) * n + y) * n + q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zmod;

    #[test]
    fn te_multiplication() {
        let l = Limits::default();
        let z4 = zmod(4, &l).unwrap();
        let t = trivial_extension(&z4, &l).unwrap();
        assert_eq!(t.order(), 16);
        assert_eq!(t.one(), 4);
        for m in 0..4 {
            let a = 4 + m;
            let b = 4 + z4.neg(m);
            assert_eq!(t.mul(a, b), t.one());
        }
    }

    #[test]
    fn bt_fourth_coordinate() {
        let l = Limits::default();
        let z3 = zmod(3, &l).unwrap();
        let b = bt(&z3, &l).unwrap();
        assert_eq!(b.order(), 81);
        assert_eq!(b.one(), bt_index(3, 1, 0, 0, 0));
        // (0,1,0,0)(0,0,1,0) = (0,0,0,1): p1 y2 lands in q
        let p = bt_index(3, 0, 1, 0, 0);
        let y = bt_index(3, 0, 0, 1, 0);
        assert_eq!(b.mul(p, y), bt_index(3, 0, 0, 0, 1));
        assert_eq!(b.mul(y, p), bt_index(3, 0, 0, 0, 1));
        assert_eq!(b.mul(p, p), 0);
    }
}
