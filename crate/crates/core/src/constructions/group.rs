use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A finite group given by a validated Cayley table; index 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    op: Vec<usize>,
    inverse: Vec<usize>,
    label: String,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.label, self.order)
    }
}

impl GroupTable {
    /// Validates a row-major table: closure, identity at 0, inverses and
    /// associativity (exhaustive).
    pub fn new(label: impl Into<String>, order: usize, op: Vec<usize>) -> Result<GroupTable> {
        let label = label.into();
        if order == 0 || op.len() != order * order {
            return Err(Error::argument(format!(
                "{label}: table is not {order} x {order}"
            )));
        }
        if op.iter().any(|&v| v >= order) {
            return Err(Error::argument(format!(
                "{label}: table entry out of range"
            )));
        }
        let at = |a: usize, b: usize| op[a * order + b];
        if let Some(g) = (0..order).find(|&g| at(0, g) != g || at(g, 0) != g) {
            return Err(Error::argument(format!(
                "{label}: 0 is not an identity at {g}"
            )));
        }
        let mut inverse = Vec::with_capacity(order);
        for g in 0..order {
            match (0..order).find(|&h| at(g, h) == 0 && at(h, g) == 0) {
                Some(h) => inverse.push(h),
                None => return Err(Error::argument(format!("{label}: {g} has no inverse"))),
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::argument(format!(
                            "{label}: not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            op,
            inverse,
            label,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// A finite group is a 2-group exactly when its order is a power of two.
    pub fn is_two_group(&self) -> bool {
        self.order.is_power_of_two()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut p = g;
        while p != 0 {
            p = self.op(p, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Smallest subgroup containing `gens`, as sorted element indices.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut members: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier: Vec<usize> = gens.to_vec();
        while let Some(g) = frontier.pop() {
            if !members.insert(g) {
                continue;
            }
            let current: Vec<usize> = members.iter().copied().collect();
            for h in current {
                frontier.push(self.op(g, h));
                frontier.push(self.op(h, g));
            }
        }
        members.into_iter().collect()
    }

    /// Every subgroup, as sorted element lists ordered by (size, members).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> =
            (0..self.order).map(|g| self.generated(&[g])).collect();
        loop {
            let current: Vec<Vec<usize>> = found.iter().cloned().collect();
            let mut grew = false;
            for (i, a) in current.iter().enumerate() {
                for b in &current[i + 1..] {
                    let mut gens = a.clone();
                    gens.extend(b);
                    if found.insert(self.generated(&gens)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut all: Vec<Vec<usize>> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// The subgroup on `elements` (which must contain 0) relabeled by rank.
    pub fn subgroup(&self, elements: &[usize], label: impl Into<String>) -> Result<GroupTable> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return Err(Error::argument("subgroup must contain the identity"));
        }
        let k = sorted.len();
        let rank = |g: usize| sorted.binary_search(&g).ok();
        let mut op = Vec::with_capacity(k * k);
        for &a in &sorted {
            for &b in &sorted {
                op.push(rank(self.op(a, b)).ok_or_else(|| {
                    Error::argument(format!("{:?} is not closed under the group law", sorted))
                })?);
            }
        }
        GroupTable::new(label, k, op)
    }
}

/// Cyclic group `C_n` with element `i` the `i`-th power of a generator.
pub fn cyclic(n: usize, limits: &Limits) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::argument("cyclic group order must be at least 1"));
    }
    let label = format!("C{n}");
    limits.check_group(&label, Some(n))?;
    let op = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    GroupTable::new(label, n, op)
}

/// Direct product; `(g, h)` is encoded as `g·|H| + h`.
pub fn group_product(g: &GroupTable, h: &GroupTable, limits: &Limits) -> Result<GroupTable> {
    let left = if g.label.contains(" x ") {
        format!("({})", g.label)
    } else {
        g.label.clone()
    };
    let label = format!("{left} x {}", h.label);
    let n = limits.check_group(&label, g.order.checked_mul(h.order))?;
    let hn = h.order;
    let mut op = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            op.push(g.op(a / hn, b / hn) * hn + h.op(a % hn, b % hn));
        }
    }
    GroupTable::new(label, n, op)
}

// r^a s^b encoded a + n·b, with s r s = r^-1.
fn dihedral(n: usize, label: &str) -> Result<GroupTable> {
    let order = 2 * n;
    let mut op = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            op.push(rot + n * ((b + d) % 2));
        }
    }
    GroupTable::new(label, order, op)
}

/// Symmetric group on three letters, realized as the dihedral group of
/// order 6 (`r^a s^b` at index `a + 3b`).
pub fn s3() -> GroupTable {
    dihedral(3, "S3").expect("valid table")
}

/// Dihedral group of order 8 (`r^a s^b` at index `a + 4b`).
pub fn d4() -> GroupTable {
    dihedral(4, "D4").expect("valid table")
}

/// Quaternion group: index `u + 4s` is `(-1)^s · [1, i, j, k][u]`.
pub fn q8() -> GroupTable {
    // unit products as (sign, unit)
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut op = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (sign, unit) = UNITS[x % 4][y % 4];
            op.push(unit + 4 * ((sign + x / 4 + y / 4) % 2));
        }
    }
    GroupTable::new("Q8", 8, op).expect("valid table")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let l = Limits::default();
        let c2 = cyclic(2, &l).unwrap();
        assert!(c2.is_two_group());
        let v4 = group_product(&c2, &c2, &l).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_two_group());
        assert!((1..4).all(|g| v4.element_order(g) == 2));
        let s = s3();
        assert_eq!(s.order(), 6);
        assert!(!s.is_two_group());
        assert!(!s.is_abelian());
        assert!(!d4().is_abelian());
        let q = q8();
        // exactly one involution in Q8
        assert_eq!((1..8).filter(|&g| q.element_order(g) == 2).count(), 1);
        assert_eq!((1..8).filter(|&g| q.element_order(g) == 4).count(), 6);
        assert_eq!((1..8).filter(|&g| d4().element_order(g) == 2).count(), 5);
    }

    #[test]
    fn limits_and_bad_tables() {
        let l = Limits::default();
        assert!(cyclic(0, &l).is_err());
        assert!(matches!(cyclic(65, &l), Err(Error::Limit { .. })));
        let c8 = cyclic(8, &l).unwrap();
        assert!(group_product(&c8, &c8, &l).is_ok());
        assert!(group_product(&c8, &cyclic(9, &l).unwrap(), &l).is_err());
        // not associative: a 3-element loop
        let op = vec![0, 1, 2, 1, 0, 1, 2, 2, 0];
        assert!(GroupTable::new("bad", 3, op).is_err());
    }

    #[test]
    fn subgroup_lattice() {
        let l = Limits::default();
        let c2 = cyclic(2, &l).unwrap();
        let v4 = group_product(&c2, &c2, &l).unwrap();
        assert_eq!(v4.subgroups().len(), 5);
        assert_eq!(s3().subgroups().len(), 6);
        assert_eq!(d4().subgroups().len(), 10);
        assert_eq!(q8().subgroups().len(), 6);
        let c2x2x2 = group_product(&v4, &c2, &l).unwrap();
        assert_eq!(c2x2x2.subgroups().len(), 16);
        let h = s3().subgroup(&[0, 1, 2], "C3").unwrap();
        assert_eq!(h.order(), 3);
        assert!(s3().subgroup(&[0, 1], "x").is_err());
    }
}
