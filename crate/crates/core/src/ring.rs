//! Finite unital rings on canonical element indices.
//!
//! Every ring has elements `0..order`. The additive identity is always index
//! `0`; the multiplicative identity is fixed by the construction that built the
//! ring and documented there. Small rings carry full operation tables, larger
//! ones compute sums and products from their construction data on demand. The
//! two modes are observationally identical.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::analysis::AnalysisCache;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Construction data able to compute ring operations on canonical indices.
pub trait Structure: Send + Sync {
    fn order(&self) -> usize;
    fn one(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Materialized,
    Computed,
}

enum Ops {
    Table { add: Vec<u32>, mul: Vec<u32> },
    Computed(Box<dyn Structure>),
}

struct RingData {
    order: usize,
    one: usize,
    label: String,
    ops: Arc<Ops>,
    neg: Arc<[u32]>,
    cache: Arc<AnalysisCache>,
}

/// A finite ring with identity.
///
/// Cloning is cheap and clones share the lazily computed structural sets.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingData>);

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.0.label)
            .field("order", &self.0.order)
            .field("one", &self.0.one)
            .field("mode", &self.mode())
            .finish()
    }
}

impl FiniteRing {
    /// Wraps construction data, tabulating it when the order is at most the
    /// materialization threshold of `limits`.
    pub fn from_structure<S: Structure + 'static>(
        label: impl Into<String>,
        structure: S,
        limits: &Limits,
    ) -> Result<FiniteRing> {
        let label = label.into();
        let n = limits.check_ring(&label, Some(structure.order()))?;
        if n == 0 {
            return Err(Error::argument("a ring needs at least one element"));
        }
        let one = structure.one();
        let neg: Arc<[u32]> = (0..n).map(|x| structure.neg(x) as u32).collect();
        let ops = if n <= limits.materialize_threshold {
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    add.push(structure.add(a, b) as u32);
                    mul.push(structure.mul(a, b) as u32);
                }
            }
            Ops::Table { add, mul }
        } else {
            Ops::Computed(Box::new(structure))
        };
        Ok(FiniteRing(Arc::new(RingData {
            order: n,
            one,
            label,
            ops: Arc::new(ops),
            neg,
            cache: Arc::new(AnalysisCache::default()),
        })))
    }

    /// Builds a ring from raw row-major tables, where entry `r * n + c` holds
    /// `op(r, c)`. Only shape and range are validated here; use
    /// [`crate::axioms::verify_axioms`] for the ring axioms.
    pub fn from_tables(
        label: impl Into<String>,
        one: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
    ) -> Result<FiniteRing> {
        let n = (add.len() as f64).sqrt().round() as usize;
        if n == 0 || n * n != add.len() || mul.len() != add.len() {
            return Err(Error::argument("tables must both be n x n with n >= 1"));
        }
        if one >= n {
            return Err(Error::argument(format!("one = {one} is out of range")));
        }
        if let Some(&bad) = add.iter().chain(mul.iter()).find(|&&v| v >= n) {
            return Err(Error::argument(format!(
                "table entry {bad} is out of range"
            )));
        }
        let mut neg = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&y| add[x * n + y] == 0) {
                Some(y) => neg.push(y as u32),
                None => {
                    return Err(Error::argument(format!(
                        "element {x} has no additive inverse"
                    )))
                }
            }
        }
        Ok(FiniteRing(Arc::new(RingData {
            order: n,
            one,
            label: label.into(),
            ops: Arc::new(Ops::Table {
                add: add.into_iter().map(|v| v as u32).collect(),
                mul: mul.into_iter().map(|v| v as u32).collect(),
            }),
            neg: neg.into(),
            cache: Arc::new(AnalysisCache::default()),
        })))
    }

    /// Same ring under a new display label; analysis caches stay shared.
    pub fn with_label(&self, label: impl Into<String>) -> FiniteRing {
        FiniteRing(Arc::new(RingData {
            order: self.0.order,
            one: self.0.one,
            label: label.into(),
            ops: Arc::clone(&self.0.ops),
            neg: Arc::clone(&self.0.neg),
            cache: Arc::clone(&self.0.cache),
        }))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.0.one
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn mode(&self) -> Mode {
        match *self.0.ops {
            Ops::Table { .. } => Mode::Materialized,
            Ops::Computed(_) => Mode::Computed,
        }
    }

    pub(crate) fn cache(&self) -> &AnalysisCache {
        &self.0.cache
    }

    /// True when both handles point at the same ring data.
    pub fn same_instance(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.0.ops, &other.0.ops)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &*self.0.ops {
            Ops::Table { add, .. } => add[a * self.0.order + b] as usize,
            Ops::Computed(s) => s.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &*self.0.ops {
            Ops::Table { mul, .. } => mul[a * self.0.order + b] as usize,
            Ops::Computed(s) => s.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::argument(format!(
                "index {x} out of range for ring of order {}",
                self.order()
            )))
        }
    }

    pub fn try_add(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_sub(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.sub(a, b))
    }

    pub fn try_neg(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.neg(a))
    }

    /// `x` multiplied by itself `k` times, by square-and-multiply.
    pub fn pow(&self, x: usize, k: u64) -> Result<usize> {
        self.check_index(x)?;
        if k == 0 {
            return Err(Error::argument("exponent must be at least 1"));
        }
        Ok(self.pow_unchecked(x, k))
    }

    pub(crate) fn pow_unchecked(&self, x: usize, mut k: u64) -> usize {
        let mut base = x;
        let mut acc: Option<usize> = None;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => self.mul(a, base),
                    None => base,
                });
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(base, base);
            }
        }
        acc.expect("k >= 1")
    }

    /// Distinct powers `x, x^2, x^3, ...` in order of first appearance,
    /// stopping at the first repeat.
    pub fn power_orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = HashSet::new();
        let mut orbit = Vec::new();
        let mut p = x;
        while seen.insert(p) {
            orbit.push(p);
            p = self.mul(p, x);
        }
        orbit
    }

    /// `k · 1`, the image of the integer `k` in the ring.
    pub fn integer(&self, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.add(acc, self.one());
        }
        acc
    }

    /// Smallest `k >= 1` with `k · 1 = 0`.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one();
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, self.one());
            k += 1;
        }
        k
    }

    pub fn is_commutative(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Table dump: `order n`, `one i`, the addition table, a blank line, then
    /// the multiplication table. Row `r`, column `c` holds `op(r, c)`.
    pub fn dump_tables(&self) -> String {
        let n = self.order();
        let mut out = format!("order {n}\none {}\n", self.one());
        self.write_table(&mut out, |a, b| self.add(a, b));
        out.push('\n');
        self.write_table(&mut out, |a, b| self.mul(a, b));
        out
    }

    pub fn dump_table(&self, mul: bool) -> String {
        let mut out = format!("order {}\none {}\n", self.order(), self.one());
        if mul {
            self.write_table(&mut out, |a, b| self.mul(a, b));
        } else {
            self.write_table(&mut out, |a, b| self.add(a, b));
        }
        out
    }

    fn write_table(&self, out: &mut String, op: impl Fn(usize, usize) -> usize) {
        use std::fmt::Write;
        let n = self.order();
        for r in 0..n {
            for c in 0..n {
                if c > 0 {
                    out.push(' ');
                }
                write!(out, "{}", op(r, c)).unwrap();
            }
            out.push('\n');
        }
    }

    /// Inverse of [`FiniteRing::dump_tables`].
    pub fn parse_dump(label: impl Into<String>, text: &str) -> Result<FiniteRing> {
        let mut lines = text.lines();
        let header = |line: Option<&str>, key: &str| -> Result<usize> {
            let line = line.ok_or_else(|| Error::argument(format!("missing `{key}` line")))?;
            let rest = line
                .trim()
                .strip_prefix(key)
                .ok_or_else(|| Error::argument(format!("expected `{key} <int>`, got `{line}`")))?;
            rest.trim()
                .parse()
                .map_err(|_| Error::argument(format!("bad integer in `{line}`")))
        };
        let n = header(lines.next(), "order")?;
        let one = header(lines.next(), "one")?;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::argument(format!("bad table row `{line}`")))?;
            if row.len() != n {
                return Err(Error::argument(format!(
                    "row has {} entries, expected {n}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        if rows.len() != 2 * n {
            return Err(Error::argument(format!(
                "expected {} table rows, found {}",
                2 * n,
                rows.len()
            )));
        }
        let mul = rows.split_off(n).concat();
        let add = rows.concat();
        FiniteRing::from_tables(label, one, add, mul)
    }
}

/// A subset of a ring's element indices with O(1) membership.
///
/// The set remembers the order of the ring it was drawn from.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementSet {
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

impl ElementSet {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        ElementSet { mask, members }
    }

    /// Panics when a member is not below `ring_order`.
    pub fn from_members(ring_order: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = vec![false; ring_order];
        for m in members {
            assert!(m < ring_order, "element {m} out of range {ring_order}");
            mask[m] = true;
        }
        ElementSet::from_mask(mask)
    }

    pub fn ring_order(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in increasing order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet::from_members(
            self.ring_order(),
            self.iter().filter(|&x| other.contains(x)),
        )
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }
}
