use crate::error::{Error, Result};
use crate::limits::{checked_order_pow, Limits};
use crate::ring::{FiniteRing, Structure};

use super::{decode, encode};

/// Matrices over `base` whose support is `positions` (row-major order).
struct MatrixStructure {
    base: FiniteRing,
    m: usize,
    positions: Vec<(usize, usize)>,
}

impl MatrixStructure {
    fn full(base: FiniteRing, m: usize) -> Self {
        let positions = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
        MatrixStructure { base, m, positions }
    }

    fn upper(base: FiniteRing, m: usize) -> Self {
        let positions = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
        MatrixStructure { base, m, positions }
    }

    fn to_dense(&self, x: usize) -> Vec<usize> {
        let digits = decode(x, self.base.order(), self.positions.len());
        let mut dense = vec![0; self.m * self.m];
        for (&(i, j), d) in self.positions.iter().zip(digits) {
            dense[i * self.m + j] = d;
        }
        dense
    }

    fn encode_dense(&self, dense: &[usize]) -> usize {
        let digits: Vec<usize> = self
            .positions
            .iter()
            .map(|&(i, j)| dense[i * self.m + j])
            .collect();
        encode(&digits, self.base.order())
    }

    fn map2(&self, a: usize, b: usize, f: impl Fn(usize, usize) -> usize) -> usize {
        let nb = self.base.order();
        let len = self.positions.len();
        let digits: Vec<usize> = decode(a, nb, len)
            .into_iter()
            .zip(decode(b, nb, len))
            .map(|(x, y)| f(x, y))
            .collect();
        encode(&digits, nb)
    }
}

impl Structure for MatrixStructure {
    fn order(&self) -> usize {
        self.base.order().pow(self.positions.len() as u32)
    }
    fn one(&self) -> usize {
        let mut dense = vec![0; self.m * self.m];
        for i in 0..self.m {
            dense[i * self.m + i] = self.base.one();
        }
        self.encode_dense(&dense)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.map2(a, b, |x, y| self.base.add(x, y))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let r = &self.base;
        let m = self.m;
        let (x, y) = (self.to_dense(a), self.to_dense(b));
        let mut z = vec![0; m * m];
        for i in 0..m {
            for k in 0..m {
                let xik = x[i * m + k];
                if xik == 0 {
                    continue;
                }
                for j in 0..m {
                    z[i * m + j] = r.add(z[i * m + j], r.mul(xik, y[k * m + j]));
                }
            }
        }
        self.encode_dense(&z)
    }
    fn neg(&self, a: usize) -> usize {
        let nb = self.base.order();
        let digits: Vec<usize> = decode(a, nb, self.positions.len())
            .into_iter()
            .map(|x| self.base.neg(x))
            .collect();
        encode(&digits, nb)
    }
}

/// Full `m x m` matrix ring.
pub fn matrix_ring(m: usize, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    if m == 0 {
        return Err(Error::argument("matrix size must be at least 1"));
    }
    let label = format!("M({m}, {})", base.label());
    limits.check_ring(
        &label,
        m.checked_mul(m)
            .and_then(|e| checked_order_pow(base.order(), e)),
    )?;
    FiniteRing::from_structure(label, MatrixStructure::full(base.clone(), m), limits)
}

/// Upper triangular `m x m` matrices.
pub fn upper_triangular(m: usize, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    if m < 2 {
        return Err(Error::argument("upper triangular size must be at least 2"));
    }
    let label = format!("UT({m}, {})", base.label());
    let entries = m * (m + 1) / 2;
    limits.check_ring(&label, checked_order_pow(base.order(), entries))?;
    FiniteRing::from_structure(label, MatrixStructure::upper(base.clone(), m), limits)
}
