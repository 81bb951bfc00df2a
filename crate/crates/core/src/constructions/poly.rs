use crate::error::{Error, Result};
use crate::limits::{checked_order_pow, Limits};
use crate::ring::{FiniteRing, Structure};

use super::{decode, encode};

/// `R[x]/(f)` for a monic `f`; `x` is central, so `x^d` is rewritten as
/// `-(f_0 + f_1 x + ... + f_{d-1} x^{d-1})`.
pub(crate) struct PolyStructure {
    base: FiniteRing,
    modulus: Vec<usize>,
    degree: usize,
}

impl PolyStructure {
    pub(crate) fn new(base: FiniteRing, modulus: Vec<usize>) -> Self {
        let degree = modulus.len() - 1;
        PolyStructure {
            base,
            modulus,
            degree,
        }
    }

    fn coeffs(&self, x: usize) -> Vec<usize> {
        decode(x, self.base.order(), self.degree)
    }
}

impl Structure for PolyStructure {
    fn order(&self) -> usize {
        self.base.order().pow(self.degree as u32)
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
        let d = self.degree;
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0usize; 2 * d - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = r.add(prod[i + j], r.mul(x, y));
            }
        }
        for k in (d..2 * d - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &fi) in self.modulus[..d].iter().enumerate() {
                prod[k - d + i] = r.sub(prod[k - d + i], r.mul(c, fi));
            }
        }
        encode(&prod[..d], r.order())
    }
    fn neg(&self, a: usize) -> usize {
        let r = &self.base;
        let n: Vec<usize> = self.coeffs(a).into_iter().map(|x| r.neg(x)).collect();
        encode(&n, r.order())
    }
}

/// Residue ring `R[x]/(f)` where `f` lists little-endian coefficients as
/// element indices of `R` and must end in `R`'s one.
pub fn poly_quotient(base: &FiniteRing, modulus: &[usize], limits: &Limits) -> Result<FiniteRing> {
    if modulus.len() < 2 {
        return Err(Error::argument("modulus must have degree at least 1"));
    }
    if let Some(&bad) = modulus.iter().find(|&&c| c >= base.order()) {
        return Err(Error::argument(format!(
            "coefficient {bad} is not an element of {}",
            base.label()
        )));
    }
    if *modulus.last().unwrap() != base.one() {
        return Err(Error::argument("modulus must be monic"));
    }
    let coeffs: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
    let label = format!("POLYQ({}, [{}])", base.label(), coeffs.join(", "));
    limits.check_ring(&label, checked_order_pow(base.order(), modulus.len() - 1))?;
    FiniteRing::from_structure(
        label,
        PolyStructure::new(base.clone(), modulus.to_vec()),
        limits,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zmod;

    #[test]
    fn dual_numbers_over_f2() {
        let l = Limits::default();
        let r = poly_quotient(&zmod(2, &l).unwrap(), &[0, 0, 1], &l).unwrap();
        assert_eq!(r.order(), 4);
        // x = index 2, x^2 = 0
        assert_eq!(r.mul(2, 2), 0);
        assert_eq!(r.mul(3, 3), 1);
    }

    #[test]
    fn f4_from_irreducible() {
        let l = Limits::default();
        let r = poly_quotient(&zmod(2, &l).unwrap(), &[1, 1, 1], &l).unwrap();
        // x * x = x + 1
        assert_eq!(r.mul(2, 2), 3);
        for x in 1..4 {
            assert!(!r.power_orbit(x).contains(&0));
        }
    }

    #[test]
    fn degree_one_is_base() {
        let l = Limits::default();
        let z6 = zmod(6, &l).unwrap();
        let r = poly_quotient(&z6, &[0, 1], &l).unwrap();
        assert_eq!(r.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(r.mul(a, b), z6.mul(a, b));
                assert_eq!(r.add(a, b), z6.add(a, b));
            }
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        let l = Limits::default();
        let z4 = zmod(4, &l).unwrap();
        assert!(poly_quotient(&z4, &[0, 2], &l).is_err());
        assert!(poly_quotient(&z4, &[1], &l).is_err());
        assert!(poly_quotient(&z4, &[0, 9], &l).is_err());
    }
}
