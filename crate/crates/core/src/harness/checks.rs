//! Structural checks shared by several claims and exposed for direct use.

use serde::Serialize;

use crate::classes::{check_unit_class, UnitPower, UnitTarget, Verdict};
use crate::constructions::{bt, bt_index, matrix_ring, poly_quotient, trivial_extension};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{ElementSet, FiniteRing};

/// The 2-√JU verdict.
pub fn two_sqrt_ju(r: &FiniteRing) -> Verdict {
    check_unit_class(r, UnitPower::Two, UnitTarget::SqrtJacobson)
}

pub fn describe(v: &Verdict) -> String {
    match v.witness {
        None => "2-√JU".to_string(),
        Some(w) => format!("not 2-√JU (unit {w})"),
    }
}

/// `1 + 1 ∈ J(R)`.
pub fn two_in_jacobson(r: &FiniteRing) -> bool {
    r.jacobson().contains(r.integer(2))
}

/// `1 + 1 + 1 ∈ J(R)`.
pub fn three_in_jacobson(r: &FiniteRing) -> bool {
    r.jacobson().contains(r.integer(3))
}

/// How the displayed unit, radical and root-of-radical formulas for `T(R, R)`
/// compare with the sets computed on the extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TeFormulas {
    pub label: String,
    /// `U(T) = {(u, n) : u ∈ U(R)}`.
    pub units: bool,
    /// `J(T) = {(j, n) : j ∈ J(R)}`.
    pub jacobson: bool,
    /// `√J(T) = {(z, n) : z ∈ J(R)}`, the formula as displayed.
    pub sqrt_j_literal: bool,
    /// `√J(T) = {(z, n) : z ∈ √J(R)}`.
    pub sqrt_j_root: bool,
}

fn lift(base: &FiniteRing, first: &ElementSet) -> ElementSet {
    let n = base.order();
    ElementSet::from_members(
        n * n,
        first.iter().flat_map(|x| (0..n).map(move |m| x * n + m)),
    )
}

pub fn te_formulas(base: &FiniteRing, limits: &Limits) -> Result<TeFormulas> {
    let t = trivial_extension(base, limits)?;
    Ok(TeFormulas {
        label: t.label().to_string(),
        units: t.units().set == lift(base, &base.units().set),
        jacobson: *t.jacobson() == lift(base, base.jacobson()),
        sqrt_j_literal: *t.sqrt_jacobson() == lift(base, base.jacobson()),
        sqrt_j_root: *t.sqrt_jacobson() == lift(base, base.sqrt_jacobson()),
    })
}

/// Exhaustive comparison of `R[x, y]/(x², y²)` with `BT(R)` under
/// `m + nx + py + qxy ↦ (m, n, p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BtIsomorphism {
    pub label: String,
    pub order: usize,
    pub bijective: bool,
    pub additive: bool,
    pub multiplicative: bool,
    pub unital: bool,
    /// First pair `(a, b)` of polynomial indices breaking a property.
    pub witness: Option<(usize, usize)>,
}

impl BtIsomorphism {
    pub fn holds(&self) -> bool {
        self.bijective && self.additive && self.multiplicative && self.unital
    }
}

/// `R[x, y]/(x², y²)` as iterated quotients: the element `m + nx + py + qxy`
/// has index `m + n|R| + p|R|² + q|R|³`.
pub fn bivariate_dual_numbers(base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    let inner = poly_quotient(base, &[0, 0, base.one()], limits)?;
    let outer = poly_quotient(&inner, &[0, 0, inner.one()], limits)?;
    Ok(outer.with_label(format!("{}[x, y]/(x², y²)", base.label())))
}

pub fn bt_isomorphism(base: &FiniteRing, limits: &Limits) -> Result<BtIsomorphism> {
    if !base.is_commutative() {
        return Err(Error::argument(format!(
            "{} is not commutative",
            base.label()
        )));
    }
    let poly = bivariate_dual_numbers(base, limits)?;
    let target = bt(base, limits)?;
    let n = base.order();
    let map: Vec<usize> = (0..poly.order())
        .map(|i| bt_index(n, i % n, (i / n) % n, (i / (n * n)) % n, i / (n * n * n)))
        .collect();
    let mut hit = vec![false; target.order()];
    for &y in &map {
        hit[y] = true;
    }
    let bijective = poly.order() == target.order() && hit.iter().all(|&h| h);
    let mut additive = true;
    let mut multiplicative = true;
    let mut witness = None;
    'outer: for a in 0..poly.order() {
        for b in 0..poly.order() {
            let add_ok = map[poly.add(a, b)] == target.add(map[a], map[b]);
            let mul_ok = map[poly.mul(a, b)] == target.mul(map[a], map[b]);
            if !(add_ok && mul_ok) {
                additive = add_ok;
                multiplicative = mul_ok;
                witness = Some((a, b));
                break 'outer;
            }
        }
    }
    Ok(BtIsomorphism {
        label: target.label().to_string(),
        order: poly.order(),
        bijective,
        additive,
        multiplicative,
        unital: map[poly.one()] == target.one(),
        witness,
    })
}

/// The matrix with rows `(1, 1), (1, 0)` in `M(2, R)` and what it shows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixWitness {
    pub label: String,
    /// Index of the matrix in `M(2, R)`.
    pub matrix: usize,
    pub square: usize,
    /// `A² - I`, which equals `A`.
    pub square_minus_one: usize,
    pub is_unit: bool,
    pub square_minus_one_is_unit: bool,
    /// `A² - I ∉ √J`, i.e. `A` fails the 2-√JU condition.
    pub fails_condition: bool,
    pub verdict: Verdict,
}

pub fn matrix_witness(base: &FiniteRing, limits: &Limits) -> Result<MatrixWitness> {
    let m = matrix_ring(2, base, limits)?;
    let (n, one) = (base.order(), base.one());
    // entries (0,0), (0,1), (1,0) set to one; little-endian positions
    let a = one + one * n + one * n * n;
    let square = m.mul(a, a);
    let square_minus_one = m.sub(square, m.one());
    Ok(MatrixWitness {
        label: m.label().to_string(),
        matrix: a,
        square,
        square_minus_one,
        is_unit: m.is_unit(a),
        square_minus_one_is_unit: m.is_unit(square_minus_one),
        fails_condition: !m.sqrt_jacobson().contains(square_minus_one),
        verdict: two_sqrt_ju(&m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zmod;

    #[test]
    fn matrix_witness_over_f2() {
        let l = Limits::default();
        let w = matrix_witness(&zmod(2, &l).unwrap(), &l).unwrap();
        assert_eq!((w.matrix, w.square, w.square_minus_one), (7, 14, 7));
        assert!(w.is_unit && w.square_minus_one_is_unit && w.fails_condition);
        assert!(!w.verdict.holds);
    }

    #[test]
    fn te_formulas_on_z4() {
        let l = Limits::default();
        let f = te_formulas(&zmod(4, &l).unwrap(), &l).unwrap();
        assert!(f.units && f.jacobson && f.sqrt_j_literal && f.sqrt_j_root);
    }

    #[test]
    fn bt_isomorphism_on_z2() {
        let l = Limits::default();
        let iso = bt_isomorphism(&zmod(2, &l).unwrap(), &l).unwrap();
        assert!(iso.holds(), "{iso:?}");
        assert_eq!(iso.order, 16);
    }
}
