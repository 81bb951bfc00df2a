use crate::constructions::{
    bt, corner, cyclic, d4, gf, group_product, group_ring, matrix_ring, poly_quotient, product, q8,
    quotient, s3, trivial_extension, upper_triangular, zmod, GroupTable,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::FiniteRing;

use super::ast::{GroupExpr, RingExpr};

/// Builds the ring an expression denotes. The result is labelled with the
/// canonical text of `expr`. Limit errors name the smallest offending node.
pub fn evaluate(expr: &RingExpr, limits: &Limits) -> Result<FiniteRing> {
    let ring = match expr {
        RingExpr::Zmod(n) => zmod(*n, limits),
        RingExpr::Gf(p, k) => gf(*p, *k, limits),
        RingExpr::Product(a, b) => {
            let (a, b) = (evaluate(a, limits)?, evaluate(b, limits)?);
            product(&a, &b, limits)
        }
        RingExpr::Matrix(m, e) => matrix_ring(*m, &evaluate(e, limits)?, limits),
        RingExpr::UpperTri(m, e) => upper_triangular(*m, &evaluate(e, limits)?, limits),
        RingExpr::TrivialExt(e) => trivial_extension(&evaluate(e, limits)?, limits),
        RingExpr::Bt(e) => bt(&evaluate(e, limits)?, limits),
        RingExpr::Nil(e, p) => {
            let base = evaluate(e, limits)?;
            let mut modulus = vec![0; *p];
            modulus.push(base.one());
            poly_quotient(&base, &modulus, limits)
        }
        RingExpr::PolyQ(e, coeffs) => poly_quotient(&evaluate(e, limits)?, coeffs, limits),
        RingExpr::GroupRing(e, g) => {
            let base = evaluate(e, limits)?;
            group_ring(&base, &evaluate_group(g, limits)?, limits)
        }
        RingExpr::ModJ(e) => {
            let base = evaluate(e, limits)?;
            quotient(&base, base.jacobson(), limits).map(|(q, _)| q)
        }
        RingExpr::Corner(e, i) => corner(&evaluate(e, limits)?, *i, limits).map(|(c, _)| c),
        RingExpr::Quot(e, gens) => {
            let base = evaluate(e, limits)?;
            if let Some(&bad) = gens.iter().find(|&&g| g >= base.order()) {
                return Err(Error::argument(format!(
                    "QUOT generator {bad} out of range for {} (order {})",
                    base.label(),
                    base.order()
                )));
            }
            let ideal = base.ideal_closure(gens);
            quotient(&base, &ideal, limits).map(|(q, _)| q)
        }
    };
    let text = expr.to_string();
    ring.map(|r| r.with_label(text.clone()))
        .map_err(|e| e.in_context(&text))
}

pub fn evaluate_group(expr: &GroupExpr, limits: &Limits) -> Result<GroupTable> {
    match expr {
        GroupExpr::Cyclic(n) => cyclic(*n, limits),
        GroupExpr::Product(g, h) => {
            let (g, h) = (evaluate_group(g, limits)?, evaluate_group(h, limits)?);
            group_product(&g, &h, limits)
        }
        GroupExpr::S3 => Ok(s3()),
        GroupExpr::D4 => Ok(d4()),
        GroupExpr::Q8 => Ok(q8()),
    }
    .map_err(|e| e.in_context(&expr.to_string()))
}
