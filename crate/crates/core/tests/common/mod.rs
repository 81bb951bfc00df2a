#![allow(dead_code)]

use finring::expr::{GroupExpr, RingExpr};
use proptest::prelude::*;

pub fn group_expr() -> impl Strategy<Value = GroupExpr> {
    let leaf = prop_oneof![
        (1usize..20).prop_map(GroupExpr::Cyclic),
        Just(GroupExpr::S3),
        Just(GroupExpr::D4),
        Just(GroupExpr::Q8),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        (inner.clone(), inner).prop_map(|(g, h)| GroupExpr::product(g, h))
    })
}

/// Arbitrary well-formed expressions. Sizes are not bounded, so most of them
/// are too large to evaluate; they exercise the parser and printer only.
pub fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (2usize..100).prop_map(RingExpr::Zmod),
        (prop::sample::select(vec![2usize, 3, 5, 7, 11]), 1usize..5)
            .prop_map(|(p, k)| RingExpr::Gf(p, k)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RingExpr::product(a, b)),
            (1usize..5, b()).prop_map(|(m, e)| RingExpr::Matrix(m, e)),
            (2usize..5, b()).prop_map(|(m, e)| RingExpr::UpperTri(m, e)),
            b().prop_map(RingExpr::TrivialExt),
            b().prop_map(RingExpr::Bt),
            (b(), 1usize..6).prop_map(|(e, p)| RingExpr::Nil(e, p)),
            (b(), prop::collection::vec(0usize..30, 2..5)).prop_map(|(e, c)| RingExpr::PolyQ(e, c)),
            (b(), group_expr()).prop_map(|(e, g)| RingExpr::GroupRing(e, g)),
            b().prop_map(RingExpr::ModJ),
            (b(), 0usize..200).prop_map(|(e, i)| RingExpr::Corner(e, i)),
            (b(), prop::collection::vec(0usize..200, 1..4)).prop_map(|(e, g)| RingExpr::Quot(e, g)),
        ]
    })
}

/// Small expressions that always evaluate under the default limits.
pub fn small_ring_expr() -> impl Strategy<Value = String> {
    prop::sample::select(vec![
        "Z/2",
        "Z/3",
        "Z/4",
        "Z/6",
        "Z/8",
        "Z/9",
        "Z/12",
        "GF(2, 2)",
        "GF(3, 2)",
        "M(2, Z/2)",
        "UT(2, Z/3)",
        "UT(3, Z/2)",
        "TE(Z/4)",
        "BT(Z/2)",
        "NIL(Z/3, 2)",
        "GR(Z/2, C3)",
        "GR(Z/3, C2)",
        "GR(Z/2, S3)",
        "Z/2 x Z/3",
        "M(2, Z/2) x Z/3",
        "MODJ(Z/12)",
        "CORNER(M(2, Z/3), 1)",
        "QUOT(TE(Z/4), [2])",
        "POLYQ(Z/3, [1, 0, 1])",
    ])
    .prop_map(str::to_string)
}
