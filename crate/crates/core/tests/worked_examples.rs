use finring::constructions::*;
use finring::expr::{evaluate, parse};
use finring::{
    check_unit_class, classify, is_dedekind_finite, is_division, is_local, is_semisimple,
    is_two_sqrt_ju, ElementSet, Error, FiniteRing, Limits, RingClass, UnitPower, UnitTarget,
    Witness,
};

fn l() -> Limits {
    Limits::default()
}

fn z(n: usize) -> FiniteRing {
    zmod(n, &l()).unwrap()
}

fn ring(text: &str) -> FiniteRing {
    evaluate(&parse(text).unwrap(), &l()).unwrap()
}

fn set(r: &FiniteRing, members: &[usize]) -> ElementSet {
    ElementSet::from_members(r.order(), members.iter().copied())
}

fn predicate_profile(r: &FiniteRing) -> Vec<bool> {
    let report = classify(r);
    RingClass::ALL.iter().map(|&c| report.holds(c)).collect()
}

#[test]
fn arithmetic_and_powers() {
    let z4 = z(4);
    assert_eq!(z4.add(3, 3), 2);
    assert_eq!(z4.mul(2, 2), 0);
    assert_eq!(z(12).pow(2, 3).unwrap(), 8);
    assert_eq!(z(9).pow(3, 2).unwrap(), 0);
    assert!(matches!(z4.pow(2, 0), Err(Error::Argument(_))));
    assert!(matches!(z4.try_mul(4, 1), Err(Error::Argument(_))));
    let m = ring("M(2, Z/2)");
    assert_eq!(m.pow(2, 2).unwrap(), 0);
    assert_eq!(z(12).power_orbit(2), vec![2, 4, 8]);
    assert_eq!(z4.power_orbit(2), vec![2, 0]);
    assert_eq!(m.power_orbit(m.one()), vec![m.one()]);
}

#[test]
fn characteristics() {
    assert_eq!(z(6).characteristic(), 6);
    assert_eq!(ring("M(2, Z/2)").characteristic(), 2);
    assert_eq!(ring("GF(9)").characteristic(), 3);
    assert_eq!(ring("M(2, Z/2) x Z/3").characteristic(), 6);
    assert_eq!(ring("Z/4 x Z/6").characteristic(), 12);
}

#[test]
fn base_rings() {
    assert!(is_two_sqrt_ju(&z(2)));
    assert_eq!(z(4).units().set, set(&z(4), &[1, 3]));
    assert_eq!(z(4).jacobson(), &set(&z(4), &[0, 2]));
    assert_eq!(z(6).jacobson(), &set(&z(6), &[0]));
    assert!(is_two_sqrt_ju(&gf(3, 1, &l()).unwrap()));
    assert!(!is_two_sqrt_ju(&gf(2, 2, &l()).unwrap()));
    assert!(!is_two_sqrt_ju(&gf(3, 2, &l()).unwrap()));
    assert!(matches!(gf(4, 1, &l()), Err(Error::Argument(_))));
    assert!(matches!(zmod(1, &l()), Err(Error::Argument(_))));
}

#[test]
fn products() {
    let p = product(&z(2), &z(3), &l()).unwrap();
    assert_eq!(p.order(), 6);
    assert!(is_two_sqrt_ju(&p));
    assert_eq!(is_two_sqrt_ju(&p), is_two_sqrt_ju(&z(6)));
    assert!(!is_two_sqrt_ju(&product(&z(2), &z(5), &l()).unwrap()));
}

#[test]
fn matrix_and_triangular() {
    let m = ring("M(2, Z/2)");
    assert_eq!((m.order(), m.units().len()), (16, 6));
    assert_eq!(m.sqrt_jacobson().len(), 4);
    assert_eq!(m.jacobson(), &set(&m, &[0]));
    assert_eq!(
        predicate_profile(&ring("M(1, Z/4)")),
        predicate_profile(&z(4))
    );

    let ut = ring("UT(2, Z/2)");
    assert_eq!(ut.order(), 8);
    // I = 5, E12 = 2 under the little-endian upper-triangular encoding
    assert_eq!(ut.units().set, set(&ut, &[5, 7]));
    assert_eq!(ut.jacobson(), &set(&ut, &[0, 2]));
    assert!(is_two_sqrt_ju(&ut));
    assert!(!is_two_sqrt_ju(&ring("UT(2, Z/5)")));
    assert!(!is_two_sqrt_ju(&ring("UT(2, Z/7)")));
}

#[test]
fn extensions() {
    let t = ring("TE(Z/2)");
    assert_eq!(t.order(), 4);
    assert!(is_local(&t).holds);
    assert_eq!(t.jacobson(), &set(&t, &[0, 1]));
    assert!(is_two_sqrt_ju(&ring("TE(Z/4)")));
    // (1, m)(1, -m) = (1, 0) in TE(Z/4)
    let te4 = ring("TE(Z/4)");
    for m in 0..4 {
        assert_eq!(te4.mul(4 + m, 4 + (4 - m) % 4), te4.one());
    }

    let b = ring("BT(Z/2)");
    assert_eq!(b.order(), 16);
    assert!(is_two_sqrt_ju(&b));
    assert!(!is_two_sqrt_ju(&ring("BT(Z/5)")));
    for base in [z(2), z(3), z(4)] {
        let b = bt(&base, &l()).unwrap();
        let tt = trivial_extension(&trivial_extension(&base, &l()).unwrap(), &l()).unwrap();
        assert!((0..b.order())
            .all(|x| (0..b.order())
                .all(|y| b.mul(x, y) == tt.mul(x, y) && b.add(x, y) == tt.add(x, y))));
    }
    assert_eq!(bt_index(2, 1, 0, 0, 0), 8);
}

#[test]
fn polynomial_quotients() {
    let dual = poly_quotient(&z(2), &[0, 0, 1], &l()).unwrap();
    assert_eq!(dual.order(), 4);
    assert_eq!(
        predicate_profile(&dual),
        predicate_profile(&ring("TE(Z/2)"))
    );
    assert_eq!(dual.jacobson().len(), 2);
    let f4 = poly_quotient(&z(2), &[1, 1, 1], &l()).unwrap();
    assert!(is_division(&f4).holds);
    assert_eq!(f4.nilpotents().len(), 1);
    let linear = poly_quotient(&z(6), &[0, 1], &l()).unwrap();
    assert_eq!(predicate_profile(&linear), predicate_profile(&z(6)));
    assert!(matches!(
        poly_quotient(&z(4), &[1, 2], &l()),
        Err(Error::Argument(_))
    ));
}

#[test]
fn group_rings() {
    let r = ring("GR(Z/2, C2)");
    assert_eq!(r.order(), 4);
    assert!(is_local(&r).holds);
    assert_eq!(r.jacobson(), &set(&r, &[0, 3]));
    assert_eq!(r.units().set, set(&r, &[1, 2]));
    assert!(is_two_sqrt_ju(&r));
    assert!(!is_two_sqrt_ju(&ring("GR(Z/2, C3)")));
    assert!(!is_two_sqrt_ju(&ring("GR(Z/4, C3)")));
    assert!(cyclic(2, &l()).unwrap().is_two_group());
    let v4 = group_product(&cyclic(2, &l()).unwrap(), &cyclic(2, &l()).unwrap(), &l()).unwrap();
    assert!(v4.is_two_group() && v4.is_abelian() && v4.order() == 4);
    assert!(!s3().is_two_group());
}

#[test]
fn quotients_corners_subrings() {
    let z12 = z(12);
    let (q, proj) = quotient(&z12, &set(&z12, &[0, 4, 8]), &l()).unwrap();
    assert_eq!(q.order(), 4);
    assert_eq!(predicate_profile(&q), predicate_profile(&z(4)));
    assert_eq!(proj[5], 1);
    let (same, _) = quotient(&z12, &set(&z12, &[0]), &l()).unwrap();
    assert_eq!(same.order(), 12);
    let (f2, _) = quotient(&z(4), z(4).jacobson(), &l()).unwrap();
    assert_eq!(f2.order(), 2);
    match quotient(&z12, &set(&z12, &[0, 4]), &l()) {
        Err(Error::Argument(msg)) => assert!(msg.contains('(')),
        other => panic!("{other:?}"),
    }

    let m = ring("M(2, Z/2)");
    let (c, emb) = corner(&m, 1, &l()).unwrap();
    assert_eq!((c.order(), emb), (2, vec![0, 1]));
    assert_eq!(corner(&m, m.one(), &l()).unwrap().0.order(), 16);
    let p = product(&z(2), &z(3), &l()).unwrap();
    let (c, _) = corner(&p, 3, &l()).unwrap();
    assert_eq!(predicate_profile(&c), predicate_profile(&z(2)));
    assert!(matches!(corner(&z(4), 2, &l()), Err(Error::Argument(_))));

    let (s, mut emb) = subring_closure(&m, &[2], &l()).unwrap();
    emb.sort_unstable();
    assert_eq!((s.order(), emb.clone()), (4, vec![0, 2, 9, 11]));
    assert!(m.is_unit_closed_subring(&s, &subring_closure(&m, &[2], &l()).unwrap().1));
    let te = ring("TE(Z/3)");
    assert_eq!(subring_closure(&te, &[], &l()).unwrap().0.order(), 3);
    let (all, emb6) = subring_closure(&z(6), &[3], &l()).unwrap();
    assert_eq!(all.order(), 6);
    assert!(z(6).is_unit_closed_subring(&all, &emb6));
    let te4 = ring("TE(Z/4)");
    let (prime, emb) = subring_closure(&te4, &[], &l()).unwrap();
    let mut sorted = emb.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![0, 4, 8, 12]);
    assert!(te4.is_unit_closed_subring(&prime, &emb));
}

#[test]
fn structural_sets() {
    let m = ring("M(2, Z/2)");
    assert!(!m.in_sqrt_jacobson(6));
    assert!(m.in_sqrt_jacobson(2) && m.in_sqrt_jacobson(4));
    assert!(m.is_unit(m.add(2, 4)));
    assert!(z(4).in_jacobson(2));
    assert!(!z(6).in_jacobson(2));
    assert!(m.in_jacobson(0));
    assert_eq!(z(4).sqrt_jacobson(), z(4).jacobson());
    assert_eq!(z(6).idempotents(), &set(&z(6), &[0, 1, 3, 4]));
    assert_eq!(m.center(), &set(&m, &[0, 9]));
    assert_eq!(ring("GF(4)").nilpotents().len(), 1);
    assert_eq!(z(12).ideal_closure(&[4]), set(&z(12), &[0, 4, 8]));
    assert_eq!(z(12).ideal_closure(&[]), set(&z(12), &[0]));
    assert_eq!(m.ideal_closure(&[2]).len(), 16);
}

#[test]
fn class_predicates() {
    let sq = UnitTarget::SqrtJacobson;
    assert!(check_unit_class(&z(3), UnitPower::Two, sq).holds);
    assert_eq!(
        check_unit_class(&z(3), UnitPower::One, sq).witness,
        Some(Witness::Element(2))
    );
    assert_eq!(
        check_unit_class(&ring("M(2, Z/2)"), UnitPower::Two, sq).witness,
        Some(Witness::Element(7))
    );
    assert_eq!(
        check_unit_class(&z(5), UnitPower::Two, sq).witness,
        Some(Witness::Element(2))
    );

    assert!(is_division(&ring("GF(2, 2)")).holds);
    assert!(!is_division(&z(4)).holds);
    assert!(!is_division(&ring("M(2, Z/2)")).holds);
    assert!(is_local(&z(9)).holds);
    assert!(!is_local(&z(6)).holds);
    assert!(is_semisimple(&ring("Z/2 x Z/3")).holds);
    assert!(!is_semisimple(&z(4)).holds);
    assert!(is_semisimple(&ring("M(2, Z/2)")).holds);
    for r in [z(12), ring("M(2, Z/3)"), ring("UT(2, Z/2)")] {
        assert!(is_dedekind_finite(&r).holds);
    }

    let r4 = classify(&z(4));
    assert!(r4.holds(RingClass::TwoSqrtJU) && r4.holds(RingClass::SqrtJU));
    assert!(r4.holds(RingClass::Local) && !r4.holds(RingClass::Division));
    let r3 = classify(&z(3));
    assert!(r3.holds(RingClass::TwoSqrtJU) && !r3.holds(RingClass::SqrtJU));
    assert!(r3.holds(RingClass::Division) && r3.holds(RingClass::Semisimple));
    let rm = classify(&ring("M(2, Z/2)"));
    assert!(!rm.holds(RingClass::TwoSqrtJU) && rm.holds(RingClass::Semisimple));
    assert!(rm.implication_violation().is_none());
}

#[test]
fn expression_evaluation() {
    assert_eq!(ring("TE(Z/2)").order(), 4);
    assert_eq!(ring("MODJ(Z/12)").order(), 6);
    assert_eq!(ring("CORNER(M(2, Z/2), 1)").order(), 2);
    assert_eq!(ring("GF(4)").label(), "GF(2, 2)");
    let err = evaluate(&parse("M(4, Z/4)").unwrap(), &l()).unwrap_err();
    assert!(matches!(err, Error::Limit { .. }), "{err}");
}
