mod common;

use finring::constructions::{group_ring, quotient, s3, zmod};
use finring::expr::{evaluate, parse};
use finring::{is_ideal, verify_axioms, CheckPolicy, ElementSet, FiniteRing, Limits, Mode};
use proptest::prelude::*;

fn build(text: &str) -> FiniteRing {
    evaluate(&parse(text).unwrap(), &Limits::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructions_are_rings(text in common::small_ring_expr()) {
        let r = build(&text);
        let report = verify_axioms(&r, CheckPolicy::Exhaustive);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn structural_sets_are_consistent(text in common::small_ring_expr()) {
        let r = build(&text);
        let units = r.units();
        // units form a group with the recorded inverses
        for u in units.iter() {
            let v = units.inverse(u).unwrap();
            prop_assert_eq!(r.mul(u, v), r.one());
            prop_assert_eq!(r.mul(v, u), r.one());
            for w in units.iter() {
                prop_assert!(units.contains(r.mul(u, w)));
            }
        }
        let (j, sj, n) = (r.jacobson(), r.sqrt_jacobson(), r.nilpotents());
        prop_assert!(is_ideal(&r, j));
        prop_assert!(j.is_subset(sj));
        prop_assert!(n.is_subset(sj));
        // 1 + J lies in the units
        for x in j.iter() {
            prop_assert!(units.contains(r.add(r.one(), x)));
        }
        for e in r.idempotents().iter() {
            prop_assert_eq!(r.mul(e, e), e);
        }
        for c in r.center().iter() {
            for x in 0..r.order() {
                prop_assert_eq!(r.mul(c, x), r.mul(x, c));
            }
        }
    }

    #[test]
    fn modulo_jacobson_is_semisimple(text in common::small_ring_expr()) {
        let r = build(&text);
        let (q, proj) = quotient(&r, r.jacobson(), &Limits::default()).unwrap();
        prop_assert_eq!(q.jacobson().len(), 1);
        prop_assert_eq!(q.order() * r.jacobson().len(), r.order());
        for a in 0..r.order() {
            for b in 0..r.order() {
                prop_assert_eq!(proj[r.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
    }

    #[test]
    fn dumps_round_trip(text in common::small_ring_expr()) {
        let r = build(&text);
        let back = FiniteRing::parse_dump("dump", &r.dump_tables()).unwrap();
        prop_assert_eq!(back.order(), r.order());
        for a in 0..r.order() {
            for b in 0..r.order() {
                prop_assert_eq!(back.mul(a, b), r.mul(a, b));
                prop_assert_eq!(back.add(a, b), r.add(a, b));
            }
        }
    }

    #[test]
    fn zmod_jacobson_matches_radical(n in 2usize..200) {
        let r = zmod(n, &Limits::default()).unwrap();
        let rad: usize = (2..=n).filter(|p| n % p == 0 && (2..*p).all(|d| p % d != 0)).product();
        let expected = ElementSet::from_members(n, (0..n).filter(|x| x % rad == 0));
        prop_assert_eq!(r.jacobson(), &expected);
    }
}

#[test]
fn lazy_and_materialized_agree() {
    for text in ["GR(Z/2, C4)", "M(2, Z/4)", "BT(Z/3)"] {
        let e = parse(text).unwrap();
        let eager = evaluate(&e, &Limits::eager()).unwrap();
        let lazy = evaluate(&e, &Limits::lazy()).unwrap();
        assert_eq!(eager.mode(), Mode::Materialized);
        assert_eq!(lazy.mode(), Mode::Computed);
        for a in 0..eager.order() {
            for b in 0..eager.order() {
                assert_eq!(eager.add(a, b), lazy.add(a, b));
                assert_eq!(eager.mul(a, b), lazy.mul(a, b));
            }
        }
        assert_eq!(eager.jacobson(), lazy.jacobson());
        assert_eq!(eager.units().set, lazy.units().set);
    }
}

#[test]
fn noncommutative_group_ring() {
    let l = Limits::default();
    let r = group_ring(&zmod(2, &l).unwrap(), &s3(), &l).unwrap();
    assert!(!r.is_commutative());
    assert!(verify_axioms(&r, CheckPolicy::Exhaustive).passed());
}
