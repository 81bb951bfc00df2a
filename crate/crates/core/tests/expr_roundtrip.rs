mod common;

use finring::expr::{parse, parse_group};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn printed_expressions_parse_back(e in common::ring_expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e);
    }

    #[test]
    fn printed_groups_parse_back(g in common::group_expr()) {
        prop_assert_eq!(parse_group(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn whitespace_is_insignificant(e in common::ring_expr()) {
        let spaced = e.to_string().replace(", ", " ,  ").replace('(', " ( ");
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "[ -~]{0,40}") {
        if let Err(err) = parse(&s) {
            prop_assert!(err.offset <= s.len());
        }
    }

    #[test]
    fn truncations_fail_cleanly(e in common::ring_expr(), cut in 0usize..1000) {
        let text = e.to_string();
        let cut = cut % (text.len() + 1);
        if let Err(err) = parse(&text[..cut]) {
            prop_assert!(err.offset <= cut);
        }
    }
}
