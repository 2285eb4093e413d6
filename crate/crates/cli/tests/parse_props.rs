use mckay_cli::parse::{parse_entry, parse_h_generator, parse_matrix};
use mckay_core::exactmath::CycloInt;
use mckay_core::groups::GroupElement;
use proptest::prelude::*;

fn cyclo() -> impl Strategy<Value = CycloInt> {
    (
        1u64..=12,
        prop::collection::vec((-5i64..=5, 0i64..12), 0..4),
    )
        .prop_map(|(m, terms)| CycloInt::from_terms(m, &terms))
}

proptest! {
    #[test]
    fn entries_round_trip(x in cyclo()) {
        prop_assert_eq!(parse_entry(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn sums_parse_as_sums(x in cyclo(), y in cyclo()) {
        prop_assert_eq!(parse_entry(&format!("{x} + {y}")).unwrap(), &x + &y);
    }

    #[test]
    fn diagonal_matrices_round_trip(m in 1u64..=12, a in -12i64..12, b in -12i64..12) {
        let text = format!("[[z{m}^{a}, 0], [0, z{m}^{b}]]");
        prop_assert_eq!(parse_matrix(&text).unwrap(), GroupElement::diagonal_roots(m, &[a, b]));
    }

    #[test]
    fn h_generators_keep_exponents(v in prop::collection::vec(-20i64..20, 1..5), m in 1u64..30) {
        let parts: Vec<String> = v.iter().map(i64::to_string).collect();
        let g = parse_h_generator(&format!("{}@{m}", parts.join(","))).unwrap();
        prop_assert_eq!(g.exponents, v);
        prop_assert_eq!(g.modulus, m);
    }

    #[test]
    fn garbage_is_rejected_without_panicking(s in "[\\[\\]z0-9^*+, -]{0,24}") {
        let _ = parse_matrix(&s);
        let _ = parse_entry(&s);
    }
}
