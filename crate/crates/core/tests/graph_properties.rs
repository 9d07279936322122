mod common;

use common::graph_strategy;
use flagbetti::graphs::{canonical_form, crown, encode_graph6, parse_graph6};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(20)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.induced(g.vertices()).unwrap(), g);
    }

    #[test]
    fn union_and_join_are_associative(a in graph_strategy(3), b in graph_strategy(3), c in graph_strategy(3)) {
        let left = a.disjoint_union(&b).unwrap().disjoint_union(&c).unwrap();
        let right = a.disjoint_union(&b.disjoint_union(&c).unwrap()).unwrap();
        prop_assert_eq!(canonical_form(&left).unwrap(), canonical_form(&right).unwrap());
        let left = a.join_sum(&b).unwrap().join_sum(&c).unwrap();
        let right = a.join_sum(&b.join_sum(&c).unwrap()).unwrap();
        prop_assert_eq!(canonical_form(&left).unwrap(), canonical_form(&right).unwrap());
        // Joining the other way round is an isomorphic graph.
        let swapped = c.join_sum(&b).unwrap().join_sum(&a).unwrap();
        prop_assert_eq!(canonical_form(&left).unwrap(), canonical_form(&swapped).unwrap());
    }
}

#[test]
fn crowns_are_regular_and_bipartite() {
    for s in 2..=40 {
        let g = crown(s).unwrap();
        assert!(g.is_bipartite());
        assert!((0..2 * s).all(|v| g.degree(v) == s - 1), "s={s}");
        assert_eq!(g.edge_count(), s * (s - 1));
    }
}
