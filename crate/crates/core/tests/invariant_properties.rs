mod common;

use common::{all_graphs, complex_strategy, graph_strategy, graphs_of_order};
use flagbetti::complexes::{independence_complex, neighbourhood_complex};
use flagbetti::constructions::{golden_corpus, GoldenObject, Metric};
use flagbetti::homology::{betti, reduced_euler};
use flagbetti::invariants::{b_graph, check_vanishing};
use flagbetti::search::ClassFilter;
use flagbetti::{FieldSpec, Graph};
use proptest::prelude::*;

fn b(g: &Graph) -> u64 {
    b_graph(g, FieldSpec::GF2).unwrap()
}

fn b_neigh(g: &Graph) -> u64 {
    betti(&neighbourhood_complex(g), FieldSpec::GF2).unwrap().total()
}

#[test]
fn disjoint_union_multiplies_b_exhaustively() {
    let by_order: Vec<Vec<Graph>> = (0..=7).map(graphs_of_order).collect();
    let vals: Vec<Vec<u64>> = by_order.iter().map(|l| l.iter().map(b).collect()).collect();
    let mut pairs = 0;
    for ng in 1..=7 {
        for nh in 1..=8 - ng {
            for (g, bg) in by_order[ng].iter().zip(&vals[ng]) {
                for (h, bh) in by_order[nh].iter().zip(&vals[nh]) {
                    assert_eq!(b(&g.disjoint_union(h).unwrap()), bg * bh, "{g:?} {h:?}");
                    pairs += 1;
                }
            }
        }
    }
    assert!(pairs > 3000);
}

#[test]
fn vertex_recursion_inequality_exhaustively() {
    for g in all_graphs(7, ClassFilter::All) {
        let bg = b(&g);
        for v in 0..g.order() {
            let rhs = b(&g.delete_vertex(v).unwrap()) + b(&g.delete_closed_neighbourhood(v).unwrap());
            assert!(bg <= rhs, "{g:?} v={v}");
        }
    }
}

#[test]
fn euler_characteristic_is_bounded_by_b() {
    for g in all_graphs(7, ClassFilter::All) {
        let chi = reduced_euler(&independence_complex(&g)).unwrap();
        assert!(chi.unsigned_abs() <= b(&g), "{g:?}");
    }
}

/// The extremal constructions are wedges of equidimensional spheres, so the
/// alternating sum loses nothing.
#[test]
fn euler_characteristic_is_extremal_on_constructions() {
    for case in golden_corpus() {
        if case.object.order() > 16 {
            continue;
        }
        let k = match &case.object {
            GoldenObject::Graph(g) if case.expected(Metric::BNeighbourhood).is_some() => neighbourhood_complex(g),
            GoldenObject::Graph(g) => independence_complex(g),
            GoldenObject::Complex(k) => k.clone(),
        };
        let b = betti(&k, FieldSpec::GF2).unwrap();
        assert_eq!(b.euler().unsigned_abs(), b.total(), "{}", case.name);
    }
}

#[test]
fn homology_vanishes_above_the_threshold_for_small_flag_complexes() {
    for g in all_graphs(7, ClassFilter::All) {
        let r = check_vanishing(&independence_complex(&g), FieldSpec::GF2, 1 << 22).unwrap();
        assert!(r.pass, "{g:?} {r:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bip_graph_suspends(k in complex_strategy(6)) {
        prop_assume!(!k.is_empty_complex());
        let g = k.bip_graph().unwrap();
        for field in [FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Rational] {
            prop_assert_eq!(b_graph(&g, field).unwrap(), betti(&k, field).unwrap().total());
        }
    }

    #[test]
    fn neighbourhood_of_join_multiplies(g in graph_strategy(5), h in graph_strategy(5)) {
        prop_assume!(g.edge_count() > 0 && h.edge_count() > 0);
        prop_assert_eq!(b_neigh(&g.join_sum(&h).unwrap()), b_neigh(&g) * b_neigh(&h));
    }

    #[test]
    fn euler_characteristic_bound_on_complexes(k in complex_strategy(8)) {
        let bv = betti(&k, FieldSpec::GF2).unwrap();
        prop_assert!(bv.euler().unsigned_abs() <= bv.total());
    }
}
