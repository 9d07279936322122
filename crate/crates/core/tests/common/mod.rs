#![allow(dead_code)]

use flagbetti::search::{enumerate_graphs, ClassFilter};
use flagbetti::{Complex, Graph, Limits, VertexSet};
use proptest::prelude::*;

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A non-void complex on `1..=max_n` vertices with up to six generators.
pub fn complex_strategy(max_n: usize) -> impl Strategy<Value = Complex> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u128..1 << n, 1..=6)
            .prop_map(move |gens| Complex::from_facets(n, gens.into_iter().map(VertexSet)).unwrap())
    })
}

/// Isomorphism-class representatives for every order `1..=max_n`.
pub fn all_graphs(max_n: usize, class: ClassFilter) -> Vec<Graph> {
    let limits = Limits { generate_all_cap: max_n, generate_restricted_cap: max_n, ..Limits::default() };
    flagbetti::search::enumerate_levels(max_n, class, &limits)
        .unwrap()
        .into_iter()
        .skip(1)
        .flatten()
        .collect()
}

pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    enumerate_graphs(n, ClassFilter::All, &Limits::default()).unwrap()
}
