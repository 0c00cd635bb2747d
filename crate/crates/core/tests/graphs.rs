use std::collections::HashSet;

use proptest::prelude::*;

use cordial::graph::choose2;
use cordial::{canonical_form, canonical_graph, enumerate_graphs, parse_graph6, to_graph6, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let mask = (1u128 << choose2(n)) - 1;
        any::<u128>().prop_map(move |bits| Graph::from_bits(n, bits & mask).unwrap())
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

fn same_n_pair(max_n: usize) -> impl Strategy<Value = (Graph, Graph, Graph)> {
    (1..=max_n).prop_flat_map(|n| {
        let mask = (1u128 << choose2(n)) - 1;
        (any::<u128>(), any::<u128>(), any::<u128>()).prop_map(move |(a, b, c)| {
            let g = |x: u128| Graph::from_bits(n, x & mask).unwrap();
            (g(a), g(b), g(c))
        })
    })
}

proptest! {
    #[test]
    fn union_is_a_semilattice((a, b, c) in same_n_pair(16)) {
        let o = Graph::empty(a.n()).unwrap();
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        prop_assert_eq!(a.union(&b).unwrap().union(&c).unwrap(), a.union(&b.union(&c).unwrap()).unwrap());
        prop_assert_eq!(a.union(&a).unwrap(), a);
        prop_assert_eq!(a.union(&o).unwrap(), a);
        prop_assert!(a.union(&b).unwrap().contains(&a));
        prop_assert_eq!(a.union(&a.complement()).unwrap(), Graph::complete(a.n()).unwrap());
    }

    #[test]
    fn permutation_keeps_degrees((g, perm) in graph_with_perm(16)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        for (v, &w) in perm.iter().enumerate() {
            prop_assert_eq!(h.degree(w), g.degree(v));
        }
    }

    #[test]
    fn canonical_form_is_a_class_invariant((g, perm) in graph_with_perm(9)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let c = canonical_graph(&g).unwrap();
        prop_assert_eq!(canonical_form(&c).unwrap(), canonical_form(&g).unwrap());
        prop_assert_eq!(c.edge_count(), g.edge_count());
    }

    #[test]
    fn graph6_round_trip(g in graph(9)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn sampled_graphs_are_enumerated(g in graph(7)) {
        let classes = enumerate_graphs(g.n(), g.edge_count()).unwrap();
        let key = canonical_form(&g).unwrap();
        prop_assert_eq!(classes.iter().filter(|c| canonical_form(c).unwrap() == key).count(), 1);
    }
}

// Graphs on n unlabeled vertices, OEIS A000088.
#[test]
fn class_totals_match_known_counts() {
    for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044), (8, 12346)] {
        let total: usize = (0..=choose2(n)).map(|m| enumerate_graphs(n, m).unwrap().len()).sum();
        assert_eq!(total, want, "n = {n}");
    }
}

#[test]
fn enumeration_has_distinct_classes() {
    for m in 0..=21 {
        let classes = enumerate_graphs(7, m).unwrap();
        let keys: HashSet<_> = classes.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(keys.len(), classes.len());
        assert!(classes.iter().all(|g| g.n() == 7 && g.edge_count() == m));
    }
}

#[test]
fn sparse_levels_beyond_dense_limit() {
    // Graphs with m edges and no isolated vertices among at most 2m: counts of
    // m-edge graphs with up to 2m vertices (OEIS A000664).
    for (m, want) in [(1, 1), (2, 2), (3, 5), (4, 11), (5, 26), (6, 68)] {
        assert_eq!(enumerate_graphs(2 * m, m).unwrap().len(), want, "m = {m}");
    }
}

#[test]
fn graph6_known_strings() {
    assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
    assert_eq!(to_graph6(&Graph::named("petersen").unwrap()).len(), 1 + 8);
    assert!(parse_graph6("C~~").is_err());
    assert!(parse_graph6("").is_err());
}
