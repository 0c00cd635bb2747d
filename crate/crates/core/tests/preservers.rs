use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cordial::graph::choose2;
use cordial::preserver::{
    self, compose, conjugate, is_vertex_permutation, search_strong_preservers, strongly_preserves,
    vertex_permutation_operator, verify_counterexample, SearchMode,
};
use cordial::{Graph, LinearOperator, Property};

fn operator(n: usize) -> impl Strategy<Value = LinearOperator> {
    let slots = choose2(n);
    let mask = (1u128 << slots) - 1;
    proptest::collection::vec(any::<u128>(), slots).prop_map(move |bits| {
        let images = bits.into_iter().map(|b| Graph::from_bits(n, b & mask).unwrap()).collect();
        LinearOperator::new(n, images).unwrap()
    })
}

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let mask = (1u128 << choose2(n)) - 1;
    any::<u128>().prop_map(move |b| Graph::from_bits(n, b & mask).unwrap())
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn apply_is_additive(op in operator(6), a in graph_on(6), b in graph_on(6)) {
        let lhs = op.apply(&a.union(&b).unwrap()).unwrap();
        let rhs = op.apply(&a).unwrap().union(&op.apply(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(op.apply(&Graph::empty(6).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn composition_applies_right_first(a in operator(5), b in operator(5), g in graph_on(5)) {
        let ab = compose(&a, &b).unwrap();
        prop_assert_eq!(ab.apply(&g).unwrap(), a.apply(&b.apply(&g).unwrap()).unwrap());
    }

    #[test]
    fn conjugation_keeps_verdicts(op in operator(5), p in perm(5)) {
        let c = conjugate(&op, &p).unwrap();
        for prop in Property::ALL {
            prop_assert_eq!(
                strongly_preserves(&op, prop).unwrap().strongly_preserves,
                strongly_preserves(&c, prop).unwrap().strongly_preserves
            );
        }
    }

    #[test]
    fn counterexamples_reverify(op in operator(5)) {
        for prop in Property::ALL {
            let v = strongly_preserves(&op, prop).unwrap();
            if let Some(g) = v.counterexample {
                prop_assert!(verify_counterexample(&op, prop, &g));
            }
        }
    }

    #[test]
    fn vertex_permutations_are_recognized(p in perm(8)) {
        let op = vertex_permutation_operator(&p).unwrap();
        prop_assert_eq!(is_vertex_permutation(&op), Some(p));
        prop_assert!(op.is_edge_bijection());
    }
}

#[test]
fn vertex_permutations_preserve_every_class() {
    for n in 2..=6 {
        for p in (0..n).permutations(n) {
            let op = vertex_permutation_operator(&p).unwrap();
            for prop in Property::ALL {
                assert!(strongly_preserves(&op, prop).unwrap().strongly_preserves, "{p:?} {prop}");
            }
        }
    }
}

#[test]
fn vertex_permutations_spot_checked_on_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [7usize, 8] {
        let mask = (1u128 << choose2(n)) - 1;
        for _ in 0..20 {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let op = vertex_permutation_operator(&p).unwrap();
            for _ in 0..20 {
                let g = Graph::from_bits(n, rng.gen::<u128>() & mask).unwrap();
                let h = op.apply(&g).unwrap();
                for prop in Property::ALL {
                    assert_eq!(prop.holds(&g).unwrap(), prop.holds(&h).unwrap());
                }
            }
        }
    }
}

#[test]
fn sum_at_four_admits_line_graph_automorphisms() {
    let out = search_strong_preservers(4, Property::Sum, SearchMode::ExhaustiveBijective).unwrap();
    assert_eq!(out.preserver_count, 48);
    let induced = out.operators.iter().filter(|op| is_vertex_permutation(op).is_some()).count();
    assert_eq!(induced, 24);
    // Swapping the disjoint edges 01 and 23 keeps every adjacency of edges,
    // yet sends the triangle 012 to a star.
    let swap = LinearOperator::from_edge_map(4, &[5, 1, 2, 3, 4, 0]).unwrap();
    assert!(out.operators.contains(&swap));
    let triangle = Graph::named("k3").unwrap().pad_to(4).unwrap();
    let image = swap.apply(&triangle).unwrap();
    assert!((0..4).any(|v| image.degree(v) == 3));
}

#[test]
fn pruned_and_plain_searches_agree() {
    for prop in Property::ALL {
        let plain = preserver::exhaustive_bijective_plain(4, prop).unwrap();
        let pruned = preserver::exhaustive_bijective_pruned(4, prop).unwrap();
        assert_eq!(plain.operators, pruned.operators, "{prop}");
    }
}

#[test]
fn sum_and_product_at_five_are_vertex_induced() {
    for prop in [Property::Sum, Property::Product] {
        let out = search_strong_preservers(5, prop, SearchMode::ExhaustiveBijective).unwrap();
        assert_eq!(out.preserver_count, 120, "{prop}");
        assert!(out.operators.iter().all(|op| is_vertex_permutation(op).is_some()));
    }
}

#[test]
fn every_bijection_preserves_product_at_four() {
    let out = search_strong_preservers(4, Property::Product, SearchMode::ExhaustiveBijective).unwrap();
    assert_eq!(out.preserver_count, 720);
}

#[test]
fn random_bijections_fail_orient23_at_six() {
    let mode = SearchMode::SampledNonbijective { count: 2000, seed: 3 };
    let out = search_strong_preservers(6, Property::Orient23, mode).unwrap();
    assert_eq!(out.preserver_count, 0);
    assert_eq!(out.failures_verified + out.vertex_induced_skipped, 2000);
}

#[test]
fn singular_operators_fail_through_witness_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (n, prop) in [(4, Property::Sum), (4, Property::Product), (6, Property::Orient23)] {
        let slots = choose2(n);
        for _ in 0..30 {
            let mut images: Vec<Graph> =
                (0..slots).map(|_| Graph::from_bits(n, rng.gen_range(1..1u128 << slots)).unwrap()).collect();
            images[rng.gen_range(0..slots)] = Graph::empty(n).unwrap();
            let op = LinearOperator::new(n, images).unwrap();
            let (h, reduced) = preserver::singular_witness_pair(&op, prop).unwrap();
            assert_eq!(op.apply(&h).unwrap(), op.apply(&reduced).unwrap());
            assert!(!prop.holds(&h).unwrap());
            assert!(prop.holds(&reduced).unwrap() || reduced.is_empty());
            assert!(!strongly_preserves(&op, prop).unwrap().strongly_preserves);
        }
    }
}

#[test]
fn table_format_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 2..=7 {
        let slots = choose2(n);
        let mask = (1u128 << slots) - 1;
        let images = (0..slots).map(|_| Graph::from_bits(n, rng.gen::<u128>() & mask).unwrap()).collect();
        let op = LinearOperator::new(n, images).unwrap();
        assert_eq!(LinearOperator::from_table(&op.to_table()).unwrap(), op);
    }
}
