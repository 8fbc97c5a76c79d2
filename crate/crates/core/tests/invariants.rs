mod common;

use std::sync::OnceLock;

use abelrep::autgrp::{aut_equals, automorphism_group};
use abelrep::cgraph::io::{from_json, to_json};
use abelrep::cgraph::{orb_digraph, orb_graph};
use abelrep::closure::{two_closure, two_orbit_closure, two_star_closure};
use abelrep::structure::classify;
use abelrep::synth::{synthesize_digraph, synthesize_graph};
use abelrep::{PermGroup, Permutation};
use proptest::prelude::*;

fn corpus() -> &'static [(String, PermGroup)] {
    static CORPUS: OnceLock<Vec<(String, PermGroup)>> = OnceLock::new();
    CORPUS.get_or_init(common::corpus)
}

fn group() -> impl Strategy<Value = &'static (String, PermGroup)> {
    proptest::sample::select(corpus().iter().collect::<Vec<_>>())
}

fn relabelling(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closures_are_nested_and_idempotent((name, a) in group()) {
        let two = two_closure(a).unwrap();
        let star = two_star_closure(a).unwrap();
        let orbit = two_orbit_closure(a).unwrap();
        prop_assert!(a.is_subgroup_of(&orbit), "{}", name);
        prop_assert!(orbit.is_subgroup_of(&two), "{}", name);
        prop_assert!(two.is_subgroup_of(&star), "{}", name);
        prop_assert!(two_closure(&two).unwrap().equals(&two), "{}", name);
        prop_assert!(two_orbit_closure(&orbit).unwrap().equals(&orbit), "{}", name);
    }

    #[test]
    fn orbital_graphs_represent_their_closures((name, a) in group()) {
        prop_assert!(aut_equals(&orb_digraph(a), &two_closure(a).unwrap()).unwrap(), "{}", name);
        prop_assert!(aut_equals(&orb_graph(a), &two_star_closure(a).unwrap()).unwrap(), "{}", name);
    }

    #[test]
    fn witnesses_survive_relabelling(
        ((name, a), f) in group().prop_flat_map(|g| (Just(g), relabelling(g.1.degree())))
    ) {
        // moving the group by f moves its witness by f
        let moved = a.conjugate(&f);
        let r = classify(a).unwrap();
        if r.verdict_gr {
            let g = synthesize_graph(a).unwrap();
            prop_assert!(aut_equals(&g.relabel_vertices(&f), &moved).unwrap(), "{}", name);
            prop_assert!(aut_equals(&synthesize_graph(&moved).unwrap(), &moved).unwrap(), "{}", name);
        }
        if r.verdict_dgr {
            let g = synthesize_digraph(a).unwrap();
            prop_assert!(aut_equals(&g.relabel_vertices(&f), &moved).unwrap(), "{}", name);
        }
        let moved_report = classify(&moved).unwrap();
        prop_assert_eq!(moved_report.verdict_gr, r.verdict_gr);
        prop_assert_eq!(moved_report.verdict_dgr, r.verdict_dgr);
    }

    #[test]
    fn graph_json_round_trips((_, a) in group()) {
        for g in [orb_graph(a), orb_digraph(a)] {
            prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        }
    }
}

#[test]
fn relabelled_graph_has_conjugate_group() {
    let a = PermGroup::cyclic(6).unwrap();
    let g = orb_digraph(&a);
    let f = Permutation::parse_cycles("(1 4 2)(5 6)", 6).unwrap();
    let moved = automorphism_group(&g.relabel_vertices(&f)).unwrap();
    assert!(moved.equals(&automorphism_group(&g).unwrap().conjugate(&f)));
}
