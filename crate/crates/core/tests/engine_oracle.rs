use abelrep::autgrp::{automorphism_generators, automorphism_group, brute_force_aut, is_automorphism};
use abelrep::cgraph::ColouredGraph;
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = ColouredGraph> {
    (1usize..=8, 1u32..=3, any::<bool>()).prop_flat_map(|(n, k, directed)| {
        proptest::collection::vec(0..k, n * n).prop_filter_map("colours must have no gaps", move |cells| {
            let mut m = cells.clone();
            if directed {
                for v in 0..n {
                    m[v * n + v] = 0;
                }
            } else {
                for u in 0..n {
                    for v in 0..u {
                        m[u * n + v] = m[v * n + u];
                    }
                }
            }
            ColouredGraph::new(directed, n, m).ok()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn engine_matches_brute_force(g in graph_strategy()) {
        // orders up to 8! exceed the element cap, so compare via generators
        let fast = automorphism_generators(&g).unwrap();
        let slow = brute_force_aut(&g).unwrap();
        prop_assert_eq!(fast.order_usize(), Some(slow.order()), "{:?}", g);
        for p in &fast.generators {
            prop_assert!(is_automorphism(&g, p).unwrap());
            prop_assert!(slow.contains(p));
        }
    }
}

#[test]
fn sparse_regular_graphs_agree() {
    // circulants and their complements stress refinement with equal degrees
    for n in 4..=8 {
        for mask in 1u32..(1 << (n / 2)) {
            let g = ColouredGraph::from_fn(false, n, |u, v| {
                let d = (v + n - u) % n;
                let d = d.min(n - d);
                u32::from(mask & (1 << (d - 1)) != 0)
            });
            let Ok(g) = g else { continue };
            let fast = automorphism_group(&g).unwrap();
            let slow = brute_force_aut(&g).unwrap();
            assert!(fast.equals(&slow), "n = {n}, mask = {mask:b}");
        }
    }
}
