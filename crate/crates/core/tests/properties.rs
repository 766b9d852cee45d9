use proptest::prelude::*;

use codegree_core::generators::{
    canonical_form, complete_to_maximal_triangle_free, cycle, mobius_ladder, random_permutation, random_triangle_free,
};
use codegree_core::io::{parse_edge_list, write_edge_list, AdjacencyJson};
use codegree_core::structure::{c5_decomposition, normalize_cycle, C5Outcome};
use codegree_core::theorems::{check_disjointness_lemma, decomposition_parts_ok, DisjointnessVerdict};
use codegree_core::{
    blow_up, construct_c5_homomorphism, find_homomorphism, from_graph6, induced_five_cycles, is_maximal_triangle_free,
    is_triangle_free, min_common_degree, recognize_blow_up, to_graph6, twin_classes, verify_homomorphism, BlowupSpec,
    Graph,
};

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

fn triangle_free(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.05f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| random_triangle_free(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in any_graph(70)) {
        let s = to_graph6(&g);
        prop_assert_eq!(from_graph6(&s).unwrap(), g.clone());
        prop_assert_eq!(serde_json::from_str::<Graph>(&serde_json::to_string(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn edge_list_and_json_round_trip(g in any_graph(25)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g.clone());
        let json = AdjacencyJson::from(&g);
        prop_assert_eq!(Graph::try_from(&json).unwrap(), g);
    }

    #[test]
    fn invariants_ignore_labels(g in any_graph(14), seed in any::<u64>()) {
        let h = g.permuted(&random_permutation(g.n(), seed));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        if g.n() >= 2 {
            prop_assert_eq!(min_common_degree(&g).unwrap(), min_common_degree(&h).unwrap());
        }
        prop_assert_eq!(is_triangle_free(&g), is_triangle_free(&h));
    }

    #[test]
    fn construction_is_always_verified(g in triangle_free(24)) {
        let c5 = cycle(5).unwrap();
        let out = construct_c5_homomorphism(&g).unwrap();
        if let Some(map) = out.map() {
            prop_assert!(verify_homomorphism(&g, &c5, map).unwrap().is_valid());
        }
        // Above the threshold it never fails, and the search agrees.
        if out.hypothesis {
            prop_assert!(out.succeeded());
            prop_assert!(find_homomorphism(&g, &c5).is_some());
        }
        if out.succeeded() {
            prop_assert!(find_homomorphism(&g, &c5).is_some());
        }
    }

    #[test]
    fn decompositions_around_every_induced_five_cycle(g in triangle_free(14)) {
        for c in induced_five_cycles(&g) {
            let dec = c5_decomposition(&g, c).unwrap();
            prop_assert!(decomposition_parts_ok(&g, &dec));
            for (i, &v) in c.iter().enumerate() {
                prop_assert!(dec.d[i].contains(v));
                let mut w = dec.w[i].clone();
                w.intersect_with(dec.d_union().words());
                prop_assert!(w.is_empty());
                for j in i + 1..5 {
                    prop_assert!(dec.w[i].is_disjoint(&dec.w[j]));
                }
            }
            prop_assert_eq!(normalize_cycle(normalize_cycle(c)), normalize_cycle(c));
        }
    }

    #[test]
    fn common_neighborhoods_of_crossing_non_edges_are_disjoint(
        g in triangle_free(16),
        picks in proptest::collection::vec(any::<proptest::sample::Index>(), 4),
    ) {
        let n = g.n();
        let [x1, x2, y1, y2] = [0, 1, 2, 3].map(|i| picks[i].index(n));
        match check_disjointness_lemma(&g, x1, x2, y1, y2).unwrap() {
            DisjointnessVerdict::Intersecting { common } => prop_assert!(false, "intersect in {:?}", common),
            DisjointnessVerdict::Disjoint | DisjointnessVerdict::Precondition { .. } => {}
        }
    }

    #[test]
    fn maximal_completion(g in triangle_free(30), seed in any::<u64>()) {
        let m = complete_to_maximal_triangle_free(&g, seed).unwrap();
        prop_assert!(is_maximal_triangle_free(&m).unwrap());
        prop_assert!(g.edges().all(|(u, v)| m.has_edge(u, v)));
    }

    #[test]
    fn blow_up_invariance(
        pattern in 0usize..3,
        sizes in proptest::collection::vec(1usize..4, 8),
    ) {
        let patterns = [cycle(4).unwrap(), cycle(5).unwrap(), mobius_ladder()];
        let f = &patterns[pattern];
        let sizes = sizes[..f.n()].to_vec();
        let (g, parts) = blow_up(&BlowupSpec::new(f.clone(), sizes.clone()).unwrap()).unwrap();
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        for h in [&k2, &patterns[1]] {
            prop_assert_eq!(find_homomorphism(&g, h).is_some(), find_homomorphism(f, h).is_some());
        }
        // C4 has twins of its own; C5 and the ladder do not, so their
        // blow-up parts are exactly the twin classes and recognition gives
        // the sizes back (up to the pattern's symmetry).
        if pattern == 0 {
            return Ok(());
        }
        let classes = twin_classes(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(classes[u] == classes[v], parts[u] == parts[v]);
            }
        }
        let r = recognize_blow_up(&g);
        let mut got = r.spec.sizes.clone();
        let mut want = sizes;
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
        let (back, _) = blow_up(&r.spec).unwrap();
        prop_assert_eq!(canonical_form(&back), canonical_form(&g));
    }

    #[test]
    fn bipartite_outcome_uses_one_edge(g in triangle_free(20)) {
        if let C5Outcome::Bipartite { map } = construct_c5_homomorphism(&g).unwrap().outcome {
            prop_assert!(map.0.iter().all(|&t| t < 2));
        }
    }
}
