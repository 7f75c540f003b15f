use chirality_core::catalog::{complete, complete_bipartite, moebius};
use chirality_core::certificates::{find_added_edge_mirror, find_chirality_certificate, find_twin_mirror, find_type1};
use chirality_core::format::{parse_graph6, parse_mg, to_graph6, to_mg};
use chirality_core::minor_search::has_minor;
use chirality_core::oracle;
use chirality_core::pipeline::{candidates, classify_all, h_route_check, ClassifyOptions};
use chirality_core::{
    automorphism_group, canonical_key, classify_embeddability, is_isomorphic, planar, verify_verdict, Multigraph,
    Permutation,
};
use proptest::prelude::*;

fn simple_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        pairs.push((a, b));
                    }
                    k += 1;
                }
            }
            Multigraph::from_pairs(n, &pairs)
        })
    })
}

fn multigraph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..12)
            .prop_map(move |pairs| Multigraph::from_pairs(n, &pairs))
    })
}

fn with_permutation(g: Multigraph) -> impl Strategy<Value = (Multigraph, Permutation)> {
    let n = g.order();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |images| (g.clone(), Permutation::from_images(images).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_key_ignores_labeling((g, p) in multigraph(8).prop_flat_map(with_permutation)) {
        prop_assert_eq!(canonical_key(&g), canonical_key(&g.permute(&p)));
        let iso = is_isomorphic(&g, &g.permute(&p));
        prop_assert!(iso.is_some());
        prop_assert_eq!(g.permute(&iso.unwrap()), g.permute(&p));
    }

    #[test]
    fn canonical_key_separates_classes(g in simple_graph(6), h in simple_graph(6)) {
        prop_assert_eq!(canonical_key(&g) == canonical_key(&h), oracle::isomorphic(&g, &h));
    }

    #[test]
    fn key_rebuilds_an_isomorphic_graph(g in multigraph(8)) {
        let k = canonical_key(&g);
        prop_assert_eq!(canonical_key(&k.to_graph()), k.clone());
        prop_assert_eq!(chirality_core::CanonicalKey::from_hex(&k.to_hex()), Some(k));
    }

    #[test]
    fn automorphism_group_matches_brute_force(g in multigraph(7)) {
        let group = automorphism_group(&g).unwrap();
        let mut elements = group.all_elements();
        elements.sort();
        let mut reference = oracle::automorphisms(&g);
        reference.sort();
        prop_assert_eq!(group.order() as usize, reference.len());
        prop_assert_eq!(elements, reference);
    }

    #[test]
    fn mg_round_trip_is_exact(g in multigraph(9)) {
        let text = to_mg(&g);
        let back = parse_mg(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_mg(&back), text);
    }

    #[test]
    fn graph6_round_trip(g in simple_graph(10)) {
        let line = to_graph6(&g).unwrap();
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(&back[0], &g);
    }

    #[test]
    fn has_minor_matches_closure_oracle(g in simple_graph(7)) {
        for target in [complete(4), complete_bipartite(2, 3), moebius(2)] {
            let found = has_minor(&g, &target);
            let target = target.simplify();
            prop_assert_eq!(found.is_some(), oracle::has_simple_minor(&g, &target));
            if let Some(m) = found {
                prop_assert!(m.verify(&g));
                let h = m.replay(&g).unwrap().without_isolated();
                prop_assert!(is_isomorphic(&h, &target).is_some());
            }
        }
    }

    #[test]
    fn verdict_is_labeling_invariant((g, p) in simple_graph(8).prop_flat_map(with_permutation)) {
        let a = classify_embeddability(&g);
        let b = classify_embeddability(&g.permute(&p));
        prop_assert_eq!(a.label(), b.label());
        if !a.is_unresolved() {
            prop_assert!(verify_verdict(&g, &a));
        }
    }

    #[test]
    fn nonsimple_verdicts_verify(g in multigraph(7)) {
        let v = classify_embeddability(&g);
        if !v.is_unresolved() {
            prop_assert!(verify_verdict(&g, &v));
        }
    }
}

#[test]
fn no_candidate_is_both_achiral_and_chiral() {
    for size in 9..=11 {
        for g in candidates(size).unwrap() {
            let chiral = find_chirality_certificate(&g).is_some();
            let achiral = planar(&g)
                || find_twin_mirror(&g).is_some()
                || find_type1(&g).is_some()
                || find_added_edge_mirror(&g).is_some();
            assert!(!(chiral && achiral), "both certificates for {g}");
            let v = classify_embeddability(&g);
            assert_eq!(v.is_chiral(), chiral && !achiral, "{g}");
            if !v.is_unresolved() {
                assert!(verify_verdict(&g, &v), "{g}");
            }
        }
    }
}

#[test]
fn order_seven_size_twelve_candidates_route_through_h_or_lack_k33() {
    let records = classify_all(ClassifyOptions {
        max_size: 12,
        audit: false,
    })
    .unwrap();
    let check = h_route_check(&records);
    assert!(check.checked > 0);
    assert!(check.unexplained.is_empty(), "{:?}", check.unexplained);
    assert_eq!(check.routed + check.k5_only.len(), check.checked);
}
