use chirality_core::oracle;
use chirality_core::planarity::{self, verify_embedding, verify_kuratowski, PlanarityWitness};
use chirality_core::Multigraph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn check(g: &Multigraph) {
    let verdict = planarity::is_planar(g);
    let reference = !oracle::has_kuratowski_subdivision(g);
    assert_eq!(verdict.planar, reference, "disagreement on {g}");
    assert_eq!(planarity::planar(g), reference, "fast path disagreement on {g}");
    match &verdict.witness {
        PlanarityWitness::Embedding(rot) => assert!(verify_embedding(g, rot), "bad embedding for {g}"),
        PlanarityWitness::Obstruction(w) => assert!(verify_kuratowski(g, w), "bad obstruction for {g}"),
    }
}

#[test]
fn agrees_with_subdivision_search_on_all_labeled_graphs_up_to_six_vertices() {
    for n in 1..=6 {
        for m in 0..=n * (n - 1) / 2 {
            for g in oracle::labeled_graphs(n, m) {
                check(&g);
            }
        }
    }
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Multigraph {
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    Multigraph::from_pairs(n, &e)
}

#[test]
fn agrees_with_subdivision_search_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1500 {
        let n = rng.gen_range(7..=10);
        let p = rng.gen_range(0.25..0.6);
        check(&random_graph(&mut rng, n, p));
    }
}

#[test]
fn verdict_ignores_loops_and_multiplicity() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(3..=9);
        let g = random_graph(&mut rng, n, 0.45);
        let mut h = g.clone();
        for _ in 0..rng.gen_range(1..4) {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a == b || g.has_edge(a, b) {
                h = h.add_edge((a, b)).unwrap();
            }
        }
        assert_eq!(planarity::planar(&h), planarity::planar(&g));
        assert_eq!(planarity::is_planar(&h).planar, planarity::planar(&g));
    }
}
