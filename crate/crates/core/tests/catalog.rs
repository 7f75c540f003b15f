use chirality_core::catalog::{complete, full_catalog, named, CatalogName};
use chirality_core::certificates::{validate_catalog, CheckStatus};
use chirality_core::{oracle, classify_embeddability, verify_verdict, Verdict};

#[test]
fn catalog_validation_fails_only_on_the_12_8_2_minor() {
    let report = validate_catalog();
    for c in &report.checks {
        if c.status != CheckStatus::Pass {
            eprintln!("{:?} {} [{}] {}", c.status, c.graph, c.fact, c.detail);
        }
    }
    let failures = report.failures();
    assert_eq!(failures.len(), 1, "{failures:#?}");
    assert_eq!(failures[0].graph, CatalogName::G12_8_2);
    assert!(failures[0].fact.contains("11^8_1"));
}

#[test]
fn the_12_8_2_graph_loses_an_edge_onto_11_8_1() {
    let g = named(CatalogName::G12_8_2).graph;
    let (b1, b2) = (g.vertex_named("b1").unwrap(), g.vertex_named("b2").unwrap());
    let h = g.delete_edge((b1, b2)).unwrap();
    assert!(oracle::isomorphic(&h, &named(CatalogName::G11_8_1).graph));
}

#[test]
fn mmic_graphs_are_chiral_and_the_rest_achiral() {
    for ng in full_catalog() {
        let v = classify_embeddability(&ng.graph);
        let expect_chiral = CatalogName::MMIC.contains(&ng.name) || ng.name == CatalogName::Moebius(5);
        assert_eq!(v.is_chiral(), expect_chiral, "{} gave {}", ng.name, v.label());
        if !expect_chiral {
            assert!(v.is_achiral(), "{} gave {}", ng.name, v.label());
        }
        assert!(verify_verdict(&ng.graph, &v), "{}", ng.name);
    }
    let k6 = complete(6);
    assert!(classify_embeddability(&k6).is_achiral());
    assert!(matches!(classify_embeddability(&named(CatalogName::K5).graph), Verdict::Achiral(_)));
}
