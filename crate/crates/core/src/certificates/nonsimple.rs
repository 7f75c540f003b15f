use serde::{Deserialize, Serialize};

use crate::catalog::{named, CatalogName};
use crate::graph::{Edge, Multigraph};
use crate::oracle;
use crate::planarity::{self, RotationSystem};

/// Mirror-symmetric embeddings of multigraphs with loops or double edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonSimpleCertificate {
    /// The multigraph is planar; it lies in the mirror plane.
    Planar { embedding: RotationSystem },
    /// Removing both copies of a double edge leaves a planar graph in the
    /// plane; the two copies are placed symmetrically on either side.
    DoubleEdgePlanar {
        e1: Edge,
        e2: Edge,
        embedding: RotationSystem,
    },
    /// Removing both copies of a double edge leaves K3,3 plus isolated
    /// vertices; the two endpoints are non-adjacent there, so a mirror
    /// embedding of K3,3 can put both in the plane.
    DoubleEdgeOverK33 { e1: Edge, e2: Edge },
    /// Removing the single loop leaves K3,3 plus isolated vertices; its
    /// vertex lies in the mirror plane.
    LoopOnK33 { loop_edge: Edge },
}

/// Tries the rules in order: planar, double edge over a planar rest,
/// double edge over K3,3, loop on K3,3.
pub fn nonsimple_achiral(g: &Multigraph) -> Option<NonSimpleCertificate> {
    if let Some(embedding) = planarity::embed(g) {
        return Some(NonSimpleCertificate::Planar { embedding });
    }
    let doubles: Vec<Edge> = g
        .distinct_edges()
        .into_iter()
        .filter(|e| !e.is_loop() && g.multiplicity(e.u, e.v) == 2)
        .collect();
    for &e in &doubles {
        let rest = g.delete_edges(&[e, e]).expect("two copies present");
        if let Some(embedding) = planarity::embed(&rest) {
            return Some(NonSimpleCertificate::DoubleEdgePlanar { e1: e, e2: e, embedding });
        }
    }
    for &e in &doubles {
        let rest = g.delete_edges(&[e, e]).expect("two copies present");
        if is_k33_plus_isolated(&rest) {
            return Some(NonSimpleCertificate::DoubleEdgeOverK33 { e1: e, e2: e });
        }
    }
    let loops: Vec<Edge> = g.edges().iter().copied().filter(Edge::is_loop).collect();
    if let [l] = loops[..] {
        let rest = g.delete_edge(l).expect("loop present");
        if is_k33_plus_isolated(&rest) {
            return Some(NonSimpleCertificate::LoopOnK33 { loop_edge: l });
        }
    }
    None
}

fn is_k33_plus_isolated(g: &Multigraph) -> bool {
    let core = g.without_isolated();
    core.is_simple() && oracle::isomorphic(&core, &named(CatalogName::K33).graph)
}

pub fn verify_nonsimple(g: &Multigraph, c: &NonSimpleCertificate) -> bool {
    match c {
        NonSimpleCertificate::Planar { embedding } => planarity::verify_embedding(g, embedding),
        NonSimpleCertificate::DoubleEdgePlanar { e1, e2, embedding } => {
            e1 == e2
                && !e1.is_loop()
                && g.multiplicity(e1.u, e1.v) == 2
                && g.delete_edges(&[*e1, *e2])
                    .is_ok_and(|rest| planarity::verify_embedding(&rest, embedding))
        }
        NonSimpleCertificate::DoubleEdgeOverK33 { e1, e2 } => {
            e1 == e2
                && !e1.is_loop()
                && g.multiplicity(e1.u, e1.v) == 2
                && g.delete_edges(&[*e1, *e2]).is_ok_and(|rest| is_k33_plus_isolated(&rest))
        }
        NonSimpleCertificate::LoopOnK33 { loop_edge } => {
            loop_edge.is_loop()
                && g.edges().iter().filter(|e| e.is_loop()).count() == 1
                && g.delete_edge(*loop_edge).is_ok_and(|rest| is_k33_plus_isolated(&rest))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Multigraph {
        named(CatalogName::K33).graph
    }

    #[test]
    fn double_edge_across_a_part() {
        let g = k33().add_edge((0, 1)).unwrap().add_edge((0, 1)).unwrap();
        let c = nonsimple_achiral(&g).unwrap();
        assert!(matches!(c, NonSimpleCertificate::DoubleEdgeOverK33 { .. }));
        assert!(verify_nonsimple(&g, &c));
    }

    #[test]
    fn loop_on_k33() {
        let g = k33().add_edge((2, 2)).unwrap();
        let c = nonsimple_achiral(&g).unwrap();
        assert_eq!(c, NonSimpleCertificate::LoopOnK33 { loop_edge: Edge::new(2, 2) });
        assert!(verify_nonsimple(&g, &c));
    }

    #[test]
    fn doubled_triangle_edge_is_planar() {
        let g = Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]);
        assert!(matches!(nonsimple_achiral(&g), Some(NonSimpleCertificate::Planar { .. })));
    }

    #[test]
    fn double_edge_with_planar_rest() {
        let g = k33().add_edge((0, 3)).unwrap();
        let c = nonsimple_achiral(&g).unwrap();
        assert!(matches!(c, NonSimpleCertificate::DoubleEdgePlanar { .. }));
        assert!(verify_nonsimple(&g, &c));
    }

    #[test]
    fn k5_with_a_loop_is_not_covered() {
        let k5 = named(CatalogName::K5).graph.add_edge((0, 0)).unwrap();
        assert!(nonsimple_achiral(&k5).is_none());
    }
}
