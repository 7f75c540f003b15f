use serde::{Deserialize, Serialize};

use super::planar_without;
use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};
use crate::planarity::{self, RotationSystem};

/// Twins `v`, `v_prime` whose removal leaves a planar graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinMirrorCertificate {
    pub v: usize,
    pub v_prime: usize,
    /// Embedding of `G \ {v, v'}` with survivors renumbered in order.
    pub remainder_embedding: RotationSystem,
}

/// The first twin pair (in lexicographic order) with a planar remainder.
pub fn find_twin_mirror(g: &Multigraph) -> Option<TwinMirrorCertificate> {
    if !g.is_simple() {
        return None;
    }
    let n = g.order();
    for v in 0..n {
        for w in v + 1..n {
            if g.twin_pair(v, w) != Ok(true) {
                continue;
            }
            if let Some(remainder_embedding) = planar_without(g, v, w) {
                return Some(TwinMirrorCertificate {
                    v,
                    v_prime: w,
                    remainder_embedding,
                });
            }
        }
    }
    None
}

pub fn verify_twin_mirror(g: &Multigraph, c: &TwinMirrorCertificate) -> bool {
    if g.twin_pair(c.v, c.v_prime) != Ok(true) {
        return false;
    }
    let Ok((h, _)) = g.delete_vertices(&[c.v, c.v_prime]) else {
        return false;
    };
    planarity::verify_embedding(&h, &c.remainder_embedding)
}

/// `G' = G + e` with twin pairs `(v1, v2)` and `(v3, v4)` in `G`, each of
/// `v1, v2` adjacent in `G` to each of `v3, v4`, and both `G' \ {v1, v2}`
/// and `G' \ {v3, v4}` planar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedEdgeMirrorCertificate {
    pub base: Multigraph,
    pub pairs: [(usize, usize); 2],
    pub added: Edge,
    /// The four adjacencies between the pairs that the hypothesis relies on.
    pub adjacencies_used: Vec<Edge>,
    pub base_embeddings: [RotationSystem; 2],
    pub embeddings: [RotationSystem; 2],
}

/// Checks the hypotheses for the given pairs and edge, reporting every
/// failed condition.
pub fn check_added_edge_mirror(
    g_prime: &Multigraph,
    pairs: ((usize, usize), (usize, usize)),
    e: Edge,
) -> Result<AddedEdgeMirrorCertificate> {
    let ((v1, v2), (v3, v4)) = pairs;
    let mut failures = Vec::new();
    if !g_prime.is_simple() {
        return Err(Error::NotSimple("the added-edge mirror rule"));
    }
    let quad = [v1, v2, v3, v4];
    if quad.iter().any(|&x| x >= g_prime.order()) {
        return Err(Error::InvalidArgument(format!("pair vertices {quad:?} out of range")));
    }
    let mut sorted = quad;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!("pair vertices {quad:?} are not distinct")));
    }
    let g = g_prime
        .delete_edge(e)
        .map_err(|_| Error::Precondition(format!("added edge {e} is not in the graph")))?;

    let mut base_embeddings = Vec::new();
    for (name, (a, b)) in [("first", (v1, v2)), ("second", (v3, v4))] {
        if g.twin_pair(a, b) != Ok(true) {
            failures.push(format!("{name} pair ({a}, {b}) are not twins in the base graph"));
        }
        match planar_without(&g, a, b) {
            Some(r) => base_embeddings.push(r),
            None => failures.push(format!("base graph minus the {name} pair ({a}, {b}) is not planar")),
        }
    }
    let mut adjacencies_used = Vec::new();
    for a in [v1, v2] {
        for b in [v3, v4] {
            if g.has_edge(a, b) {
                adjacencies_used.push(Edge::new(a, b));
            } else {
                failures.push(format!("{a} is not adjacent to {b} in the base graph"));
            }
        }
    }
    let mut embeddings = Vec::new();
    for (name, (a, b)) in [("first", (v1, v2)), ("second", (v3, v4))] {
        match planar_without(g_prime, a, b) {
            Some(r) => embeddings.push(r),
            None => failures.push(format!("extended graph minus the {name} pair ({a}, {b}) is not planar")),
        }
    }
    if !failures.is_empty() {
        return Err(Error::Precondition(failures.join("; ")));
    }
    let to_pair = |mut v: Vec<RotationSystem>| {
        let b = v.pop().unwrap();
        let a = v.pop().unwrap();
        [a, b]
    };
    Ok(AddedEdgeMirrorCertificate {
        base: g,
        pairs: [(v1, v2), (v3, v4)],
        added: e,
        adjacencies_used,
        base_embeddings: to_pair(base_embeddings),
        embeddings: to_pair(embeddings),
    })
}

/// Searches every edge and every pair of twin pairs of the base graph.
pub fn find_added_edge_mirror(g_prime: &Multigraph) -> Option<AddedEdgeMirrorCertificate> {
    if !g_prime.is_simple() {
        return None;
    }
    let n = g_prime.order();
    for &e in g_prime.edges() {
        let g = g_prime.delete_edge(e).expect("edge present");
        let mut twins = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if g.twin_pair(a, b) == Ok(true) && planar_without(&g, a, b).is_some() {
                    twins.push((a, b));
                }
            }
        }
        for (i, &p) in twins.iter().enumerate() {
            for &q in &twins[i + 1..] {
                if [p.0, p.1].iter().any(|x| *x == q.0 || *x == q.1) {
                    continue;
                }
                for (first, second) in [(p, q), (q, p)] {
                    if let Ok(c) = check_added_edge_mirror(g_prime, (first, second), e) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

pub fn verify_added_edge_mirror(g_prime: &Multigraph, c: &AddedEdgeMirrorCertificate) -> bool {
    let Ok(base) = g_prime.delete_edge(c.added) else {
        return false;
    };
    if base != c.base || !g_prime.is_simple() || c.adjacencies_used.len() != 4 {
        return false;
    }
    let [(v1, v2), (v3, v4)] = c.pairs;
    for a in [v1, v2] {
        for b in [v3, v4] {
            if !base.has_edge(a, b) || !c.adjacencies_used.contains(&Edge::new(a, b)) {
                return false;
            }
        }
    }
    for (k, (a, b)) in c.pairs.iter().enumerate() {
        if base.twin_pair(*a, *b) != Ok(true) {
            return false;
        }
        let (Ok((hb, _)), Ok((hp, _))) = (base.delete_vertices(&[*a, *b]), g_prime.delete_vertices(&[*a, *b])) else {
            return false;
        };
        if !planarity::verify_embedding(&hb, &c.base_embeddings[k]) || !planarity::verify_embedding(&hp, &c.embeddings[k]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete, named, CatalogName};

    #[test]
    fn k33_twins() {
        let k33 = named(CatalogName::K33).graph;
        let c = find_twin_mirror(&k33).unwrap();
        assert_eq!((c.v, c.v_prime), (0, 1));
        assert!(verify_twin_mirror(&k33, &c));
        assert!(find_twin_mirror(&complete(7)).is_none());
    }

    #[test]
    fn added_edge_on_k33() {
        let k33 = named(CatalogName::K33).graph;
        let g_prime = k33.add_edge((0, 2)).unwrap();
        let c = check_added_edge_mirror(&g_prime, ((0, 1), (3, 4)), Edge::new(0, 2)).unwrap();
        assert!(verify_added_edge_mirror(&g_prime, &c));
    }

    #[test]
    fn hypothesis_failures_are_listed() {
        let k33 = named(CatalogName::K33).graph;
        let g_prime = k33.add_edge((0, 2)).unwrap();
        let err = check_added_edge_mirror(&g_prime, ((0, 1), (2, 3)), Edge::new(0, 2)).unwrap_err();
        let Error::Precondition(msg) = err else { panic!() };
        assert!(msg.contains("0 is not adjacent to 2"));
    }
}
