use serde::{Deserialize, Serialize};

use crate::automorphism::automorphism_group;
use crate::catalog::moebius;
use crate::graph::{Edge, Multigraph};
use crate::minor_search::{find_moebius_cores, prune_and_smooth, MoebiusCore};
use crate::oracle;
use crate::perm::Permutation;
use crate::planarity;

pub const DEFAULT_MAX_DELETIONS: usize = 3;

/// How one automorphism acts on the deletion set and on the loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub element: Permutation,
    pub preserves_deleted: bool,
    pub preserves_loop: bool,
}

/// Deleting `deleted` and reducing leaves the Möbius ladder on `n` rungs,
/// `loop_cycle` maps onto its loop, and every automorphism of the graph
/// preserves both edge sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralityCertificate {
    pub deleted: Vec<Edge>,
    pub loop_cycle: Vec<Edge>,
    pub n: usize,
    /// Vertex of the graph behind each core vertex.
    pub core_vertices: Vec<usize>,
    /// Core vertex to ladder vertex.
    pub core_to_ladder: Permutation,
    pub rung_paths: Vec<Vec<Edge>>,
    /// One entry per automorphism of the graph, identity first.
    pub audit: Vec<AuditEntry>,
}

impl ChiralityCertificate {
    pub fn group_order(&self) -> usize {
        self.audit.len()
    }
}

pub fn find_chirality_certificate(g: &Multigraph) -> Option<ChiralityCertificate> {
    find_chirality_certificate_with(g, DEFAULT_MAX_DELETIONS)
}

/// The first Möbius core (fewest deletions first) whose deletion set and
/// loop are fixed by the whole automorphism group.
pub fn find_chirality_certificate_with(g: &Multigraph, max_deletions: usize) -> Option<ChiralityCertificate> {
    if !g.is_simple() || !g.is_connected() || planarity::planar(g) {
        return None;
    }
    let elements = automorphism_group(g).ok()?.all_elements();
    let cores = find_moebius_cores(g, max_deletions.min(g.size())).ok()?;
    cores
        .into_iter()
        .find(|c| elements.iter().all(|s| preserves(s, &c.deleted) && preserves(s, &c.loop_cycle)))
        .map(|c| certificate_from(c, &elements))
}

fn preserves(s: &Permutation, edges: &[Edge]) -> bool {
    let mut image: Vec<Edge> = edges.iter().map(|e| e.map(s)).collect();
    image.sort();
    image == edges
}

fn certificate_from(c: MoebiusCore, elements: &[Permutation]) -> ChiralityCertificate {
    let audit = elements
        .iter()
        .map(|s| AuditEntry {
            element: s.clone(),
            preserves_deleted: preserves(s, &c.deleted),
            preserves_loop: preserves(s, &c.loop_cycle),
        })
        .collect();
    ChiralityCertificate {
        deleted: c.deleted,
        loop_cycle: c.loop_cycle,
        n: c.n,
        core_vertices: c.smoothed.vertex_map,
        core_to_ladder: c.core_to_ladder,
        rung_paths: c.rung_paths,
        audit,
    }
}

/// Rebuilds the core, checks the ladder and loop, and re-audits against an
/// automorphism list computed by brute force.
pub fn verify_chirality(g: &Multigraph, c: &ChiralityCertificate) -> bool {
    if c.n < 3 || c.n.is_multiple_of(2) || !g.is_simple() {
        return false;
    }
    let mut deleted = c.deleted.clone();
    deleted.sort();
    if deleted != c.deleted || deleted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let Ok(base) = g.delete_edges(&c.deleted) else {
        return false;
    };
    let smoothed = prune_and_smooth(&base);
    let core = &smoothed.core;
    let ladder = moebius(c.n);
    if smoothed.vertex_map != c.core_vertices
        || core.order() != ladder.order()
        || c.core_to_ladder.len() != core.order()
        || core.permute(&c.core_to_ladder) != ladder
    {
        return false;
    }
    let m = 2 * c.n;
    let loop_core: Vec<usize> = (0..core.size())
        .filter(|&i| {
            let e = core.edges()[i].map(&c.core_to_ladder);
            e.v - e.u == 1 || (e.u == 0 && e.v == m - 1)
        })
        .collect();
    if smoothed.pull_back(&base, &loop_core) != c.loop_cycle {
        return false;
    }
    let mut listed: Vec<&Permutation> = c.audit.iter().map(|a| &a.element).collect();
    listed.sort();
    let mut all = oracle::automorphisms(g);
    all.sort();
    if listed.len() != all.len() || listed.iter().zip(&all).any(|(a, b)| *a != b) {
        return false;
    }
    c.audit.iter().all(|a| {
        a.preserves_deleted
            && a.preserves_loop
            && preserves(&a.element, &c.deleted)
            && preserves(&a.element, &c.loop_cycle)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named, CatalogName};

    #[test]
    fn k33_has_no_preserved_loop() {
        assert!(find_chirality_certificate(&named(CatalogName::K33).graph).is_none());
    }

    #[test]
    fn the_eleven_edge_graph_is_certified() {
        let g = named(CatalogName::G11_8_1).graph;
        let c = find_chirality_certificate(&g).unwrap();
        assert!(c.deleted.is_empty());
        assert_eq!(c.n, 3);
        assert!(verify_chirality(&g, &c));
    }
}
