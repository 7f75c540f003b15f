//! Minor containment, degree-based reductions, and Möbius ladder cores.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, is_isomorphic, CanonicalKey};
use crate::catalog::{moebius, named, CatalogName};
use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};
use crate::minor::{MinorModel, MinorStep};
use crate::perm::Permutation;

/// A model of `target` as a minor of `g`, or `None` when there is none.
///
/// The search contracts edges and removes vertices down to the target's
/// order, then looks for the target as a spanning subgraph. Every
/// intermediate graph is reduced to its simplification, and failed states
/// are remembered by canonical key.
pub fn has_minor(g: &Multigraph, target: &Multigraph) -> Option<MinorModel> {
    let target = target.simplify();
    let mut search = MinorSearch {
        target: &target,
        failed: HashSet::new(),
    };
    let mut steps = Vec::new();
    let start = simplify_recorded(g, &mut steps);
    if search.visit(&start, &mut steps) {
        Some(MinorModel {
            source: canonical_key(g),
            target: canonical_key(&target),
            steps,
        })
    } else {
        None
    }
}

pub fn has_named_minor(g: &Multigraph, name: CatalogName) -> Option<MinorModel> {
    has_minor(g, &named(name).graph)
}

pub fn contains_11_8_1(g: &Multigraph) -> Option<MinorModel> {
    has_named_minor(g, CatalogName::G11_8_1)
}

/// Deletes loops and surplus parallel copies, recording each deletion.
fn simplify_recorded(g: &Multigraph, steps: &mut Vec<MinorStep>) -> Multigraph {
    let mut out = g.clone();
    let mut prev: Option<Edge> = None;
    for &e in g.edges() {
        if e.is_loop() || prev == Some(e) {
            out = out.delete_edge(e).expect("edge present");
            steps.push(MinorStep::DeleteEdge(e));
        }
        prev = Some(e);
    }
    out
}

struct MinorSearch<'a> {
    target: &'a Multigraph,
    failed: HashSet<CanonicalKey>,
}

impl MinorSearch<'_> {
    fn visit(&mut self, g: &Multigraph, steps: &mut Vec<MinorStep>) -> bool {
        let (tn, tm) = (self.target.order(), self.target.size());
        if g.order() < tn || g.size() < tm {
            return false;
        }
        let key = canonical_key(g);
        if self.failed.contains(&key) {
            return false;
        }
        if g.order() == tn {
            if let Some(map) = spanning_embedding(self.target, g) {
                let used: HashSet<Edge> = self
                    .target
                    .edges()
                    .iter()
                    .map(|e| Edge::new(map[e.u], map[e.v]))
                    .collect();
                for &e in g.edges() {
                    if !used.contains(&e) {
                        steps.push(MinorStep::DeleteEdge(e));
                    }
                }
                return true;
            }
            self.failed.insert(key);
            return false;
        }
        let mut tried = HashSet::new();
        for e in g.distinct_edges() {
            let mark = steps.len();
            steps.push(MinorStep::ContractEdge(e));
            let child = simplify_recorded(&g.contract_edge(e).expect("edge present"), steps);
            if tried.insert(canonical_key(&child)) && self.visit(&child, steps) {
                return true;
            }
            steps.truncate(mark);
        }
        for v in 0..g.order() {
            let mark = steps.len();
            let mut child = g.clone();
            for &e in g.edges().iter().filter(|e| e.contains(v)) {
                child = child.delete_edge(e).expect("edge present");
                steps.push(MinorStep::DeleteEdge(e));
            }
            child = child.delete_vertex(v).expect("vertex present");
            steps.push(MinorStep::DeleteVertex(v));
            if tried.insert(canonical_key(&child)) && self.visit(&child, steps) {
                return true;
            }
            steps.truncate(mark);
        }
        self.failed.insert(key);
        false
    }
}

/// An injective map from the vertices of simple `h` into `g` (same order)
/// sending edges to edges.
fn spanning_embedding(h: &Multigraph, g: &Multigraph) -> Option<Vec<usize>> {
    let n = h.order();
    let hadj = h.adjacency_lists();
    let gdeg: Vec<usize> = g.adjacency_lists().iter().map(Vec::len).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(hadj[v].len()));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        k: usize,
        order: &[usize],
        hadj: &[Vec<usize>],
        gdeg: &[usize],
        g: &Multigraph,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in 0..map.len() {
            if used[y] || gdeg[y] < hadj[x].len() {
                continue;
            }
            if hadj[x].iter().any(|&z| map[z] != usize::MAX && !g.has_edge(y, map[z])) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(k + 1, order, hadj, gdeg, g, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    go(0, &order, &hadj, &gdeg, g, &mut map, &mut used).then_some(map)
}

/// Result of deleting low-degree vertices and suppressing degree-2 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothedCore {
    pub core: Multigraph,
    /// Original vertex for each core vertex.
    pub vertex_map: Vec<usize>,
    /// For each core edge (in `core.edges()` order), the indices into the
    /// input's `edges()` of the edges it replaces, sorted.
    pub edge_paths: Vec<Vec<usize>>,
}

impl SmoothedCore {
    /// Input edges represented by the given core edge indices.
    pub fn pull_back(&self, g: &Multigraph, core_edges: &[usize]) -> Vec<Edge> {
        let mut out: Vec<Edge> = core_edges
            .iter()
            .flat_map(|&i| self.edge_paths[i].iter().map(|&j| g.edges()[j]))
            .collect();
        out.sort();
        out
    }
}

/// Repeatedly deletes vertices of degree 0 or 1, and suppresses degree-2
/// vertices whose two edges lead to distinct neighbours. Loops and digons
/// are left in place.
pub fn prune_and_smooth(g: &Multigraph) -> SmoothedCore {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut edges: Vec<Option<(usize, usize, Vec<usize>)>> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| Some((e.u, e.v, vec![i])))
        .collect();
    let degree = |edges: &[Option<(usize, usize, Vec<usize>)>], v: usize| -> usize {
        edges
            .iter()
            .flatten()
            .map(|(a, b, _)| usize::from(*a == v) + usize::from(*b == v))
            .sum()
    };
    loop {
        if let Some(v) = (0..n).find(|&v| alive[v] && degree(&edges, v) <= 1) {
            alive[v] = false;
            for slot in edges.iter_mut() {
                if matches!(slot, Some((a, b, _)) if *a == v || *b == v) {
                    *slot = None;
                }
            }
            continue;
        }
        let smooth = (0..n).find_map(|v| {
            if !alive[v] || degree(&edges, v) != 2 {
                return None;
            }
            let inc: Vec<usize> = (0..edges.len())
                .filter(|&i| matches!(&edges[i], Some((a, b, _)) if *a == v || *b == v))
                .collect();
            let other = |i: usize| {
                let (a, b, _) = edges[i].as_ref().unwrap();
                if *a == v {
                    *b
                } else {
                    *a
                }
            };
            (inc.len() == 2 && other(inc[0]) != other(inc[1]) && other(inc[0]) != v)
                .then(|| (v, inc[0], inc[1], other(inc[0]), other(inc[1])))
        });
        let Some((v, i, j, a, b)) = smooth else { break };
        let mut path = edges[i].take().unwrap().2;
        path.extend(edges[j].take().unwrap().2);
        path.sort_unstable();
        alive[v] = false;
        edges[i] = Some((a, b, path));
    }
    let vertex_map: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in vertex_map.iter().enumerate() {
        index[v] = i;
    }
    let mut pairs: Vec<(Edge, Vec<usize>)> = edges
        .into_iter()
        .flatten()
        .map(|(a, b, p)| (Edge::new(index[a], index[b]), p))
        .collect();
    pairs.sort();
    let core = Multigraph::new(vertex_map.len(), pairs.iter().map(|p| p.0)).expect("renumbered edges");
    SmoothedCore {
        core,
        vertex_map,
        edge_paths: pairs.into_iter().map(|p| p.1).collect(),
    }
}

/// A deletion set whose reduced remainder is an odd Möbius ladder, with a
/// cycle of the remainder that maps onto the ladder's loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoebiusCore {
    pub deleted: Vec<Edge>,
    pub base: Multigraph,
    pub smoothed: SmoothedCore,
    pub n: usize,
    /// Edges of `base` (same vertex numbering as the input) forming the loop.
    pub loop_cycle: Vec<Edge>,
    /// Core vertex to ladder vertex, where the ladder is [`moebius`]`(n)`.
    pub core_to_ladder: Permutation,
    /// Each rung as a path of base edges.
    pub rung_paths: Vec<Vec<Edge>>,
}

impl MoebiusCore {
    /// Re-derives the core and checks the ladder isomorphism and loop image.
    pub fn verify(&self, g: &Multigraph) -> bool {
        let Ok(base) = g.delete_edges(&self.deleted) else {
            return false;
        };
        if base != self.base || prune_and_smooth(&base) != self.smoothed || self.n < 3 || self.n.is_multiple_of(2) {
            return false;
        }
        let core = &self.smoothed.core;
        let ladder = moebius(self.n);
        if core.order() != ladder.order() || core.permute(&self.core_to_ladder) != ladder {
            return false;
        }
        let m = 2 * self.n;
        let loop_core: Vec<usize> = (0..core.size())
            .filter(|&i| {
                let e = core.edges()[i].map(&self.core_to_ladder);
                (e.v - e.u) % m == 1 || (e.u == 0 && e.v == m - 1)
            })
            .collect();
        loop_core.len() == m && self.smoothed.pull_back(&self.base, &loop_core) == self.loop_cycle
    }
}

/// Every `(D, C)` with `|D| <= max_deletions` such that the reduced graph
/// `G \ D` is a Möbius ladder on an odd number `n >= 3` of rungs and `C`
/// pulls back a loop of that ladder.
pub fn find_moebius_cores(g: &Multigraph, max_deletions: usize) -> Result<Vec<MoebiusCore>> {
    if !g.is_simple() {
        return Err(Error::NotSimple("Möbius core search"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("Möbius core search"));
    }
    if max_deletions > g.size() {
        return Err(Error::InvalidArgument(format!(
            "max_deletions {max_deletions} exceeds the size {}",
            g.size()
        )));
    }
    let mut out = Vec::new();
    let m = g.size();
    let mut subset: Vec<usize> = Vec::new();
    for k in 0..=max_deletions {
        subset.clear();
        subset.extend(0..k);
        loop {
            let deleted: Vec<Edge> = subset.iter().map(|&i| g.edges()[i]).collect();
            let base = g.delete_edges(&deleted).expect("edges of g");
            cores_of(&deleted, &base, &mut out);
            if !next_combination(&mut subset, m) {
                break;
            }
        }
    }
    Ok(out)
}

fn next_combination(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < m - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn cores_of(deleted: &[Edge], base: &Multigraph, out: &mut Vec<MoebiusCore>) {
    let smoothed = prune_and_smooth(base);
    let core = &smoothed.core;
    let order = core.order();
    if order < 6 || order % 4 != 2 || !core.is_simple() || core.degrees().iter().any(|&d| d != 3) {
        return;
    }
    let n = order / 2;
    let adj = core.adjacency_lists();
    for cycle in hamiltonian_cycles(&adj) {
        let mut pos = vec![0; order];
        for (i, &v) in cycle.iter().enumerate() {
            pos[v] = i;
        }
        let mut loop_core = Vec::new();
        let mut rungs = Vec::new();
        let mut antipodal = true;
        for (i, e) in core.edges().iter().enumerate() {
            let d = pos[e.u].abs_diff(pos[e.v]);
            if d == 1 || d == order - 1 {
                loop_core.push(i);
            } else if d == n {
                rungs.push(i);
            } else {
                antipodal = false;
            }
        }
        if !antipodal {
            continue;
        }
        let core_to_ladder = Permutation::from_images(pos).expect("cycle visits every vertex once");
        out.push(MoebiusCore {
            deleted: deleted.to_vec(),
            base: base.clone(),
            loop_cycle: smoothed.pull_back(base, &loop_core),
            rung_paths: rungs.iter().map(|&r| smoothed.pull_back(base, &[r])).collect(),
            smoothed: smoothed.clone(),
            n,
            core_to_ladder,
        });
    }
}

/// Hamiltonian cycles of a simple graph, each listed once, starting at 0
/// with the second vertex smaller than the last.
fn hamiltonian_cycles(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut path = vec![0];
    let mut on = vec![false; n];
    on[0] = true;

    fn go(adj: &[Vec<usize>], path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = adj.len();
        let x = *path.last().unwrap();
        if path.len() == n {
            if adj[x].contains(&0) && path[1] < x {
                out.push(path.clone());
            }
            return;
        }
        for &y in &adj[x] {
            if !on[y] {
                on[y] = true;
                path.push(y);
                go(adj, path, on, out);
                path.pop();
                on[y] = false;
            }
        }
    }

    if n >= 3 {
        go(adj, &mut path, &mut on, &mut out);
    }
    out
}

/// Whether `g` is H1 (K3,3 with a pendant vertex) or H2 (K3,3 with one
/// edge subdivided).
pub fn recognize_h1_h2(g: &Multigraph) -> Option<CatalogName> {
    [CatalogName::H1, CatalogName::H2]
        .into_iter()
        .find(|&name| is_isomorphic(g, &named(name).graph).is_some())
}

/// A route to K3,3 from a simple graph of order seven: two deletions reach
/// H1 or H2, then one contraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRoute {
    pub deleted: [Edge; 2],
    pub via: CatalogName,
    pub contracted: Edge,
}

pub fn k33_route_via_h(g: &Multigraph) -> Option<HRoute> {
    let k33 = named(CatalogName::K33).graph;
    let edges = g.distinct_edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let h = g.delete_edges(&[edges[i], edges[j]]).expect("distinct edges");
            let Some(via) = recognize_h1_h2(&h) else { continue };
            for &e in h.edges() {
                if is_isomorphic(&h.contract_edge(e).expect("edge present"), &k33).is_some() {
                    return Some(HRoute {
                        deleted: [edges[i], edges[j]],
                        via,
                        contracted: e,
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::complete;

    #[test]
    fn k6_contains_k5() {
        let model = has_minor(&complete(6), &complete(5)).unwrap();
        assert!(model.verify(&complete(6)));
    }

    #[test]
    fn identity_model_for_the_target_itself() {
        let g = named(CatalogName::G11_8_1).graph;
        let model = contains_11_8_1(&g).unwrap();
        assert!(model.steps.is_empty());
    }

    #[test]
    fn path_prunes_away() {
        let p = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]);
        let s = prune_and_smooth(&p);
        assert_eq!(s.core.order(), 0);
    }

    #[test]
    fn cycle_stops_at_a_digon() {
        let c = Multigraph::from_pairs(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 6)]);
        let s = prune_and_smooth(&c);
        assert_eq!((s.core.order(), s.core.size()), (2, 2));
        let all: usize = s.edge_paths.iter().map(Vec::len).sum();
        assert_eq!(all, 6);
    }

    #[test]
    fn hamiltonian_cycles_of_k33() {
        let k33 = named(CatalogName::K33).graph;
        assert_eq!(hamiltonian_cycles(&k33.adjacency_lists()).len(), 6);
        let cores = find_moebius_cores(&k33, 0).unwrap();
        assert_eq!(cores.len(), 6);
        assert!(cores.iter().all(|c| c.verify(&k33)));
    }

    #[test]
    fn recognizes_h_graphs() {
        assert_eq!(recognize_h1_h2(&named(CatalogName::H1).graph), Some(CatalogName::H1));
        assert_eq!(recognize_h1_h2(&named(CatalogName::H2).graph), Some(CatalogName::H2));
        assert_eq!(recognize_h1_h2(&named(CatalogName::K33).graph), None);
    }
}
