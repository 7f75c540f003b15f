//! Planarity testing by path addition (Demoucron, Malgrange and Pertuiset)
//! on the biconnected blocks of the simplification.
//!
//! A planar verdict carries a rotation system that [`verify_embedding`]
//! checks by face tracing and Euler's formula. A non-planar verdict carries a
//! Kuratowski subgraph obtained by deleting edges while non-planarity
//! persists; [`verify_kuratowski`] checks it by smoothing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};

/// Cyclic neighbour order around each vertex of the simplification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kuratowski {
    K5,
    K33,
}

/// Edge subset of the input forming a subdivision of `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: Kuratowski,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanarityWitness {
    Embedding(RotationSystem),
    Obstruction(KuratowskiWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub witness: PlanarityWitness,
}

/// Planarity with a witness of either kind.
pub fn is_planar(g: &Multigraph) -> PlanarityVerdict {
    match embed(g) {
        Some(rot) => PlanarityVerdict {
            planar: true,
            witness: PlanarityWitness::Embedding(rot),
        },
        None => PlanarityVerdict {
            planar: false,
            witness: PlanarityWitness::Obstruction(
                kuratowski_witness(g).expect("non-planar graphs have a Kuratowski subgraph"),
            ),
        },
    }
}

/// Planarity without witnesses.
pub fn planar(g: &Multigraph) -> bool {
    let s = g.simplify();
    let n = s.order() - s.isolated_vertices().len();
    if n >= 3 && s.size() > 3 * n - 6 {
        return false;
    }
    embed_simple(&s).is_some()
}

/// A planar rotation system for the simplification of `g`, if one exists.
pub fn embed(g: &Multigraph) -> Option<RotationSystem> {
    embed_simple(&g.simplify())
}

/// Planar when `size - order <= 2` for a connected graph; `None` otherwise.
pub fn sparse_planarity_shortcut(g: &Multigraph) -> Result<Option<bool>> {
    if !g.is_connected() {
        return Err(Error::Disconnected("the edge-count planarity shortcut"));
    }
    Ok((g.size() as isize - g.order() as isize <= 2).then_some(true))
}

/// A subdivision of K5 or K3,3 inside `g`, using original edges.
pub fn kuratowski_witness(g: &Multigraph) -> Option<KuratowskiWitness> {
    let s = g.simplify();
    if planar(&s) {
        return None;
    }
    let mut keep: Vec<Edge> = s.edges().to_vec();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        let h = Multigraph::new(g.order(), trial.iter().copied()).expect("subset of valid edges");
        if planar(&h) {
            i += 1;
        } else {
            keep = trial;
        }
    }
    let kind = smoothed_kind(g.order(), &keep)?;
    Some(KuratowskiWitness { kind, edges: keep })
}

/// Checks that the witness edges lie in `g` and smooth to its stated kind.
pub fn verify_kuratowski(g: &Multigraph, w: &KuratowskiWitness) -> bool {
    let mut sorted = w.edges.clone();
    sorted.sort();
    if sorted.windows(2).any(|p| p[0] == p[1]) || sorted.iter().any(|e| e.is_loop() || !g.has_edge(e.u, e.v)) {
        return false;
    }
    smoothed_kind(g.order(), &sorted) == Some(w.kind)
}

fn smoothed_kind(order: usize, edges: &[Edge]) -> Option<Kuratowski> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); order];
    for e in edges {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    while let Some(v) = (0..order).find(|&v| adj[v].len() == 2 && adj[v][0] != adj[v][1]) {
        let (a, b) = (adj[v][0], adj[v][1]);
        adj[v].clear();
        adj[a].retain(|&x| x != v);
        adj[b].retain(|&x| x != v);
        adj[a].push(b);
        adj[b].push(a);
    }
    let live: Vec<usize> = (0..order).filter(|&v| !adj[v].is_empty()).collect();
    for &v in &live {
        let mut l = adj[v].clone();
        l.sort_unstable();
        if l.windows(2).any(|p| p[0] == p[1]) || l.contains(&v) {
            return None;
        }
    }
    let degrees: Vec<usize> = live.iter().map(|&v| adj[v].len()).collect();
    if live.len() == 5 && degrees.iter().all(|&d| d == 4) {
        return Some(Kuratowski::K5);
    }
    if live.len() == 6 && degrees.iter().all(|&d| d == 3) {
        let mut side = vec![usize::MAX; order];
        let mut stack = vec![live[0]];
        side[live[0]] = 0;
        while let Some(v) = stack.pop() {
            for &x in &adj[v] {
                if side[x] == usize::MAX {
                    side[x] = 1 - side[v];
                    stack.push(x);
                } else if side[x] == side[v] {
                    return None;
                }
            }
        }
        if live.iter().all(|&v| side[v] != usize::MAX) {
            return Some(Kuratowski::K33);
        }
    }
    None
}

/// Traces faces of the rotation system and checks Euler's formula on every
/// component with an edge.
pub fn verify_embedding(g: &Multigraph, rot: &RotationSystem) -> bool {
    let s = g.simplify();
    let n = s.order();
    if rot.rotations.len() != n {
        return false;
    }
    let adj = s.adjacency_lists();
    for (r, a) in rot.rotations.iter().zip(&adj) {
        let mut r = r.clone();
        r.sort_unstable();
        if r != *a {
            return false;
        }
    }
    let pos = |v: usize, w: usize| rot.rotations[v].iter().position(|&x| x == w).unwrap();
    let mut seen: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rot.rotations[v].len()]).collect();
    let comps = s.components();
    let mut comp_of = vec![0; n];
    for (c, vs) in comps.iter().enumerate() {
        for &v in vs {
            comp_of[v] = c;
        }
    }
    let mut faces = vec![0isize; comps.len()];
    for a in 0..n {
        for i in 0..rot.rotations[a].len() {
            if seen[a][i] {
                continue;
            }
            faces[comp_of[a]] += 1;
            let (mut x, mut j) = (a, i);
            while !seen[x][j] {
                seen[x][j] = true;
                let y = rot.rotations[x][j];
                let k = pos(y, x);
                let next = (k + 1) % rot.rotations[y].len();
                x = y;
                j = next;
            }
        }
    }
    comps.iter().enumerate().all(|(c, vs)| {
        let e: usize = vs.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        e == 0 || vs.len() as isize - e as isize + faces[c] == 2
    })
}

fn embed_simple(s: &Multigraph) -> Option<RotationSystem> {
    let n = s.order();
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(s) {
        let mut verts: Vec<usize> = block.iter().flat_map(|e| [e.u, e.v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local_rot = if block.len() == 1 {
            vec![vec![1], vec![0]]
        } else {
            let mut index = vec![usize::MAX; n];
            for (i, &v) in verts.iter().enumerate() {
                index[v] = i;
            }
            let local: Vec<(usize, usize)> = block.iter().map(|e| (index[e.u], index[e.v])).collect();
            embed_biconnected(verts.len(), &local)?
        };
        for (i, r) in local_rot.into_iter().enumerate() {
            rotations[verts[i]].extend(r.into_iter().map(|x| verts[x]));
        }
    }
    Some(RotationSystem { rotations })
}

/// Edge sets of the biconnected components of a simple graph.
fn blocks(s: &Multigraph) -> Vec<Vec<Edge>> {
    let n = s.order();
    let mut search = BlockSearch {
        adj: s.adjacency_lists(),
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if search.disc[v] == usize::MAX && !search.adj[v].is_empty() {
            search.dfs(v, usize::MAX);
        }
    }
    search.out
}

struct BlockSearch {
    adj: Vec<Vec<usize>>,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    out: Vec<Vec<Edge>>,
}

impl BlockSearch {
    fn dfs(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.disc[w] == usize::MAX {
                self.stack.push(Edge::new(v, w));
                self.dfs(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == Edge::new(v, w) {
                            break;
                        }
                    }
                    self.out.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.stack.push(Edge::new(v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

struct Fragment {
    contacts: Vec<usize>,
    /// Path between two distinct contacts through the fragment.
    path: Vec<usize>,
}

/// Path addition on a biconnected simple graph with at least three vertices.
/// Returns local rotations, or `None` when non-planar.
fn embed_biconnected(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if edges.len() > 3 * n - 6 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    let mut in_h = vec![false; n];
    let mut h_edge = vec![vec![false; n]; n];
    let cycle = find_cycle(&adj)?;
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % cycle.len()];
        in_h[v] = true;
        h_edge[v][w] = true;
        h_edge[w][v] = true;
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];

    loop {
        let frags = fragments(&adj, &in_h, &h_edge);
        if frags.is_empty() {
            break;
        }
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, f) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| f.contacts.iter().all(|c| faces[k].contains(c)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, k) = chosen.expect("at least one fragment");
        let path = &frags[fi].path;
        let face = faces.swap_remove(k);
        let (f1, f2) = split_face(&face, path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edge[w[0]][w[1]] = true;
            h_edge[w[1]][w[0]] = true;
        }
        for &v in path {
            in_h[v] = true;
        }
    }

    // For a face traversing w -> v -> x, the rotation at v sends w to x.
    let mut next = vec![vec![usize::MAX; n]; n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (w, v, x) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            next[v][w] = x;
        }
    }
    let mut rot = Vec::with_capacity(n);
    for v in 0..n {
        let start = adj[v][0];
        let mut order = vec![start];
        let mut w = next[v][start];
        while w != start {
            order.push(w);
            w = next[v][w];
        }
        rot.push(order);
    }
    Some(rot)
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((v, i)) = stack.pop() {
        if i >= adj[v].len() {
            continue;
        }
        stack.push((v, i + 1));
        let w = adj[v][i];
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return Some(cycle);
        }
    }
    None
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edge: &[Vec<bool>]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edge[u][v] {
                out.push(Fragment {
                    contacts: vec![u, v],
                    path: vec![u, v],
                });
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = s;
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        let mut contacts = Vec::new();
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    contacts.push(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        contacts.sort_unstable();
        contacts.dedup();
        let (c1, c2) = (contacts[0], contacts[1]);
        let mut prev = vec![usize::MAX; n];
        let mut queue: Vec<usize> = members.iter().copied().filter(|&x| adj[x].contains(&c1)).collect();
        for &x in &queue {
            prev[x] = c1;
        }
        let mut qi = 0;
        let end = loop {
            let x = queue[qi];
            qi += 1;
            if adj[x].contains(&c2) {
                break x;
            }
            for &y in &adj[x] {
                if !in_h[y] && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push(y);
                }
            }
        };
        let mut path = vec![c2, end];
        let mut x = end;
        while prev[x] != c1 {
            x = prev[x];
            path.push(x);
        }
        path.push(c1);
        path.reverse();
        out.push(Fragment { contacts, path });
    }
    out
}

/// Splits an oriented face along a path joining two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let i = face.iter().position(|&x| x == path[0]).unwrap();
    let j = face.iter().position(|&x| x == *path.last().unwrap()).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut x = i;
    loop {
        f1.push(face[x]);
        if x == j {
            break;
        }
        x = (x + 1) % k;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    let mut x = j;
    loop {
        f2.push(face[x]);
        if x == i {
            break;
        }
        x = (x + 1) % k;
    }
    f2.extend(inner.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Multigraph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        Multigraph::from_pairs(n, &e)
    }

    fn k33() -> Multigraph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Multigraph::from_pairs(6, &e)
    }

    #[test]
    fn small_cases() {
        let k4 = is_planar(&complete(4));
        assert!(k4.planar);
        let PlanarityWitness::Embedding(rot) = &k4.witness else { panic!() };
        assert!(verify_embedding(&complete(4), rot));

        let v = is_planar(&k33());
        assert!(!v.planar);
        let PlanarityWitness::Obstruction(w) = &v.witness else { panic!() };
        assert_eq!(w.kind, Kuratowski::K33);
        assert!(verify_kuratowski(&k33(), w));

        let w5 = kuratowski_witness(&complete(5)).unwrap();
        assert_eq!((w5.kind, w5.edges.len()), (Kuratowski::K5, 10));
    }

    #[test]
    fn multiplicities_do_not_matter() {
        let g = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]);
        assert!(planar(&g));
        let g = k33().add_edge((0, 0)).unwrap().add_edge((0, 3)).unwrap();
        assert!(!planar(&g));
    }

    #[test]
    fn cut_vertices_and_bridges() {
        let g = Multigraph::from_pairs(
            8,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6), (0, 3)],
        );
        let rot = embed(&g).unwrap();
        assert!(verify_embedding(&g, &rot));
    }

    #[test]
    fn wrong_rotation_is_rejected() {
        let g = complete(4);
        let rot = RotationSystem {
            rotations: vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
        };
        assert!(!verify_embedding(&g, &rot));
    }

    #[test]
    fn shortcut_requires_connectivity() {
        assert!(sparse_planarity_shortcut(&Multigraph::empty(2)).is_err());
        assert_eq!(sparse_planarity_shortcut(&k33()).unwrap(), None);
        let tree = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]);
        assert_eq!(sparse_planarity_shortcut(&tree).unwrap(), Some(true));
    }
}
