//! Slow, direct reference implementations used to cross-check the fast
//! algorithms. Nothing here relies on partition refinement or path addition.

use std::collections::{HashMap, VecDeque};

use crate::canon::{canonical_key, CanonicalKey};
use crate::graph::Multigraph;
use crate::minor::enumerate_one_step_minors;
use crate::perm::Permutation;
use crate::planarity::Kuratowski;

/// Every bijection `p` with `g.permute(p) == h`, by backtracking over
/// vertex assignments with a pairwise multiplicity check.
pub fn isomorphisms(g: &Multigraph, h: &Multigraph, limit: usize) -> Vec<Permutation> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return Vec::new();
    }
    let mg = g.adjacency_matrix();
    let mh = h.adjacency_matrix();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();

    fn go(
        k: usize,
        mg: &[Vec<usize>],
        mh: &[Vec<usize>],
        images: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Permutation>,
        limit: usize,
    ) {
        let n = images.len();
        if out.len() >= limit {
            return;
        }
        if k == n {
            out.push(Permutation::from_images(images.to_vec()).unwrap());
            return;
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            if (0..k).any(|x| mg[k][x] != mh[y][images[x]]) || mg[k][k] != mh[y][y] {
                continue;
            }
            images[k] = y;
            used[y] = true;
            go(k + 1, mg, mh, images, used, out, limit);
            used[y] = false;
        }
        images[k] = usize::MAX;
    }

    go(0, &mg, &mh, &mut images, &mut used, &mut out, limit);
    out
}

pub fn automorphisms(g: &Multigraph) -> Vec<Permutation> {
    isomorphisms(g, g, usize::MAX)
}

pub fn isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    !isomorphisms(g, h, 1).is_empty()
}

/// Whether the simplification of `g` contains a subdivision of K5 or K3,3.
pub fn has_kuratowski_subdivision(g: &Multigraph) -> bool {
    kuratowski_subdivision(g).is_some()
}

/// Searches branch vertices and internally disjoint paths directly.
pub fn kuratowski_subdivision(g: &Multigraph) -> Option<Kuratowski> {
    let s = g.simplify();
    let adj = s.adjacency_lists();
    let n = s.order();
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();

    let big4: Vec<usize> = (0..n).filter(|&v| deg[v] >= 4).collect();
    for five in subsets(&big4, 5) {
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((five[i], five[j]));
            }
        }
        if linkable(&adj, &five, &pairs) {
            return Some(Kuratowski::K5);
        }
    }

    let big3: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    for six in subsets(&big3, 6) {
        // Fix the side containing the first vertex to avoid mirrored splits.
        for rest in subsets(&six[1..], 2) {
            let left = [six[0], rest[0], rest[1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let mut pairs = Vec::new();
            for &a in &left {
                for &b in &right {
                    pairs.push((a, b));
                }
            }
            if linkable(&adj, &six, &pairs) {
                return Some(Kuratowski::K33);
            }
        }
    }
    None
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

/// Whether all `pairs` can be joined by paths that avoid each other and the
/// branch vertices except at their own ends.
fn linkable(adj: &[Vec<usize>], branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let n = adj.len();
    let mut blocked = vec![false; n];
    for &b in branch {
        blocked[b] = true;
    }
    let mut used_edge = vec![vec![false; n]; n];

    fn route(
        idx: usize,
        adj: &[Vec<usize>],
        pairs: &[(usize, usize)],
        blocked: &mut [bool],
        used_edge: &mut [Vec<bool>],
    ) -> bool {
        if idx == pairs.len() {
            return true;
        }
        let (a, b) = pairs[idx];
        let mut path = vec![a];
        extend(a, b, idx, adj, pairs, blocked, used_edge, &mut path)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        x: usize,
        b: usize,
        idx: usize,
        adj: &[Vec<usize>],
        pairs: &[(usize, usize)],
        blocked: &mut [bool],
        used_edge: &mut [Vec<bool>],
        path: &mut Vec<usize>,
    ) -> bool {
        for &y in &adj[x] {
            if y == b {
                if used_edge[x][y] {
                    continue;
                }
                used_edge[x][y] = true;
                used_edge[y][x] = true;
                if route(idx + 1, adj, pairs, blocked, used_edge) {
                    return true;
                }
                used_edge[x][y] = false;
                used_edge[y][x] = false;
                continue;
            }
            if blocked[y] {
                continue;
            }
            blocked[y] = true;
            path.push(y);
            if extend(y, b, idx, adj, pairs, blocked, used_edge, path) {
                return true;
            }
            path.pop();
            blocked[y] = false;
        }
        false
    }

    route(0, adj, pairs, &mut blocked, &mut used_edge)
}

/// All simple minors of `g` without isolated vertices, found by repeated
/// one-step minors. Loops, extra parallel copies and isolated vertices are
/// stripped after every step; `keep` prunes graphs that cannot lead anywhere
/// useful.
pub fn simple_minor_closure(
    g: &Multigraph,
    keep: impl Fn(&Multigraph) -> bool,
) -> HashMap<CanonicalKey, Multigraph> {
    let start = g.simplify().without_isolated();
    let mut seen = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(canonical_key(&start), start.clone());
    queue.push_back(start);
    while let Some(h) = queue.pop_front() {
        for (_, m) in enumerate_one_step_minors(&h) {
            let m = m.simplify().without_isolated();
            if !keep(&m) {
                continue;
            }
            let k = canonical_key(&m);
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(k) {
                e.insert(m.clone());
                queue.push_back(m);
            }
        }
    }
    seen
}

/// Minor containment for a simple target without isolated vertices.
pub fn has_simple_minor(g: &Multigraph, target: &Multigraph) -> bool {
    let (tn, tm) = (target.order(), target.size());
    let closure = simple_minor_closure(g, |m| m.order() >= tn && m.size() >= tm);
    closure.contains_key(&canonical_key(target))
}

/// Every labeled simple graph on `n` vertices, as edge-subset masks over the
/// pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn labeled_graphs(n: usize, edges: usize) -> impl Iterator<Item = Multigraph> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    let m = pairs.len();
    assert!(m < 64, "labeled enumeration limited to 11 vertices");
    (0u64..1 << m)
        .filter(move |mask| mask.count_ones() as usize == edges)
        .map(move |mask| {
            let chosen: Vec<(usize, usize)> = (0..m).filter(|&b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
            Multigraph::from_pairs(n, &chosen)
        })
}
