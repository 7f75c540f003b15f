use serde::{Deserialize, Serialize};

use crate::automorphism::automorphism_group;
use crate::graph::Multigraph;
use crate::perm::Permutation;
use crate::planarity::{self, RotationSystem};

/// An involution `phi` with fixed set `v1` and swapped sides `w2`, `w2_prime`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeOneCertificate {
    pub phi: Permutation,
    pub v1: Vec<usize>,
    pub w2: Vec<usize>,
    pub w2_prime: Vec<usize>,
    /// Embedding of the subgraph induced by `v1`, in the order of `v1`.
    pub v1_embedding: RotationSystem,
}

/// The first involutive automorphism of type 1, in group enumeration order.
pub fn find_type1(g: &Multigraph) -> Option<TypeOneCertificate> {
    if !g.is_simple() {
        return None;
    }
    let group = automorphism_group(g).ok()?;
    group
        .elements()
        .filter(|p| !p.is_identity() && p.compose(p).is_identity())
        .find_map(|phi| type1_for(g, &phi))
}

/// Tries to split the 2-cycles of `phi` into sides satisfying the type-1
/// conditions.
///
/// An edge between two different 2-cycles must not cross sides, which fixes
/// the relative side of the two cycles; the constraints are solved with a
/// parity union-find.
pub fn type1_for(g: &Multigraph, phi: &Permutation) -> Option<TypeOneCertificate> {
    let n = g.order();
    let v1 = phi.fixed_points();
    let cycles = phi.cycles();
    if cycles.iter().any(|c| c.len() != 2) {
        return None;
    }
    let v1_embedding = planarity::embed(&g.induced_subgraph(&v1))?;

    let mut orbit = vec![usize::MAX; n];
    let mut flip = vec![false; n];
    for (k, c) in cycles.iter().enumerate() {
        orbit[c[0]] = k;
        orbit[c[1]] = k;
        flip[c[1]] = true;
    }
    let mut uf = ParityUnionFind::new(cycles.len());
    for e in g.edges() {
        let (i, j) = (orbit[e.u], orbit[e.v]);
        if i == usize::MAX || j == usize::MAX || i == j {
            continue;
        }
        if !uf.union(i, j, flip[e.u] != flip[e.v]) {
            return None;
        }
    }
    let (mut w2, mut w2_prime) = (Vec::new(), Vec::new());
    for c in &cycles {
        let side = uf.parity(orbit[c[0]]);
        let (a, b) = if side { (c[1], c[0]) } else { (c[0], c[1]) };
        w2.push(a);
        w2_prime.push(b);
    }
    w2.sort_unstable();
    w2_prime.sort_unstable();
    Some(TypeOneCertificate {
        phi: phi.clone(),
        v1,
        w2,
        w2_prime,
        v1_embedding,
    })
}

/// Union-find over 2-cycles; `parity(k)` says whether cycle `k` is flipped
/// relative to its root.
struct ParityUnionFind {
    parent: Vec<usize>,
    rel: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            rel: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.rel[x] ^= p;
        (root, self.rel[x])
    }

    fn parity(&mut self, x: usize) -> bool {
        self.find(x).1
    }

    /// Records `side(a) xor side(b) == d`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, d: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == d;
        }
        self.parent[ra] = rb;
        self.rel[ra] = pa ^ pb ^ d;
        true
    }
}

pub fn verify_type1(g: &Multigraph, c: &TypeOneCertificate) -> bool {
    let n = g.order();
    let phi = &c.phi;
    if phi.len() != n || phi.is_identity() || !phi.compose(phi).is_identity() || !phi.is_automorphism_of(g) {
        return false;
    }
    if c.v1 != phi.fixed_points() || c.w2.len() != c.w2_prime.len() {
        return false;
    }
    let mut side = vec![0u8; n];
    for &v in &c.v1 {
        side[v] |= 1;
    }
    for &v in &c.w2 {
        side[v] |= 2;
    }
    for &v in &c.w2_prime {
        side[v] |= 4;
    }
    if side.iter().any(|&s| s != 1 && s != 2 && s != 4) {
        return false;
    }
    if c.w2.iter().any(|&p| side[phi.apply(p)] != 4) {
        return false;
    }
    let crossing_ok = g.edges().iter().all(|e| {
        let (a, b) = (side[e.u], side[e.v]);
        !((a == 2 && b == 4) || (a == 4 && b == 2)) || phi.apply(e.u) == e.v
    });
    crossing_ok && planarity::verify_embedding(&g.induced_subgraph(&c.v1), &c.v1_embedding)
}
