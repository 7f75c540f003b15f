//! Canonical labeling by individualization and refinement.
//!
//! A search node is an ordered partition of the vertices. Refinement splits
//! cells by edge-multiplicity counts into other cells until the partition is
//! equitable; a node whose partition is discrete is a leaf and determines a
//! relabeling. The canonical form is the lexicographically smallest relabeled
//! adjacency matrix over all leaves. Automorphisms discovered between leaves
//! prune sibling subtrees that lie in the same orbit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Multigraph;
use crate::perm::Permutation;

/// Dense multiplicity matrix, loops on the diagonal.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub(crate) n: usize,
    m: Vec<u8>,
}

impl Dense {
    pub(crate) fn new(g: &Multigraph) -> Self {
        let n = g.order();
        let mut m = vec![0u8; n * n];
        for e in g.edges() {
            let slot = &mut m[e.u * n + e.v];
            *slot = slot.checked_add(1).expect("edge multiplicity above 255");
            if !e.is_loop() {
                m[e.v * n + e.u] += 1;
            }
        }
        Dense { n, m }
    }

    #[inline]
    pub(crate) fn get(&self, a: usize, b: usize) -> u8 {
        self.m[a * self.n + b]
    }

    pub(crate) fn is_automorphism(&self, images: &[usize]) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.get(a, b) == self.get(images[a], images[b])))
    }
}

pub(crate) type Cells = Vec<Vec<usize>>;

/// Vertices grouped by loop count, refined to an equitable partition.
pub(crate) fn initial_partition(d: &Dense, trace: &mut Vec<u32>) -> Cells {
    let mut keyed: Vec<(u8, usize)> = (0..d.n).map(|v| (d.get(v, v), v)).collect();
    keyed.sort_unstable();
    let mut cells: Cells = Vec::new();
    let mut last = None;
    for (k, v) in keyed {
        if last != Some(k) {
            cells.push(Vec::new());
            last = Some(k);
        }
        cells.last_mut().unwrap().push(v);
    }
    refine(d, &mut cells, trace);
    cells
}

/// Refines `cells` to the coarsest equitable partition below it.
///
/// Split pieces are ordered by their count against the splitter, so the
/// result depends only on the structure, never on vertex names. The split
/// record appended to `trace` has the same property.
pub(crate) fn refine(d: &Dense, cells: &mut Cells, trace: &mut Vec<u32>) {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w].clone();
            let mut out: Cells = Vec::with_capacity(cells.len() + 1);
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    out.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&x| (splitter.iter().map(|&y| u32::from(d.get(x, y))).sum(), x))
                    .collect();
                keyed.sort_unstable();
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    out.push(cell);
                    continue;
                }
                changed = true;
                let mut start = 0;
                while start < keyed.len() {
                    let k = keyed[start].0;
                    let end = start + keyed[start..].iter().take_while(|p| p.0 == k).count();
                    trace.extend([w as u32, k, (end - start) as u32]);
                    out.push(keyed[start..end].iter().map(|p| p.1).collect());
                    start = end;
                }
            }
            *cells = out;
            w += 1;
        }
        if !changed {
            return;
        }
    }
}

/// Splits `v` out of cell `t`, placing the singleton first.
pub(crate) fn individualize(cells: &mut Cells, t: usize, v: usize) {
    cells[t].retain(|&x| x != v);
    cells.insert(t, vec![v]);
}

pub(crate) fn first_nontrivial(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

/// Byte string identifying an isomorphism class; equal keys exactly for
/// isomorphic multigraphs (loops and multiplicities included).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalKey)
    }

    /// Rebuilds the canonical representative encoded by the key.
    pub fn to_graph(&self) -> Multigraph {
        let n = u16::from_le_bytes([self.0[0], self.0[1]]) as usize;
        let mut edges = Vec::new();
        let mut idx = 2;
        for i in 0..n {
            for j in i..n {
                for _ in 0..self.0[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Multigraph::from_pairs(n, &edges)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl From<CanonicalKey> for String {
    fn from(k: CanonicalKey) -> String {
        k.to_hex()
    }
}

impl TryFrom<String> for CanonicalKey {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        CanonicalKey::from_hex(&s).ok_or_else(|| format!("invalid canonical key {s:?}"))
    }
}

/// Result of a canonical labeling search.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub key: CanonicalKey,
    /// Maps each vertex to its position in the canonical form.
    pub labeling: Permutation,
    /// Automorphisms met during the search. They are genuine, but need not
    /// generate the whole group.
    pub automorphisms: Vec<Permutation>,
}

struct Leaf {
    cert: Vec<u8>,
    /// Vertex at each canonical position.
    order: Vec<usize>,
}

struct Search<'a> {
    d: &'a Dense,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Permutation>,
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u8> {
        let n = self.d.n;
        let mut cert = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                cert.push(self.d.get(order[i], order[j]));
            }
        }
        cert
    }

    fn record(&mut self, from: &[usize], to: &[usize]) {
        let mut images = vec![0; from.len()];
        for (a, b) in from.iter().zip(to) {
            images[*a] = *b;
        }
        let p = Permutation::from_images(images).expect("leaf orders are bijections");
        if !p.is_identity() && !self.autos.contains(&p) {
            self.autos.push(p);
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = self.certificate(&order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                cert: cert.clone(),
                order: order.clone(),
            });
            self.best = Some(Leaf { cert, order });
            return;
        };
        if cert == first.cert {
            let from = first.order.clone();
            self.record(&from, &order);
            return;
        }
        let best = self.best.as_ref().unwrap();
        if cert == best.cert {
            let from = best.order.clone();
            self.record(&from, &order);
        } else if cert < best.cert {
            self.best = Some(Leaf { cert, order });
        }
    }

    fn visit(&mut self, mut cells: Cells, path: &mut Vec<usize>) {
        let mut trace = Vec::new();
        refine(self.d, &mut cells, &mut trace);
        let Some(t) = first_nontrivial(&cells) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() && self.pruned(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            individualize(&mut child, t, v);
            path.push(v);
            self.visit(child, path);
            path.pop();
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix the current path pointwise.
    fn pruned(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.d.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if path.iter().any(|&p| a.apply(p) != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (r1, r2) = (find(&mut parent, x), find(&mut parent, a.apply(x)));
                if r1 != r2 {
                    parent[r1] = r2;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

pub fn canonical_form(g: &Multigraph) -> Canonical {
    let d = Dense::new(g);
    let n = d.n;
    assert!(n <= u16::MAX as usize, "graph too large for a canonical key");
    let mut trace = Vec::new();
    let cells = initial_partition(&d, &mut trace);
    let mut search = Search {
        d: &d,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    if n == 0 {
        return Canonical {
            key: CanonicalKey(vec![0, 0]),
            labeling: Permutation::identity(0),
            automorphisms: Vec::new(),
        };
    }
    search.visit(cells, &mut Vec::new());
    let best = search.best.take().expect("search reaches a leaf");
    let mut lab = vec![0; n];
    for (pos, &v) in best.order.iter().enumerate() {
        lab[v] = pos;
    }
    let mut key = Vec::with_capacity(2 + best.cert.len());
    key.extend_from_slice(&(n as u16).to_le_bytes());
    key.extend_from_slice(&best.cert);
    Canonical {
        key: CanonicalKey(key),
        labeling: Permutation::from_images(lab).unwrap(),
        automorphisms: search.autos,
    }
}

pub fn canonical_key(g: &Multigraph) -> CanonicalKey {
    canonical_form(g).key
}

/// The graph relabeled into canonical position order.
pub fn canonical_graph(g: &Multigraph) -> Multigraph {
    g.permute(&canonical_form(g).labeling)
}

/// An isomorphism `w` with `g.permute(w) == h`, when one exists.
pub fn is_isomorphic(g: &Multigraph, h: &Multigraph) -> Option<Permutation> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    if cg.key != ch.key {
        return None;
    }
    Some(ch.labeling.inverse().compose(&cg.labeling))
}
