//! Undirected multigraphs with loops, and the minor operations on them.
//!
//! Vertices are `0..order`. The edge list is kept sorted, so two graphs with
//! the same vertex count and the same edge multiset compare equal no matter
//! how they were built. Vertex labels are carried along for display only and
//! take no part in equality.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An unordered vertex pair with `u <= v`; `u == v` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`. For a loop this is `x` itself.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn map(&self, perm: &Permutation) -> Edge {
        Edge::new(perm.apply(self.u), perm.apply(self.v))
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl From<(usize, usize)> for Edge {
    fn from(p: (usize, usize)) -> Self {
        Edge::new(p.0, p.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Multigraph {
    order: usize,
    edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Multigraph {}

impl Hash for Multigraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.edges.hash(state);
    }
}

impl Multigraph {
    pub fn new<I, E>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            let e = e.into();
            if e.v >= order {
                return Err(Error::VertexOutOfRange {
                    vertex: e.v,
                    order,
                });
            }
            list.push(e);
        }
        list.sort();
        Ok(Multigraph {
            order,
            edges: list,
            labels: None,
        })
    }

    /// Builds a graph from a trusted edge list.
    ///
    /// Panics when an endpoint is out of range.
    pub fn from_pairs(order: usize, pairs: &[(usize, usize)]) -> Self {
        Self::new(order, pairs.iter().copied()).expect("edge endpoint out of range")
    }

    pub fn empty(order: usize) -> Self {
        Multigraph {
            order,
            edges: Vec::new(),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Vertex index of a catalog label.
    pub fn vertex_named(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Distinct vertex pairs, in sorted order.
    pub fn distinct_edges(&self) -> Vec<Edge> {
        let mut out = self.edges.clone();
        out.dedup();
        out
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        let e = Edge::new(a, b);
        let start = self.edges.partition_point(|x| *x < e);
        self.edges[start..].iter().take_while(|x| **x == e).count()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&Edge::new(a, b)).is_ok()
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.multiplicity(v, v)
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    /// Degrees in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Distinct neighbours of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.contains(v) && !e.is_loop())
            .map(|e| e.other(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for e in &self.edges {
            if !e.is_loop() {
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    /// Loops removed and parallel edges merged.
    pub fn simplify(&self) -> Multigraph {
        let mut edges: Vec<Edge> = self.edges.iter().copied().filter(|e| !e.is_loop()).collect();
        edges.dedup();
        Multigraph {
            order: self.order,
            edges,
            labels: self.labels.clone(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    fn position(&self, e: Edge) -> Result<usize> {
        self.edges.binary_search(&e).map_err(|_| Error::EdgeNotFound(e))
    }

    /// Removes one copy of `e`.
    pub fn delete_edge(&self, e: impl Into<Edge>) -> Result<Multigraph> {
        let e = e.into();
        let idx = self.position(e)?;
        let mut g = self.clone();
        g.edges.remove(idx);
        Ok(g)
    }

    /// Removes every edge in `set` (one copy per listed occurrence).
    pub fn delete_edges(&self, set: &[Edge]) -> Result<Multigraph> {
        let mut g = self.clone();
        for &e in set {
            let idx = g.position(e)?;
            g.edges.remove(idx);
        }
        Ok(g)
    }

    pub fn add_edge(&self, e: impl Into<Edge>) -> Result<Multigraph> {
        let e = e.into();
        self.check_vertex(e.v)?;
        let mut g = self.clone();
        let idx = g.edges.partition_point(|x| *x <= e);
        g.edges.insert(idx, e);
        Ok(g)
    }

    /// Contracts one copy of `e`. The merged vertex keeps the smaller index
    /// and the larger endpoint is removed with survivors renumbered in order.
    /// Remaining copies of `e` become loops; other parallel edges are kept.
    pub fn contract_edge(&self, e: impl Into<Edge>) -> Result<Multigraph> {
        let e = e.into();
        if e.is_loop() {
            return Err(Error::ContractLoop(e.u));
        }
        let idx = self.position(e)?;
        let (keep, gone) = (e.u, e.v);
        let shift = |x: usize| if x > gone { x - 1 } else { x };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, f) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            let a = if f.u == gone { keep } else { f.u };
            let b = if f.v == gone { keep } else { f.v };
            edges.push(Edge::new(shift(a), shift(b)));
        }
        edges.sort();
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.remove(gone);
            l
        });
        Ok(Multigraph {
            order: self.order - 1,
            edges,
            labels,
        })
    }

    /// Removes `v` with all incident edges; survivors are renumbered in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Multigraph> {
        self.check_vertex(v)?;
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| !e.contains(v))
            .map(|e| Edge::new(shift(e.u), shift(e.v)))
            .collect();
        edges.sort();
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.remove(v);
            l
        });
        Ok(Multigraph {
            order: self.order - 1,
            edges,
            labels,
        })
    }

    /// Removes a set of vertices; returns the graph and, for each new vertex,
    /// its index in `self`.
    pub fn delete_vertices(&self, set: &[usize]) -> Result<(Multigraph, Vec<usize>)> {
        for &v in set {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.order).filter(|v| !set.contains(v)).collect();
        Ok((self.induced_subgraph(&keep), keep))
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| Edge::new(index[e.u], index[e.v]))
            .collect();
        edges.sort();
        let labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        Multigraph {
            order: vertices.len(),
            edges,
            labels,
        }
    }

    /// The graph `σ·G`: vertex `x` becomes `σ(x)`.
    pub fn permute(&self, perm: &Permutation) -> Multigraph {
        assert_eq!(perm.len(), self.order, "permutation size mismatch");
        let mut edges: Vec<Edge> = self.edges.iter().map(|e| e.map(perm)).collect();
        edges.sort();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); l.len()];
            for (x, name) in l.iter().enumerate() {
                out[perm.apply(x)] = name.clone();
            }
            out
        });
        Multigraph {
            order: self.order,
            edges,
            labels,
        }
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let d = self.degrees();
        (0..self.order).filter(|&v| d[v] == 0).collect()
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> Multigraph {
        let d = self.degrees();
        let keep: Vec<usize> = (0..self.order).filter(|&v| d[v] > 0).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.order];
        for v in 0..self.order {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    /// One component; the empty graph and a single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `v` and `w` have the same neighbours outside `{v, w}`.
    pub fn twin_pair(&self, v: usize, w: usize) -> Result<bool> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(Error::InvalidArgument("twin pair needs two distinct vertices".into()));
        }
        if !self.is_simple() {
            return Err(Error::NotSimple("twin_pair"));
        }
        let nv: BTreeSet<usize> = self.neighbors(v).into_iter().filter(|&x| x != w).collect();
        let nw: BTreeSet<usize> = self.neighbors(w).into_iter().filter(|&x| x != v).collect();
        Ok(nv == nw)
    }

    /// Dense multiplicity matrix, loops on the diagonal.
    pub fn adjacency_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.order]; self.order];
        for e in &self.edges {
            m[e.u][e.v] += 1;
            if !e.is_loop() {
                m[e.v][e.u] += 1;
            }
        }
        m
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} vertices;", self.order)?;
        for e in &self.edges {
            write!(f, " {}-{}", self.label(e.u), self.label(e.v))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn construction_canonicalizes_edge_order() {
        let a = Multigraph::from_pairs(3, &[(2, 1), (0, 1), (1, 0)]);
        let b = Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(a, b);
        assert_eq!(a.size(), 3);
        assert_eq!(a.multiplicity(1, 0), 2);
        assert!(Multigraph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn delete_edge_of_triangle_gives_path() {
        let p = triangle().delete_edge((0, 2)).unwrap();
        assert_eq!(p, Multigraph::from_pairs(3, &[(0, 1), (1, 2)]));
        assert_eq!(
            triangle().delete_edge((0, 0)).unwrap_err(),
            Error::EdgeNotFound(Edge::new(0, 0))
        );
    }

    #[test]
    fn contraction_keeps_parallel_edges_and_makes_loops() {
        let path = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.contract_edge((0, 1)).unwrap(), Multigraph::from_pairs(2, &[(0, 1)]));

        let double = triangle().contract_edge((0, 1)).unwrap();
        assert_eq!(double, Multigraph::from_pairs(2, &[(0, 1), (0, 1)]));

        let looped = double.contract_edge((0, 1)).unwrap();
        assert_eq!(looped, Multigraph::from_pairs(1, &[(0, 0)]));
        assert_eq!(looped.contract_edge((0, 0)).unwrap_err(), Error::ContractLoop(0));
    }

    #[test]
    fn delete_vertex_renumbers_in_order() {
        let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.delete_vertex(1).unwrap(), triangle());
        assert!(matches!(
            k4.delete_vertex(4),
            Err(Error::VertexOutOfRange { vertex: 4, order: 4 })
        ));
        let star = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 3)]);
        assert_eq!(
            star.delete_vertex(3).unwrap(),
            Multigraph::from_pairs(3, &[(0, 1), (1, 2)])
        );
    }

    #[test]
    fn degree_sequence_counts_loops_twice() {
        assert_eq!(Multigraph::from_pairs(1, &[(0, 0)]).degree_sequence(), vec![2]);
        let g = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 1)]);
        assert_eq!(g.degree_sequence(), vec![3, 3, 1, 1]);
    }

    #[test]
    fn connectivity() {
        let c6 = Multigraph::from_pairs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        assert!(c6.is_connected());
        let two = Multigraph::from_pairs(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(Multigraph::empty(1).is_connected());
        assert!(Multigraph::empty(0).is_connected());
    }

    #[test]
    fn twin_pairs() {
        let path = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]);
        assert!(path.twin_pair(0, 2).unwrap());
        let c6 = Multigraph::from_pairs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        assert!(!c6.twin_pair(0, 1).unwrap());
        let double = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]);
        assert_eq!(double.twin_pair(0, 1).unwrap_err(), Error::NotSimple("twin_pair"));
    }

    #[test]
    fn labels_follow_vertices() {
        let g = triangle()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let h = g.delete_vertex(0).unwrap();
        assert_eq!(h.labels().unwrap(), ["b", "c"]);
        let k = g.contract_edge((1, 2)).unwrap();
        assert_eq!(k.labels().unwrap(), ["a", "b"]);
        assert_eq!(g.vertex_named("c"), Some(2));
    }
}
