//! Named graphs: Kuratowski graphs, Möbius ladders, the two one-contraction
//! preimages of K3,3, and the six minor-minimal intrinsically chiral graphs
//! of size at most twelve.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CatalogName {
    K5,
    K33,
    Moebius(usize),
    H1,
    H2,
    G12_7_1,
    G12_7_2,
    G12_8_1,
    G12_8_2,
    G12_9_1,
    G11_8_1,
}

impl CatalogName {
    /// The six minor-minimal intrinsically chiral graphs, smallest first.
    pub const MMIC: [CatalogName; 6] = [
        CatalogName::G11_8_1,
        CatalogName::G12_7_1,
        CatalogName::G12_7_2,
        CatalogName::G12_8_1,
        CatalogName::G12_8_2,
        CatalogName::G12_9_1,
    ];

    /// The five of size twelve.
    pub const MMIC_12: [CatalogName; 5] = [
        CatalogName::G12_7_1,
        CatalogName::G12_7_2,
        CatalogName::G12_8_1,
        CatalogName::G12_8_2,
        CatalogName::G12_9_1,
    ];
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::K5 => write!(f, "K5"),
            CatalogName::K33 => write!(f, "K33"),
            CatalogName::Moebius(n) => write!(f, "M{n}"),
            CatalogName::H1 => write!(f, "H1"),
            CatalogName::H2 => write!(f, "H2"),
            CatalogName::G12_7_1 => write!(f, "12^7_1"),
            CatalogName::G12_7_2 => write!(f, "12^7_2"),
            CatalogName::G12_8_1 => write!(f, "12^8_1"),
            CatalogName::G12_8_2 => write!(f, "12^8_2"),
            CatalogName::G12_9_1 => write!(f, "12^9_1"),
            CatalogName::G11_8_1 => write!(f, "11^8_1"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    /// Accepts `k5`, `k33`, `m<n>`, `h1`, `h2` and `<size>_<order>_<index>`
    /// (or the `^` form used by `Display`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.to_ascii_lowercase().replace(['^', ','], "_");
        let name = match t.as_str() {
            "k5" => CatalogName::K5,
            "k33" | "k3_3" => CatalogName::K33,
            "h1" => CatalogName::H1,
            "h2" => CatalogName::H2,
            "12_7_1" => CatalogName::G12_7_1,
            "12_7_2" => CatalogName::G12_7_2,
            "12_8_1" => CatalogName::G12_8_1,
            "12_8_2" => CatalogName::G12_8_2,
            "12_9_1" => CatalogName::G12_9_1,
            "11_8_1" => CatalogName::G11_8_1,
            _ => match t.strip_prefix('m').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if n >= 2 => CatalogName::Moebius(n),
                _ => return Err(Error::InvalidArgument(format!("unknown catalog graph {s:?}"))),
            },
        };
        Ok(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGraph {
    pub name: CatalogName,
    pub graph: Multigraph,
    pub notes: String,
}

fn labeled(names: &[&str], edges: &[(&str, &str)]) -> Multigraph {
    let idx = |s: &str| names.iter().position(|n| *n == s).unwrap_or_else(|| panic!("unknown vertex {s}"));
    let pairs: Vec<(usize, usize)> = edges.iter().map(|(a, b)| (idx(a), idx(b))).collect();
    Multigraph::from_pairs(names.len(), &pairs)
        .with_labels(names.iter().map(|s| s.to_string()).collect())
        .expect("one label per vertex")
}

pub fn complete(n: usize) -> Multigraph {
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            e.push((a, b));
        }
    }
    Multigraph::from_pairs(n, &e)
}

pub fn complete_bipartite(p: usize, q: usize) -> Multigraph {
    let mut e = Vec::new();
    for a in 0..p {
        for b in p..p + q {
            e.push((a, b));
        }
    }
    Multigraph::from_pairs(p + q, &e)
}

/// Möbius ladder: loop `0, 1, …, 2n-1` and rungs `i ~ i + n`.
pub fn moebius(n: usize) -> Multigraph {
    let m = 2 * n;
    let mut e: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    e.extend((0..n).map(|i| (i, i + n)));
    Multigraph::from_pairs(m, &e)
}

const K33_NAMES: [&str; 6] = ["x1", "x2", "x3", "y1", "y2", "y3"];

fn k33_edges() -> Vec<(&'static str, &'static str)> {
    let mut e = Vec::new();
    for x in &K33_NAMES[..3] {
        for y in &K33_NAMES[3..] {
            e.push((*x, *y));
        }
    }
    e
}

/// H2 in the numbering `v1..v7`: parts `{v1, v2, v3}` and `{v4, v5, v6}`,
/// with `v7` subdividing `v1 v4`.
pub(crate) const H2_NAMES: [&str; 7] = ["v1", "v2", "v3", "v4", "v5", "v6", "v7"];

pub(crate) fn h2_edges() -> Vec<(&'static str, &'static str)> {
    let mut e = Vec::new();
    for x in ["v1", "v2", "v3"] {
        for y in ["v4", "v5", "v6"] {
            if (x, y) != ("v1", "v4") {
                e.push((x, y));
            }
        }
    }
    e.push(("v1", "v7"));
    e.push(("v4", "v7"));
    e
}

/// The six-cycle `a1 a2 a3 b1 b2 b3` shared by the size-twelve graphs.
const LADDER_LOOP: [(&str, &str); 6] = [
    ("a1", "a2"),
    ("a2", "a3"),
    ("a3", "b1"),
    ("b1", "b2"),
    ("b2", "b3"),
    ("b3", "a1"),
];

pub fn named(name: CatalogName) -> NamedGraph {
    let (graph, notes) = match name {
        CatalogName::K5 => (
            labeled(&["v1", "v2", "v3", "v4", "v5"], &{
                let v = ["v1", "v2", "v3", "v4", "v5"];
                let mut e = Vec::new();
                for i in 0..5 {
                    for j in i + 1..5 {
                        e.push((v[i], v[j]));
                    }
                }
                e
            }),
            "complete graph on five vertices",
        ),
        CatalogName::K33 => (labeled(&K33_NAMES, &k33_edges()), "parts {x1,x2,x3} and {y1,y2,y3}"),
        CatalogName::Moebius(n) => (
            moebius(n),
            "loop 0..2n-1 in order; rungs join i and i+n",
        ),
        CatalogName::H1 => {
            let mut names = K33_NAMES.to_vec();
            names.push("p");
            let mut e = k33_edges();
            e.push(("x1", "p"));
            (labeled(&names, &e), "K3,3 with a pendant vertex p at x1")
        }
        CatalogName::H2 => (
            labeled(&H2_NAMES, &h2_edges()),
            "K3,3 on {v1,v2,v3} and {v4,v5,v6} with v1v4 subdivided by v7",
        ),
        CatalogName::G12_7_1 => {
            let mut e = h2_edges();
            e.push(("v2", "v7"));
            e.push(("v4", "v5"));
            (
                labeled(&H2_NAMES, &e),
                "H2 plus v2v7 and v4v5; adding v5v7 instead of v4v5 gives an isomorphic graph",
            )
        }
        CatalogName::G12_7_2 => {
            let names = ["a1", "a2", "a3", "b1", "b2", "b3", "v"];
            let mut e = LADDER_LOOP.to_vec();
            e.extend([("a2", "b2"), ("a3", "b3"), ("a1", "b2"), ("b1", "a2"), ("v", "a1"), ("v", "b1")]);
            (
                labeled(&names, &e),
                "loop a1a2a3b1b2b3, rungs a2b2 and a3b3, v joined to a1 and b1, chords a1b2 and b1a2",
            )
        }
        CatalogName::G12_8_1 => {
            let names = ["a1", "a2", "a3", "b1", "b2", "b3", "v", "w"];
            let mut e = LADDER_LOOP.to_vec();
            e.extend([("a2", "b2"), ("a3", "b3"), ("v", "a1"), ("v", "b1"), ("w", "a2"), ("a1", "b2")]);
            (
                labeled(&names, &e),
                "loop a1a2a3b1b2b3, rungs a2b2 and a3b3, v joined to a1 and b1, pendant w at a2, chord a1b2",
            )
        }
        CatalogName::G12_8_2 => {
            let names = ["v", "a1", "a2", "a3", "b1", "b2", "b3", "w"];
            let e = [
                ("v", "b2"),
                ("v", "a1"),
                ("v", "b1"),
                ("w", "a1"),
                ("w", "a2"),
                ("a2", "b2"),
                ("a2", "a3"),
                ("a1", "b3"),
                ("a3", "b3"),
                ("a3", "b1"),
                ("b2", "b3"),
                ("b2", "b1"),
            ];
            (
                labeled(&names, &e),
                "deleting vb2 and smoothing v and w leaves K3,3 on {a1,a3,b2} and {a2,b3,b1}",
            )
        }
        CatalogName::G12_9_1 => {
            let names = ["a1", "a2", "a3", "b1", "b2", "b3", "v", "w1", "w2"];
            let mut e = LADDER_LOOP.to_vec();
            e.extend([("a1", "b1"), ("a3", "b3"), ("v", "a2"), ("v", "b2"), ("w1", "a1"), ("w2", "b1")]);
            (
                labeled(&names, &e),
                "loop a1a2a3b1b2b3, rungs a1b1 and a3b3, rung a2b2 subdivided by v, pendants w1 at a1 and w2 at b1",
            )
        }
        CatalogName::G11_8_1 => {
            let names = ["x1", "x2", "x3", "y1", "y2", "y3", "s1", "s2"];
            let mut e: Vec<(&str, &str)> = k33_edges()
                .into_iter()
                .filter(|p| *p != ("x1", "y1") && *p != ("x2", "y2"))
                .collect();
            e.extend([("x1", "s1"), ("s1", "y1"), ("x2", "s2"), ("s2", "y2")]);
            (
                labeled(&names, &e),
                "K3,3 with the disjoint edges x1y1 and x2y2 subdivided by s1 and s2",
            )
        }
    };
    NamedGraph {
        name,
        graph,
        notes: notes.to_string(),
    }
}

/// The six minor-minimal intrinsically chiral graphs.
pub fn mmic_catalog() -> Vec<NamedGraph> {
    CatalogName::MMIC.iter().map(|&n| named(n)).collect()
}

/// All fixed catalog entries, with M3 and M5 for the ladders.
pub fn full_catalog() -> Vec<NamedGraph> {
    let mut out: Vec<NamedGraph> = [
        CatalogName::K5,
        CatalogName::K33,
        CatalogName::Moebius(3),
        CatalogName::Moebius(5),
        CatalogName::H1,
        CatalogName::H2,
    ]
    .into_iter()
    .map(named)
    .collect();
    out.extend(mmic_catalog());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_orders() {
        for (name, order, size) in [
            (CatalogName::G11_8_1, 8, 11),
            (CatalogName::G12_7_1, 7, 12),
            (CatalogName::G12_7_2, 7, 12),
            (CatalogName::G12_8_1, 8, 12),
            (CatalogName::G12_8_2, 8, 12),
            (CatalogName::G12_9_1, 9, 12),
            (CatalogName::H1, 7, 10),
            (CatalogName::H2, 7, 10),
        ] {
            let g = named(name).graph;
            assert_eq!((g.order(), g.size()), (order, size), "{name}");
            assert!(g.is_simple() && g.is_connected(), "{name}");
        }
        let m5 = moebius(5);
        assert_eq!((m5.order(), m5.size()), (10, 15));
    }

    #[test]
    fn names_parse() {
        for n in full_catalog() {
            assert_eq!(n.name.to_string().parse::<CatalogName>().unwrap(), n.name);
        }
        assert_eq!("m3".parse::<CatalogName>().unwrap(), CatalogName::Moebius(3));
        assert!("k7".parse::<CatalogName>().is_err());
    }
}
