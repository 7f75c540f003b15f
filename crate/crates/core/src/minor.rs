//! Minor operations as replayable step lists.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::Result;
use crate::graph::{Edge, Multigraph};

/// One minor operation, with endpoints in the numbering current at that step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorStep {
    DeleteEdge(Edge),
    ContractEdge(Edge),
    DeleteVertex(usize),
}

impl MinorStep {
    pub fn apply(&self, g: &Multigraph) -> Result<Multigraph> {
        match *self {
            MinorStep::DeleteEdge(e) => g.delete_edge(e),
            MinorStep::ContractEdge(e) => g.contract_edge(e),
            MinorStep::DeleteVertex(v) => g.delete_vertex(v),
        }
    }
}

impl fmt::Display for MinorStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorStep::DeleteEdge(e) => write!(f, "delete {e}"),
            MinorStep::ContractEdge(e) => write!(f, "contract {e}"),
            MinorStep::DeleteVertex(v) => write!(f, "remove vertex {v}"),
        }
    }
}

/// A sequence of steps taking a graph with key `source` to one with key
/// `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub source: CanonicalKey,
    pub target: CanonicalKey,
    pub steps: Vec<MinorStep>,
}

impl MinorModel {
    /// Applies the steps to `g`.
    pub fn replay(&self, g: &Multigraph) -> Result<Multigraph> {
        self.steps.iter().try_fold(g.clone(), |acc, s| s.apply(&acc))
    }

    /// Whether `g` matches the source key and replaying reaches the target.
    pub fn verify(&self, g: &Multigraph) -> bool {
        canonical_key(g) == self.source
            && self
                .replay(g)
                .is_ok_and(|h| canonical_key(&h) == self.target)
    }

    pub fn deletions(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, MinorStep::DeleteEdge(_)))
            .count()
    }

    pub fn contractions(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, MinorStep::ContractEdge(_)))
            .count()
    }
}

/// Every graph reachable by one edge deletion, one contraction, or removal
/// of one isolated vertex, one per isomorphism class, each with its model.
pub fn enumerate_one_step_minors(g: &Multigraph) -> Vec<(MinorModel, Multigraph)> {
    let source = canonical_key(g);
    let mut steps: Vec<MinorStep> = Vec::new();
    let distinct = g.distinct_edges();
    steps.extend(distinct.iter().map(|&e| MinorStep::DeleteEdge(e)));
    steps.extend(
        distinct
            .iter()
            .filter(|e| !e.is_loop())
            .map(|&e| MinorStep::ContractEdge(e)),
    );
    steps.extend(g.isolated_vertices().into_iter().map(MinorStep::DeleteVertex));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for step in steps {
        let h = step.apply(g).expect("step taken from the graph itself");
        let key = canonical_key(&h);
        if seen.insert(key.clone()) {
            out.push((
                MinorModel {
                    source: source.clone(),
                    target: key,
                    steps: vec![step],
                },
                h,
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_two_one_step_minors() {
        let t = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]);
        let m = enumerate_one_step_minors(&t);
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|(model, h)| model.verify(&t) && h.size() == 2));
    }

    #[test]
    fn single_edge() {
        let g = Multigraph::from_pairs(2, &[(0, 1)]);
        let m = enumerate_one_step_minors(&g);
        let shapes: Vec<(usize, usize)> = m.iter().map(|(_, h)| (h.order(), h.size())).collect();
        assert_eq!(shapes, vec![(2, 0), (1, 0)]);
    }

    #[test]
    fn replay_rejects_bad_steps() {
        let g = Multigraph::from_pairs(2, &[(0, 1)]);
        let model = MinorModel {
            source: canonical_key(&g),
            target: canonical_key(&Multigraph::empty(1)),
            steps: vec![MinorStep::ContractEdge(Edge::new(0, 0))],
        };
        assert!(model.replay(&g).is_err());
        assert!(!model.verify(&g));
    }
}
