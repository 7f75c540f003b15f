use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automorphism::automorphism_group;
use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};
use crate::planarity;

pub const MAX_GENERATED_ORDER: usize = 10;
pub const MAX_GENERATED_SIZE: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationSpec {
    pub min_order: usize,
    pub max_order: usize,
    pub edges: usize,
    pub connected: bool,
    pub simple: bool,
    pub nonplanar: bool,
}

impl GenerationSpec {
    pub fn new(order: usize, edges: usize) -> Self {
        GenerationSpec {
            min_order: order,
            max_order: order,
            edges,
            connected: false,
            simple: true,
            nonplanar: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn nonplanar(mut self) -> Self {
        self.nonplanar = true;
        self
    }

    pub fn orders(mut self, min: usize, max: usize) -> Self {
        self.min_order = min;
        self.max_order = max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.simple {
            return Err(Error::InvalidArgument("only simple graphs are generated".into()));
        }
        if self.min_order > self.max_order {
            return Err(Error::InvalidArgument(format!(
                "empty order range {}..={}",
                self.min_order, self.max_order
            )));
        }
        if self.max_order > MAX_GENERATED_ORDER {
            return Err(Error::TooLarge {
                what: "generation order",
                order: self.max_order,
                bound: MAX_GENERATED_ORDER,
            });
        }
        if self.edges > MAX_GENERATED_SIZE {
            return Err(Error::TooLarge {
                what: "generation size",
                order: self.edges,
                bound: MAX_GENERATED_SIZE,
            });
        }
        Ok(())
    }
}

/// One representative per isomorphism class, in canonical form and sorted by
/// canonical key within each order, orders ascending.
pub fn generate(spec: &GenerationSpec) -> Result<Vec<Multigraph>> {
    spec.validate()?;
    let mut out = Vec::new();
    for n in spec.min_order..=spec.max_order {
        if spec.edges > n * n.saturating_sub(1) / 2 {
            continue;
        }
        let mut found: Vec<(CanonicalKey, Multigraph)> = extend(&Multigraph::empty(n), spec.edges)
            .into_par_iter()
            .filter(|(_, g)| (!spec.connected || g.is_connected()) && (!spec.nonplanar || !planarity::planar(g)))
            .collect();
        found.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(found.into_iter().map(|(_, g)| g));
    }
    Ok(out)
}

/// All descendants of `g` with `target` edges. Each class is reached from
/// exactly one parent class: the child keeps an added edge only when it lies
/// in the automorphism orbit of the child's canonical last edge.
fn extend(g: &Multigraph, target: usize) -> Vec<(CanonicalKey, Multigraph)> {
    if g.size() == target {
        let c = canonical_form(g);
        return vec![(c.key, g.permute(&c.labeling))];
    }
    let n = g.order();
    let candidates = nonedge_orbit_representatives(g);
    let mut seen = HashSet::new();
    let mut children = Vec::new();
    for e in candidates {
        let h = g.add_edge(e).expect("vertices in range");
        let c = canonical_form(&h);
        if !seen.insert(c.key.clone()) {
            continue;
        }
        let lab = &c.labeling;
        let rank = |f: &Edge| {
            let (a, b) = (lab.apply(f.u), lab.apply(f.v));
            (a.max(b), a.min(b))
        };
        let last = *h.edges().iter().max_by_key(|f| rank(f)).expect("at least one edge");
        if last == e || in_edge_orbit(&h, last, e) {
            children.push(h);
        }
    }
    debug_assert!(children.iter().all(|h| h.order() == n));
    children.into_par_iter().flat_map_iter(|h| extend(&h, target)).collect()
}

fn nonedge_orbit_representatives(g: &Multigraph) -> Vec<Edge> {
    let n = g.order();
    let gens = automorphism_group(g).map(|a| a.generators().to_vec()).unwrap_or_default();
    let mut done = HashSet::new();
    let mut reps = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let e = Edge::new(a, b);
            if g.has_edge(a, b) || done.contains(&e) {
                continue;
            }
            reps.push(e);
            let mut stack = vec![e];
            done.insert(e);
            while let Some(f) = stack.pop() {
                for s in &gens {
                    let img = f.map(s);
                    if done.insert(img) {
                        stack.push(img);
                    }
                }
            }
        }
    }
    reps
}

fn in_edge_orbit(h: &Multigraph, from: Edge, to: Edge) -> bool {
    let gens = automorphism_group(h).map(|a| a.generators().to_vec()).unwrap_or_default();
    let mut seen = HashSet::from([from]);
    let mut stack = vec![from];
    while let Some(f) = stack.pop() {
        if f == to {
            return true;
        }
        for s in &gens {
            let img = f.map(s);
            if seen.insert(img) {
                stack.push(img);
            }
        }
    }
    false
}
