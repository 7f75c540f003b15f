//! Checkable witnesses of achiral embeddability and of intrinsic chirality.
//!
//! Every achirality certificate describes an embedding that is symmetric
//! under reflection in a plane. A chirality certificate exhibits an odd
//! Möbius ladder with a distinguished loop that every automorphism of the
//! graph must preserve; an orientation-reversing self-homeomorphism of any
//! embedding would induce such an automorphism, which the ladder forbids.

mod chirality;
mod mirror;
mod nonsimple;
mod type1;
pub mod validate;

use serde::{Deserialize, Serialize};

use crate::graph::Multigraph;
use crate::planarity::{self, RotationSystem};

pub use chirality::{
    find_chirality_certificate, find_chirality_certificate_with, verify_chirality, AuditEntry, ChiralityCertificate,
    DEFAULT_MAX_DELETIONS,
};
pub use mirror::{
    check_added_edge_mirror, find_added_edge_mirror, find_twin_mirror, verify_added_edge_mirror, verify_twin_mirror,
    AddedEdgeMirrorCertificate, TwinMirrorCertificate,
};
pub use nonsimple::{nonsimple_achiral, verify_nonsimple, NonSimpleCertificate};
pub use type1::{find_type1, type1_for, verify_type1, TypeOneCertificate};
pub use validate::{constraint_solutions, validate_catalog, CatalogCheck, CatalogReport, CheckStatus, Constraints};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AchiralityCertificate {
    Planar { embedding: RotationSystem },
    TwinMirror(TwinMirrorCertificate),
    TypeOne(TypeOneCertificate),
    AddedEdgeMirror(AddedEdgeMirrorCertificate),
    NonSimple(NonSimpleCertificate),
    /// One certificate per connected component, each given on the component
    /// induced by the listed vertices; the mirror planes can be aligned.
    Components(Vec<(Vec<usize>, AchiralityCertificate)>),
}

impl AchiralityCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            AchiralityCertificate::Planar { .. } => "planar",
            AchiralityCertificate::TwinMirror(_) => "twin_mirror",
            AchiralityCertificate::TypeOne(_) => "type_one",
            AchiralityCertificate::AddedEdgeMirror(_) => "added_edge_mirror",
            AchiralityCertificate::NonSimple(_) => "non_simple",
            AchiralityCertificate::Components(_) => "components",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Achiral(AchiralityCertificate),
    Chiral(Box<ChiralityCertificate>),
    Unresolved(Vec<String>),
}

impl Verdict {
    pub fn is_achiral(&self) -> bool {
        matches!(self, Verdict::Achiral(_))
    }

    pub fn is_chiral(&self) -> bool {
        matches!(self, Verdict::Chiral(_))
    }

    pub fn is_unresolved(&self) -> bool {
        matches!(self, Verdict::Unresolved(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Achiral(_) => "achiral",
            Verdict::Chiral(_) => "chiral",
            Verdict::Unresolved(_) => "unresolved",
        }
    }
}

/// Runs the certificate searches cheapest first: planarity, twin mirror,
/// type 1, added-edge mirror, chirality. Non-simple inputs go through the
/// non-simple rules and disconnected simple inputs are split by component.
pub fn classify_embeddability(g: &Multigraph) -> Verdict {
    if let Some(embedding) = planarity::embed(g) {
        return Verdict::Achiral(AchiralityCertificate::Planar { embedding });
    }
    if !g.is_simple() {
        return match nonsimple_achiral(g) {
            Some(c) => Verdict::Achiral(AchiralityCertificate::NonSimple(c)),
            None => Verdict::Unresolved(vec!["non-simple graph outside the non-simple rules".into()]),
        };
    }
    if !g.is_connected() {
        return classify_components(g);
    }
    if let Some(c) = find_twin_mirror(g) {
        return Verdict::Achiral(AchiralityCertificate::TwinMirror(c));
    }
    if let Some(c) = find_type1(g) {
        return Verdict::Achiral(AchiralityCertificate::TypeOne(c));
    }
    if let Some(c) = find_added_edge_mirror(g) {
        return Verdict::Achiral(AchiralityCertificate::AddedEdgeMirror(c));
    }
    if let Some(c) = find_chirality_certificate(g) {
        return Verdict::Chiral(Box::new(c));
    }
    Verdict::Unresolved(vec![
        "no twin mirror, type-1 automorphism or added-edge mirror".into(),
        "no Möbius ladder core preserved by every automorphism".into(),
    ])
}

fn classify_components(g: &Multigraph) -> Verdict {
    let mut parts = Vec::new();
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        match classify_embeddability(&h) {
            Verdict::Achiral(c) => parts.push((comp, c)),
            Verdict::Chiral(c) => return Verdict::Chiral(c),
            Verdict::Unresolved(mut notes) => {
                notes.insert(0, format!("component {comp:?} unresolved"));
                return Verdict::Unresolved(notes);
            }
        }
    }
    Verdict::Achiral(AchiralityCertificate::Components(parts))
}

/// Re-checks an achirality certificate against `g` from scratch.
pub fn verify_achirality(g: &Multigraph, c: &AchiralityCertificate) -> bool {
    match c {
        AchiralityCertificate::Planar { embedding } => planarity::verify_embedding(g, embedding),
        AchiralityCertificate::TwinMirror(t) => verify_twin_mirror(g, t),
        AchiralityCertificate::TypeOne(t) => verify_type1(g, t),
        AchiralityCertificate::AddedEdgeMirror(a) => verify_added_edge_mirror(g, a),
        AchiralityCertificate::NonSimple(n) => verify_nonsimple(g, n),
        AchiralityCertificate::Components(parts) => {
            let comps = g.components();
            parts.len() == comps.len()
                && parts
                    .iter()
                    .zip(&comps)
                    .all(|((vs, c), comp)| vs == comp && verify_achirality(&g.induced_subgraph(vs), c))
        }
    }
}

/// Re-checks the certificate inside a verdict; unresolved verdicts carry
/// nothing to check and return false.
pub fn verify_verdict(g: &Multigraph, v: &Verdict) -> bool {
    match v {
        Verdict::Achiral(c) => verify_achirality(g, c),
        Verdict::Chiral(c) => verify_chirality(g, c),
        Verdict::Unresolved(_) => false,
    }
}

/// `g` with both endpoints of a vertex pair removed, and its embedding.
pub(crate) fn planar_without(g: &Multigraph, a: usize, b: usize) -> Option<RotationSystem> {
    let (h, _) = g.delete_vertices(&[a, b]).ok()?;
    planarity::embed(&h)
}
