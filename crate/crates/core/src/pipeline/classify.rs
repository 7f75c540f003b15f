use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::RwLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{generate, GenerationSpec};
use crate::canon::{canonical_key, CanonicalKey};
use crate::catalog::{full_catalog, CatalogName};
use crate::certificates::{classify_embeddability, Verdict};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Multigraph;
use crate::minor::enumerate_one_step_minors;
use crate::minor_search::{contains_11_8_1, has_minor, k33_route_via_h};

pub const MAX_CLASSIFIED_SIZE: usize = 12;

/// Smallest order of a non-planar simple graph.
const MIN_ORDER: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub key: CanonicalKey,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub degree_sequence: Vec<usize>,
    pub verdict: String,
    pub certificate: Option<String>,
    pub notes: Vec<String>,
    pub contains_11_8_1: bool,
    pub minor_minimal: bool,
    /// Catalog entry isomorphic to this graph, if any.
    pub catalog_name: Option<String>,
    pub audit: Option<MinimalityAudit>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Every proper minor of a chiral graph, classified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityAudit {
    pub minors_checked: usize,
    pub non_simple_minors: usize,
    /// Count of minors per verdict or certificate kind.
    pub by_kind: BTreeMap<String, usize>,
    pub chiral_minors: Vec<CanonicalKey>,
    pub unresolved_minors: Vec<CanonicalKey>,
    pub minimal: bool,
}

/// Verdict summaries shared across audits, keyed by canonical key.
#[derive(Default)]
pub struct VerdictCache {
    map: RwLock<HashMap<CanonicalKey, &'static str>>,
}

impl VerdictCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn kind(&self, key: &CanonicalKey, g: &Multigraph) -> &'static str {
        if let Some(k) = self.map.read().expect("cache lock").get(key) {
            return k;
        }
        let k = verdict_kind(&classify_embeddability(g));
        self.map.write().expect("cache lock").insert(key.clone(), k);
        k
    }
}

fn verdict_kind(v: &Verdict) -> &'static str {
    match v {
        Verdict::Achiral(c) => c.kind(),
        Verdict::Chiral(_) => "chiral",
        Verdict::Unresolved(_) => "unresolved",
    }
}

/// Walks every proper minor of `g` up to isomorphism and classifies it.
pub fn audit_minors(g: &Multigraph, cache: &VerdictCache) -> MinimalityAudit {
    let root = canonical_key(g);
    let mut seen: HashSet<CanonicalKey> = HashSet::from([root]);
    let mut frontier = vec![g.clone()];
    let mut by_kind = BTreeMap::new();
    let (mut chiral, mut unresolved) = (Vec::new(), Vec::new());
    let (mut checked, mut non_simple) = (0, 0);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for (_, m) in enumerate_one_step_minors(h) {
                let key = canonical_key(&m);
                if !seen.insert(key.clone()) {
                    continue;
                }
                next.push((key, m));
            }
        }
        let kinds: Vec<&'static str> = next.par_iter().map(|(k, m)| cache.kind(k, m)).collect();
        for ((key, m), kind) in next.iter().zip(kinds) {
            checked += 1;
            if !m.is_simple() {
                non_simple += 1;
            }
            *by_kind.entry(kind.to_string()).or_insert(0) += 1;
            match kind {
                "chiral" => chiral.push(key.clone()),
                "unresolved" => unresolved.push(key.clone()),
                _ => {}
            }
        }
        frontier = next.into_iter().map(|(_, m)| m).collect();
    }
    chiral.sort();
    unresolved.sort();
    MinimalityAudit {
        minors_checked: checked,
        non_simple_minors: non_simple,
        by_kind,
        minimal: chiral.is_empty(),
        chiral_minors: chiral,
        unresolved_minors: unresolved,
    }
}

/// Fast path: a chiral graph is minor minimal when it contains none of the
/// smaller minor-minimal chiral graphs.
pub fn minimal_by_known(g: &Multigraph, smaller: &[Multigraph]) -> bool {
    smaller.iter().all(|s| s.size() > g.size() || has_minor(g, s).is_none())
}

/// Runs the fast path and, when `audit` is set, the full minor walk; the two
/// must agree, and every chiral proper minor must contain a known smaller
/// minor-minimal graph.
pub fn minor_minimality_audit(
    g: &Multigraph,
    smaller: &[Multigraph],
    cache: &VerdictCache,
) -> Result<(bool, MinimalityAudit)> {
    let fast = minimal_by_known(g, smaller);
    let audit = audit_minors(g, cache);
    if fast != audit.minimal {
        return Err(Error::AuditContradiction(format!(
            "{}: fast path says minimal={fast}, minor walk says minimal={}",
            canonical_key(g),
            audit.minimal
        )));
    }
    for key in &audit.chiral_minors {
        let m = key.to_graph();
        if minimal_by_known(&m, smaller) {
            return Err(Error::AuditContradiction(format!(
                "{}: chiral proper minor {key} contains no known minor-minimal chiral graph",
                canonical_key(g)
            )));
        }
    }
    Ok((fast, audit))
}

/// Candidates of one size: connected, simple, non-planar, with order between
/// five and `size - 3`.
pub fn candidates(size: usize) -> Result<Vec<Multigraph>> {
    if size < 9 {
        return Ok(Vec::new());
    }
    generate(&GenerationSpec::new(MIN_ORDER, size).orders(MIN_ORDER, size - 3).connected().nonplanar())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub max_size: usize,
    pub audit: bool,
}

/// Classifies every candidate of size at most `max_size`, smallest size
/// first, records sorted by size and then canonical key.
pub fn classify_all(opts: ClassifyOptions) -> Result<Vec<ClassificationRecord>> {
    if opts.max_size > MAX_CLASSIFIED_SIZE {
        return Err(Error::TooLarge {
            what: "classification size",
            order: opts.max_size,
            bound: MAX_CLASSIFIED_SIZE,
        });
    }
    let catalog: Vec<(CanonicalKey, CatalogName)> =
        full_catalog().into_iter().map(|n| (canonical_key(&n.graph), n.name)).collect();
    let cache = VerdictCache::new();
    let mut minimal_so_far: Vec<Multigraph> = Vec::new();
    let mut out = Vec::new();
    for size in 9..=opts.max_size {
        let graphs = candidates(size)?;
        let mut records: Vec<ClassificationRecord> = graphs
            .par_iter()
            .map(|g| classify_one(g, &catalog, &minimal_so_far, &cache, opts.audit))
            .collect::<Result<_>>()?;
        records.sort_by(|a, b| a.key.cmp(&b.key));
        minimal_so_far.extend(records.iter().filter(|r| r.minor_minimal).map(|r| r.key.to_graph()));
        out.extend(records);
    }
    Ok(out)
}

fn classify_one(
    g: &Multigraph,
    catalog: &[(CanonicalKey, CatalogName)],
    smaller: &[Multigraph],
    cache: &VerdictCache,
    audit: bool,
) -> Result<ClassificationRecord> {
    let start = Instant::now();
    let key = canonical_key(g);
    let verdict = classify_embeddability(g);
    let (certificate, notes) = match &verdict {
        Verdict::Achiral(c) => (Some(c.kind().to_string()), Vec::new()),
        Verdict::Chiral(_) => (Some("moebius_core".to_string()), Vec::new()),
        Verdict::Unresolved(n) => (None, n.clone()),
    };
    let contains = g.order() >= 8 && contains_11_8_1(g).is_some();
    let (minor_minimal, audit) = match (&verdict, audit) {
        (Verdict::Chiral(_), true) => {
            let (m, a) = minor_minimality_audit(g, smaller, cache)?;
            (m, Some(a))
        }
        (Verdict::Chiral(_), false) => (minimal_by_known(g, smaller), None),
        _ => (false, None),
    };
    Ok(ClassificationRecord {
        graph6: to_graph6(g)?,
        order: g.order(),
        size: g.size(),
        degree_sequence: g.degree_sequence(),
        verdict: verdict.label().to_string(),
        certificate,
        notes,
        contains_11_8_1: contains,
        minor_minimal,
        catalog_name: catalog.iter().find(|(k, _)| *k == key).map(|(_, n)| n.to_string()),
        audit,
        key,
        elapsed: start.elapsed(),
    })
}

/// Outcome of routing the size-12 order-7 candidates through H1 or H2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRouteCheck {
    pub checked: usize,
    pub routed: usize,
    /// Candidates without a route and without a K3,3 minor; they are
    /// non-planar through K5 alone.
    pub k5_only: Vec<CanonicalKey>,
    /// Candidates with a K3,3 minor but no route.
    pub unexplained: Vec<CanonicalKey>,
}

/// Every size-12 order-7 candidate with a K3,3 minor should reach K3,3 by
/// two deletions onto H1 or H2 and one contraction.
pub fn h_route_check(records: &[ClassificationRecord]) -> HRouteCheck {
    let k33 = crate::catalog::named(CatalogName::K33).graph;
    let outcomes: Vec<(CanonicalKey, bool, bool)> = records
        .par_iter()
        .filter(|r| r.size == 12 && r.order == 7)
        .map(|r| {
            let g = r.key.to_graph();
            let routed = k33_route_via_h(&g).is_some();
            let has_k33 = routed || has_minor(&g, &k33).is_some();
            (r.key.clone(), routed, has_k33)
        })
        .collect();
    let mut check = HRouteCheck {
        checked: outcomes.len(),
        ..HRouteCheck::default()
    };
    for (key, routed, has_k33) in outcomes {
        match (routed, has_k33) {
            (true, _) => check.routed += 1,
            (false, false) => check.k5_only.push(key),
            (false, true) => check.unexplained.push(key),
        }
    }
    check.k5_only.sort();
    check.unexplained.sort();
    check
}
