use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::classify::ClassificationRecord;
use crate::canon::CanonicalKey;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub size: usize,
    pub order: usize,
    pub candidates: usize,
    pub achiral: usize,
    pub chiral: usize,
    pub unresolved: usize,
    /// Minor-minimal chiral graphs.
    pub mmic: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MmicEntry {
    /// `size^order_index`, indexed by descending degree sequence.
    pub name: String,
    pub catalog_name: Option<String>,
    pub key: CanonicalKey,
    pub graph6: String,
    pub size: usize,
    pub order: usize,
    pub degree_sequence: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnresolvedEntry {
    pub key: CanonicalKey,
    pub graph6: String,
    pub contains_11_8_1: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub max_size: usize,
    pub rows: Vec<CountRow>,
    pub certificate_counts: BTreeMap<String, usize>,
    pub mmic: Vec<MmicEntry>,
    pub unresolved: Vec<UnresolvedEntry>,
    pub audit_unresolved_minors: usize,
}

impl Report {
    pub fn mmic_at(&self, size: usize) -> usize {
        self.mmic.iter().filter(|m| m.size == size).count()
    }

    pub fn mmic_up_to(&self, size: usize) -> usize {
        self.mmic.iter().filter(|m| m.size <= size).count()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "MMIC({0}) = {1}, MMIC(≤{0}) = {2}",
            self.max_size,
            self.mmic_at(self.max_size),
            self.mmic_up_to(self.max_size)
        )
    }
}

pub fn report(records: &[ClassificationRecord]) -> Report {
    let mut rows: BTreeMap<(usize, usize), CountRow> = BTreeMap::new();
    let mut certificate_counts = BTreeMap::new();
    for r in records {
        let row = rows.entry((r.size, r.order)).or_insert_with(|| CountRow {
            size: r.size,
            order: r.order,
            ..CountRow::default()
        });
        row.candidates += 1;
        match r.verdict.as_str() {
            "achiral" => row.achiral += 1,
            "chiral" => row.chiral += 1,
            _ => row.unresolved += 1,
        }
        if r.minor_minimal {
            row.mmic += 1;
        }
        let kind = r.certificate.clone().unwrap_or_else(|| "none".into());
        *certificate_counts.entry(kind).or_insert(0) += 1;
    }

    let mut groups: BTreeMap<(usize, usize), Vec<&ClassificationRecord>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.minor_minimal) {
        groups.entry((r.size, r.order)).or_default().push(r);
    }
    let mut mmic = Vec::new();
    for ((size, order), mut rs) in groups {
        rs.sort_by(|a, b| b.degree_sequence.cmp(&a.degree_sequence).then_with(|| a.key.cmp(&b.key)));
        for (i, r) in rs.into_iter().enumerate() {
            mmic.push(MmicEntry {
                name: format!("{size}^{order}_{}", i + 1),
                catalog_name: r.catalog_name.clone(),
                key: r.key.clone(),
                graph6: r.graph6.clone(),
                size,
                order,
                degree_sequence: r.degree_sequence.clone(),
            });
        }
    }

    let unresolved = records
        .iter()
        .filter(|r| r.verdict == "unresolved")
        .map(|r| UnresolvedEntry {
            key: r.key.clone(),
            graph6: r.graph6.clone(),
            contains_11_8_1: r.contains_11_8_1,
            notes: r.notes.clone(),
        })
        .collect();
    let audit_unresolved_minors = records
        .iter()
        .filter_map(|r| r.audit.as_ref())
        .map(|a| a.unresolved_minors.len())
        .sum();
    Report {
        max_size: records.iter().map(|r| r.size).max().unwrap_or(0),
        rows: rows.into_values().collect(),
        certificate_counts,
        mmic,
        unresolved,
        audit_unresolved_minors,
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        writeln!(s, "size order candidates achiral chiral unresolved mmic")?;
        for r in &self.rows {
            writeln!(
                s,
                "{:>4} {:>5} {:>10} {:>7} {:>6} {:>10} {:>4}",
                r.size, r.order, r.candidates, r.achiral, r.chiral, r.unresolved, r.mmic
            )?;
        }
        writeln!(s)?;
        writeln!(s, "certificates:")?;
        for (k, n) in &self.certificate_counts {
            writeln!(s, "  {k}: {n}")?;
        }
        writeln!(s)?;
        writeln!(s, "minor-minimal chiral graphs:")?;
        for m in &self.mmic {
            let catalog = m.catalog_name.as_deref().unwrap_or("not in catalog");
            writeln!(s, "  {} ({catalog}) {} degrees {:?}", m.name, m.graph6, m.degree_sequence)?;
        }
        if !self.unresolved.is_empty() {
            writeln!(s)?;
            writeln!(s, "unresolved:")?;
            for u in &self.unresolved {
                writeln!(
                    s,
                    "  {} contains 11^8_1: {} ({})",
                    u.graph6,
                    u.contains_11_8_1,
                    u.notes.join("; ")
                )?;
            }
        }
        writeln!(s)?;
        write!(s, "{}", self.summary_line())?;
        f.write_str(&s)
    }
}
