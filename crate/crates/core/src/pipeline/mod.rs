//! Isomorph-free generation, classification and minimality audits.

mod classify;
mod generate;
mod report;

pub use classify::{
    audit_minors, candidates, classify_all, h_route_check, minimal_by_known, minor_minimality_audit,
    ClassificationRecord, ClassifyOptions, HRouteCheck, MinimalityAudit, VerdictCache, MAX_CLASSIFIED_SIZE,
};
pub use generate::{generate, GenerationSpec, MAX_GENERATED_ORDER, MAX_GENERATED_SIZE};
pub use report::{report, CountRow, MmicEntry, Report, UnresolvedEntry};
