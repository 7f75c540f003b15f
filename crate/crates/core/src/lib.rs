//! Classification of small graphs by embeddability symmetry.

pub mod automorphism;
pub mod catalog;
pub mod certificates;
pub mod canon;
pub mod error;
pub mod format;
pub mod graph;
pub mod minor;
pub mod minor_search;
pub mod perm;
pub mod oracle;
pub mod pipeline;
pub mod planarity;

pub use automorphism::{automorphism_group, find_extension, AutomorphismGroup};
pub use canon::{canonical_form, canonical_key, is_isomorphic, CanonicalKey};
pub use error::{Error, Result};
pub use graph::{Edge, Multigraph};
pub use minor::{enumerate_one_step_minors, MinorModel, MinorStep};
pub use perm::Permutation;
pub use planarity::{is_planar, kuratowski_witness, sparse_planarity_shortcut, planar, PlanarityVerdict};
pub use certificates::{classify_embeddability, verify_verdict, AchiralityCertificate, ChiralityCertificate, Verdict};
