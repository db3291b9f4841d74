//! Fuzzy chemical abstract machine workbench.

pub mod degree;
pub mod flts;
pub mod group;
pub mod multiset;
pub mod relation;

pub use degree::{process_similarity, Degree, DegreeError};
pub use multiset::{msum, FuzzyMultiset, FuzzySubset};
pub use relation::{rel_identity, FuzzyRelation, RelationError};
