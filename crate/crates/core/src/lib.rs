//! Combinatorial machinery for fullerenes and their near relatives: a cubic
//! planar-map kernel, truncation and straightening rewrites, belt and patch
//! analysis, growth operations with constructive reducers, and an
//! isomorph-free enumeration engine checked against a face-spiral oracle.

pub mod engine;
pub mod growth;
pub mod planar_map;
pub mod structure;
pub mod transform;

pub use planar_map::{CanonicalCode, PVector, PlanarMap};
