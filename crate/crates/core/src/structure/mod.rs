//! Belts, loops, fragments and family classification.

mod belts;
mod classify;
mod fragments;
mod loops;

pub use belts::{find_belts, five_belt_census, is_flag, Belt, FiveBeltCensus};
pub use classify::{
    adjacent_pentagon_pairs, classify, classify_unchecked, has_adjacent_pentagons, FamilyClass,
};
pub use fragments::{contains_fragment, find_fragments, Embedding, FragmentPattern, Template};
pub use loops::{check_131313, KLoop, LoopReport, LoopViolation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("map is not a fullerene")]
    NotAFullerene,
    #[error("map is not polytopal")]
    NotPolytopal,
}
