//! Growth operations, derivation traces and the reducers that find them.

mod forward;
mod nanotube;
mod ops;
mod reduce;
mod search;

pub use forward::{nanotube_growth_chain, successors, Successor};
pub use nanotube::{
    build_d5k, build_f3k, build_nanotube, nanotube_index, recognize_nanotube, NanotubeFamily,
};
pub use ops::{DerivationTrace, GrowthOpKind, GrowthStep, PrimitiveTruncation, Regime};
pub use reduce::{reduce_once, reduce_to_dodecahedron};

use crate::planar_map::CanonicalCode;
use crate::structure::{FamilyClass, StructureError};
use crate::transform::TransformError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GrowthError {
    #[error("not a fullerene")]
    NotAFullerene,
    #[error("{0} cap found but the map is not a {0} nanotube")]
    CapWithoutTube(NanotubeFamily),
    #[error("already at the dodecahedron")]
    AtDodecahedron,
    #[error("no reduction applies in regime {regime} to a {class} map ({detail}); code {}", code.to_hex())]
    NoCaseApplies {
        regime: Regime,
        class: FamilyClass,
        code: CanonicalCode,
        detail: String,
    },
    #[error("a {class} map is outside the family of regime {regime}")]
    NotInFamily { regime: Regime, class: FamilyClass },
    #[error("anchor does not match: {0}")]
    SiteMismatch(String),
    #[error("illegal transition: {0}")]
    IllegalTransition(String),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("replay of step {step} does not reproduce the recorded result")]
    ReplayMismatch { step: usize },
    #[error("invalid canonical code")]
    InvalidCode,
}
