//! Isomorph-free enumeration, the face-spiral oracle and cross-checking.

mod enumerate;
mod oracle;

pub use enumerate::{
    cross_check, enumerate, oracle_generate, Bucket, CrossCheckReport, EnumerationJob, GeneratedSet,
};
pub use oracle::{
    fullerene_from_spiral, oracle_by_p6, spiral_fullerenes, spiral_windup, OracleError,
    ORACLE_MAX_P6,
};
