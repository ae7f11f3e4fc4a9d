//! Forward application of growth operations.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use crate::planar_map::{canonical_code, canonical_form, CanonicalCode, PlanarMap};
use crate::structure::{classify_unchecked, FamilyClass};
use crate::transform::{enumerate_sites, truncate};

use super::nanotube::{build_nanotube, recognize_nanotube, NanotubeFamily};
use super::ops::{GrowthOpKind, GrowthStep, PrimitiveTruncation, Regime};
use super::GrowthError;

type ChainKey = (NanotubeFamily, usize, bool);

fn chain_cache() -> &'static Mutex<HashMap<ChainKey, Vec<PrimitiveTruncation>>> {
    static CACHE: OnceLock<Mutex<HashMap<ChainKey, Vec<PrimitiveTruncation>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Truncations taking the `k`-th tube of `family` to the `(k+1)`-th (operation
/// A1 for D5, A2 for F3), using only (1;4,5)-, (1;5,5)- and (2,6;4,5)-truncations.
/// Anchors refer to canonical labelings; the result is cached.
pub fn nanotube_growth_chain(
    family: NanotubeFamily,
    k: usize,
    include_reflection: bool,
) -> Result<Vec<PrimitiveTruncation>, GrowthError> {
    let key = (family, k, include_reflection);
    if let Some(chain) = chain_cache().lock().unwrap().get(&key) {
        return Ok(chain.clone());
    }
    let start = canonical_code(&build_nanotube(family, k), include_reflection)
        .to_map()
        .ok_or(GrowthError::InvalidCode)?;
    let target = canonical_code(&build_nanotube(family, k + 1), include_reflection);
    let length = match family {
        NanotubeFamily::D5 => 5,
        NanotubeFamily::F3 => 3,
    };
    let mut visited = vec![HashSet::new(); length];
    let mut chain = Vec::with_capacity(length);
    if !tube_dfs(
        &start,
        &target,
        length,
        include_reflection,
        &mut visited,
        &mut chain,
    ) {
        return Err(GrowthError::NoCaseApplies {
            regime: Regime::AOps,
            class: FamilyClass::F,
            code: target,
            detail: format!("no truncation chain from {family}{k} to {family}{}", k + 1),
        });
    }
    chain_cache().lock().unwrap().insert(key, chain.clone());
    Ok(chain)
}

fn tube_dfs(
    map: &PlanarMap,
    target: &CanonicalCode,
    length: usize,
    include_reflection: bool,
    visited: &mut [HashSet<CanonicalCode>],
    chain: &mut Vec<PrimitiveTruncation>,
) -> bool {
    let depth = chain.len();
    let last = depth + 1 == length;
    // the chain leaves the fullerenes once and comes back on its last step
    let ops: &[GrowthOpKind] = if last {
        &[GrowthOpKind::T2645]
    } else if depth == 0 {
        &[GrowthOpKind::T155]
    } else {
        &[GrowthOpKind::T145, GrowthOpKind::T2645, GrowthOpKind::T155]
    };
    for op in ops {
        for site in enumerate_sites(map, &op.truncation_spec().unwrap()) {
            let Ok(next) = truncate(map, site) else {
                continue;
            };
            let class = classify_unchecked(&next);
            if !(class.is_fullerene() || class == FamilyClass::FMinus1) {
                continue;
            }
            let cf = canonical_form(&next, include_reflection);
            if !visited[depth].insert(cf.code.clone()) {
                continue;
            }
            chain.push(PrimitiveTruncation {
                root: site.start_dart,
                s: site.s,
                kind: site.kind(map),
            });
            if last {
                if &cf.code == target {
                    return true;
                }
            } else if tube_dfs(&cf.map, target, length, include_reflection, visited, chain) {
                return true;
            }
            chain.pop();
        }
    }
    false
}

/// Forward operations available in `regime` for a map of class `class`,
/// each as a truncation-kind sequence and the classes its result may have.
struct ForwardOp {
    kind: GrowthOpKind,
    chain: &'static [GrowthOpKind],
    accept: fn(FamilyClass) -> bool,
}

fn f(c: FamilyClass) -> bool {
    c.is_fullerene()
}
fn f1(c: FamilyClass) -> bool {
    c.in_f1()
}
fn f1_ipr(c: FamilyClass) -> bool {
    c == FamilyClass::F1Ipr
}
fn f_minus1(c: FamilyClass) -> bool {
    c == FamilyClass::FMinus1
}

use GrowthOpKind::*;

const SEVEN_FROM_F: &[ForwardOp] = &[
    ForwardOp {
        kind: T155,
        chain: &[T155],
        accept: f_minus1,
    },
    ForwardOp {
        kind: T2655,
        chain: &[T2655],
        accept: f,
    },
    ForwardOp {
        kind: T2656,
        chain: &[T2656],
        accept: f1,
    },
];
const SEVEN_FROM_F_MINUS1: &[ForwardOp] = &[
    ForwardOp {
        kind: T145,
        chain: &[T145],
        accept: f_minus1,
    },
    ForwardOp {
        kind: T2645,
        chain: &[T2645],
        accept: f,
    },
];
const SEVEN_FROM_F1: &[ForwardOp] = &[
    ForwardOp {
        kind: T2756,
        chain: &[T2756],
        accept: f1,
    },
    ForwardOp {
        kind: T2755,
        chain: &[T2755],
        accept: f,
    },
];
const A_FROM_F: &[ForwardOp] = &[
    ForwardOp {
        kind: A3,
        chain: &[T155, T2645],
        accept: f,
    },
    ForwardOp {
        kind: T2655,
        chain: &[T2655],
        accept: f,
    },
    ForwardOp {
        kind: T2656,
        chain: &[T2656],
        accept: f1,
    },
];
const A_FROM_F1: &[ForwardOp] = &[
    ForwardOp {
        kind: T2755,
        chain: &[T2755],
        accept: f,
    },
    ForwardOp {
        kind: T2756,
        chain: &[T2756],
        accept: f1,
    },
];
const AB_FROM_F: &[ForwardOp] = &[
    ForwardOp {
        kind: A3,
        chain: &[T155, T2645],
        accept: f,
    },
    ForwardOp {
        kind: T2655,
        chain: &[T2655],
        accept: f,
    },
    ForwardOp {
        kind: B1,
        chain: &[T2656, T2755],
        accept: f,
    },
    ForwardOp {
        kind: B2,
        chain: &[T2656, T2756],
        accept: f1_ipr,
    },
    ForwardOp {
        kind: B3,
        chain: &[T2656, T2756, T2755],
        accept: f,
    },
    ForwardOp {
        kind: B4,
        chain: &[T2656, T2756, T2756],
        accept: f1_ipr,
    },
];
const AB_FROM_F1_IPR: &[ForwardOp] = &[
    ForwardOp {
        kind: T2755,
        chain: &[T2755],
        accept: f,
    },
    ForwardOp {
        kind: T2756,
        chain: &[T2756],
        accept: f1_ipr,
    },
];

fn forward_ops(regime: Regime, class: FamilyClass) -> &'static [ForwardOp] {
    match regime {
        Regime::Seven if class.is_fullerene() => SEVEN_FROM_F,
        Regime::Seven if class == FamilyClass::FMinus1 => SEVEN_FROM_F_MINUS1,
        Regime::Seven if class.in_f1() => SEVEN_FROM_F1,
        Regime::AOps if class.is_fullerene() => A_FROM_F,
        Regime::AOps if class.in_f1() => A_FROM_F1,
        Regime::AbOps if class.is_fullerene() => AB_FROM_F,
        Regime::AbOps if class == FamilyClass::F1Ipr => AB_FROM_F1_IPR,
        _ => &[],
    }
}

/// A successor produced by one growth step.
#[derive(Debug, Clone)]
pub struct Successor {
    pub map: PlanarMap,
    pub class: FamilyClass,
    pub step: GrowthStep,
}

/// All results of one growth step of `regime` applied to the map with code
/// `code`, skipping results with more than `max_faces` faces. Duplicates
/// reached by different sites are reported once per operation kind.
pub fn successors(
    code: &CanonicalCode,
    regime: Regime,
    include_reflection: bool,
    max_faces: usize,
) -> Result<Vec<Successor>, GrowthError> {
    let map = code.to_map().ok_or(GrowthError::InvalidCode)?;
    let class = classify_unchecked(&map);
    let mut out = Vec::new();
    if regime != Regime::Seven && class.is_fullerene() {
        if let Some((family, k)) = recognize_nanotube(&map)? {
            let grows = match family {
                NanotubeFamily::D5 => 5,
                NanotubeFamily::F3 => 3,
            };
            if map.num_faces() + grows <= max_faces {
                let truncations = nanotube_growth_chain(family, k, include_reflection)?;
                let next = build_nanotube(family, k + 1);
                let result = canonical_code(&next, include_reflection);
                let kind = if family == NanotubeFamily::D5 { A1 } else { A2 };
                let case = format!("{family}{k} to {family}{}", k + 1);
                out.push(Successor {
                    map: result.to_map().ok_or(GrowthError::InvalidCode)?,
                    class: classify_unchecked(&next),
                    step: GrowthStep {
                        kind,
                        case,
                        truncations,
                        result,
                    },
                });
            }
        }
    }
    for op in forward_ops(regime, class) {
        if map.num_faces() + op.chain.len() > max_faces {
            continue;
        }
        let mut seen = HashSet::new();
        let mut prefix = Vec::with_capacity(op.chain.len());
        extend_chain(
            &map,
            op,
            include_reflection,
            &mut prefix,
            &mut HashSet::new(),
            &mut seen,
            &mut out,
        );
    }
    Ok(out)
}

fn extend_chain(
    map: &PlanarMap,
    op: &ForwardOp,
    include_reflection: bool,
    prefix: &mut Vec<PrimitiveTruncation>,
    visited_mid: &mut HashSet<(usize, CanonicalCode)>,
    seen: &mut HashSet<CanonicalCode>,
    out: &mut Vec<Successor>,
) {
    let depth = prefix.len();
    let last = depth + 1 == op.chain.len();
    let spec = op.chain[depth].truncation_spec().unwrap();
    for site in enumerate_sites(map, &spec) {
        let Ok(next) = truncate(map, site) else {
            continue;
        };
        let class = classify_unchecked(&next);
        if last && !(op.accept)(class) {
            continue;
        }
        let cf = canonical_form(&next, include_reflection);
        prefix.push(PrimitiveTruncation {
            root: site.start_dart,
            s: site.s,
            kind: site.kind(map),
        });
        if last {
            if seen.insert(cf.code.clone()) {
                out.push(Successor {
                    map: cf.map,
                    class,
                    step: GrowthStep {
                        kind: op.kind,
                        case: String::new(),
                        truncations: prefix.clone(),
                        result: cf.code,
                    },
                });
            }
        } else if visited_mid.insert((depth, cf.code.clone())) {
            extend_chain(
                &cf.map,
                op,
                include_reflection,
                prefix,
                visited_mid,
                seen,
                out,
            );
        }
        prefix.pop();
    }
}
