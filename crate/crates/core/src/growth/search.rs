//! Straightening searches shared by the reducers.

use std::collections::HashSet;

use crate::planar_map::{canonical_code, canonical_form, CanonicalCode, Dart, PlanarMap};
use crate::structure::{classify_unchecked, FamilyClass};
use crate::transform::{straighten_with_inverse, straightening_kind, KindSpec, TruncationSite};

use super::ops::{GrowthOpKind, GrowthStep, PrimitiveTruncation};

/// One straightening: `site` on `pred` recreates the map it came from.
#[derive(Debug, Clone)]
pub(crate) struct Link {
    pub pred: PlanarMap,
    pub site: TruncationSite,
}

/// One reduction stage: the truncation kind to undo and the classes allowed
/// for the result.
#[derive(Clone, Copy)]
pub(crate) struct Stage {
    pub op: GrowthOpKind,
    pub accept: fn(FamilyClass) -> bool,
}

impl Stage {
    pub const fn new(op: GrowthOpKind, accept: fn(FamilyClass) -> bool) -> Stage {
        Stage { op, accept }
    }
}

pub(crate) fn is_fullerene(c: FamilyClass) -> bool {
    c.is_fullerene()
}

pub(crate) fn is_f1(c: FamilyClass) -> bool {
    c.in_f1()
}

pub(crate) fn is_f1_ipr(c: FamilyClass) -> bool {
    c == FamilyClass::F1Ipr
}

pub(crate) fn is_f_minus1(c: FamilyClass) -> bool {
    c == FamilyClass::FMinus1
}

/// Straightens along `d` if it undoes a truncation of `spec` and the result is accepted.
pub(crate) fn straighten_if(
    map: &PlanarMap,
    d: Dart,
    spec: &KindSpec,
    accept: fn(FamilyClass) -> bool,
) -> Option<Link> {
    if !straightening_kind(map, d).matches(spec) {
        return None;
    }
    let (pred, site) = straighten_with_inverse(map, d).ok()?;
    accept(classify_unchecked(&pred)).then_some(Link { pred, site })
}

/// First edge (in dart order) whose straightening passes `stage`.
pub(crate) fn find_single(map: &PlanarMap, stage: Stage, edges: &[Dart]) -> Option<Link> {
    let spec = stage
        .op
        .truncation_spec()
        .expect("stage undoes a single truncation");
    edges
        .iter()
        .find_map(|&d| straighten_if(map, d, &spec, stage.accept))
}

pub(crate) fn all_edges(map: &PlanarMap) -> Vec<Dart> {
    map.edge_darts().collect()
}

/// Depth-first search for a sequence of straightenings, one per stage.
/// `first_edges` restricts the first straightening. Returns links in
/// reduction order.
pub(crate) fn find_chain(
    map: &PlanarMap,
    stages: &[Stage],
    first_edges: &[Dart],
) -> Option<Vec<Link>> {
    let mut visited: Vec<HashSet<CanonicalCode>> = vec![HashSet::new(); stages.len()];
    let mut links = Vec::with_capacity(stages.len());
    chain_dfs(map, stages, first_edges, &mut visited, &mut links).then_some(links)
}

fn chain_dfs(
    map: &PlanarMap,
    stages: &[Stage],
    edges: &[Dart],
    visited: &mut [HashSet<CanonicalCode>],
    links: &mut Vec<Link>,
) -> bool {
    let depth = links.len();
    if depth == stages.len() {
        return true;
    }
    let stage = stages[depth];
    let spec = stage
        .op
        .truncation_spec()
        .expect("stage undoes a single truncation");
    for &d in edges {
        let Some(link) = straighten_if(map, d, &spec, stage.accept) else {
            continue;
        };
        if !visited[depth].insert(canonical_code(&link.pred, true)) {
            continue;
        }
        let pred = link.pred.clone();
        links.push(link);
        let next_edges = all_edges(&pred);
        if chain_dfs(&pred, stages, &next_edges, visited, links) {
            return true;
        }
        links.pop();
    }
    false
}

/// Builds the growth step that reverses `links` (given in reduction order).
pub(crate) fn step_from_links(
    kind: GrowthOpKind,
    case: &str,
    links: &[Link],
    result: CanonicalCode,
    include_reflection: bool,
) -> GrowthStep {
    let truncations = links
        .iter()
        .rev()
        .map(|l| {
            PrimitiveTruncation::anchor(
                &canonical_form(&l.pred, include_reflection),
                &l.pred,
                l.site,
            )
        })
        .collect();
    GrowthStep {
        kind,
        case: case.to_string(),
        truncations,
        result,
    }
}
