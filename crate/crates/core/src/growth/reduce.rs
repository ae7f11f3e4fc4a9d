//! Constructive reducers: one growth step backwards at a time, down to the dodecahedron.

use crate::planar_map::{
    build_dodecahedron, canonical_code, canonical_form, CanonicalCode, Dart, FaceId, PlanarMap,
};
use crate::structure::{classify, find_fragments, Embedding, FamilyClass, FragmentPattern};
use crate::transform::edge_faces;

use super::forward::nanotube_growth_chain;
use super::nanotube::{build_nanotube, recognize_nanotube, NanotubeFamily};
use super::ops::{DerivationTrace, GrowthOpKind, GrowthStep, Regime};
use super::search::{
    all_edges, find_chain, find_single, is_f1, is_f1_ipr, is_f_minus1, is_fullerene,
    step_from_links, Link, Stage,
};
use super::GrowthError;

use GrowthOpKind::*;

/// A found reduction, links in reduction order.
struct Found {
    kind: GrowthOpKind,
    case: String,
    links: Vec<Link>,
}

impl Found {
    fn new(kind: GrowthOpKind, case: &str, links: Vec<Link>) -> Found {
        Found {
            kind,
            case: case.to_string(),
            links,
        }
    }
}

/// One growth step backwards: returns the predecessor (in canonical labeling)
/// and the forward step that rebuilds `map` from it.
pub fn reduce_once(
    map: &PlanarMap,
    regime: Regime,
    include_reflection: bool,
) -> Result<(PlanarMap, GrowthStep), GrowthError> {
    let cf = canonical_form(map, include_reflection);
    let m = &cf.map;
    if cf.code == canonical_code(&build_dodecahedron(), include_reflection) {
        return Err(GrowthError::AtDodecahedron);
    }
    let class = classify(m)?;
    if !regime.admits(class) {
        return Err(GrowthError::NotInFamily { regime, class });
    }
    let no_case = |detail: &str| GrowthError::NoCaseApplies {
        regime,
        class,
        code: cf.code.clone(),
        detail: detail.to_string(),
    };
    if regime != Regime::Seven && class.is_fullerene() {
        if let Some((family, k)) = recognize_nanotube(m)? {
            if k == 0 {
                return Err(no_case(
                    "dodecahedral tube with k = 0 is not the dodecahedron",
                ));
            }
            return nanotube_step(family, k, include_reflection, &cf.code);
        }
    }
    let found = match regime {
        Regime::Seven => reduce_seven(m, class),
        Regime::AOps => reduce_a(m, class),
        Regime::AbOps => reduce_ab(m, class),
    };
    let found = found.ok_or_else(|| no_case("no reduction case applies"))?;
    let pred = found
        .links
        .last()
        .expect("a reduction has at least one link")
        .pred
        .clone();
    let step = step_from_links(
        found.kind,
        &found.case,
        &found.links,
        cf.code.clone(),
        include_reflection,
    );
    let pred_form = canonical_form(&pred, include_reflection);
    let replayed = step.replay(&pred_form.code, include_reflection)?;
    if canonical_code(&replayed, include_reflection) != cf.code {
        return Err(GrowthError::ReplayMismatch { step: 0 });
    }
    Ok((pred_form.map, step))
}

fn nanotube_step(
    family: NanotubeFamily,
    k: usize,
    include_reflection: bool,
    code: &CanonicalCode,
) -> Result<(PlanarMap, GrowthStep), GrowthError> {
    let truncations = nanotube_growth_chain(family, k - 1, include_reflection)?;
    let pred = canonical_code(&build_nanotube(family, k - 1), include_reflection);
    let kind = if family == NanotubeFamily::D5 { A1 } else { A2 };
    let step = GrowthStep {
        kind,
        case: format!("{family}{} to {family}{k}", k - 1),
        truncations,
        result: code.clone(),
    };
    Ok((pred.to_map().ok_or(GrowthError::InvalidCode)?, step))
}

/// Truncation to undo, accepted result classes and case name.
type SevenCase = (GrowthOpKind, fn(FamilyClass) -> bool, &'static str);

fn reduce_seven(m: &PlanarMap, class: FamilyClass) -> Option<Found> {
    let edges = all_edges(m);
    let table: &[SevenCase] = match class {
        FamilyClass::FMinus1 => &[
            (T155, is_fullerene, "quadrangle"),
            (T145, is_f_minus1, "quadrangle"),
        ],
        FamilyClass::F1 | FamilyClass::F1Ipr => &[
            (T2656, is_fullerene, "heptagon"),
            (T2756, is_f1, "heptagon"),
        ],
        _ => &[
            (T2655, is_fullerene, "fullerene"),
            (T2645, is_f_minus1, "fullerene"),
            (T2755, is_f1, "fullerene"),
        ],
    };
    table.iter().find_map(|&(op, accept, case)| {
        find_single(m, Stage::new(op, accept), &edges).map(|l| Found::new(op, case, vec![l]))
    })
}

/// The dart of the edge between two faces.
fn shared_edge(m: &PlanarMap, a: FaceId, b: FaceId) -> Option<Dart> {
    m.face_darts(a)
        .iter()
        .copied()
        .find(|&d| m.face_across(d) == b)
}

/// Dispatch on a fullerene with adjacent pentagons: P1 or P2
/// patches (caps are handled by the nanotube step).
fn reduce_adjacent_pentagons(m: &PlanarMap) -> Option<Found> {
    for emb in find_fragments(m, FragmentPattern::P1) {
        let d = shared_edge(m, emb.faces[0], emb.faces[1])?;
        if let Some(l) = find_single(m, Stage::new(T2655, is_fullerene), &[d]) {
            return Some(Found::new(T2655, "P1", vec![l]));
        }
    }
    for emb in find_fragments(m, FragmentPattern::P2) {
        if let Some(links) = reduce_p2(m, &emb) {
            return Some(Found::new(A3, "P2", links));
        }
    }
    None
}

/// Undoes A3 at a P2 patch: merge the pentagon pair at the hexagon end, then
/// straighten the resulting quadrangle into its neighbor.
fn reduce_p2(m: &PlanarMap, emb: &Embedding) -> Option<Vec<Link>> {
    let d = shared_edge(m, emb.faces[0], emb.faces[1])?;
    find_chain(
        m,
        &[
            Stage::new(T2645, is_f_minus1),
            Stage::new(T155, is_fullerene),
        ],
        &[d],
    )
}

fn reduce_a(m: &PlanarMap, class: FamilyClass) -> Option<Found> {
    let edges = all_edges(m);
    match class {
        FamilyClass::F => reduce_adjacent_pentagons(m),
        FamilyClass::FIpr => find_single(m, Stage::new(T2755, is_f1), &edges)
            .map(|l| Found::new(T2755, "IPR", vec![l])),
        FamilyClass::F1 | FamilyClass::F1Ipr => {
            find_single(m, Stage::new(T2656, is_fullerene), &edges)
                .map(|l| Found::new(T2656, "F1 to F", vec![l]))
                .or_else(|| {
                    find_single(m, Stage::new(T2756, is_f1), &edges)
                        .map(|l| Found::new(T2756, "F1 to F1", vec![l]))
                })
        }
        _ => None,
    }
}

fn reduce_ab(m: &PlanarMap, class: FamilyClass) -> Option<Found> {
    match class {
        FamilyClass::F => reduce_adjacent_pentagons(m),
        FamilyClass::FIpr => reduce_ipr_fullerene(m),
        FamilyClass::F1Ipr => reduce_f1_ipr(m),
        _ => None,
    }
}

/// Edges whose two end faces are both pentagons (each endpoint lies on a pentagon
/// not containing the edge).
fn edges_between_pentagon_ends(m: &PlanarMap) -> Vec<Dart> {
    m.edge_darts()
        .filter(|&d| {
            let f = edge_faces(m, d);
            m.face_size(f.at_source) == 5 && m.face_size(f.at_target) == 5
        })
        .collect()
}

/// Hexagons with pentagons across two opposite edges.
fn hexagons_with_opposite_pentagons(m: &PlanarMap) -> Vec<FaceId> {
    (0..m.num_faces())
        .filter(|&h| {
            if m.face_size(h) != 6 {
                return false;
            }
            let around: Vec<usize> = m
                .face_darts(h)
                .iter()
                .map(|&d| m.face_size(m.face_across(d)))
                .collect();
            (0..3).any(|i| around[i] == 5 && around[i + 3] == 5)
        })
        .collect()
}

/// Edges of the faces listed, deduplicated, in dart order.
fn edges_of_faces(m: &PlanarMap, faces: &[FaceId]) -> Vec<Dart> {
    let mut out: Vec<Dart> = faces
        .iter()
        .flat_map(|&f| m.face_darts(f).iter().map(|&d| d.min(m.twin(d))))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn reduce_ipr_fullerene(m: &PlanarMap) -> Option<Found> {
    let all = all_edges(m);
    let case1 = edges_between_pentagon_ends(m);
    if !case1.is_empty() {
        let stages = [Stage::new(T2755, is_f1), Stage::new(T2656, is_fullerene)];
        for &e in &case1 {
            let f = edge_faces(m, e);
            let local = edges_of_faces(m, &[f.at_source, f.at_target]);
            if let Some(links) = find_chain(m, &stages, &local) {
                return Some(Found::new(B1, "edge between two pentagons", links));
            }
        }
        return find_chain(m, &stages, &all)
            .map(|links| Found::new(B1, "edge between two pentagons", links));
    }
    let case2 = hexagons_with_opposite_pentagons(m);
    if !case2.is_empty() {
        let stages = [
            Stage::new(T2755, is_f1),
            Stage::new(T2756, is_f1),
            Stage::new(T2656, is_fullerene),
        ];
        for &h in &case2 {
            let pentagons: Vec<FaceId> = m
                .face_neighbors(h)
                .into_iter()
                .filter(|&g| m.face_size(g) == 5)
                .collect();
            let local = edges_of_faces(m, &pentagons);
            if let Some(links) = find_chain(m, &stages, &local) {
                return Some(Found::new(B3, "hexagon between opposite pentagons", links));
            }
        }
        return find_chain(m, &stages, &all)
            .map(|links| Found::new(B3, "hexagon between opposite pentagons", links));
    }
    find_single(m, Stage::new(T2755, is_f1_ipr), &all)
        .map(|l| Found::new(T2755, "isolated pentagon belts", vec![l]))
}

/// Which facet near the shrunken hexagon is a pentagon, per the cases of the
/// heptagon reduction: `u`, `v` or `w` in order away from the merged pair.
fn f1_ipr_case(m: &PlanarMap, d: Dart) -> Option<GrowthOpKind> {
    let ef = edge_faces(m, d);
    let (x, r) = if m.face_size(ef.left) == 5 {
        (ef.left, ef.right)
    } else {
        (ef.right, ef.left)
    };
    let m1 = if m.face_size(ef.at_source) == 6 {
        ef.at_source
    } else {
        ef.at_target
    };
    let around: Vec<FaceId> = m.face_darts(m1).iter().map(|&e| m.face_across(e)).collect();
    let n = around.len();
    let ix = around.iter().position(|&g| g == x)?;
    let ir = around.iter().position(|&g| g == r)?;
    let dir = if (ix + 1) % n == ir { 1 } else { n - 1 };
    let at = |steps: usize| around[(ir + steps * dir) % n];
    let (fu, fv, fw) = (at(1), at(2), at(3));
    if m.face_size(fu) == 5 {
        Some(B2)
    } else if m.face_size(fv) == 5 {
        Some(B4)
    } else if m.face_size(fw) == 5 {
        Some(B5)
    } else {
        None
    }
}

fn reduce_f1_ipr(m: &PlanarMap) -> Option<Found> {
    let heptagon = (0..m.num_faces()).find(|&f| m.face_size(f) == 7)?;
    // edges between a pentagon next to the heptagon and a hexagon, ending at the heptagon
    let candidates: Vec<Dart> = m
        .edge_darts()
        .filter(|&d| {
            let ef = edge_faces(m, d);
            let sizes = (m.face_size(ef.left), m.face_size(ef.right));
            (sizes == (5, 6) || sizes == (6, 5))
                && (ef.at_source == heptagon || ef.at_target == heptagon)
        })
        .collect();
    if let Some(l) = find_single(m, Stage::new(T2756, is_f1_ipr), &candidates) {
        return Some(Found::new(
            T2756,
            "heptagon with isolated pentagons",
            vec![l],
        ));
    }
    for &d in &candidates {
        let Some(kind) = f1_ipr_case(m, d) else {
            continue;
        };
        let stages: &[Stage] = match kind {
            B2 => &[Stage::new(T2756, is_f1), Stage::new(T2656, is_fullerene)],
            _ => &[
                Stage::new(T2756, is_f1),
                Stage::new(T2756, is_f1),
                Stage::new(T2656, is_fullerene),
            ],
        };
        let case = match kind {
            B2 => "pentagon at u",
            B4 => "pentagon at v",
            _ => "pentagon at w",
        };
        if let Some(links) = find_chain(m, stages, &[d]) {
            return Some(Found::new(kind, case, links));
        }
    }
    None
}

/// Reduces `map` step by step to the dodecahedron and returns the derivation
/// in growth order, verified by forward replay.
pub fn reduce_to_dodecahedron(
    map: &PlanarMap,
    regime: Regime,
    include_reflection: bool,
) -> Result<DerivationTrace, GrowthError> {
    let mut trace = DerivationTrace::new(regime, include_reflection);
    let mut current = map.clone();
    let mut steps = Vec::new();
    loop {
        match reduce_once(&current, regime, include_reflection) {
            Ok((pred, step)) => {
                steps.push(step);
                current = pred;
            }
            Err(GrowthError::AtDodecahedron) => break,
            Err(e) => return Err(e),
        }
    }
    steps.reverse();
    trace.steps = steps;
    trace.verify()?;
    Ok(trace)
}
