use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::planar_map::{Dart, FaceId, PlanarMap};

use super::StructureError;

/// A cyclic sequence of faces, consecutive ones sharing an edge, read off one
/// side of the edge-cycle `boundary`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KLoop {
    pub faces: Vec<FaceId>,
    /// Darts of the bordering edge-cycle, with the loop on their face side.
    pub boundary: Vec<Dart>,
    /// Number of boundary edges on each face, in loop order.
    pub edge_counts: Vec<usize>,
}

impl KLoop {
    pub fn is_simple(&self) -> bool {
        let set: HashSet<FaceId> = self.faces.iter().copied().collect();
        set.len() == self.faces.len()
    }
}

/// Faces meet the walk's face side in runs of 1,3,1,3,1,3 edges: the face
/// changes after edges 0, 3, 4, 7, 8 and 11.
const SWITCH_AFTER: [bool; 12] = [
    true, false, false, true, true, false, false, true, true, false, false, true,
];

/// Walks 12 edges from `start`, keeping the face side in runs (1,3,1,3,1,3).
/// Returns the loop on the face side if the walk is a simple closed edge-cycle.
fn walk_131313(map: &PlanarMap, start: Dart) -> Option<KLoop> {
    let mut darts = Vec::with_capacity(12);
    let mut d = start;
    let mut seen = HashSet::new();
    for &switch in &SWITCH_AFTER {
        if !seen.insert(map.source(d)) {
            return None;
        }
        darts.push(d);
        let t = map.twin(d);
        d = if switch { map.prev(t) } else { map.next(t) };
    }
    if d != start {
        return None;
    }
    let mut faces = Vec::with_capacity(6);
    let mut edge_counts = Vec::with_capacity(6);
    for (i, &e) in darts.iter().enumerate() {
        if i == 0 || SWITCH_AFTER[i - 1] {
            faces.push(map.face_of(e));
            edge_counts.push(0);
        }
        *edge_counts.last_mut().unwrap() += 1;
    }
    Some(KLoop {
        faces,
        boundary: darts,
        edge_counts,
    })
}

/// Faces on the other side of a walk produced by [`walk_131313`]: runs of
/// (3,1,3,1,3,1) starting at edge 11, named (F_p, F_t, F_q, F_u, F_v, F_w).
fn opposite_loop(map: &PlanarMap, boundary: &[Dart]) -> Vec<FaceId> {
    [11, 2, 3, 6, 7, 10]
        .iter()
        .map(|&i| map.face_across(boundary[i]))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopViolation {
    pub inner: KLoop,
    pub reason: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct LoopReport {
    pub loops_checked: usize,
    /// The bordering loop closes into a cap of six faces.
    pub cap_branch: usize,
    /// Three hexagons continue the pattern into a new (1,3,1,3,1,3) loop.
    pub propagating_branch: usize,
    pub violations: Vec<LoopViolation>,
}

/// Every simple 6-loop bordered with (1,3,1,3,1,3) edges is checked for the
/// dichotomy: the loop across the boundary is simple and either closes into a
/// six-face cap, or its three 3-edge faces are hexagons and, together with the
/// 3-edge faces of the inner loop, form a new simple (1,3,1,3,1,3) loop on the
/// far side.
pub fn check_131313(map: &PlanarMap) -> Result<LoopReport, StructureError> {
    if !map.is_fullerene() {
        return Err(StructureError::NotAFullerene);
    }
    let mut report = LoopReport::default();
    let mut seen: HashSet<(BTreeSet<usize>, BTreeSet<FaceId>)> = HashSet::new();
    for start in 0..map.num_darts() {
        let Some(inner) = walk_131313(map, start) else {
            continue;
        };
        if !inner.is_simple() {
            continue;
        }
        let key = (
            inner.boundary.iter().map(|&d| map.source(d)).collect(),
            inner.faces.iter().copied().collect(),
        );
        if !seen.insert(key) {
            continue;
        }
        report.loops_checked += 1;
        let outer = opposite_loop(map, &inner.boundary);
        let outer_set: HashSet<FaceId> = outer.iter().copied().collect();
        if outer_set.len() != 6 {
            report.violations.push(LoopViolation {
                inner,
                reason: "bordering loop is not simple".into(),
            });
            continue;
        }
        if side_region(map, &inner.boundary, outer[1]) == outer_set {
            report.cap_branch += 1;
            continue;
        }
        let (fp, fq, fv) = (outer[0], outer[2], outer[4]);
        let hexagons = [fp, fq, fv].iter().all(|&f| map.face_size(f) == 6);
        let next = walk_131313(map, inner.boundary[2]);
        let expected = vec![inner.faces[1], fq, inner.faces[3], fv, inner.faces[5], fp];
        match next {
            Some(l3) if hexagons && l3.is_simple() && l3.faces == expected => {
                report.propagating_branch += 1
            }
            _ => report.violations.push(LoopViolation {
                inner,
                reason: "bordering loop neither closes nor continues with hexagons".into(),
            }),
        }
    }
    Ok(report)
}

/// Faces reachable from `seed` without crossing the edges of `boundary`.
fn side_region(map: &PlanarMap, boundary: &[Dart], seed: FaceId) -> HashSet<FaceId> {
    let blocked: HashSet<Dart> = boundary.iter().flat_map(|&d| [d, map.twin(d)]).collect();
    let mut region = HashSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(f) = queue.pop_front() {
        for &d in map.face_darts(f) {
            if blocked.contains(&d) {
                continue;
            }
            let g = map.face_across(d);
            if region.insert(g) {
                queue.push_back(g);
            }
        }
    }
    region
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::build_dodecahedron;

    #[test]
    fn dodecahedron_has_only_caps() {
        let r = check_131313(&build_dodecahedron()).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.propagating_branch, 0);
        assert!(r.loops_checked > 0);
        assert_eq!(r.cap_branch, r.loops_checked);
    }
}
