//! The two primitive rewrites on simple polytopes: `(s,k;m1,m2)`-truncation
//! (a chord inserted across a k-gon) and straightening along an edge (the
//! edge is deleted and its two endpoints are smoothed away).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::planar_map::{check_polytopal, Dart, FaceId, MapError, PlanarMap, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("invalid truncation site: {0}")]
    InvalidSite(String),
    #[error("no straightening is defined on the simplex")]
    SimplexInput,
    #[error("faces {0} and {1} form a 3-belt with face {2}")]
    ThreeBeltObstruction(FaceId, FaceId, FaceId),
    #[error("faces {0} and {1} share more than one edge")]
    MultipleSharedEdges(FaceId, FaceId),
    #[error("rewrite produced an invalid map: {0}")]
    Invalid(#[from] MapError),
    #[error("straightening produced a map that is not 3-connected")]
    ResultNotPolytopal,
}

/// Where a truncation is applied: `s` consecutive edges of the face of
/// `start_dart`, beginning with `start_dart` and continuing in face order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TruncationSite {
    pub face: FaceId,
    pub start_dart: Dart,
    pub s: usize,
}

impl TruncationSite {
    pub fn new(map: &PlanarMap, start_dart: Dart, s: usize) -> Self {
        TruncationSite {
            face: map.face_of(start_dart),
            start_dart,
            s,
        }
    }

    fn check(&self, map: &PlanarMap) -> Result<(), TransformError> {
        if self.start_dart >= map.num_darts() {
            return Err(TransformError::InvalidSite(format!(
                "dart {} out of range",
                self.start_dart
            )));
        }
        if map.face_of(self.start_dart) != self.face {
            return Err(TransformError::InvalidSite(format!(
                "dart {} is not on face {}",
                self.start_dart, self.face
            )));
        }
        let k = map.face_size(self.face);
        if self.s + 2 > k {
            return Err(TransformError::InvalidSite(format!(
                "s = {} exceeds k - 2 = {}",
                self.s,
                k - 2
            )));
        }
        Ok(())
    }

    /// Dart of the edge preceding the truncated run (its face across is the m1-gon).
    pub fn first_side(&self, map: &PlanarMap) -> Dart {
        map.phi_inv(self.start_dart)
    }

    /// Dart of the edge following the truncated run (its face across is the m2-gon).
    pub fn second_side(&self, map: &PlanarMap) -> Dart {
        (0..self.s).fold(self.start_dart, |d, _| map.phi(d))
    }

    pub fn kind(&self, map: &PlanarMap) -> TruncationKind {
        let k = map.face_size(self.face);
        let m1 = map.face_size(map.face_across(self.first_side(map)));
        let m2 = map.face_size(map.face_across(self.second_side(map)));
        TruncationKind::new(self.s, k, m1, m2)
    }

    /// Key identifying the resulting map: vertex truncations from any of the
    /// three faces coincide, as do edge truncations from either side.
    fn dedup_key(&self, map: &PlanarMap) -> SiteKey {
        let k = map.face_size(self.face);
        let e1 = self.first_side(map);
        let e2 = self.second_side(map);
        let edge = |d: Dart| d.min(map.twin(d));
        if self.s == 0 || self.s == k - 2 {
            let v = if self.s == 0 {
                map.source(self.start_dart)
            } else {
                map.source(e1)
            };
            SiteKey::Vertex(v)
        } else if self.s == 1 {
            SiteKey::Edge(edge(self.start_dart))
        } else if self.s == k - 3 {
            SiteKey::Edge(edge(map.phi(e2)))
        } else {
            let (a, b) = (edge(e1), edge(e2));
            SiteKey::Chord(self.face, a.min(b), a.max(b))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum SiteKey {
    Vertex(Vertex),
    Edge(Dart),
    Chord(FaceId, Dart, Dart),
}

/// Normalized `(s,k;m1,m2)` label: `s <= k - 2 - s` and `m1 <= m2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TruncationKind {
    pub s: usize,
    pub k: usize,
    pub m1: usize,
    pub m2: usize,
}

impl TruncationKind {
    pub fn new(s: usize, k: usize, m1: usize, m2: usize) -> Self {
        let s = s.min(k - 2 - s);
        TruncationKind {
            s,
            k,
            m1: m1.min(m2),
            m2: m1.max(m2),
        }
    }

    pub fn matches(&self, spec: &KindSpec) -> bool {
        let m_ok = match (spec.m1, spec.m2) {
            (Some(a), Some(b)) => (a.min(b), a.max(b)) == (self.m1, self.m2),
            (Some(a), None) | (None, Some(a)) => self.m1 == a || self.m2 == a,
            (None, None) => true,
        };
        // an edge truncation does not depend on which face carries the chord
        let k_ok = self.s == 1 || spec.k.is_none_or(|k| k == self.k);
        spec.s.is_none_or(|s| s == self.s) && k_ok && m_ok
    }
}

impl fmt::Display for TruncationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "(1;{},{})", self.m1, self.m2)
        } else {
            write!(f, "({},{};{},{})", self.s, self.k, self.m1, self.m2)
        }
    }
}

/// Site filter with wildcards. `(m1, m2)` is matched unordered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KindSpec {
    pub s: Option<usize>,
    pub k: Option<usize>,
    pub m1: Option<usize>,
    pub m2: Option<usize>,
}

impl KindSpec {
    pub const fn exact(s: usize, k: usize, m1: usize, m2: usize) -> Self {
        KindSpec {
            s: Some(s),
            k: Some(k),
            m1: Some(m1),
            m2: Some(m2),
        }
    }

    pub const fn edge(m1: usize, m2: usize) -> Self {
        KindSpec {
            s: Some(1),
            k: None,
            m1: Some(m1),
            m2: Some(m2),
        }
    }
}

/// All sites matching `spec`, one per distinct resulting rewrite.
pub fn enumerate_sites(map: &PlanarMap, spec: &KindSpec) -> Vec<TruncationSite> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for face in 0..map.num_faces() {
        let k = map.face_size(face);
        if let Some(sk) = spec.k {
            if spec.s != Some(1) && sk != k {
                continue;
            }
        }
        let s_range: Vec<usize> = match spec.s {
            Some(s) => {
                let mut v = vec![s];
                if k >= 2 + s && k - 2 - s != s {
                    v.push(k - 2 - s);
                }
                v
            }
            None => (0..=k.saturating_sub(2)).collect(),
        };
        for &d in map.face_darts(face) {
            for &s in &s_range {
                if s + 2 > k {
                    continue;
                }
                let site = TruncationSite {
                    face,
                    start_dart: d,
                    s,
                };
                if !site.kind(map).matches(spec) {
                    continue;
                }
                if seen.insert(site.dedup_key(map)) {
                    out.push(site);
                }
            }
        }
    }
    out
}

fn insert_between(face: &mut Vec<Vertex>, a: Vertex, b: Vertex, x: Vertex) -> bool {
    let k = face.len();
    for i in 0..k {
        if face[i] == a && face[(i + 1) % k] == b {
            face.insert(i + 1, x);
            return true;
        }
    }
    false
}

/// Applies the truncation. Returns the new map and the dart (in the new map)
/// of the edge between the new `(s+3)`-gon and the shrunken `(k-s+1)`-gon.
pub fn truncate_with_edge(
    map: &PlanarMap,
    site: TruncationSite,
) -> Result<(PlanarMap, Dart), TransformError> {
    site.check(map)?;
    let e1 = site.first_side(map);
    let e2 = site.second_side(map);
    let (a1, b1) = (map.source(e1), map.target(e1));
    let (a2, b2) = (map.source(e2), map.target(e2));
    let n = map.num_vertices();
    let (x, y) = (n, n + 1);

    let mut faces = map.face_cycles();
    let darts = map.face_darts(site.face);
    let start_pos = darts.iter().position(|&d| d == site.start_dart).unwrap();
    let k = darts.len();
    let ring: Vec<Vertex> = (0..k)
        .map(|i| map.source(darts[(start_pos + i) % k]))
        .collect();
    // ring[0] = b1, ring[s] = a2, ring[s+1] = b2, ring[k-1] = a1
    let mut new_face = vec![x];
    new_face.extend_from_slice(&ring[..=site.s]);
    new_face.push(y);
    let mut remnant = vec![y];
    remnant.extend_from_slice(&ring[site.s + 1..]);
    remnant.push(x);

    let across1 = map.face_across(e1);
    let across2 = map.face_across(e2);
    let ok1 = insert_between(&mut faces[across1], b1, a1, x);
    let ok2 = insert_between(&mut faces[across2], b2, a2, y);
    debug_assert!(ok1 && ok2);
    faces[site.face] = remnant;
    faces.push(new_face);

    let out = PlanarMap::from_faces(&faces)?;
    let edge = out.dart_between(x, y).expect("chord edge exists");
    Ok((out, edge))
}

pub fn truncate(map: &PlanarMap, site: TruncationSite) -> Result<PlanarMap, TransformError> {
    truncate_with_edge(map, site).map(|(m, _)| m)
}

/// The faces involved in straightening along the edge of `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeFaces {
    /// Face of `d`.
    pub left: FaceId,
    /// Face of `twin(d)`.
    pub right: FaceId,
    /// Third face at the source of `d`.
    pub at_source: FaceId,
    /// Third face at the target of `d`.
    pub at_target: FaceId,
}

pub fn edge_faces(map: &PlanarMap, d: Dart) -> EdgeFaces {
    let t = map.twin(d);
    EdgeFaces {
        left: map.face_of(d),
        right: map.face_of(t),
        at_source: map.face_of(map.prev(d)),
        at_target: map.face_of(map.prev(t)),
    }
}

/// The truncation kind whose inverse is straightening along `d`.
pub fn straightening_kind(map: &PlanarMap, d: Dart) -> TruncationKind {
    let f = edge_faces(map, d);
    let a = map.face_size(f.left);
    let b = map.face_size(f.right);
    let c = map.face_size(f.at_source);
    let e = map.face_size(f.at_target);
    TruncationKind::new(a - 3, a + b - 4, c - 1, e - 1)
}

/// Checks the 3-belt criterion for straightening along `d`.
pub fn straightening_obstruction(map: &PlanarMap, d: Dart) -> Result<(), TransformError> {
    if map.is_simplex() {
        return Err(TransformError::SimplexInput);
    }
    let f = edge_faces(map, d);
    if f.left == f.right {
        return Err(TransformError::MultipleSharedEdges(f.left, f.right));
    }
    let shared = map
        .face_darts(f.left)
        .iter()
        .filter(|&&x| map.face_across(x) == f.right)
        .count();
    if shared > 1 {
        return Err(TransformError::MultipleSharedEdges(f.left, f.right));
    }
    let right_nbrs: HashSet<FaceId> = map.face_neighbors(f.right).into_iter().collect();
    for other in map.face_neighbors(f.left) {
        if other != f.right
            && other != f.at_source
            && other != f.at_target
            && right_nbrs.contains(&other)
        {
            return Err(TransformError::ThreeBeltObstruction(f.left, f.right, other));
        }
    }
    Ok(())
}

/// Straightens along the edge of `d`. Also returns the truncation site on the
/// result that recreates the input (the face of `d` playing the new facet).
pub fn straighten_with_inverse(
    map: &PlanarMap,
    d: Dart,
) -> Result<(PlanarMap, TruncationSite), TransformError> {
    straightening_obstruction(map, d)?;
    let (u, v) = (map.source(d), map.target(d));
    let f = edge_faces(map, d);
    let rotate_to = |cycle: Vec<Vertex>, first: Vertex| -> Vec<Vertex> {
        let p = cycle.iter().position(|&w| w == first).unwrap();
        cycle[p..]
            .iter()
            .chain(cycle[..p].iter())
            .copied()
            .collect()
    };
    let left = rotate_to(map.face_vertices(f.left), u); // u, v, a2..
    let right = rotate_to(map.face_vertices(f.right), v); // v, u, b2..
    debug_assert_eq!(left[1], v);
    debug_assert_eq!(right[1], u);
    let a2 = left[2];
    let mut merged: Vec<Vertex> = left[2..].to_vec();
    merged.extend_from_slice(&right[2..]);
    let s = left.len() - 3;

    let relabel = |w: Vertex| w - (w > u) as usize - (w > v) as usize;
    let mut faces = Vec::with_capacity(map.num_faces() - 1);
    let mut merged_index = 0;
    for face in 0..map.num_faces() {
        if face == f.right {
            continue;
        }
        let cycle: Vec<Vertex> = if face == f.left {
            merged_index = faces.len();
            merged.clone()
        } else {
            map.face_vertices(face)
                .into_iter()
                .filter(|&w| w != u && w != v)
                .collect()
        };
        faces.push(cycle.into_iter().map(relabel).collect::<Vec<_>>());
    }
    let out = PlanarMap::from_faces(&faces)?;
    if !check_polytopal(&out) {
        return Err(TransformError::ResultNotPolytopal);
    }
    let m = &faces[merged_index];
    let a2n = relabel(a2);
    let pos = m.iter().position(|&w| w == a2n).unwrap();
    let after = m[(pos + 1) % m.len()];
    let start = out.dart_between(a2n, after).expect("merged face edge");
    Ok((out.clone(), TruncationSite::new(&out, start, s)))
}

pub fn straighten(map: &PlanarMap, d: Dart) -> Result<PlanarMap, TransformError> {
    straighten_with_inverse(map, d).map(|(m, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::canonical_code;

    fn k4() -> PlanarMap {
        PlanarMap::from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .unwrap()
    }

    #[test]
    fn vertex_truncation_of_tetrahedron() {
        let m = k4();
        let site = TruncationSite::new(&m, 0, 0);
        let t = truncate(&m, site).unwrap();
        assert_eq!(t.num_vertices(), 6);
        assert_eq!(t.p_vector().get(3), 2);
        assert_eq!(t.p_vector().get(4), 3);
    }

    #[test]
    fn invalid_sites() {
        let m = k4();
        let site = TruncationSite {
            face: m.face_of(0),
            start_dart: 0,
            s: 2,
        };
        assert!(matches!(
            truncate(&m, site),
            Err(TransformError::InvalidSite(_))
        ));
        let other_face = m.face_across(0);
        let site = TruncationSite {
            face: other_face,
            start_dart: 0,
            s: 0,
        };
        assert!(matches!(
            truncate(&m, site),
            Err(TransformError::InvalidSite(_))
        ));
    }

    #[test]
    fn simplex_has_no_straightening() {
        assert_eq!(
            straighten(&k4(), 0).unwrap_err(),
            TransformError::SimplexInput
        );
    }

    #[test]
    fn all_vertex_truncation_sites_coincide() {
        let m = k4();
        let sites = enumerate_sites(
            &m,
            &KindSpec {
                s: Some(0),
                ..Default::default()
            },
        );
        assert_eq!(sites.len(), 4);
        let codes: HashSet<_> = sites
            .iter()
            .map(|&s| canonical_code(&truncate(&m, s).unwrap(), true))
            .collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn truncation_then_straightening_round_trip() {
        let m = truncate(&k4(), TruncationSite::new(&k4(), 0, 0)).unwrap();
        // the triangular prism; truncate an edge and straighten it back
        for site in enumerate_sites(&m, &KindSpec::default()) {
            let (t, edge) = truncate_with_edge(&m, site).unwrap();
            let back = match straighten(&t, edge) {
                Ok(b) => b,
                Err(TransformError::ThreeBeltObstruction(..)) => continue,
                Err(e) => panic!("{e}"),
            };
            assert_eq!(canonical_code(&back, true), canonical_code(&m, true));
        }
    }
}
