use std::collections::HashSet;

use crate::planar_map::{FaceId, PlanarMap};

use super::StructureError;

/// A cyclic sequence of `k` pairwise distinct faces, consecutive ones
/// adjacent, non-consecutive ones disjoint, with empty total intersection.
/// Stored in a normal form: rotated to start at the smallest face id and
/// oriented so that the second entry is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Belt {
    pub faces: Vec<FaceId>,
}

impl Belt {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn normalized(mut faces: Vec<FaceId>) -> Belt {
        let k = faces.len();
        let min_pos = (0..k).min_by_key(|&i| faces[i]).unwrap_or(0);
        faces.rotate_left(min_pos);
        if k > 2 && faces[1] > faces[k - 1] {
            faces[1..].reverse();
        }
        Belt { faces }
    }

    /// The face this belt surrounds, if its faces are exactly the neighbors of one face.
    pub fn surrounded_face(&self, map: &PlanarMap) -> Option<FaceId> {
        let set: HashSet<FaceId> = self.faces.iter().copied().collect();
        (0..map.num_faces()).find(|&f| {
            map.face_size(f) == self.len()
                && !set.contains(&f)
                && map.face_neighbors(f).iter().all(|g| set.contains(g))
        })
    }
}

/// Face adjacency as sorted neighbor sets.
pub(crate) fn face_adjacency(map: &PlanarMap) -> Vec<HashSet<FaceId>> {
    (0..map.num_faces())
        .map(|f| map.face_neighbors(f).into_iter().collect())
        .collect()
}

fn common_vertex(map: &PlanarMap, faces: &[FaceId]) -> bool {
    (0..map.num_vertices()).any(|v| {
        let around = map.vertex_faces(v);
        faces.iter().all(|f| around.contains(f))
    })
}

/// All k-belts, each reported once up to rotation and reversal.
pub fn find_belts(map: &PlanarMap, k: usize) -> Vec<Belt> {
    assert!(k >= 3, "belts have length at least 3");
    let adj = face_adjacency(map);
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(k);
    for start in 0..map.num_faces() {
        path.clear();
        path.push(start);
        extend(map, &adj, k, &mut path, &mut out);
    }
    out.sort();
    out
}

fn extend(
    map: &PlanarMap,
    adj: &[HashSet<FaceId>],
    k: usize,
    path: &mut Vec<FaceId>,
    out: &mut Vec<Belt>,
) {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() == k {
        if adj[last].contains(&start) && path[1] < last && (k > 3 || !common_vertex(map, path)) {
            out.push(Belt::normalized(path.clone()));
        }
        return;
    }
    let mut candidates: Vec<FaceId> = adj[last].iter().copied().filter(|&f| f > start).collect();
    candidates.sort_unstable();
    for f in candidates {
        if path.contains(&f) {
            continue;
        }
        // only the previous face may touch f, except the start when closing
        let bad = path[..path.len() - 1]
            .iter()
            .enumerate()
            .any(|(i, &g)| adj[f].contains(&g) && !(i == 0 && path.len() + 1 == k));
        if bad {
            continue;
        }
        path.push(f);
        extend(map, adj, k, path, out);
        path.pop();
    }
}

/// Not the simplex and without 3-belts.
pub fn is_flag(map: &PlanarMap) -> bool {
    !map.is_simplex() && find_belts(map, 3).is_empty()
}

/// Counts of 5-belts around pentagons and of the remaining 5-belts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiveBeltCensus {
    pub pentagon_belts: usize,
    pub hexagon_belts: usize,
}

pub fn five_belt_census(map: &PlanarMap) -> Result<FiveBeltCensus, StructureError> {
    if !map.is_fullerene() {
        return Err(StructureError::NotAFullerene);
    }
    let mut census = FiveBeltCensus {
        pentagon_belts: 0,
        hexagon_belts: 0,
    };
    for belt in find_belts(map, 5) {
        if belt.surrounded_face(map).is_some() {
            census.pentagon_belts += 1;
        } else {
            census.hexagon_belts += 1;
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::build_dodecahedron;
    use crate::transform::{truncate, TruncationSite};

    fn cube() -> PlanarMap {
        let faces = vec![
            vec![0, 1, 2, 3],
            vec![4, 7, 6, 5],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ];
        PlanarMap::from_unoriented_faces(&faces).unwrap()
    }

    /// Independent 3-belt count: all face triples, checked against the definition.
    fn brute_three_belts(map: &PlanarMap) -> usize {
        let n = map.num_faces();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if map.faces_adjacent(a, b)
                        && map.faces_adjacent(b, c)
                        && map.faces_adjacent(a, c)
                        && !common_vertex(map, &[a, b, c])
                    {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn cube_belts() {
        let c = cube();
        assert!(find_belts(&c, 3).is_empty());
        assert_eq!(find_belts(&c, 4).len(), 3);
        assert!(is_flag(&c));
    }

    #[test]
    fn truncated_cube_corner_is_not_flag() {
        let c = cube();
        let t = truncate(&c, TruncationSite::new(&c, 0, 0)).unwrap();
        assert_eq!(t.num_faces(), 7);
        let belts = find_belts(&t, 3);
        assert_eq!(belts.len(), brute_three_belts(&t));
        assert_eq!(belts.len(), 1);
        assert!(!is_flag(&t));
    }

    #[test]
    fn dodecahedron_census() {
        let d = build_dodecahedron();
        assert!(find_belts(&d, 3).is_empty());
        assert!(find_belts(&d, 4).is_empty());
        assert_eq!(
            five_belt_census(&d).unwrap(),
            FiveBeltCensus {
                pentagon_belts: 12,
                hexagon_belts: 0
            }
        );
        assert!(is_flag(&d));
    }

    #[test]
    fn census_requires_fullerene() {
        assert_eq!(
            five_belt_census(&cube()).unwrap_err(),
            StructureError::NotAFullerene
        );
    }
}
