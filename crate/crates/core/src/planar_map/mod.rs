//! Oriented 3-regular planar maps.
//!
//! A map is stored as a rotation system: every vertex `v` owns the three
//! darts `3v`, `3v + 1`, `3v + 2`, listed counterclockwise. Dart `3v + i`
//! points from `v` to `adj[v][i]`. Faces are the orbits of
//! `phi = next . twin` and are derived once at construction.

mod canon;
mod planar_code;
mod polytopal;

pub use canon::{canonical_code, canonical_form, CanonicalCode, CanonicalForm};
pub use planar_code::{
    decode_planar_code, encode_planar_code, PlanarCodeError, PLANAR_CODE_HEADER,
};
pub use polytopal::{check_polytopal, is_three_connected};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub type Dart = usize;
pub type Vertex = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("vertex {vertex} has {degree} neighbors, expected 3")]
    NonCubic { vertex: Vertex, degree: usize },
    #[error("vertex {from} lists {to} as a neighbor but not vice versa")]
    Asymmetric { from: Vertex, to: Vertex },
    #[error("map is not simple at vertex {0} (loop or repeated neighbor)")]
    NotSimple(Vertex),
    #[error("Euler characteristic is {0}, expected 2")]
    NonSpherical(i64),
    #[error("map is disconnected")]
    Disconnected,
    #[error("inconsistent face list: {0}")]
    BadFaces(String),
}

/// Boundary complex of a simple 3-polytope as a cubic rotation system.
#[derive(Clone, PartialEq, Eq)]
pub struct PlanarMap {
    adj: Vec<[Vertex; 3]>,
    twin: Vec<Dart>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<Dart>>,
}

impl fmt::Debug for PlanarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlanarMap")
            .field("vertices", &self.num_vertices())
            .field("faces", &self.num_faces())
            .field("p_vector", &self.p_vector())
            .finish()
    }
}

/// Face-size census `p_k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PVector(pub BTreeMap<usize, usize>);

impl PVector {
    pub fn get(&self, k: usize) -> usize {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn num_faces(&self) -> usize {
        self.0.values().sum()
    }

    /// `sum (6 - k) p_k`, which is 12 for every cubic sphere map.
    pub fn curvature(&self) -> i64 {
        self.0
            .iter()
            .map(|(&k, &n)| (6 - k as i64) * n as i64)
            .sum()
    }

    /// `p6 + 2 p7 - p4`: the number of truncations separating a member of the
    /// extended fullerene family from the dodecahedron.
    pub fn growth_measure(&self) -> i64 {
        self.get(6) as i64 + 2 * self.get(7) as i64 - self.get(4) as i64
    }

    pub fn only_sizes(&self, allowed: &[usize]) -> bool {
        self.0.iter().all(|(k, &n)| n == 0 || allowed.contains(k))
    }
}

impl fmt::Display for PVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .filter(|(_, &n)| n > 0)
            .map(|(k, n)| format!("p{k}={n}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl PlanarMap {
    /// Builds a map from per-vertex neighbor lists in counterclockwise order.
    pub fn from_rotation(neighbors: &[Vec<Vertex>]) -> Result<Self, MapError> {
        let n = neighbors.len();
        let mut adj = Vec::with_capacity(n);
        for (v, list) in neighbors.iter().enumerate() {
            if list.len() != 3 {
                return Err(MapError::NonCubic {
                    vertex: v,
                    degree: list.len(),
                });
            }
            for &w in list {
                if w >= n {
                    return Err(MapError::Asymmetric { from: v, to: w });
                }
            }
            if list[0] == v || list[1] == v || list[2] == v {
                return Err(MapError::NotSimple(v));
            }
            if list[0] == list[1] || list[1] == list[2] || list[0] == list[2] {
                return Err(MapError::NotSimple(v));
            }
            adj.push([list[0], list[1], list[2]]);
        }
        Self::from_adj(adj)
    }

    fn from_adj(adj: Vec<[Vertex; 3]>) -> Result<Self, MapError> {
        let n = adj.len();
        if n == 0 {
            return Err(MapError::Disconnected);
        }
        let mut twin = vec![usize::MAX; 3 * n];
        for v in 0..n {
            for i in 0..3 {
                let w = adj[v][i];
                match adj[w].iter().position(|&x| x == v) {
                    Some(j) => twin[3 * v + i] = 3 * w + j,
                    None => return Err(MapError::Asymmetric { from: v, to: w }),
                }
            }
        }

        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        if count != n {
            return Err(MapError::Disconnected);
        }

        let mut face_of = vec![usize::MAX; 3 * n];
        let mut faces = Vec::new();
        for start in 0..3 * n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                cycle.push(d);
                d = next_dart(twin[d]);
                if d == start {
                    break;
                }
            }
            faces.push(cycle);
        }
        let euler = n as i64 - (3 * n / 2) as i64 + faces.len() as i64;
        if !(3 * n).is_multiple_of(2) || euler != 2 {
            return Err(MapError::NonSpherical(euler));
        }
        Ok(PlanarMap {
            adj,
            twin,
            face_of,
            faces,
        })
    }

    /// Builds a map from face boundaries. Each face is a vertex cycle; all
    /// faces must be oriented so that every directed edge occurs exactly once.
    /// Vertex ids must be dense `0..n`.
    pub fn from_faces(faces: &[Vec<Vertex>]) -> Result<Self, MapError> {
        let n = faces.iter().flatten().copied().max().map_or(0, |m| m + 1);
        // successor of directed pair (b, a) inside its face: the vertex after a
        let mut succ: HashMap<(Vertex, Vertex), Vertex> = HashMap::new();
        for face in faces {
            let k = face.len();
            if k < 3 {
                return Err(MapError::BadFaces(format!("face of size {k}")));
            }
            for i in 0..k {
                let (b, a, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                if succ.insert((b, a), c).is_some() {
                    return Err(MapError::BadFaces(format!(
                        "directed edge {b}->{a} repeated"
                    )));
                }
            }
        }
        let mut first: Vec<Option<Vertex>> = vec![None; n];
        for &(b, a) in succ.keys() {
            // directed edge b->a exists, so a has neighbor b
            if first[a].is_none() || first[a] > Some(b) {
                first[a] = Some(b);
            }
        }
        let mut neighbors = Vec::with_capacity(n);
        for a in 0..n {
            let b0 = first[a].ok_or_else(|| MapError::BadFaces(format!("vertex {a} unused")))?;
            let mut list = vec![b0];
            let mut b = b0;
            loop {
                // next(a->b) = phi(b->a) = a->succ(b,a)
                let c = *succ
                    .get(&(b, a))
                    .ok_or_else(|| MapError::BadFaces(format!("edge {a}-{b} has one side")))?;
                if c == b0 {
                    break;
                }
                list.push(c);
                b = c;
                if list.len() > 3 {
                    return Err(MapError::NonCubic {
                        vertex: a,
                        degree: list.len(),
                    });
                }
            }
            neighbors.push(list);
        }
        Self::from_rotation(&neighbors)
    }

    /// Like [`PlanarMap::from_faces`], but first reorients the given vertex
    /// cycles coherently (the orientation of the first face wins).
    pub fn from_unoriented_faces(faces: &[Vec<Vertex>]) -> Result<Self, MapError> {
        let oriented = orient_faces(faces)?;
        Self::from_faces(&oriented)
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.len() * 3 / 2
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }

    /// Counterclockwise neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> [Vertex; 3] {
        self.adj[v]
    }

    pub fn rotation_system(&self) -> Vec<Vec<Vertex>> {
        self.adj.iter().map(|a| a.to_vec()).collect()
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }

    /// Counterclockwise successor of `d` around its source vertex.
    pub fn next(&self, d: Dart) -> Dart {
        next_dart(d)
    }

    pub fn prev(&self, d: Dart) -> Dart {
        prev_dart(d)
    }

    /// Face successor: `next(twin(d))`.
    pub fn phi(&self, d: Dart) -> Dart {
        next_dart(self.twin[d])
    }

    pub fn phi_inv(&self, d: Dart) -> Dart {
        self.twin[prev_dart(d)]
    }

    pub fn source(&self, d: Dart) -> Vertex {
        d / 3
    }

    pub fn target(&self, d: Dart) -> Vertex {
        self.adj[d / 3][d % 3]
    }

    /// Dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: Vertex, v: Vertex) -> Option<Dart> {
        self.adj[u].iter().position(|&w| w == v).map(|i| 3 * u + i)
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        self.face_of[d]
    }

    /// Darts of face `f` in `phi` order.
    pub fn face_darts(&self, f: FaceId) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_size(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    pub fn face_sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Vertex cycle of face `f` (sources of its darts in `phi` order).
    pub fn face_vertices(&self, f: FaceId) -> Vec<Vertex> {
        self.faces[f].iter().map(|&d| d / 3).collect()
    }

    pub fn face_cycles(&self) -> Vec<Vec<Vertex>> {
        (0..self.num_faces())
            .map(|f| self.face_vertices(f))
            .collect()
    }

    /// The face across the edge of `d`, i.e. the face of `twin(d)`.
    pub fn face_across(&self, d: Dart) -> FaceId {
        self.face_of[self.twin[d]]
    }

    /// The three faces around vertex `v`.
    pub fn vertex_faces(&self, v: Vertex) -> [FaceId; 3] {
        [
            self.face_of[3 * v],
            self.face_of[3 * v + 1],
            self.face_of[3 * v + 2],
        ]
    }

    /// Faces sharing an edge with `f`, in `phi` order of the shared edges.
    pub fn face_neighbors(&self, f: FaceId) -> Vec<FaceId> {
        self.faces[f].iter().map(|&d| self.face_across(d)).collect()
    }

    pub fn faces_adjacent(&self, a: FaceId, b: FaceId) -> bool {
        self.faces[a].iter().any(|&d| self.face_across(d) == b)
    }

    /// One representative dart per undirected edge (the smaller id).
    pub fn edge_darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.num_darts()).filter(move |&d| d < self.twin[d])
    }

    pub fn p_vector(&self) -> PVector {
        let mut p = BTreeMap::new();
        for f in &self.faces {
            *p.entry(f.len()).or_insert(0) += 1;
        }
        PVector(p)
    }

    /// The same map with every rotation reversed.
    pub fn mirror(&self) -> PlanarMap {
        let adj = self.adj.iter().map(|a| [a[0], a[2], a[1]]).collect();
        PlanarMap::from_adj(adj).expect("mirror of a valid map is valid")
    }

    pub fn is_simplex(&self) -> bool {
        self.num_faces() == 4
    }

    pub fn is_fullerene(&self) -> bool {
        let p = self.p_vector();
        p.only_sizes(&[5, 6]) && p.get(5) == 12
    }
}

/// The regular dodecahedron, the unique fullerene without hexagons.
pub fn build_dodecahedron() -> PlanarMap {
    // top a_i = i, u_i = 5+i, w_i = 10+i, bottom d_i = 15+i
    let mut faces = vec![(0..5).collect::<Vec<_>>(), (15..20).rev().collect()];
    for i in 0..5 {
        let j = (i + 1) % 5;
        faces.push(vec![i, j, 5 + j, 10 + i, 5 + i]);
        faces.push(vec![10 + i, 5 + j, 10 + j, 15 + j, 15 + i]);
    }
    PlanarMap::from_unoriented_faces(&faces).expect("dodecahedron faces are valid")
}

fn next_dart(d: Dart) -> Dart {
    if d % 3 == 2 {
        d - 2
    } else {
        d + 1
    }
}

fn prev_dart(d: Dart) -> Dart {
    if d.is_multiple_of(3) {
        d + 2
    } else {
        d - 1
    }
}

/// Reorients vertex cycles so that every undirected edge is traversed once in
/// each direction. Fails if the faces do not form an orientable surface.
pub fn orient_faces(faces: &[Vec<Vertex>]) -> Result<Vec<Vec<Vertex>>, MapError> {
    let mut by_edge: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for j in 0..f.len() {
            let (a, b) = (f[j], f[(j + 1) % f.len()]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(i);
        }
    }
    let mut out: Vec<Option<Vec<Vertex>>> = vec![None; faces.len()];
    for root in 0..faces.len() {
        if out[root].is_some() {
            continue;
        }
        out[root] = Some(faces[root].clone());
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let f = out[i].clone().unwrap();
            for j in 0..f.len() {
                let (a, b) = (f[j], f[(j + 1) % f.len()]);
                let owners = &by_edge[&(a.min(b), a.max(b))];
                if owners.len() != 2 {
                    return Err(MapError::BadFaces(format!(
                        "edge {a}-{b} lies on {} faces",
                        owners.len()
                    )));
                }
                let other = if owners[0] == i { owners[1] } else { owners[0] };
                // the other face must traverse b -> a
                let g = &faces[other];
                let has_forward = (0..g.len()).any(|t| g[t] == a && g[(t + 1) % g.len()] == b);
                let candidate: Vec<Vertex> = if has_forward {
                    g.iter().rev().copied().collect()
                } else {
                    g.clone()
                };
                match &out[other] {
                    Some(existing) => {
                        if *existing != candidate {
                            return Err(MapError::BadFaces("non-orientable face set".into()));
                        }
                    }
                    None => {
                        out[other] = Some(candidate);
                        queue.push_back(other);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlanarMap {
        PlanarMap::from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .unwrap()
    }

    #[test]
    fn tetrahedron_from_rotation() {
        let m = k4();
        assert_eq!(m.num_faces(), 4);
        assert_eq!(m.p_vector().get(3), 4);
        assert!(m.is_simplex());
    }

    #[test]
    fn four_neighbors_is_non_cubic() {
        let err = PlanarMap::from_rotation(&[vec![1, 2, 3, 4]]).unwrap_err();
        assert!(matches!(
            err,
            MapError::NonCubic {
                vertex: 0,
                degree: 4
            }
        ));
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let err = PlanarMap::from_rotation(&[
            vec![1, 2, 3],
            vec![0, 2, 4],
            vec![0, 1, 3],
            vec![0, 2, 1],
            vec![0, 1, 2],
        ])
        .unwrap_err();
        assert!(matches!(err, MapError::Asymmetric { .. }));
    }

    #[test]
    fn twisted_rotation_is_not_spherical() {
        // K4 with one rotation flipped embeds on the torus
        let err =
            PlanarMap::from_rotation(&[vec![1, 3, 2], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
                .unwrap_err();
        assert!(matches!(err, MapError::NonSpherical(_)));
    }

    #[test]
    fn disconnected_rejected() {
        let mut lists = k4().rotation_system();
        let shifted: Vec<Vec<usize>> = lists
            .iter()
            .map(|l| l.iter().map(|x| x + 4).collect())
            .collect();
        lists.extend(shifted);
        assert_eq!(
            PlanarMap::from_rotation(&lists).unwrap_err(),
            MapError::Disconnected
        );
    }

    #[test]
    fn faces_round_trip() {
        let m = k4();
        let again = PlanarMap::from_faces(&m.face_cycles()).unwrap();
        assert_eq!(again, m);
        let mut scrambled = m.face_cycles();
        scrambled[1].reverse();
        scrambled[3].reverse();
        let oriented = PlanarMap::from_unoriented_faces(&scrambled).unwrap();
        assert_eq!(oriented.p_vector(), m.p_vector());
    }

    #[test]
    fn phi_inverse() {
        let m = k4();
        for d in 0..m.num_darts() {
            assert_eq!(m.phi_inv(m.phi(d)), d);
            assert_eq!(m.source(m.twin(d)), m.target(d));
        }
    }
}
