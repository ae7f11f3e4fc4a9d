use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::planar_map::{Dart, FaceId, PlanarMap, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FragmentPattern {
    /// A pentagon surrounded by five pentagons.
    C1,
    /// Three pentagons around a vertex plus the three pentagons in their outer corners.
    C2,
    /// Two adjacent pentagons whose common edge ends at two hexagons.
    P1,
    /// Three pentagons around a vertex; the face at the far end of one of the
    /// three edges is a hexagon, and so is the face of the third pentagon
    /// opposite the vertex.
    P2,
    /// Two adjacent pentagons whose common edge ends at a heptagon and a hexagon.
    HeptFragA,
    /// A heptagon adjacent to a pentagon.
    HeptFragB,
}

impl FragmentPattern {
    pub const ALL: [FragmentPattern; 6] = [
        FragmentPattern::C1,
        FragmentPattern::C2,
        FragmentPattern::P1,
        FragmentPattern::P2,
        FragmentPattern::HeptFragA,
        FragmentPattern::HeptFragB,
    ];

    pub fn template(self) -> Template {
        Template::new(self, template_faces(self))
    }
}

impl fmt::Display for FragmentPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FragmentPattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FragmentPattern::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown fragment pattern {s:?}"))
    }
}

fn template_faces(pattern: FragmentPattern) -> Vec<Vec<Vertex>> {
    match pattern {
        FragmentPattern::C1 => {
            // centre 0..5, o_i = 5+i, x_i = 10+i
            let mut faces = vec![(0..5).collect::<Vec<_>>()];
            for i in 0..5 {
                let j = (i + 1) % 5;
                faces.push(vec![j, i, 5 + i, 10 + i, 5 + j]);
            }
            faces
        }
        FragmentPattern::C2 => {
            // centre 0, x_t = 1+t, y1(t) = 4+2t, y2(t) = 5+2t, z1(t) = 10+2t, z2(t) = 11+2t
            let x = |t: usize| 1 + t % 3;
            let y1 = |t: usize| 4 + 2 * (t % 3);
            let y2 = |t: usize| 5 + 2 * (t % 3);
            let mut faces = Vec::new();
            for t in 0..3 {
                faces.push(vec![0, x(t + 2), y1(t), y2(t), x(t)]);
            }
            for t in 0..3 {
                faces.push(vec![x(t), y2(t), 10 + 2 * t, 11 + 2 * t, y1(t + 1)]);
            }
            faces
        }
        FragmentPattern::P1 | FragmentPattern::HeptFragA => {
            // u=0 v=1, a1..a3 = 2..4, b1..b3 = 5..7, then the two end faces
            let mut at_u = vec![0, 4, 8, 9, 10];
            if pattern == FragmentPattern::HeptFragA {
                at_u.push(14);
            }
            at_u.push(5);
            vec![
                vec![0, 1, 2, 3, 4],
                vec![1, 0, 5, 6, 7],
                at_u,
                vec![1, 7, 11, 12, 13, 2],
            ]
        }
        FragmentPattern::P2 => {
            // w=0 p=1 q=2 r=3; A,B,C pentagons, L at the far end of A|B, U opposite w in C
            vec![
                vec![0, 3, 4, 5, 1],
                vec![0, 1, 6, 7, 2],
                vec![0, 2, 8, 9, 3],
                vec![1, 5, 10, 11, 12, 6],
                vec![9, 8, 13, 14, 15, 16],
            ]
        }
        FragmentPattern::HeptFragB => vec![(0..7).collect(), vec![1, 0, 7, 8, 9]],
    }
}

/// A fragment template: a disk of full faces, consistently oriented.
/// Every template face must match a map face of the same size.
#[derive(Debug, Clone)]
pub struct Template {
    pub pattern: FragmentPattern,
    pub faces: Vec<Vec<Vertex>>,
    /// Directed template edge `(a, b)` -> (face, position of `a` in it).
    darts: HashMap<(Vertex, Vertex), (usize, usize)>,
    num_vertices: usize,
}

impl Template {
    fn new(pattern: FragmentPattern, faces: Vec<Vec<Vertex>>) -> Template {
        let mut darts = HashMap::new();
        for (t, face) in faces.iter().enumerate() {
            for j in 0..face.len() {
                let prev = darts.insert((face[j], face[(j + 1) % face.len()]), (t, j));
                assert!(
                    prev.is_none(),
                    "template faces are not consistently oriented"
                );
            }
        }
        let num_vertices = faces.iter().flatten().max().map_or(0, |&m| m + 1);
        Template {
            pattern,
            faces,
            darts,
            num_vertices,
        }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    fn reversed(&self) -> Template {
        let faces = self
            .faces
            .iter()
            .map(|f| {
                let mut r = f.clone();
                r.reverse();
                r
            })
            .collect();
        Template::new(self.pattern, faces)
    }
}

/// One occurrence of a template in a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub pattern: FragmentPattern,
    /// Image of each template face, in template order.
    pub faces: Vec<FaceId>,
    /// Image of dart 0 of template face 0.
    pub root: Dart,
    /// Matched with the mirror image of the template.
    pub mirrored: bool,
    /// The template boundary maps to a simple edge-cycle.
    pub is_patch: bool,
}

impl Embedding {
    pub fn face_set(&self) -> BTreeSet<FaceId> {
        self.faces.iter().copied().collect()
    }
}

fn match_at(map: &PlanarMap, tpl: &Template, root: Dart) -> Option<(Vec<FaceId>, Vec<Dart>, bool)> {
    let nf = tpl.faces.len();
    // base dart of each template face: image of its dart 0
    let mut base: Vec<Option<Dart>> = vec![None; nf];
    let mut used: HashSet<FaceId> = HashSet::new();
    if map.face_size(map.face_of(root)) != tpl.faces[0].len() {
        return None;
    }
    base[0] = Some(root);
    used.insert(map.face_of(root));
    let mut queue = vec![0];
    while let Some(t) = queue.pop() {
        let face = &tpl.faces[t];
        let mut d = base[t].unwrap();
        for j in 0..face.len() {
            let (a, b) = (face[j], face[(j + 1) % face.len()]);
            if let Some(&(t2, j2)) = tpl.darts.get(&(b, a)) {
                let mut d2 = map.twin(d);
                for _ in 0..j2 {
                    d2 = map.phi_inv(d2);
                }
                match base[t2] {
                    Some(existing) if existing != d2 => return None,
                    Some(_) => {}
                    None => {
                        let f2 = map.face_of(d2);
                        if map.face_size(f2) != tpl.faces[t2].len() || !used.insert(f2) {
                            return None;
                        }
                        base[t2] = Some(d2);
                        queue.push(t2);
                    }
                }
            }
            d = map.phi(d);
        }
    }
    let base: Vec<Dart> = base.into_iter().collect::<Option<_>>()?;
    // vertex images must agree wherever template faces share a vertex
    let mut image: Vec<Option<Vertex>> = vec![None; tpl.num_vertices];
    for (t, face) in tpl.faces.iter().enumerate() {
        let mut d = base[t];
        for &v in face {
            let w = map.source(d);
            match image[v] {
                Some(x) if x != w => return None,
                _ => image[v] = Some(w),
            }
            d = map.phi(d);
        }
    }
    let distinct: HashSet<Vertex> = image.iter().flatten().copied().collect();
    let is_patch = distinct.len() == tpl.num_vertices;
    let faces = base.iter().map(|&d| map.face_of(d)).collect();
    Some((faces, base, is_patch))
}

/// All occurrences of `pattern` in `map`, mirror images included, one per image face set.
pub fn find_fragments(map: &PlanarMap, pattern: FragmentPattern) -> Vec<Embedding> {
    let tpl = pattern.template();
    let mirrored = tpl.reversed();
    let mut seen: HashSet<BTreeSet<FaceId>> = HashSet::new();
    let mut out = Vec::new();
    for (t, is_mirror) in [(&tpl, false), (&mirrored, true)] {
        for root in 0..map.num_darts() {
            if let Some((faces, _, is_patch)) = match_at(map, t, root) {
                let emb = Embedding {
                    pattern,
                    faces,
                    root,
                    mirrored: is_mirror,
                    is_patch,
                };
                if seen.insert(emb.face_set()) {
                    out.push(emb);
                }
            }
        }
    }
    out
}

pub fn contains_fragment(map: &PlanarMap, pattern: FragmentPattern) -> bool {
    let tpl = pattern.template();
    let mirrored = tpl.reversed();
    (0..map.num_darts())
        .any(|root| match_at(map, &tpl, root).is_some() || match_at(map, &mirrored, root).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::build_dodecahedron;

    #[test]
    fn templates_are_disks() {
        for p in FragmentPattern::ALL {
            let tpl = p.template();
            // V - E + F = 1 for a disk
            let e2: usize = tpl.faces.iter().map(Vec::len).sum();
            let boundary = tpl
                .darts
                .keys()
                .filter(|(a, b)| !tpl.darts.contains_key(&(*b, *a)))
                .count();
            let edges = (e2 - boundary) / 2 + boundary;
            assert_eq!(tpl.num_vertices + tpl.faces.len(), edges + 1, "{p}");
        }
    }

    #[test]
    fn dodecahedron_caps() {
        let d = build_dodecahedron();
        let c1 = find_fragments(&d, FragmentPattern::C1);
        assert_eq!(c1.len(), 12);
        assert!(c1.iter().all(|e| e.is_patch));
        assert_eq!(find_fragments(&d, FragmentPattern::C2).len(), 20);
        assert!(find_fragments(&d, FragmentPattern::P1).is_empty());
        assert!(find_fragments(&d, FragmentPattern::HeptFragB).is_empty());
    }

    #[test]
    fn mirror_counts_agree() {
        let d = build_dodecahedron();
        let m = d.mirror();
        for p in FragmentPattern::ALL {
            assert_eq!(find_fragments(&d, p).len(), find_fragments(&m, p).len());
        }
    }

    #[test]
    fn pattern_names_parse() {
        for p in FragmentPattern::ALL {
            assert_eq!(p.to_string().parse::<FragmentPattern>().unwrap(), p);
        }
    }
}
