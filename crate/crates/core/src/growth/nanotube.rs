use std::fmt;

use serde::{Deserialize, Serialize};

use crate::planar_map::{canonical_code, PlanarMap, Vertex};
use crate::structure::{contains_fragment, FragmentPattern};

use super::GrowthError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NanotubeFamily {
    /// Two six-pentagon caps joined by hexagon 5-belts.
    D5,
    /// Two caps of three pentagons around a vertex joined by layers of three hexagons.
    F3,
}

impl fmt::Display for NanotubeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The (5,0)-nanotube with `k` hexagon belts; `k = 0` is the dodecahedron.
pub fn build_d5k(k: usize) -> PlanarMap {
    let a = |i: usize| i % 5;
    let u = |j: usize, i: usize| 5 + 10 * j + i % 5;
    let w = |j: usize, i: usize| 10 + 10 * j + i % 5;
    let d = |i: usize| 15 + 10 * k + i % 5;
    let mut faces: Vec<Vec<Vertex>> = vec![(0..5).map(a).collect(), (0..5).rev().map(d).collect()];
    for i in 0..5 {
        faces.push(vec![a(i), a(i + 1), u(0, i + 1), w(0, i), u(0, i)]);
        for j in 0..k {
            faces.push(vec![
                w(j, i),
                u(j, i + 1),
                w(j, i + 1),
                u(j + 1, i + 1),
                w(j + 1, i),
                u(j + 1, i),
            ]);
        }
        faces.push(vec![w(k, i), u(k, i + 1), w(k, i + 1), d(i + 1), d(i)]);
    }
    PlanarMap::from_unoriented_faces(&faces).expect("nanotube faces are valid")
}

/// The (3,3)-nanotube with `k` layers of three hexagons.
pub fn build_f3k(k: usize) -> PlanarMap {
    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut faces: Vec<Vec<Vertex>> = Vec::new();
    let c = fresh();
    let x: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
    // ring: p1, p2 saturated, q1, q2 with one free edge each
    let mut p1: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
    let mut p2: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
    let mut q1: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
    let mut q2: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
    for t in 0..3 {
        let (prev, succ) = ((t + 2) % 3, (t + 1) % 3);
        faces.push(vec![x[prev], p1[t], p2[t], x[t], c]);
        faces.push(vec![x[t], p2[t], q1[t], q2[t], p1[succ]]);
    }
    for _ in 0..k {
        let n1: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
        let n2: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
        for t in 0..3 {
            let prev = (t + 2) % 3;
            faces.push(vec![q2[prev], p1[t], p2[t], q1[t], n2[t], n1[t]]);
        }
        p1 = q1;
        p2 = q2;
        q1 = (0..3).map(|t| n1[(t + 1) % 3]).collect();
        q2 = (0..3).map(|t| n2[(t + 1) % 3]).collect();
    }
    let c = fresh();
    let x: Vec<Vertex> = (0..3).map(|_| fresh()).collect();
    for t in 0..3 {
        let (prev, succ) = ((t + 2) % 3, (t + 1) % 3);
        faces.push(vec![q2[t], p1[succ], p2[succ], q1[succ], x[t]]);
        faces.push(vec![q1[t], q2[t], x[t], c, x[prev]]);
    }
    PlanarMap::from_unoriented_faces(&faces).expect("nanotube faces are valid")
}

pub fn build_nanotube(family: NanotubeFamily, k: usize) -> PlanarMap {
    match family {
        NanotubeFamily::D5 => build_d5k(k),
        NanotubeFamily::F3 => build_f3k(k),
    }
}

/// `Some(k)` iff `map` is isomorphic to the `k`-th member of `family`.
pub fn nanotube_index(map: &PlanarMap, family: NanotubeFamily) -> Option<usize> {
    let p6 = map.p_vector().get(6);
    let step = match family {
        NanotubeFamily::D5 => 5,
        NanotubeFamily::F3 => 3,
    };
    if !map.is_fullerene() || !p6.is_multiple_of(step) {
        return None;
    }
    let k = p6 / step;
    (canonical_code(map, true) == canonical_code(&build_nanotube(family, k), true)).then_some(k)
}

/// Detects the nanotube families through their caps: a `C1` cap means a
/// (5,0)-tube, a `C2` cap a (3,3)-tube. The dodecahedron reports `(D5, 0)`.
pub fn recognize_nanotube(map: &PlanarMap) -> Result<Option<(NanotubeFamily, usize)>, GrowthError> {
    if !map.is_fullerene() {
        return Err(GrowthError::NotAFullerene);
    }
    for (family, cap) in [
        (NanotubeFamily::D5, FragmentPattern::C1),
        (NanotubeFamily::F3, FragmentPattern::C2),
    ] {
        if contains_fragment(map, cap) {
            return match nanotube_index(map, family) {
                Some(k) => Ok(Some((family, k))),
                None => Err(GrowthError::CapWithoutTube(family)),
            };
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::build_dodecahedron;
    use crate::structure::five_belt_census;

    #[test]
    fn d5k_shapes() {
        assert_eq!(
            canonical_code(&build_d5k(0), true),
            canonical_code(&build_dodecahedron(), true)
        );
        for k in 0..4 {
            let m = build_d5k(k);
            assert!(m.is_fullerene());
            assert_eq!(m.num_vertices(), 20 + 10 * k);
            assert_eq!(five_belt_census(&m).unwrap().hexagon_belts, k);
        }
    }

    #[test]
    fn f3k_shapes() {
        assert_eq!(
            canonical_code(&build_f3k(0), true),
            canonical_code(&build_dodecahedron(), true)
        );
        for k in 0..5 {
            let m = build_f3k(k);
            assert!(m.is_fullerene(), "k={k}");
            assert_eq!(m.num_vertices(), 20 + 6 * k);
            assert!(contains_fragment(&m, FragmentPattern::C2));
        }
    }

    #[test]
    fn recognition() {
        assert_eq!(
            recognize_nanotube(&build_d5k(3)).unwrap(),
            Some((NanotubeFamily::D5, 3))
        );
        assert_eq!(
            recognize_nanotube(&build_f3k(4)).unwrap(),
            Some((NanotubeFamily::F3, 4))
        );
        assert_eq!(
            recognize_nanotube(&build_dodecahedron()).unwrap(),
            Some((NanotubeFamily::D5, 0))
        );
        assert_eq!(nanotube_index(&build_f3k(0), NanotubeFamily::F3), Some(0));
    }
}
