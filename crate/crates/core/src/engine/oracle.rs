//! Exhaustive face-spiral generator, kept independent of the growth code.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use crate::planar_map::{canonical_code, CanonicalCode, PlanarMap};

/// Largest hexagon count accepted by the oracle.
pub const ORACLE_MAX_P6: usize = 30;

/// Winds a face spiral (face sizes in spiral order) into a cubic sphere map.
/// Returns `None` if the spiral does not close.
pub fn spiral_windup(sizes: &[usize]) -> Option<PlanarMap> {
    let n = sizes.len();
    if n < 4 {
        return None;
    }
    let mut w = Windup {
        rem: sizes.iter().map(|&s| s as i64).collect(),
        edges: HashSet::new(),
        tris: Vec::new(),
    };
    w.connect(0, 1)?;
    let mut ring: VecDeque<usize> = VecDeque::from([0, 1]);
    for k in 2..n - 1 {
        let (front, back) = (*ring.front()?, *ring.back()?);
        if front == back {
            return None;
        }
        w.connect(k, back)?;
        w.connect(k, front)?;
        w.tris.push([k, back, front]);
        while w.rem[*ring.front()?] == 0 {
            let old = ring.pop_front()?;
            let f = *ring.front()?;
            w.connect(k, f)?;
            w.tris.push([k, old, f]);
        }
        while w.rem[*ring.back()?] == 0 {
            let old = ring.pop_back()?;
            let b = *ring.back()?;
            w.connect(k, b)?;
            w.tris.push([k, b, old]);
        }
        ring.push_back(k);
    }
    let last = n - 1;
    if ring.len() != sizes[last] {
        return None;
    }
    let ring: Vec<usize> = ring.into();
    for &r in &ring {
        w.connect(last, r)?;
    }
    for i in 0..ring.len() {
        w.tris.push([last, ring[i], ring[(i + 1) % ring.len()]]);
    }
    if w.rem.iter().any(|&r| r != 0) {
        return None;
    }
    primal_from_triangles(n, &w.tris)
}

struct Windup {
    rem: Vec<i64>,
    edges: HashSet<(usize, usize)>,
    tris: Vec<[usize; 3]>,
}

impl Windup {
    fn connect(&mut self, a: usize, b: usize) -> Option<()> {
        if a == b || !self.edges.insert((a.min(b), a.max(b))) {
            return None;
        }
        self.rem[a] -= 1;
        self.rem[b] -= 1;
        (self.rem[a] >= 0 && self.rem[b] >= 0).then_some(())
    }
}

/// Primal cubic map of a triangulation given by its triangles: one vertex per
/// triangle, one face per triangulation vertex.
fn primal_from_triangles(n: usize, tris: &[[usize; 3]]) -> Option<PlanarMap> {
    let mut link: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for (t, tri) in tris.iter().enumerate() {
        for i in 0..3 {
            link[tri[i]].push((tri[(i + 1) % 3], tri[(i + 2) % 3], t));
        }
    }
    let mut faces = Vec::with_capacity(n);
    for around in &link {
        // walk the link cycle: consecutive triangles share a neighbor
        let mut cycle = vec![around.first()?.2];
        let (_, mut cur, _) = around[0];
        let first = around[0].0;
        let mut prev_t = around[0].2;
        while cur != first {
            let &(a, b, t) = around
                .iter()
                .find(|&&(a, b, t)| t != prev_t && (a == cur || b == cur))?;
            cur = if a == cur { b } else { a };
            prev_t = t;
            cycle.push(t);
            if cycle.len() > around.len() {
                return None;
            }
        }
        if cycle.len() != around.len() {
            return None;
        }
        faces.push(cycle);
    }
    PlanarMap::from_unoriented_faces(&faces).ok()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("hexagon bound {0} exceeds the oracle limit {ORACLE_MAX_P6}")]
    BoundTooLarge(usize),
}

/// All fullerene classes with `p6` hexagons, as canonical codes.
pub fn spiral_fullerenes(p6: usize, include_reflection: bool) -> BTreeSet<CanonicalCode> {
    let n = 12 + p6;
    // enumerate pentagon position sets by the position of the first pentagon
    // and in parallel over the second
    let combos = pentagon_prefixes(n);
    combos
        .into_par_iter()
        .map(|prefix| {
            let mut found = BTreeSet::new();
            let mut positions = prefix.clone();
            extend_positions(n, &mut positions, &mut |pos| {
                let mut sizes = vec![6; n];
                for &p in pos {
                    sizes[p] = 5;
                }
                if let Some(map) = spiral_windup(&sizes) {
                    found.insert(canonical_code(&map, include_reflection));
                }
            });
            found
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

fn pentagon_prefixes(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if n - b >= 11 {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

fn extend_positions(n: usize, positions: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if positions.len() == 12 {
        f(positions);
        return;
    }
    let start = positions.last().map_or(0, |&p| p + 1);
    let needed = 12 - positions.len();
    for p in start..=n.saturating_sub(needed) {
        positions.push(p);
        extend_positions(n, positions, f);
        positions.pop();
    }
}

/// Fullerene classes for every hexagon count up to `max_p6`.
pub fn oracle_by_p6(
    max_p6: usize,
    include_reflection: bool,
) -> Result<BTreeMap<usize, BTreeSet<CanonicalCode>>, OracleError> {
    if max_p6 > ORACLE_MAX_P6 {
        return Err(OracleError::BoundTooLarge(max_p6));
    }
    Ok((0..=max_p6)
        .map(|p6| (p6, spiral_fullerenes(p6, include_reflection)))
        .collect())
}

/// Builds a fullerene from 1-based pentagon positions in its face spiral.
pub fn fullerene_from_spiral(num_faces: usize, pentagons: &[usize]) -> Option<PlanarMap> {
    let mut sizes = vec![6; num_faces];
    for &p in pentagons {
        *sizes.get_mut(p.checked_sub(1)?)? = 5;
    }
    spiral_windup(&sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::build_dodecahedron;

    #[test]
    fn dodecahedron_spiral() {
        let m = spiral_windup(&[5; 12]).unwrap();
        assert_eq!(
            canonical_code(&m, true),
            canonical_code(&build_dodecahedron(), true)
        );
    }

    #[test]
    fn tetrahedron_and_cube_spirals() {
        assert_eq!(spiral_windup(&[3; 4]).unwrap().num_vertices(), 4);
        assert_eq!(spiral_windup(&[4; 6]).unwrap().num_vertices(), 8);
        assert!(spiral_windup(&[6; 12]).is_none());
    }

    #[test]
    fn small_isomer_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|p6| spiral_fullerenes(p6, true).len())
            .collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 2]);
    }

    #[test]
    fn buckminsterfullerene() {
        let c60 =
            fullerene_from_spiral(32, &[1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap();
        assert_eq!(c60.num_vertices(), 60);
        assert!(c60.is_fullerene());
    }

    #[test]
    fn bound_enforced() {
        assert_eq!(
            oracle_by_p6(31, true).unwrap_err(),
            OracleError::BoundTooLarge(31)
        );
    }
}
