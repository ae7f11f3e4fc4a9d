use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::planar_map::{check_polytopal, PlanarMap};

use super::fragments::{contains_fragment, FragmentPattern};
use super::StructureError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyClass {
    #[serde(rename = "F_-1")]
    FMinus1,
    F,
    #[serde(rename = "F_IPR")]
    FIpr,
    F1,
    #[serde(rename = "F1_IPR")]
    F1Ipr,
    #[serde(rename = "other")]
    Other,
}

impl FamilyClass {
    pub fn is_fullerene(self) -> bool {
        matches!(self, FamilyClass::F | FamilyClass::FIpr)
    }

    pub fn in_f1(self) -> bool {
        matches!(self, FamilyClass::F1 | FamilyClass::F1Ipr)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyClass::FMinus1 => "F_-1",
            FamilyClass::F => "F",
            FamilyClass::FIpr => "F_IPR",
            FamilyClass::F1 => "F1",
            FamilyClass::F1Ipr => "F1_IPR",
            FamilyClass::Other => "other",
        }
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            FamilyClass::FMinus1,
            FamilyClass::F,
            FamilyClass::FIpr,
            FamilyClass::F1,
            FamilyClass::F1Ipr,
            FamilyClass::Other,
        ]
        .into_iter()
        .find(|c| c.as_str() == s)
        .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

/// Edges whose two faces are both pentagons, as (face, face) pairs.
pub fn adjacent_pentagon_pairs(map: &PlanarMap) -> Vec<(usize, usize)> {
    map.edge_darts()
        .filter_map(|d| {
            let (a, b) = (map.face_of(d), map.face_across(d));
            (map.face_size(a) == 5 && map.face_size(b) == 5).then_some((a.min(b), a.max(b)))
        })
        .collect()
}

pub fn has_adjacent_pentagons(map: &PlanarMap) -> bool {
    !adjacent_pentagon_pairs(map).is_empty()
}

/// Family membership. Fails on maps that are not polytopal.
pub fn classify(map: &PlanarMap) -> Result<FamilyClass, StructureError> {
    if !check_polytopal(map) {
        return Err(StructureError::NotPolytopal);
    }
    Ok(classify_unchecked(map))
}

/// As [`classify`], for maps already known to be polytopal.
pub fn classify_unchecked(map: &PlanarMap) -> FamilyClass {
    let p = map.p_vector();
    if !p.only_sizes(&[4, 5, 6, 7]) {
        return FamilyClass::Other;
    }
    let ipr = !has_adjacent_pentagons(map);
    match (p.get(4), p.get(7)) {
        (0, 0) => {
            if ipr {
                FamilyClass::FIpr
            } else {
                FamilyClass::F
            }
        }
        (1, 0) => FamilyClass::FMinus1,
        (0, 1) if in_f1(map) => {
            if ipr {
                FamilyClass::F1Ipr
            } else {
                FamilyClass::F1
            }
        }
        _ => FamilyClass::Other,
    }
}

fn in_f1(map: &PlanarMap) -> bool {
    let Some(h) = (0..map.num_faces()).find(|&f| map.face_size(f) == 7) else {
        return false;
    };
    let touches_h = |f: usize| map.faces_adjacent(f, h);
    if !map.face_neighbors(h).iter().any(|&f| map.face_size(f) == 5) {
        return false;
    }
    if contains_fragment(map, FragmentPattern::HeptFragA) {
        return true;
    }
    adjacent_pentagon_pairs(map)
        .into_iter()
        .all(|(a, b)| touches_h(a) != touches_h(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::build_dodecahedron;
    use crate::transform::{enumerate_sites, truncate, KindSpec};

    #[test]
    fn dodecahedron_is_f() {
        assert_eq!(classify(&build_dodecahedron()).unwrap(), FamilyClass::F);
    }

    #[test]
    fn edge_truncation_gives_f_minus1() {
        let d = build_dodecahedron();
        let site = enumerate_sites(&d, &KindSpec::edge(5, 5))[0];
        let t = truncate(&d, site).unwrap();
        assert_eq!(classify(&t).unwrap(), FamilyClass::FMinus1);
        assert_eq!(t.p_vector().get(4), 1);
        assert_eq!(t.p_vector().get(5), 10);
        assert_eq!(t.p_vector().get(6), 2);
    }

    #[test]
    fn tetrahedron_is_other() {
        let k4 =
            PlanarMap::from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
                .unwrap();
        assert_eq!(classify(&k4).unwrap(), FamilyClass::Other);
    }

    #[test]
    fn names_round_trip() {
        for c in [
            FamilyClass::FMinus1,
            FamilyClass::F,
            FamilyClass::FIpr,
            FamilyClass::F1,
            FamilyClass::F1Ipr,
            FamilyClass::Other,
        ] {
            assert_eq!(c.as_str().parse::<FamilyClass>().unwrap(), c);
        }
    }
}
