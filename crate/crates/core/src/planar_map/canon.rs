use std::fmt;

use super::{Dart, PlanarMap, Vertex};

/// Relabeling-invariant serialization of a map's isomorphism class.
///
/// Layout: vertex count, then the canonical rotation of every vertex in
/// canonical order, each value as a big-endian `u16`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, hex::FromHexError> {
        hex::decode(s).map(CanonicalCode)
    }

    /// Rebuilds the map in canonical labeling.
    pub fn to_map(&self) -> Option<PlanarMap> {
        if !self.0.len().is_multiple_of(2) {
            return None;
        }
        let words: Vec<usize> = self
            .0
            .chunks(2)
            .map(|c| u16::from_be_bytes([c[0], c[1]]) as usize)
            .collect();
        let n = *words.first()?;
        if words.len() != 1 + 3 * n {
            return None;
        }
        let lists: Vec<Vec<Vertex>> = words[1..].chunks(3).map(|c| c.to_vec()).collect();
        PlanarMap::from_rotation(&lists).ok()
    }
}

impl serde::Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> serde::Deserialize<'de> for CanonicalCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CanonicalCode::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// A map in canonical labeling together with the relabeling that produced it.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// The map rebuilt from `code`. If `reflected`, it is the mirror image of
    /// the input.
    pub map: PlanarMap,
    /// `dart_map[d]` is the dart of `map` with the same endpoints as input dart `d`.
    pub dart_map: Vec<Dart>,
    pub vertex_map: Vec<Vertex>,
    pub reflected: bool,
}

/// Breadth-first code from a starting dart. Returns `None` as soon as the
/// code exceeds `bound`.
fn bfs_code(
    map: &PlanarMap,
    start: Dart,
    reflect: bool,
    bound: Option<&[u16]>,
    scratch: &mut Scratch,
) -> Option<Vec<u16>> {
    let n = map.num_vertices();
    scratch.reset(n);
    let rot = |d: Dart| if reflect { map.prev(d) } else { map.next(d) };
    let mut code: Vec<u16> = Vec::with_capacity(3 * n);
    let mut below = false;
    let root = map.source(start);
    scratch.label[root] = 0;
    scratch.entry[root] = start;
    scratch.order.push(root);
    let mut next_label = 1;
    let mut head = 0;
    while head < scratch.order.len() {
        let v = scratch.order[head];
        head += 1;
        let mut d = scratch.entry[v];
        for _ in 0..3 {
            let w = map.target(d);
            if scratch.label[w] == u32::MAX {
                scratch.label[w] = next_label;
                next_label += 1;
                scratch.entry[w] = map.twin(d);
                scratch.order.push(w);
            }
            let value = scratch.label[w] as u16;
            if let (false, Some(b)) = (below, bound) {
                let pos = code.len();
                match value.cmp(&b[pos]) {
                    std::cmp::Ordering::Greater => return None,
                    std::cmp::Ordering::Less => below = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            code.push(value);
            d = rot(d);
        }
    }
    Some(code)
}

#[derive(Default)]
struct Scratch {
    label: Vec<u32>,
    entry: Vec<Dart>,
    order: Vec<Vertex>,
}

impl Scratch {
    fn reset(&mut self, n: usize) {
        self.label.clear();
        self.label.resize(n, u32::MAX);
        self.entry.clear();
        self.entry.resize(n, 0);
        self.order.clear();
    }
}

fn best_start(map: &PlanarMap, include_reflection: bool) -> (Vec<u16>, Dart, bool) {
    let mut scratch = Scratch::default();
    let mut best: Option<(Vec<u16>, Dart, bool)> = None;
    let orientations: &[bool] = if include_reflection {
        &[false, true]
    } else {
        &[false]
    };
    for &reflect in orientations {
        for start in 0..map.num_darts() {
            let bound = best.as_ref().map(|b| b.0.as_slice());
            if let Some(code) = bfs_code(map, start, reflect, bound, &mut scratch) {
                if best.as_ref().is_none_or(|b| code < b.0) {
                    best = Some((code, start, reflect));
                }
            }
        }
    }
    best.expect("a map has at least one dart")
}

fn encode(n: usize, words: &[u16]) -> CanonicalCode {
    let mut bytes = Vec::with_capacity(2 * (words.len() + 1));
    bytes.extend_from_slice(&(n as u16).to_be_bytes());
    for w in words {
        bytes.extend_from_slice(&w.to_be_bytes());
    }
    CanonicalCode(bytes)
}

/// Minimal breadth-first code over all starting darts (and both orientations
/// when `include_reflection` is set).
pub fn canonical_code(map: &PlanarMap, include_reflection: bool) -> CanonicalCode {
    let (words, _, _) = best_start(map, include_reflection);
    encode(map.num_vertices(), &words)
}

pub fn canonical_form(map: &PlanarMap, include_reflection: bool) -> CanonicalForm {
    let (words, start, reflected) = best_start(map, include_reflection);
    let code = encode(map.num_vertices(), &words);
    let mut scratch = Scratch::default();
    bfs_code(map, start, reflected, None, &mut scratch);
    let n = map.num_vertices();
    let mut vertex_map = vec![0; n];
    let mut dart_map = vec![0; map.num_darts()];
    for (label, &v) in scratch.order.iter().enumerate() {
        vertex_map[v] = label;
        let mut d = scratch.entry[v];
        for i in 0..3 {
            dart_map[d] = 3 * label + i;
            d = if reflected { map.prev(d) } else { map.next(d) };
        }
    }
    let canon = code
        .to_map()
        .expect("canonical code decodes to a valid map");
    CanonicalForm {
        code,
        map: canon,
        dart_map,
        vertex_map,
        reflected,
    }
}
