use super::PlanarMap;

/// Steinitz test: the graph of a valid map is planar by construction, so a
/// map is polytopal iff its graph is 3-connected.
pub fn check_polytopal(map: &PlanarMap) -> bool {
    is_three_connected(map)
}

/// True iff the graph stays connected after removing any two vertices.
/// Runs an articulation-point search on `G - v` for every vertex `v`.
pub fn is_three_connected(map: &PlanarMap) -> bool {
    let n = map.num_vertices();
    if n < 4 {
        return false;
    }
    (0..n).all(|removed| biconnected_without(map, removed))
}

fn biconnected_without(map: &PlanarMap, removed: usize) -> bool {
    let n = map.num_vertices();
    let root = if removed == 0 { 1 } else { 0 };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    // iterative DFS: (vertex, parent, neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < 3 {
            let w = map.neighbors(v)[*idx];
            *idx += 1;
            if w == removed || w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    if timer != n - 1 {
        return false;
    }
    root_children <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_three_connected() {
        let k4 =
            PlanarMap::from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
                .unwrap();
        assert!(check_polytopal(&k4));
    }

    #[test]
    fn two_connected_cubic_map_is_rejected() {
        // Two K4-minus-an-edge pieces joined by two edges: a 2-edge-cut.
        // Piece A: a0..a3 with a0,a1 of degree 2 inside the piece.
        let lists = vec![
            vec![2, 3, 4], // 0
            vec![3, 2, 5], // 1
            vec![0, 3, 1], // 2
            vec![0, 1, 2], // 3
            vec![0, 6, 7], // 4
            vec![1, 7, 6], // 5
            vec![4, 5, 7], // 6
            vec![4, 6, 5], // 7
        ];
        let lists = fix_orientation(lists);
        let m = PlanarMap::from_rotation(&lists).unwrap();
        assert!(!check_polytopal(&m));
    }

    /// Tries all rotation flips until the map is spherical.
    fn fix_orientation(lists: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = lists.len();
        for mask in 0..(1u32 << n) {
            let candidate: Vec<Vec<usize>> = lists
                .iter()
                .enumerate()
                .map(|(v, l)| {
                    if mask >> v & 1 == 1 {
                        vec![l[0], l[2], l[1]]
                    } else {
                        l.clone()
                    }
                })
                .collect();
            if PlanarMap::from_rotation(&candidate).is_ok() {
                return candidate;
            }
        }
        panic!("graph is not planar");
    }
}
