//! Belts, fragments, classes and (1,3,1,3,1,3) loops of a few fullerenes.

use fforge::engine::{fullerene_from_spiral, spiral_fullerenes};
use fforge::growth::{build_d5k, build_f3k};
use fforge::planar_map::PlanarMap;
use fforge::structure::{
    check_131313, classify, find_belts, find_fragments, five_belt_census, FragmentPattern,
};

fn report(name: &str, m: &PlanarMap) {
    let census = five_belt_census(m).unwrap();
    let loops = check_131313(m).unwrap();
    let fragments: Vec<String> = FragmentPattern::ALL
        .iter()
        .map(|&p| format!("{p}={}", find_fragments(m, p).len()))
        .collect();
    println!(
        "{name}: {} | belts 3:{} 4:{} 5:{} ({} around pentagons) | {} | loops {} (cap {}, propagating {})",
        classify(m).unwrap(),
        find_belts(m, 3).len(),
        find_belts(m, 4).len(),
        census.pentagon_belts + census.hexagon_belts,
        census.pentagon_belts,
        fragments.join(" "),
        loops.loops_checked,
        loops.cap_branch,
        loops.propagating_branch
    );
}

fn main() {
    report("C30 (D5 tube k=1)", &build_d5k(1));
    report("C38 (F3 tube k=3)", &build_f3k(3));
    for (i, code) in spiral_fullerenes(4, true).iter().enumerate() {
        report(&format!("C28 isomer {}", i + 1), &code.to_map().unwrap());
    }
    report(
        "C60",
        &fullerene_from_spiral(32, &[1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap(),
    );
}
