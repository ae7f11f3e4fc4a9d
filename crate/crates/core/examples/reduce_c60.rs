//! Reduces buckminsterfullerene to the dodecahedron in each regime and
//! replays the derivation forward.

use fforge::engine::fullerene_from_spiral;
use fforge::growth::{reduce_to_dodecahedron, Regime};

fn main() {
    let c60 = fullerene_from_spiral(32, &[1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap();
    for regime in Regime::ALL {
        let trace = reduce_to_dodecahedron(&c60, regime, true).unwrap();
        let labels: Vec<&str> = trace.steps.iter().map(|s| s.kind.label(regime)).collect();
        println!(
            "{regime}: {} steps, {} truncations ({} on edges): {}",
            trace.len(),
            trace.expanded_kinds().len(),
            trace.edge_truncations(),
            labels.join(" ")
        );
        trace.verify().unwrap();
    }
    let trace = reduce_to_dodecahedron(&c60, Regime::AbOps, true).unwrap();
    print!("{}", trace.to_jsonl(0).lines().last().unwrap_or_default());
    println!();
}
