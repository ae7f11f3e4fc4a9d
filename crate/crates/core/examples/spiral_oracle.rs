//! Counts fullerene isomers per hexagon count with the face-spiral oracle.
//!
//! Usage: cargo run --release --example spiral_oracle -- [max_p6]

use fforge::engine::oracle_by_p6;

fn main() {
    let max_p6 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let buckets = oracle_by_p6(max_p6, true).expect("bound within oracle range");
    println!("{:>4} {:>4} {:>8}", "p6", "V", "isomers");
    for (p6, codes) in &buckets {
        println!("{:>4} {:>4} {:>8}", p6, 20 + 2 * p6, codes.len());
    }
}
