//! Grows all fullerenes up to a hexagon bound in each regime and checks them
//! against the spiral oracle. Usage: `enumerate_regimes [max_p6]`.

use std::time::Instant;

use fforge::engine::{cross_check, enumerate, oracle_generate, EnumerationJob};
use fforge::growth::Regime;

fn main() {
    let max_p6 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let oracle = oracle_generate(max_p6, true).unwrap();
    println!("oracle: {} fullerenes", oracle.len());
    for regime in Regime::ALL {
        let t0 = Instant::now();
        let set = enumerate(&EnumerationJob::new(regime, max_p6)).unwrap();
        let report = cross_check(&set.fullerenes_only(), &oracle);
        println!(
            "{regime}: {} maps stored, {} fullerenes, {} differences, {:.2?}",
            set.len(),
            set.fullerenes_only().len(),
            report.len(),
            t0.elapsed()
        );
        for ((class, p6), codes) in &set.buckets {
            print!(" {class}:{p6}={}", codes.len());
        }
        println!();
    }
}
