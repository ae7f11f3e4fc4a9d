//! Builds the two nanotube families, recognizes them and prints the
//! truncation chains that lengthen each tube by one layer.

use fforge::growth::{build_nanotube, nanotube_growth_chain, recognize_nanotube, NanotubeFamily};

fn main() {
    for family in [NanotubeFamily::D5, NanotubeFamily::F3] {
        for k in 0..4 {
            let m = build_nanotube(family, k);
            println!(
                "{family}{k}: {} vertices, recognized as {:?}",
                m.num_vertices(),
                recognize_nanotube(&m).unwrap()
            );
        }
        let chain = nanotube_growth_chain(family, 1, true).unwrap();
        let kinds: Vec<String> = chain.iter().map(|t| t.kind.to_string()).collect();
        println!("{family}1 -> {family}2 by {}", kinds.join(", "));
    }
}
