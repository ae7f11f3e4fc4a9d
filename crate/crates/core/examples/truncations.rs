//! Applies each of the seven growth truncations to the dodecahedron where a
//! site exists, then straightens the new edge back.

use fforge::growth::GrowthOpKind;
use fforge::planar_map::{build_dodecahedron, canonical_code};
use fforge::structure::classify;
use fforge::transform::{
    enumerate_sites, straighten, truncate, truncate_with_edge, KindSpec, TruncationSite,
};

fn main() {
    let d = build_dodecahedron();
    for op in GrowthOpKind::TRUNCATIONS {
        let sites = enumerate_sites(&d, &op.truncation_spec().unwrap());
        let Some(&site) = sites.first() else {
            println!("{op}: no site on the dodecahedron");
            continue;
        };
        let (t, edge) = truncate_with_edge(&d, site).unwrap();
        let back = straighten(&t, edge).unwrap();
        println!(
            "{op}: {} sites, result {} with p-vector {:?}, straightened back: {}",
            sites.len(),
            classify(&t).unwrap(),
            t.p_vector().0,
            canonical_code(&back, true) == canonical_code(&d, true)
        );
    }
    // a vertex truncation makes a triangle
    let v = truncate(&d, TruncationSite::new(&d, 0, 0)).unwrap();
    println!("vertex truncation p-vector {:?}", v.p_vector().0);
    let any = enumerate_sites(&d, &KindSpec::default()).len();
    println!("{any} distinct truncation sites on the dodecahedron");
}
