//! Builds the dodecahedron and a relabeled mirror copy, compares canonical
//! codes and writes both to a planar_code file.

use fforge::planar_map::{
    build_dodecahedron, canonical_code, decode_planar_code, encode_planar_code,
};

fn main() {
    let d = build_dodecahedron();
    println!(
        "vertices {} edges {} faces {}",
        d.num_vertices(),
        d.num_edges(),
        d.num_faces()
    );
    println!("p-vector {:?}", d.p_vector().0);
    let mirror = d.mirror();
    println!(
        "mirror equal with reflections: {}, without: {}",
        canonical_code(&d, true) == canonical_code(&mirror, true),
        canonical_code(&d, false) == canonical_code(&mirror, false)
    );
    let bytes = encode_planar_code(&[d.clone(), mirror]).unwrap();
    let back = decode_planar_code(&bytes).unwrap();
    println!(
        "planar_code: {} bytes, {} maps decoded",
        bytes.len(),
        back.len()
    );
    println!("code {}", canonical_code(&d, true).to_hex());
}
