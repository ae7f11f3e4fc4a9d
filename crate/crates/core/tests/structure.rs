use fforge::engine::{fullerene_from_spiral, oracle_generate};
use fforge::growth::{build_d5k, build_f3k};
use fforge::planar_map::build_dodecahedron;
use fforge::structure::{
    check_131313, classify, contains_fragment, find_belts, find_fragments, five_belt_census,
    FamilyClass, FragmentPattern,
};
use fforge::transform::{enumerate_sites, truncate, KindSpec};

#[test]
fn loops_propagate_along_tubes() {
    for k in 1..5 {
        let report = check_131313(&build_f3k(k)).unwrap();
        assert!(report.violations.is_empty());
        assert_eq!(report.loops_checked, 2 * k + 2);
        assert_eq!(report.cap_branch, 2);
        assert_eq!(report.propagating_branch, 2 * k);
        // five-fold tubes carry no such loops
        assert_eq!(check_131313(&build_d5k(k)).unwrap().loops_checked, 0);
    }
    let c60 = fullerene_from_spiral(32, &[1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap();
    assert!(check_131313(&c60).unwrap().violations.is_empty());
}

#[test]
fn caps_identify_tube_families() {
    assert_eq!(find_fragments(&build_d5k(2), FragmentPattern::C1).len(), 2);
    assert!(!contains_fragment(&build_d5k(2), FragmentPattern::C2));
    assert!(contains_fragment(&build_f3k(2), FragmentPattern::C2));
    assert!(!contains_fragment(&build_f3k(2), FragmentPattern::C1));
}

#[test]
fn ipr_fullerenes_have_no_pentagon_patches() {
    let c60 = fullerene_from_spiral(32, &[1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap();
    assert_eq!(classify(&c60).unwrap(), FamilyClass::FIpr);
    for p in FragmentPattern::ALL {
        assert!(!contains_fragment(&c60, p), "{p}");
    }
    assert_eq!(find_belts(&c60, 5).len(), 12);
}

#[test]
fn adjacent_pentagon_fullerenes_embed_a_patch_beyond_the_desk_bound() {
    let oracle = oracle_generate(8, true).unwrap();
    for (_, code) in oracle.codes() {
        let m = code.to_map().unwrap();
        let found = [
            FragmentPattern::C1,
            FragmentPattern::C2,
            FragmentPattern::P1,
            FragmentPattern::P2,
        ]
        .into_iter()
        .any(|p| contains_fragment(&m, p));
        assert!(found);
        assert!(check_131313(&m).unwrap().violations.is_empty());
        assert!(find_belts(&m, 3).is_empty() && find_belts(&m, 4).is_empty());
    }
}

#[test]
fn heptagon_members_classify() {
    let d = build_dodecahedron();
    let quad = truncate(&d, enumerate_sites(&d, &KindSpec::edge(5, 5))[0]).unwrap();
    assert_eq!(classify(&quad).unwrap(), FamilyClass::FMinus1);
    let belts = find_belts(&quad, 4);
    assert_eq!(belts.len(), 1);
    assert!(five_belt_census(&quad).is_err());
    let t = fullerene_from_spiral(16, &[1, 2, 3, 4, 5, 6, 11, 12, 13, 14, 15, 16]);
    assert!(t.is_none() || t.unwrap().is_fullerene());
}
