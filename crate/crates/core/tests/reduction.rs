use fforge::engine::fullerene_from_spiral;
use fforge::growth::{
    build_d5k, build_f3k, reduce_once, reduce_to_dodecahedron, successors, GrowthError,
    GrowthOpKind, Regime,
};
use fforge::planar_map::{build_dodecahedron, canonical_code, PlanarMap};
use fforge::structure::{classify, FamilyClass};
use fforge::transform::{enumerate_sites, truncate, KindSpec};

fn c60() -> PlanarMap {
    fullerene_from_spiral(32, &[1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap()
}

fn c70() -> PlanarMap {
    fullerene_from_spiral(37, &[1, 7, 9, 11, 13, 15, 27, 29, 31, 33, 35, 37]).unwrap()
}

#[test]
fn ipr_fullerenes_reduce_in_every_regime() {
    for m in [c60(), c70()] {
        assert_eq!(classify(&m).unwrap(), FamilyClass::FIpr);
        let target = canonical_code(&m, true);
        for regime in Regime::ALL {
            let trace = reduce_to_dodecahedron(&m, regime, true).unwrap();
            assert_eq!(trace.target(), &target);
            let measure = m.p_vector().growth_measure() as usize;
            assert_eq!(trace.expanded_kinds().len(), measure, "{regime}");
            if regime == Regime::Seven {
                assert_eq!(trace.len(), measure);
            }
        }
    }
}

#[test]
fn nanotubes_reduce_by_tube_steps() {
    let trace = reduce_to_dodecahedron(&build_d5k(3), Regime::AOps, true).unwrap();
    assert_eq!(
        trace.steps.iter().map(|s| s.kind).collect::<Vec<_>>(),
        [GrowthOpKind::A1; 3]
    );
    assert!(trace.steps.iter().all(|s| s.truncations.len() == 5));
    let trace = reduce_to_dodecahedron(&build_f3k(4), Regime::AbOps, true).unwrap();
    assert_eq!(
        trace.steps.iter().map(|s| s.kind).collect::<Vec<_>>(),
        [GrowthOpKind::A2; 4]
    );
    assert!(trace.steps.iter().all(|s| s.truncations.len() == 3));
}

#[test]
fn ab_reduces_grown_ipr_members() {
    let mut succ = Vec::new();
    for m in [c60(), c70()] {
        succ.extend(successors(&canonical_code(&m, true), Regime::AbOps, true, 45).unwrap());
    }
    let interesting: Vec<_> = succ
        .iter()
        .filter(|s| matches!(s.class, FamilyClass::FIpr | FamilyClass::F1Ipr))
        .collect();
    assert!(!interesting.is_empty());
    for s in interesting {
        let (pred, step) = reduce_once(&s.map, Regime::AbOps, true).unwrap();
        assert!(
            classify(&pred).unwrap().is_fullerene()
                || classify(&pred).unwrap() == FamilyClass::F1Ipr
        );
        let replayed = step.replay(&canonical_code(&pred, true), true).unwrap();
        assert_eq!(
            canonical_code(&replayed, true),
            canonical_code(&s.map, true)
        );
    }
}

#[test]
fn reduction_errors() {
    assert_eq!(
        reduce_once(&build_dodecahedron(), Regime::Seven, true).unwrap_err(),
        GrowthError::AtDodecahedron
    );
    let d = build_dodecahedron();
    let site = enumerate_sites(&d, &KindSpec::edge(5, 5))[0];
    let quad = truncate(&d, site).unwrap();
    assert!(matches!(
        reduce_once(&quad, Regime::AbOps, true),
        Err(GrowthError::NotInFamily {
            class: FamilyClass::FMinus1,
            ..
        })
    ));
    assert!(reduce_to_dodecahedron(&quad, Regime::Seven, true).is_ok());
    let cube = PlanarMap::from_faces(&[
        vec![0, 1, 2, 3],
        vec![4, 7, 6, 5],
        vec![0, 4, 5, 1],
        vec![1, 5, 6, 2],
        vec![2, 6, 7, 3],
        vec![3, 7, 4, 0],
    ])
    .unwrap();
    assert!(matches!(
        reduce_once(&cube, Regime::Seven, true),
        Err(GrowthError::NotInFamily {
            class: FamilyClass::Other,
            ..
        })
    ));
}

#[test]
fn traces_serialize_one_step_per_line() {
    let trace = reduce_to_dodecahedron(&c60(), Regime::AbOps, true).unwrap();
    let text = trace.to_jsonl(7);
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), trace.len() + 1);
    assert_eq!(lines[0]["record"], "trace");
    assert_eq!(lines[0]["regime"], "ab");
    assert!(lines[1..]
        .iter()
        .all(|l| l["record"] == "step" && l["trace"] == 7));
    let json = serde_json::to_string(&trace).unwrap();
    let back: fforge::growth::DerivationTrace = serde_json::from_str(&json).unwrap();
    assert_eq!(back, trace);
}
