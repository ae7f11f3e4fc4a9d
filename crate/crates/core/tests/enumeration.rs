use fforge::engine::{cross_check, enumerate, oracle_generate, EnumerationJob};
use fforge::growth::{reduce_to_dodecahedron, DerivationTrace, Regime};
use fforge::structure::FamilyClass;

const SWEEP_P6: usize = 8;

#[test]
fn all_regimes_match_the_oracle() {
    let oracle = oracle_generate(SWEEP_P6, true).unwrap();
    let by_p6 = oracle.fullerenes_by_p6();
    let counts: Vec<usize> = (0..=SWEEP_P6)
        .map(|p| by_p6.get(&p).map_or(0, |s| s.len()))
        .collect();
    assert_eq!(counts, [1, 0, 1, 1, 2, 3, 6, 6, 15]);
    for regime in Regime::ALL {
        let set = enumerate(&EnumerationJob::new(regime, SWEEP_P6)).unwrap();
        assert!(set.complete);
        let report = cross_check(&set.fullerenes_only(), &oracle);
        assert!(report.is_empty(), "{regime}: {report:?}");
    }
}

#[test]
fn output_does_not_depend_on_workers() {
    for regime in Regime::ALL {
        let mut job = EnumerationJob::new(regime, 5);
        job.collect_traces = true;
        job.workers = 1;
        let one = enumerate(&job).unwrap();
        job.workers = 3;
        let three = enumerate(&job).unwrap();
        assert_eq!(one, three, "{regime}");
    }
}

#[test]
fn collected_traces_replay() {
    for regime in Regime::ALL {
        let mut job = EnumerationJob::new(regime, 5);
        job.collect_traces = true;
        let set = enumerate(&job).unwrap();
        assert_eq!(set.traces.len(), set.len());
        for (code, trace) in &set.traces {
            trace.verify().unwrap();
            assert_eq!(trace.target(), code);
        }
    }
}

#[test]
fn regimes_stay_in_their_families() {
    let seven = enumerate(&EnumerationJob::new(Regime::Seven, 6)).unwrap();
    assert!(seven
        .buckets
        .keys()
        .any(|(c, _)| *c == FamilyClass::FMinus1));
    let a = enumerate(&EnumerationJob::new(Regime::AOps, 6)).unwrap();
    assert!(a.buckets.keys().all(|(c, _)| c.is_fullerene() || c.in_f1()));
    let ab = enumerate(&EnumerationJob::new(Regime::AbOps, 6)).unwrap();
    assert!(ab
        .buckets
        .keys()
        .all(|(c, _)| c.is_fullerene() || *c == FamilyClass::F1Ipr));
}

#[test]
fn every_enumerated_member_reduces() {
    for regime in Regime::ALL {
        let set = enumerate(&EnumerationJob::new(regime, 5)).unwrap();
        for ((class, _), code) in set.codes() {
            let trace: DerivationTrace =
                reduce_to_dodecahedron(&code.to_map().unwrap(), regime, true)
                    .unwrap_or_else(|e| panic!("{regime} {class}: {e}"));
            assert_eq!(trace.target(), code);
        }
    }
}

#[test]
fn chiral_classes_split_without_reflection() {
    // C32 has a chiral isomer
    let with = oracle_generate(6, true).unwrap();
    let without = oracle_generate(6, false).unwrap();
    let mut job = EnumerationJob::new(Regime::Seven, 6);
    job.include_reflection = false;
    let grown = enumerate(&job).unwrap();
    assert!(cross_check(&grown.fullerenes_only(), &without).is_empty());
    assert!(without.len() > with.len());
}
