use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::growth::{successors, DerivationTrace, GrowthError, GrowthStep, Regime, Successor};
use crate::planar_map::{build_dodecahedron, canonical_code, CanonicalCode};
use crate::structure::{classify, FamilyClass};

use super::oracle::{oracle_by_p6, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationJob {
    pub regime: Regime,
    pub max_p6: usize,
    pub collect_traces: bool,
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
    pub include_reflection: bool,
    /// Stop after this many stored maps and flag the result incomplete.
    pub max_maps: Option<usize>,
}

impl EnumerationJob {
    pub fn new(regime: Regime, max_p6: usize) -> Self {
        EnumerationJob {
            regime,
            max_p6,
            collect_traces: false,
            workers: 0,
            include_reflection: true,
            max_maps: None,
        }
    }
}

pub type Bucket = (FamilyClass, usize);

/// Canonical codes bucketed by class and hexagon count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratedSet {
    pub buckets: BTreeMap<Bucket, BTreeSet<CanonicalCode>>,
    /// Derivation per stored code, when collected.
    pub traces: BTreeMap<CanonicalCode, DerivationTrace>,
    pub complete: bool,
}

impl GeneratedSet {
    /// Inserts `code` unless already present anywhere in the set.
    pub fn insert(&mut self, class: FamilyClass, p6: usize, code: CanonicalCode) -> bool {
        if self.contains(&code) {
            return false;
        }
        self.buckets.entry((class, p6)).or_default().insert(code)
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.buckets.values().any(|s| s.contains(code))
    }

    pub fn len(&self) -> usize {
        self.buckets.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The fullerene part (F and F_IPR buckets) only.
    pub fn fullerenes_only(&self) -> GeneratedSet {
        GeneratedSet {
            buckets: self
                .buckets
                .iter()
                .filter(|((c, _), _)| c.is_fullerene())
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            traces: self
                .traces
                .iter()
                .filter(|(code, _)| {
                    self.buckets
                        .iter()
                        .any(|((c, _), s)| c.is_fullerene() && s.contains(*code))
                })
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            complete: self.complete,
        }
    }

    /// Fullerene codes by hexagon count, IPR and non-IPR merged.
    pub fn fullerenes_by_p6(&self) -> BTreeMap<usize, BTreeSet<CanonicalCode>> {
        let mut out: BTreeMap<usize, BTreeSet<CanonicalCode>> = BTreeMap::new();
        for ((class, p6), codes) in &self.buckets {
            if class.is_fullerene() {
                out.entry(*p6).or_default().extend(codes.iter().cloned());
            }
        }
        out
    }

    /// Every stored code in bucket order, each bucket sorted by code.
    pub fn codes(&self) -> impl Iterator<Item = (&Bucket, &CanonicalCode)> {
        self.buckets
            .iter()
            .flat_map(|(b, s)| s.iter().map(move |c| (b, c)))
    }
}

/// Whether a map of this class and hexagon count is kept on the frontier.
fn in_budget(regime: Regime, class: FamilyClass, p6: usize, max_p6: usize) -> bool {
    regime.admits(class)
        && match class {
            FamilyClass::FMinus1 => p6 <= max_p6 + 1,
            _ => p6 <= max_p6,
        }
}

/// Breadth-first closure of the dodecahedron under the regime's operations.
/// Levels are processed by face count, so every map is finalized before its
/// successors are generated; insertion follows code order, which makes the
/// output (and the recorded parent of each map) independent of `workers`.
pub fn enumerate(job: &EnumerationJob) -> Result<GeneratedSet, GrowthError> {
    let run = || enumerate_inner(job);
    if job.workers == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new()
        .num_threads(job.workers)
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

fn enumerate_inner(job: &EnumerationJob) -> Result<GeneratedSet, GrowthError> {
    let refl = job.include_reflection;
    let max_faces = 14 + job.max_p6;
    let mut set = GeneratedSet {
        complete: true,
        ..Default::default()
    };
    let mut parents: HashMap<CanonicalCode, (CanonicalCode, GrowthStep)> = HashMap::new();
    let mut pending: BTreeMap<usize, BTreeSet<CanonicalCode>> = BTreeMap::new();

    let root = canonical_code(&build_dodecahedron(), refl);
    set.insert(FamilyClass::F, 0, root.clone());
    pending.entry(12).or_default().insert(root);

    while let Some((_, level)) = pending.pop_first() {
        let level: Vec<CanonicalCode> = level.into_iter().collect();
        let expanded: Vec<Result<Vec<Successor>, GrowthError>> = level
            .par_iter()
            .map(|code| successors(code, job.regime, refl, max_faces))
            .collect();
        for (code, succ) in level.iter().zip(expanded) {
            let mut succ = succ?;
            succ.sort_by(|a, b| {
                a.step
                    .result
                    .cmp(&b.step.result)
                    .then(a.step.kind.cmp(&b.step.kind))
            });
            for s in succ {
                let p6 = s.map.p_vector().get(6);
                if !in_budget(job.regime, s.class, p6, job.max_p6) || set.contains(&s.step.result) {
                    continue;
                }
                // every stored map must pass full validation
                if classify(&s.map) != Ok(s.class) {
                    return Err(GrowthError::IllegalTransition(format!(
                        "step {} produced an invalid map",
                        s.step.kind
                    )));
                }
                if let Some(limit) = job.max_maps {
                    if set.len() >= limit {
                        set.complete = false;
                        return Ok(finish(set, &parents, job));
                    }
                }
                set.insert(s.class, p6, s.step.result.clone());
                pending
                    .entry(s.map.num_faces())
                    .or_default()
                    .insert(s.step.result.clone());
                if job.collect_traces {
                    parents.insert(s.step.result.clone(), (code.clone(), s.step));
                }
            }
        }
    }
    Ok(finish(set, &parents, job))
}

fn finish(
    mut set: GeneratedSet,
    parents: &HashMap<CanonicalCode, (CanonicalCode, GrowthStep)>,
    job: &EnumerationJob,
) -> GeneratedSet {
    if !job.collect_traces {
        return set;
    }
    let codes: Vec<CanonicalCode> = set.codes().map(|(_, c)| c.clone()).collect();
    for code in codes {
        let mut steps = Vec::new();
        let mut at = &code;
        while let Some((parent, step)) = parents.get(at) {
            steps.push(step.clone());
            at = parent;
        }
        steps.reverse();
        let mut trace = DerivationTrace::new(job.regime, job.include_reflection);
        trace.steps = steps;
        set.traces.insert(code, trace);
    }
    set
}

/// The spiral oracle as a generated set of fullerenes.
pub fn oracle_generate(
    max_p6: usize,
    include_reflection: bool,
) -> Result<GeneratedSet, OracleError> {
    let mut set = GeneratedSet {
        complete: true,
        ..Default::default()
    };
    for (p6, codes) in oracle_by_p6(max_p6, include_reflection)? {
        for code in codes {
            let map = code.to_map().expect("oracle codes decode");
            let class = classify(&map).expect("oracle maps are polytopal");
            set.insert(class, p6, code);
        }
    }
    Ok(set)
}

/// Per-bucket set differences between two generated sets.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub only_in_a: Vec<(FamilyClass, usize, CanonicalCode)>,
    pub only_in_b: Vec<(FamilyClass, usize, CanonicalCode)>,
}

impl CrossCheckReport {
    pub fn is_empty(&self) -> bool {
        self.only_in_a.is_empty() && self.only_in_b.is_empty()
    }

    pub fn len(&self) -> usize {
        self.only_in_a.len() + self.only_in_b.len()
    }
}

pub fn cross_check(a: &GeneratedSet, b: &GeneratedSet) -> CrossCheckReport {
    let empty = BTreeSet::new();
    let keys: BTreeSet<&Bucket> = a.buckets.keys().chain(b.buckets.keys()).collect();
    let mut report = CrossCheckReport::default();
    for key in keys {
        let sa = a.buckets.get(key).unwrap_or(&empty);
        let sb = b.buckets.get(key).unwrap_or(&empty);
        report
            .only_in_a
            .extend(sa.difference(sb).map(|c| (key.0, key.1, c.clone())));
        report
            .only_in_b
            .extend(sb.difference(sa).map(|c| (key.0, key.1, c.clone())));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_at_zero_is_the_dodecahedron() {
        let set = enumerate(&EnumerationJob::new(Regime::Seven, 0))
            .unwrap()
            .fullerenes_only();
        assert_eq!(set.len(), 1);
        assert!(set.complete);
    }

    #[test]
    fn cross_check_detects_a_deletion() {
        let full = oracle_generate(3, true).unwrap();
        assert!(cross_check(&full, &full).is_empty());
        let mut cut = full.clone();
        let (key, code) = cut.codes().map(|(k, c)| (*k, c.clone())).last().unwrap();
        cut.buckets.get_mut(&key).unwrap().remove(&code);
        let report = cross_check(&full, &cut);
        assert_eq!(report.len(), 1);
        assert_eq!(report.only_in_a[0].2, code);
    }

    #[test]
    fn incomplete_when_limited() {
        let mut job = EnumerationJob::new(Regime::Seven, 4);
        job.max_maps = Some(3);
        let set = enumerate(&job).unwrap();
        assert!(!set.complete);
        assert_eq!(set.len(), 3);
    }
}
