use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::planar_map::{
    build_dodecahedron, canonical_code, canonical_form, CanonicalCode, CanonicalForm, Dart,
    PlanarMap,
};
use crate::structure::FamilyClass;
use crate::transform::{truncate, KindSpec, TruncationKind, TruncationSite};

use super::GrowthError;

/// Which operation set drives growth and reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Regime {
    /// The seven truncations, through F_-1, F and F1.
    #[serde(rename = "seven")]
    Seven,
    /// A1 to A7, through F and F1.
    #[serde(rename = "a")]
    AOps,
    /// A1 to A4, A6, A7 and B1 to B5, through F and F1_IPR.
    #[serde(rename = "ab")]
    AbOps,
}

impl Regime {
    pub const ALL: [Regime; 3] = [Regime::Seven, Regime::AOps, Regime::AbOps];

    /// Whether `class` may appear as a step result in this regime.
    pub fn admits(self, class: FamilyClass) -> bool {
        match self {
            Regime::Seven => class.is_fullerene() || class.in_f1() || class == FamilyClass::FMinus1,
            Regime::AOps => class.is_fullerene() || class.in_f1(),
            Regime::AbOps => class.is_fullerene() || class == FamilyClass::F1Ipr,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Seven => "seven",
            Regime::AOps => "a",
            Regime::AbOps => "ab",
        })
    }
}

impl FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "seven" => Ok(Regime::Seven),
            "a" | "a_ops" => Ok(Regime::AOps),
            "ab" | "ab_ops" => Ok(Regime::AbOps),
            _ => Err(format!("unknown regime {s:?} (expected seven, a or ab)")),
        }
    }
}

/// Growth operations. `A4` to `A7` are single truncations and share their
/// tags with the truncation kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GrowthOpKind {
    T145,
    T155,
    T2645,
    T2655,
    T2656,
    T2755,
    T2756,
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    B4,
    B5,
}

impl GrowthOpKind {
    pub const A4: GrowthOpKind = GrowthOpKind::T2655;
    pub const A5: GrowthOpKind = GrowthOpKind::T2656;
    pub const A6: GrowthOpKind = GrowthOpKind::T2755;
    pub const A7: GrowthOpKind = GrowthOpKind::T2756;

    pub const TRUNCATIONS: [GrowthOpKind; 7] = [
        GrowthOpKind::T145,
        GrowthOpKind::T155,
        GrowthOpKind::T2645,
        GrowthOpKind::T2655,
        GrowthOpKind::T2656,
        GrowthOpKind::T2755,
        GrowthOpKind::T2756,
    ];

    /// Site filter for the single-truncation kinds.
    pub fn truncation_spec(self) -> Option<KindSpec> {
        use GrowthOpKind::*;
        Some(match self {
            T145 => KindSpec::edge(4, 5),
            T155 => KindSpec::edge(5, 5),
            T2645 => KindSpec::exact(2, 6, 4, 5),
            T2655 => KindSpec::exact(2, 6, 5, 5),
            T2656 => KindSpec::exact(2, 6, 5, 6),
            T2755 => KindSpec::exact(2, 7, 5, 5),
            T2756 => KindSpec::exact(2, 7, 5, 6),
            _ => return None,
        })
    }

    pub fn from_truncation(kind: TruncationKind) -> Option<GrowthOpKind> {
        GrowthOpKind::TRUNCATIONS
            .into_iter()
            .find(|op| kind.matches(&op.truncation_spec().unwrap()))
    }

    pub fn is_truncation(self) -> bool {
        self.truncation_spec().is_some()
    }

    /// Tag used in a regime: the A-regimes call the single truncations A4 to A7.
    pub fn label(self, regime: Regime) -> &'static str {
        use GrowthOpKind::*;
        match (regime, self) {
            (Regime::AOps | Regime::AbOps, T2655) => "A4",
            (Regime::AOps | Regime::AbOps, T2656) => "A5",
            (Regime::AOps | Regime::AbOps, T2755) => "A6",
            (Regime::AOps | Regime::AbOps, T2756) => "A7",
            _ => self.tag(),
        }
    }

    pub fn tag(self) -> &'static str {
        use GrowthOpKind::*;
        match self {
            T145 => "T145",
            T155 => "T155",
            T2645 => "T2645",
            T2655 => "T2655",
            T2656 => "T2656",
            T2755 => "T2755",
            T2756 => "T2756",
            A1 => "A1",
            A2 => "A2",
            A3 => "A3",
            B1 => "B1",
            B2 => "B2",
            B3 => "B3",
            B4 => "B4",
            B5 => "B5",
        }
    }
}

impl fmt::Display for GrowthOpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GrowthOpKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use GrowthOpKind::*;
        let all = [
            T145, T155, T2645, T2655, T2656, T2755, T2756, A1, A2, A3, B1, B2, B3, B4, B5,
        ];
        if let Some(k) = all.into_iter().find(|k| k.tag().eq_ignore_ascii_case(s)) {
            return Ok(k);
        }
        match s.to_ascii_uppercase().as_str() {
            "A4" => Ok(GrowthOpKind::A4),
            "A5" => Ok(GrowthOpKind::A5),
            "A6" => Ok(GrowthOpKind::A6),
            "A7" => Ok(GrowthOpKind::A7),
            _ => Err(format!("unknown growth operation {s:?}")),
        }
    }
}

/// One truncation, anchored in the canonical labeling of the map it applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveTruncation {
    pub root: Dart,
    pub s: usize,
    pub kind: TruncationKind,
}

impl PrimitiveTruncation {
    /// Anchors `site` of `map` in its canonical form `cf`.
    pub fn anchor(
        cf: &CanonicalForm,
        map: &PlanarMap,
        site: TruncationSite,
    ) -> PrimitiveTruncation {
        let kind = site.kind(map);
        let root = if cf.reflected {
            // the mirrored run starts at the far end, traversed backwards
            let last = if site.s == 0 {
                map.phi_inv(site.start_dart)
            } else {
                (1..site.s).fold(site.start_dart, |d, _| map.phi(d))
            };
            cf.dart_map[map.twin(last)]
        } else {
            cf.dart_map[site.start_dart]
        };
        PrimitiveTruncation {
            root,
            s: site.s,
            kind,
        }
    }

    /// Applies to a map in canonical labeling.
    pub fn apply(&self, canonical: &PlanarMap) -> Result<PlanarMap, GrowthError> {
        if self.root >= canonical.num_darts() {
            return Err(GrowthError::SiteMismatch(format!(
                "dart {} out of range",
                self.root
            )));
        }
        let site = TruncationSite::new(canonical, self.root, self.s);
        let found = site.kind(canonical);
        if found != self.kind {
            return Err(GrowthError::SiteMismatch(format!(
                "site has kind {found}, expected {}",
                self.kind
            )));
        }
        Ok(truncate(canonical, site)?)
    }
}

/// A growth step: the truncations realizing it, each anchored in the
/// canonical labeling of its own input, and the code of the result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthStep {
    pub kind: GrowthOpKind,
    /// Which case of the reduction produced the step.
    pub case: String,
    pub truncations: Vec<PrimitiveTruncation>,
    pub result: CanonicalCode,
}

impl GrowthStep {
    /// Replays the step on the map with code `pred`.
    pub fn replay(
        &self,
        pred: &CanonicalCode,
        include_reflection: bool,
    ) -> Result<PlanarMap, GrowthError> {
        let mut map = pred.to_map().ok_or(GrowthError::InvalidCode)?;
        for t in &self.truncations {
            let next = t.apply(&map)?;
            map = canonical_form(&next, include_reflection).map;
        }
        Ok(map)
    }
}

/// A derivation from the dodecahedron, steps in growth order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationTrace {
    pub regime: Regime,
    pub include_reflection: bool,
    pub start: CanonicalCode,
    pub steps: Vec<GrowthStep>,
}

impl DerivationTrace {
    pub fn new(regime: Regime, include_reflection: bool) -> Self {
        DerivationTrace {
            regime,
            include_reflection,
            start: canonical_code(&build_dodecahedron(), include_reflection),
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn target(&self) -> &CanonicalCode {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    /// Kinds of all truncations, composite steps expanded.
    pub fn expanded_kinds(&self) -> Vec<TruncationKind> {
        self.steps
            .iter()
            .flat_map(|s| s.truncations.iter().map(|t| t.kind))
            .collect()
    }

    /// Number of edge truncations among the expanded kinds.
    pub fn edge_truncations(&self) -> usize {
        self.expanded_kinds().iter().filter(|k| k.s == 1).count()
    }

    /// Replays every step forward and checks each recorded result.
    pub fn verify(&self) -> Result<(), GrowthError> {
        let mut code = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let map = step.replay(&code, self.include_reflection)?;
            let got = canonical_code(&map, self.include_reflection);
            if got != step.result {
                return Err(GrowthError::ReplayMismatch { step: i });
            }
            code = got;
        }
        Ok(())
    }

    /// JSON-lines records: a header line, then one line per step.
    pub fn to_jsonl(&self, trace_id: usize) -> String {
        let mut out = String::new();
        let header = serde_json::json!({
            "record": "trace",
            "trace": trace_id,
            "regime": self.regime.to_string(),
            "start": self.start,
            "target": self.target(),
            "steps": self.steps.len(),
            "truncations": self.expanded_kinds().len(),
            "edge_truncations": self.edge_truncations(),
        });
        out.push_str(&header.to_string());
        out.push('\n');
        for (i, step) in self.steps.iter().enumerate() {
            let line = serde_json::json!({
                "record": "step",
                "trace": trace_id,
                "step": i,
                "kind": step.kind.label(self.regime),
                "case": step.case,
                "anchors": step.truncations.iter().map(|t| serde_json::json!({
                    "root": t.root,
                    "s": t.s,
                    "truncation": t.kind.to_string(),
                })).collect::<Vec<_>>(),
                "result": step.result,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases() {
        assert_eq!(GrowthOpKind::A4, GrowthOpKind::T2655);
        assert_eq!(GrowthOpKind::A7, GrowthOpKind::T2756);
        assert_eq!("A6".parse::<GrowthOpKind>().unwrap(), GrowthOpKind::T2755);
        assert_eq!(GrowthOpKind::T2656.label(Regime::AOps), "A5");
        assert_eq!(GrowthOpKind::T2656.label(Regime::Seven), "T2656");
    }

    #[test]
    fn truncation_kinds_round_trip() {
        assert_eq!(
            GrowthOpKind::from_truncation(TruncationKind::new(1, 6, 5, 4)),
            Some(GrowthOpKind::T145)
        );
        assert_eq!(
            GrowthOpKind::from_truncation(TruncationKind::new(3, 7, 6, 5)),
            Some(GrowthOpKind::T2756)
        );
        assert_eq!(
            GrowthOpKind::from_truncation(TruncationKind::new(0, 5, 5, 5)),
            None
        );
    }

    #[test]
    fn regime_names() {
        for r in Regime::ALL {
            assert_eq!(r.to_string().parse::<Regime>().unwrap(), r);
        }
    }
}
