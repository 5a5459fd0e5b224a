//! Families of bundles `T_I` on the strata of a configuration.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{stratum_info, SncConfig, StratumBundle, StratumKind, VarietyModel};

/// `I ↦ T_I`, keyed by 0-based sorted index sets.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TiltingFamily {
    pub bundles: BTreeMap<Vec<usize>, StratumBundle>,
}

/// Index sets sorted by size, then lexicographically.
pub fn scan_order(n: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> =
        (0u64..(1u64 << n)).map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect()).collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

/// Nonempty strata in scan order, with their kinds.
pub fn nonempty_strata(cfg: &SncConfig) -> Result<Vec<(Vec<usize>, StratumKind)>> {
    let mut out = Vec::new();
    for i in scan_order(cfg.len()) {
        let s = stratum_info(cfg, &i)?;
        if !s.kind.is_empty() {
            out.push((i, s.kind));
        }
    }
    Ok(out)
}

pub fn one_based(i: &[usize]) -> Vec<usize> {
    i.iter().map(|k| k + 1).collect()
}

impl TiltingFamily {
    pub fn get(&self, i: &[usize]) -> Option<&StratumBundle> {
        self.bundles.get(i)
    }

    pub fn insert(&mut self, i: Vec<usize>, b: StratumBundle) {
        self.bundles.insert(i, b);
    }

    /// The family with `T_I` replaced by `T_I ⊗ O(k)`.
    pub fn shifted(&self, i: &[usize], k: i64) -> Self {
        let mut out = self.clone();
        if let Some(b) = out.bundles.get_mut(i) {
            *b = b.twist(k);
        }
        out
    }

    /// Ensures entries sit exactly on the nonempty strata.
    pub fn check_support(&self, cfg: &SncConfig) -> Result<()> {
        let strata = nonempty_strata(cfg)?;
        for (i, _) in &strata {
            if !self.bundles.contains_key(i) {
                return Err(Error::InvalidInput(format!(
                    "family has no bundle on nonempty stratum {:?}",
                    one_based(i)
                )));
            }
        }
        for i in self.bundles.keys() {
            if !strata.iter().any(|(s, _)| s == i) {
                return Err(Error::InvalidInput(format!(
                    "family assigns a bundle to empty stratum {:?}",
                    one_based(i)
                )));
            }
        }
        match self.bundles.get(&Vec::new()) {
            Some(StratumBundle::Classes(c)) if !c.is_empty() => Ok(()),
            _ => Err(Error::InvalidInput("T_∅ must be a nonempty list of classes".into())),
        }
    }
}

/// The standard families: `O, ..., O(d)` and its restrictions on `P^d`
/// with hyperplanes; `O(-2) + O(-1) + O` on `P^2` with conics; and
/// `O + O(1,0) + O(0,1) + O(1,1)` on a Hirzebruch surface.
pub fn default_family(cfg: &SncConfig) -> Result<TiltingFamily> {
    let mut fam = TiltingFamily::default();
    for (i, kind) in nonempty_strata(cfg)? {
        if matches!(kind, StratumKind::Points(_)) {
            fam.insert(i, StratumBundle::Rank(1));
            continue;
        }
        let bundle = match (cfg.variety, i.len()) {
            (VarietyModel::ProjectiveSpace { d }, 0) if cfg.all_hyperplanes() => {
                StratumBundle::Classes((0..=d as i64).map(|k| vec![k]).collect())
            }
            (VarietyModel::ProjectiveSpace { d }, k) if cfg.all_hyperplanes() => {
                StratumBundle::Degrees((k as i64..=d as i64).collect())
            }
            (VarietyModel::ProjectiveSpace { d: 2 }, 0) => StratumBundle::Classes(vec![vec![-2], vec![-1], vec![0]]),
            (VarietyModel::ProjectiveSpace { d: 2 }, 1) => StratumBundle::Degrees(vec![0, 1]),
            (VarietyModel::Hirzebruch { .. }, 0) => {
                StratumBundle::Classes(vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
            }
            (VarietyModel::Hirzebruch { m }, 1) => {
                let c = &cfg.divisors[i[0]].class;
                let base = if c[1] == 1 { c[0] + m } else { 0 };
                StratumBundle::Degrees(vec![base, base + 1])
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "no standard family for stratum {:?} of {}; supply one",
                    one_based(&i),
                    cfg.variety.display()
                )))
            }
        };
        fam.insert(i, bundle);
    }
    Ok(fam)
}

#[derive(Serialize, Deserialize)]
struct FamilyEntryJson {
    #[serde(rename = "I")]
    index: Vec<usize>,
    bundle: StratumBundle,
}

impl TiltingFamily {
    /// JSON list of `{"I": [1-based indices], "bundle": ...}`.
    pub fn to_json(&self) -> String {
        let entries: Vec<FamilyEntryJson> =
            self.bundles.iter().map(|(i, b)| FamilyEntryJson { index: one_based(i), bundle: b.clone() }).collect();
        serde_json::to_string_pretty(&entries).expect("family serialises")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let entries: Vec<FamilyEntryJson> = serde_json::from_str(text)?;
        let mut fam = TiltingFamily::default();
        for e in entries {
            if e.index.contains(&0) {
                return Err(Error::Parse("family indices are 1-based".into()));
            }
            let mut i: Vec<usize> = e.index.iter().map(|k| k - 1).collect();
            i.sort_unstable();
            if fam.bundles.insert(i, e.bundle).is_some() {
                return Err(Error::Parse(format!("stratum {:?} listed twice", e.index)));
            }
        }
        Ok(fam)
    }
}
