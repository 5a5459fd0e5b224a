//! Conditions (1) and (2), the assembled summand list, auto-twisting and
//! global dimension.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::snc::restrict_bundle;
use crate::geom::{ext_dim_on_stratum, stratum_info, SncConfig, StratumBundle};
use crate::tiltcheck::family::{nonempty_strata, one_based, scan_order, TiltingFamily};

/// Injectivity of `T_I|_{L_J} ⊗ O(-L_j) -> T_I|_{L_J}` on `L_{I∪J}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition1 {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "j")]
    pub divisor: usize,
    pub injective: bool,
    pub reason: String,
}

/// `dim Ext^i_{L_{I∪J}}(T_I|_{L_{I∪J}}, T_{I∪J})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition2 {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "i")]
    pub degree: usize,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandDescriptor {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    /// One index in `1..p_i` for each `i ∈ I`.
    pub column: Vec<u32>,
    /// Position of the summand within `T_I`.
    pub summand: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingReport {
    pub conditions1: Vec<Condition1>,
    pub conditions2: Vec<Condition2>,
    pub summands: Vec<SummandDescriptor>,
    pub total: usize,
    pub gldim: usize,
    pub pass: bool,
}

impl TiltingReport {
    /// First nonvanishing Ext entry, as `(I, J, i, dim)` with 1-based indices.
    pub fn first_failure(&self) -> Option<&Condition2> {
        self.conditions2.iter().find(|c| c.dim > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// Condition (2) entries whose target is `T_K`: all `I ⊆ K` with `J = K \ I`.
fn condition2_for_target(cfg: &SncConfig, fam: &TiltingFamily, k: &[usize]) -> Result<Vec<Condition2>> {
    let s = stratum_info(cfg, k)?;
    let Some(dim) = s.kind.dim() else { return Ok(Vec::new()) };
    let target =
        fam.get(k).ok_or_else(|| Error::InvalidInput(format!("family has no bundle on {:?}", one_based(k))))?;
    let mut out = Vec::new();
    for i in scan_order(cfg.len()) {
        if !i.iter().all(|x| k.contains(x)) {
            continue;
        }
        let j: Vec<usize> = k.iter().filter(|x| !i.contains(x)).copied().collect();
        let source =
            fam.get(&i).ok_or_else(|| Error::InvalidInput(format!("family has no bundle on {:?}", one_based(&i))))?;
        let restricted = restrict_bundle(cfg, source, &i, k)?;
        for degree in 1..=dim {
            let d = ext_dim_on_stratum(cfg, k, &restricted, target, degree)?;
            out.push(Condition2 { i: one_based(&i), j: one_based(&j), degree, dim: d });
        }
    }
    Ok(out)
}

fn conditions1(cfg: &SncConfig) -> Result<Vec<Condition1>> {
    let n = cfg.len();
    let strata = nonempty_strata(cfg)?;
    let mut out = Vec::new();
    for (i, _) in &strata {
        for j in scan_order(n) {
            if !disjoint(i, &j) {
                continue;
            }
            let u = union(i, &j);
            let s = stratum_info(cfg, &u)?;
            let Some(dim) = s.kind.dim() else { continue };
            for a in 0..n {
                if u.contains(&a) {
                    continue;
                }
                let cut = stratum_info(cfg, &union(&u, &[a]))?;
                let proper = cut.kind.dim().map(|d| d < dim).unwrap_or(true);
                let reason = if dim == 0 {
                    if proper {
                        format!("L_{} misses the points of the stratum", a + 1)
                    } else {
                        format!("L_{} passes through a point of the stratum", a + 1)
                    }
                } else if proper {
                    format!("split bundle on an integral stratum of dimension {dim} not contained in L_{}", a + 1)
                } else {
                    format!("stratum is contained in L_{}", a + 1)
                };
                out.push(Condition1 { i: one_based(i), j: one_based(&j), divisor: a + 1, injective: proper, reason });
            }
        }
    }
    Ok(out)
}

/// Evaluates both conditions without assembling.
pub fn check_conditions(cfg: &SncConfig, fam: &TiltingFamily) -> Result<(Vec<Condition1>, Vec<Condition2>)> {
    fam.check_support(cfg)?;
    let mut c2 = Vec::new();
    for (k, _) in nonempty_strata(cfg)? {
        c2.extend(condition2_for_target(cfg, fam, &k)?);
    }
    c2.sort_by(|a, b| {
        (a.i.len() + a.j.len(), &a.i, &a.j, a.degree).cmp(&(b.i.len() + b.j.len(), &b.i, &b.j, b.degree))
    });
    Ok((conditions1(cfg)?, c2))
}

fn columns(weights: &[u32], i: &[usize]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &k in i {
        let mut next = Vec::new();
        for c in &out {
            for v in 1..weights[k] {
                let mut c2 = c.clone();
                c2.push(v);
                next.push(c2);
            }
        }
        out = next;
    }
    out
}

/// Summands of the tilting object, one per `(I, column, summand of T_I)`.
pub fn summand_list(cfg: &SncConfig, fam: &TiltingFamily) -> Result<Vec<SummandDescriptor>> {
    let weights = cfg.weights();
    let mut out = Vec::new();
    for (i, kind) in nonempty_strata(cfg)? {
        let b = fam.get(&i).ok_or_else(|| Error::InvalidInput(format!("no bundle on {:?}", one_based(&i))))?;
        let count = match (b, &kind) {
            (StratumBundle::Rank(r), crate::geom::StratumKind::Points(p)) => r * p,
            _ => b.len(),
        };
        for column in columns(&weights, &i) {
            for summand in 0..count {
                out.push(SummandDescriptor { i: one_based(&i), column: column.clone(), summand });
            }
        }
    }
    Ok(out)
}

/// `Σ_I |T_I| · Π_{i ∈ I} (p_i - 1)`.
pub fn summand_count(cfg: &SncConfig, fam: &TiltingFamily) -> Result<usize> {
    let weights = cfg.weights();
    let mut total = 0;
    for (i, kind) in nonempty_strata(cfg)? {
        let b = fam.get(&i).ok_or_else(|| Error::InvalidInput(format!("no bundle on {:?}", one_based(&i))))?;
        let n = match (b, &kind) {
            (StratumBundle::Rank(r), crate::geom::StratumKind::Points(p)) => r * p,
            _ => b.len(),
        };
        total += n * i.iter().map(|&k| (weights[k] - 1) as usize).product::<usize>();
    }
    Ok(total)
}

/// `max_I (dim L_I + |I|)` over nonempty strata, with the first witness.
pub fn global_dimension(cfg: &SncConfig) -> Result<(usize, Vec<usize>)> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (i, kind) in nonempty_strata(cfg)? {
        let v = kind.dim().unwrap() + i.len();
        if best.as_ref().map(|(b, _)| v > *b).unwrap_or(true) {
            best = Some((v, one_based(&i)));
        }
    }
    best.ok_or_else(|| Error::InvalidInput("configuration has no strata".into()))
}

/// Full report; summands are listed only when the conditions hold.
pub fn tilting_report(cfg: &SncConfig, fam: &TiltingFamily) -> Result<TiltingReport> {
    let (c1, c2) = check_conditions(cfg, fam)?;
    let pass = c1.iter().all(|c| c.injective) && c2.iter().all(|c| c.dim == 0);
    let summands = if pass { summand_list(cfg, fam)? } else { Vec::new() };
    Ok(TiltingReport {
        conditions1: c1,
        conditions2: c2,
        total: summands.len(),
        summands,
        gldim: global_dimension(cfg)?.0,
        pass,
    })
}

/// Summand list, refusing families that fail the conditions.
pub fn assemble_tilting(cfg: &SncConfig, fam: &TiltingFamily) -> Result<Vec<SummandDescriptor>> {
    let report = tilting_report(cfg, fam)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::Precondition(format!(
            "Ext^{}(T_{:?}|, T_{:?}) has dimension {}",
            c.degree,
            c.i,
            union(&c.i, &c.j),
            c.dim
        )));
    }
    if let Some(c) = report.conditions1.iter().find(|c| !c.injective) {
        return Err(Error::Precondition(format!(
            "condition (1) fails at {:?}, {:?}, {}: {}",
            c.i, c.j, c.divisor, c.reason
        )));
    }
    Ok(report.summands)
}

/// Raises each `T_I`, in scan order, by the least twist `k_I ∈ [0, bound]`
/// making every condition-(2) entry with target `T_I` vanish.
pub fn auto_twist(cfg: &SncConfig, fam: &TiltingFamily, bound: i64) -> Result<TiltingFamily> {
    fam.check_support(cfg)?;
    let mut out = fam.clone();
    for (k, kind) in nonempty_strata(cfg)? {
        if kind.dim() == Some(0) {
            continue;
        }
        let mut found = None;
        for t in 0..=bound {
            let trial = out.shifted(&k, t);
            if condition2_for_target(cfg, &trial, &k)?.iter().all(|c| c.dim == 0) {
                found = Some(trial);
                break;
            }
        }
        out = found.ok_or_else(|| {
            Error::Precondition(format!("no twist of T_{:?} up to {bound} satisfies condition (2)", one_based(&k)))
        })?;
    }
    Ok(out)
}
