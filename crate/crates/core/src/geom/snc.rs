//! Normal-crossing divisor configurations and their strata.
//!
//! Curves on surfaces are handled through declared intersection points: a
//! point is a JSON array, either integer coordinates (normalised up to
//! scaling) or an opaque label such as `["p"]`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rationals};
use crate::geom::variety::{cohomology_dim, genus, h_p1, h_pd, intersection_number, sub, PicClass, VarietyModel};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DivisorDatum {
    pub label: String,
    pub class: PicClass,
    pub weight: u32,
    /// Coefficients of the linear form of a hyperplane.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<i64>>,
    /// Free-form position data; carried along, never interpreted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SncConfig {
    pub variety: VarietyModel,
    pub divisors: Vec<DivisorDatum>,
    /// `"L1,L2"` to the list of points of `L1 ∩ L2`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub intersections: BTreeMap<String, Vec<Vec<Value>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SncVerdict {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StratumKind {
    ProjectiveSpace(usize),
    Hirzebruch(i64),
    RationalCurve,
    Points(usize),
    Empty,
}

impl StratumKind {
    pub fn dim(&self) -> Option<usize> {
        match self {
            StratumKind::ProjectiveSpace(k) => Some(*k),
            StratumKind::Hirzebruch(_) => Some(2),
            StratumKind::RationalCurve => Some(1),
            StratumKind::Points(_) => Some(0),
            StratumKind::Empty => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, StratumKind::Empty)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub index: Vec<usize>,
    pub kind: StratumKind,
}

/// A split bundle on a stratum: Picard classes on the ambient variety,
/// degrees on a projective space or rational curve, or a rank at each
/// point of a finite stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StratumBundle {
    Classes(Vec<PicClass>),
    Degrees(Vec<i64>),
    Rank(usize),
}

impl StratumBundle {
    /// Number of indecomposable summands on each connected component.
    pub fn len(&self) -> usize {
        match self {
            StratumBundle::Classes(c) => c.len(),
            StratumBundle::Degrees(d) => d.len(),
            StratumBundle::Rank(r) => *r,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Tensor with `O(k)` (with `O(k H)` for classes on `P^d`); points are
    /// unaffected.
    pub fn twist(&self, k: i64) -> StratumBundle {
        match self {
            StratumBundle::Classes(c) => {
                StratumBundle::Classes(c.iter().map(|x| x.iter().map(|v| v + k).collect()).collect())
            }
            StratumBundle::Degrees(d) => StratumBundle::Degrees(d.iter().map(|v| v + k).collect()),
            StratumBundle::Rank(r) => StratumBundle::Rank(*r),
        }
    }
}

fn point_key(p: &[Value]) -> String {
    let ints: Option<Vec<i64>> = p.iter().map(|v| v.as_i64()).collect();
    match ints {
        Some(v) if !v.is_empty() && v.iter().any(|&x| x != 0) => {
            let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
            let sign = if v.iter().find(|&&x| x != 0).copied().unwrap_or(1) < 0 { -1 } else { 1 };
            let parts: Vec<String> = v.iter().map(|x| (sign * x / g).to_string()).collect();
            format!("({})", parts.join(":"))
        }
        _ => {
            let parts: Vec<String> =
                p.iter().map(|v| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())).collect();
            parts.join(",")
        }
    }
}

fn point_coords(p: &[Value]) -> Option<Vec<i64>> {
    p.iter().map(|v| v.as_i64()).collect()
}

fn cross(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn rank_of(forms: &[&Vec<i64>]) -> usize {
    let q = Rationals;
    let cols = forms[0].len();
    let data: Vec<i64> = forms.iter().flat_map(|f| f.iter().copied()).collect();
    Matrix::from_i64(&q, forms.len(), cols, &data).rank()
}

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if (mask.count_ones() as usize) <= k {
            out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

impl SncConfig {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialises")
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.divisors.iter().map(|d| d.weight).collect()
    }

    fn index_of(&self, label: &str) -> Option<usize> {
        self.divisors.iter().position(|d| d.label == label)
    }

    /// Whether every divisor is a hyperplane of `P^d` given by its form.
    pub fn all_hyperplanes(&self) -> bool {
        matches!(self.variety, VarietyModel::ProjectiveSpace { .. })
            && self.divisors.iter().all(|d| d.class == [1] && d.form.is_some())
    }

    fn is_hyperplane(&self, i: usize) -> bool {
        matches!(self.variety, VarietyModel::ProjectiveSpace { .. })
            && self.divisors[i].class == [1]
            && self.divisors[i].form.is_some()
    }

    /// Declared points per unordered pair, or an error for malformed keys.
    fn declared(&self) -> Result<BTreeMap<(usize, usize), Vec<Vec<Value>>>> {
        let mut out = BTreeMap::new();
        for (key, pts) in &self.intersections {
            let labels: Vec<&str> = key.split(',').map(str::trim).collect();
            if labels.len() != 2 {
                return Err(Error::InvalidInput(format!("intersection key {key:?} must name two divisors")));
            }
            let a = self
                .index_of(labels[0])
                .ok_or_else(|| Error::InvalidInput(format!("unknown divisor {:?} in {key:?}", labels[0])))?;
            let b = self
                .index_of(labels[1])
                .ok_or_else(|| Error::InvalidInput(format!("unknown divisor {:?} in {key:?}", labels[1])))?;
            if a == b {
                return Err(Error::InvalidInput(format!("intersection key {key:?} repeats a divisor")));
            }
            let pair = (a.min(b), a.max(b));
            if out.insert(pair, pts.clone()).is_some() {
                return Err(Error::InvalidInput(format!("intersection of {key:?} declared twice")));
            }
        }
        Ok(out)
    }

    /// Points of `L_a ∩ L_b` as normalised keys.
    fn pair_points(&self, a: usize, b: usize) -> Result<Option<Vec<String>>> {
        let declared = self.declared()?;
        let pair = (a.min(b), a.max(b));
        if let VarietyModel::ProjectiveSpace { d } = self.variety {
            if d != 2 {
                return Ok(None);
            }
            if self.is_hyperplane(a) && self.is_hyperplane(b) && !declared.contains_key(&pair) {
                let p = cross(self.divisors[a].form.as_ref().unwrap(), self.divisors[b].form.as_ref().unwrap());
                let v: Vec<Value> = p.into_iter().map(Value::from).collect();
                return Ok(Some(vec![point_key(&v)]));
            }
        }
        Ok(Some(declared.get(&pair).map(|pts| pts.iter().map(|p| point_key(p)).collect()).unwrap_or_default()))
    }
}

/// Checks normal crossings and consistency of the declared intersection data.
pub fn validate_snc(cfg: &SncConfig) -> SncVerdict {
    let mut diag = Vec::new();
    if let Err(e) = cfg.variety.validate() {
        diag.push(e.to_string());
        return SncVerdict { valid: false, diagnostics: diag };
    }
    let v = cfg.variety;
    let mut labels = BTreeSet::new();
    for d in &cfg.divisors {
        if d.label.is_empty() || !labels.insert(d.label.clone()) {
            diag.push(format!("divisor label {:?} is empty or repeated", d.label));
        }
        if d.weight < 2 {
            diag.push(format!("{}: weight {} is below 2", d.label, d.weight));
        }
        if let Err(e) = v.check_class(&d.class) {
            diag.push(format!("{}: {e}", d.label));
            continue;
        }
        match v {
            VarietyModel::ProjectiveSpace { d: dim } => {
                let deg = d.class[0];
                let supported = deg == 1 || (dim == 2 && deg == 2);
                if !supported {
                    diag.push(format!("{}: degree {deg} divisors are not supported on P^{dim}", d.label));
                }
                if deg == 1 && dim != 2 && d.form.is_none() {
                    diag.push(format!("{}: a hyperplane needs its linear form", d.label));
                }
                if let Some(f) = &d.form {
                    if f.len() != dim + 1 || f.iter().all(|&c| c == 0) {
                        diag.push(format!("{}: form must be a nonzero vector of length {}", d.label, dim + 1));
                    }
                    if deg != 1 {
                        diag.push(format!("{}: only hyperplanes carry a linear form", d.label));
                    }
                }
            }
            VarietyModel::Hirzebruch { m } => {
                let (a, b) = (d.class[0], d.class[1]);
                let smooth_rational = (a, b) == (1, 0) || (b == 1 && (a >= 0 || a == -m));
                if !smooth_rational || genus(&v, &d.class).map(|g| g != 0).unwrap_or(true) {
                    diag.push(format!(
                        "{}: class ({a},{b}) is not a supported smooth rational curve; use (1,0) or (a,1)",
                        d.label
                    ));
                }
                if d.form.is_some() {
                    diag.push(format!("{}: forms are only meaningful for hyperplanes", d.label));
                }
            }
        }
    }
    if !diag.is_empty() {
        return SncVerdict { valid: false, diagnostics: diag };
    }
    let declared = match cfg.declared() {
        Ok(d) => d,
        Err(e) => {
            diag.push(e.to_string());
            return SncVerdict { valid: false, diagnostics: diag };
        }
    };

    // general position of hyperplanes
    let hyper: Vec<usize> = (0..cfg.len()).filter(|&i| cfg.is_hyperplane(i)).collect();
    if let VarietyModel::ProjectiveSpace { d } = v {
        for s in subsets_up_to(hyper.len(), d + 1) {
            let forms: Vec<&Vec<i64>> = s.iter().map(|&k| cfg.divisors[hyper[k]].form.as_ref().unwrap()).collect();
            if rank_of(&forms) < forms.len() {
                let names: Vec<&str> = s.iter().map(|&k| cfg.divisors[hyper[k]].label.as_str()).collect();
                diag.push(format!("hyperplanes {} are not in general position", names.join(", ")));
            }
        }
    }

    // pairwise intersections on surfaces
    let mut seen: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    if v.dim() == 2 {
        for a in 0..cfg.len() {
            for b in a + 1..cfg.len() {
                let (la, lb) = (&cfg.divisors[a].label, &cfg.divisors[b].label);
                let n = intersection_number(&v, &cfg.divisors[a].class, &cfg.divisors[b].class).unwrap();
                if n < 0 {
                    diag.push(format!("{la} and {lb} meet negatively, so they share a component"));
                    continue;
                }
                let decl = declared.get(&(a, b));
                if let Some(pts) = decl {
                    if pts.len() as i64 != n {
                        diag.push(format!("{la} ∩ {lb} declares {} points, intersection number is {n}", pts.len()));
                    }
                    for p in pts {
                        if let Some(c) = point_coords(p) {
                            for &k in &[a, b] {
                                if let Some(f) = &cfg.divisors[k].form {
                                    if c.len() != f.len() || f.iter().zip(&c).map(|(x, y)| x * y).sum::<i64>() != 0 {
                                        diag.push(format!(
                                            "declared point {} does not lie on {}",
                                            point_key(p),
                                            cfg.divisors[k].label
                                        ));
                                    }
                                }
                            }
                        }
                    }
                } else if n > 0 && !(cfg.is_hyperplane(a) && cfg.is_hyperplane(b)) {
                    diag.push(format!("{la} ∩ {lb} has {n} points but none are declared"));
                }
                let pts = cfg.pair_points(a, b).unwrap().unwrap_or_default();
                let distinct: BTreeSet<&String> = pts.iter().collect();
                if distinct.len() != pts.len() {
                    diag.push(format!("{la} and {lb} are tangent: repeated intersection point"));
                }
                for p in distinct {
                    if let Some(&(c, d)) = seen.get(p) {
                        let mut names: BTreeSet<&str> = BTreeSet::new();
                        for k in [a, b, c, d] {
                            names.insert(cfg.divisors[k].label.as_str());
                        }
                        let names: Vec<&str> = names.into_iter().collect();
                        diag.push(format!("point {p} lies on {}: not normal crossings", names.join(", ")));
                    } else {
                        seen.insert(p.clone(), (a, b));
                    }
                }
            }
        }
    } else if !declared.is_empty() {
        diag.push("declared intersection points are only used on surfaces".into());
    }
    SncVerdict { valid: diag.is_empty(), diagnostics: diag }
}

fn require_valid(cfg: &SncConfig) -> Result<()> {
    let verdict = validate_snc(cfg);
    if verdict.valid {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("configuration is not valid: {}", verdict.diagnostics.join("; "))))
    }
}

fn check_index(cfg: &SncConfig, index: &[usize]) -> Result<Vec<usize>> {
    let mut i = index.to_vec();
    i.sort_unstable();
    i.dedup();
    if i.len() != index.len() || i.iter().any(|&k| k >= cfg.len()) {
        return Err(Error::InvalidInput(format!("bad divisor index set {index:?}")));
    }
    Ok(i)
}

/// The stratum `L_I = ∩_{i ∈ I} L_i` (indices are 0-based).
pub fn stratum_info(cfg: &SncConfig, index: &[usize]) -> Result<Stratum> {
    require_valid(cfg)?;
    let i = check_index(cfg, index)?;
    let kind = match (cfg.variety, i.len()) {
        (VarietyModel::ProjectiveSpace { d }, 0) => StratumKind::ProjectiveSpace(d),
        (VarietyModel::Hirzebruch { m }, 0) => StratumKind::Hirzebruch(m),
        (VarietyModel::ProjectiveSpace { d }, k) if i.iter().all(|&a| cfg.is_hyperplane(a)) => {
            if k > d {
                StratumKind::Empty
            } else if k == d {
                StratumKind::Points(1)
            } else {
                StratumKind::ProjectiveSpace(d - k)
            }
        }
        (VarietyModel::ProjectiveSpace { d: 2 }, 1) if cfg.divisors[i[0]].class == [1] => {
            StratumKind::ProjectiveSpace(1)
        }
        (_, 1) => StratumKind::RationalCurve,
        (_, 2) => {
            let n = cfg.pair_points(i[0], i[1])?.map(|p| p.len()).unwrap_or(0);
            if n == 0 {
                StratumKind::Empty
            } else {
                StratumKind::Points(n)
            }
        }
        _ => StratumKind::Empty,
    };
    Ok(Stratum { index: i, kind })
}

/// Restricts a split bundle on `X` to the stratum `L_I`.
pub fn restrict_to_stratum(cfg: &SncConfig, bundle: &[PicClass], index: &[usize]) -> Result<StratumBundle> {
    for c in bundle {
        cfg.variety.check_class(c)?;
    }
    let s = stratum_info(cfg, index)?;
    Ok(match s.kind {
        StratumKind::Empty => return Err(Error::InvalidInput(format!("stratum {index:?} is empty"))),
        StratumKind::ProjectiveSpace(_) | StratumKind::Hirzebruch(_) if s.index.is_empty() => {
            StratumBundle::Classes(bundle.to_vec())
        }
        StratumKind::ProjectiveSpace(_) => StratumBundle::Degrees(bundle.iter().map(|c| c[0]).collect()),
        StratumKind::RationalCurve | StratumKind::Hirzebruch(_) => {
            let curve = &cfg.divisors[s.index[0]].class;
            StratumBundle::Degrees(
                bundle.iter().map(|c| intersection_number(&cfg.variety, c, curve)).collect::<Result<_>>()?,
            )
        }
        StratumKind::Points(_) => StratumBundle::Rank(bundle.len()),
    })
}

/// Restricts a bundle living on `L_from` further to `L_to ⊂ L_from`.
pub fn restrict_bundle(cfg: &SncConfig, bundle: &StratumBundle, from: &[usize], to: &[usize]) -> Result<StratumBundle> {
    let from = check_index(cfg, from)?;
    let to = check_index(cfg, to)?;
    if !from.iter().all(|k| to.contains(k)) {
        return Err(Error::InvalidInput(format!("{to:?} does not contain {from:?}")));
    }
    let target = stratum_info(cfg, &to)?;
    if from == to && !matches!(bundle, StratumBundle::Classes(_)) {
        return Ok(bundle.clone());
    }
    if target.kind.is_empty() {
        return Err(Error::InvalidInput(format!("stratum {to:?} is empty")));
    }
    Ok(match (bundle, &target.kind) {
        (StratumBundle::Classes(c), _) => restrict_to_stratum(cfg, c, &to)?,
        (b, StratumKind::Points(_)) => StratumBundle::Rank(b.len()),
        // hyperplane sections keep degrees
        (StratumBundle::Degrees(d), StratumKind::ProjectiveSpace(_)) => StratumBundle::Degrees(d.clone()),
        (b, k) => {
            return Err(Error::InvalidInput(format!("cannot restrict {b:?} from {from:?} to a {k:?} stratum")));
        }
    })
}

/// `dim Ext^i(E, F)` for split bundles `E`, `F` on the stratum `L_I`.
pub fn ext_dim_on_stratum(
    cfg: &SncConfig,
    index: &[usize],
    e: &StratumBundle,
    f: &StratumBundle,
    i: usize,
) -> Result<u64> {
    let s = stratum_info(cfg, index)?;
    let mismatch = || Error::InvalidInput(format!("bundles {e:?} and {f:?} do not live on stratum {index:?}"));
    Ok(match &s.kind {
        StratumKind::Empty => return Err(Error::InvalidInput(format!("stratum {index:?} is empty"))),
        StratumKind::Points(n) => {
            if i == 0 {
                (*n * e.len() * f.len()) as u64
            } else {
                0
            }
        }
        kind => match (e, f) {
            (StratumBundle::Classes(a), StratumBundle::Classes(b)) => {
                let mut total = 0;
                for x in a {
                    for y in b {
                        total += cohomology_dim(&cfg.variety, &sub(y, x), i)?;
                    }
                }
                total
            }
            (StratumBundle::Degrees(a), StratumBundle::Degrees(b)) => {
                let k = kind.dim().unwrap();
                let mut total = 0;
                for x in a {
                    for y in b {
                        total += if k == 1 { h_p1(y - x, i) } else { h_pd(k, y - x, i) };
                    }
                }
                total
            }
            _ => return Err(mismatch()),
        },
    })
}
