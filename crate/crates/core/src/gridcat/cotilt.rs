//! Cotilting objects in grid categories assembled from cotilting objects
//! of the killed subcategories.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gridcat::driver::CategoryDriver;
use crate::gridcat::functors::{chain, delta, iota, pi_rho};
use crate::gridcat::grid::{grid_direct_sum, GridObject, GridShape};

/// Objects `T_H` of the subcategories killed by `eta_i`, `i` in `H`, each
/// given as a list of summands. Missing subsets mean `T_H = 0`.
pub type Family<D> = BTreeMap<Vec<usize>, Vec<<D as CategoryDriver>::Obj>>;

/// A hypothesis that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFailure {
    /// 1: `eta_a(T_H|_J)` is not mono; 2: a higher Ext survives.
    pub condition: u8,
    pub h: Vec<usize>,
    pub j: Vec<usize>,
    pub a: Option<usize>,
    pub degree: Option<usize>,
    pub dim: usize,
}

impl std::fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let set = |s: &[usize]| {
            let v: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
            format!("{{{}}}", v.join(","))
        };
        match self.condition {
            1 => write!(f, "eta_{}(T_{}|_{}) is not mono", self.a.map_or(0, |a| a + 1), set(&self.h), set(&self.j)),
            _ => write!(
                f,
                "Ext^{}(T_{}|_{}, T_{}) has dimension {}",
                self.degree.unwrap_or(0),
                set(&self.h),
                set(&self.j),
                set(&union(&self.h, &self.j)),
                self.dim
            ),
        }
    }
}

/// One indecomposable-ish summand `pi_rho^{rest} iota^H` of chains of a
/// summand of `T_H`.
#[derive(Clone, Debug)]
pub struct Summand<D: CategoryDriver> {
    pub subset: Vec<usize>,
    /// Chain length for each direction of `subset`, in order.
    pub lengths: Vec<usize>,
    pub base: D::Obj,
    pub grid: GridObject<D>,
}

#[derive(Clone, Debug)]
pub struct Cotilting<D: CategoryDriver> {
    pub object: GridObject<D>,
    pub summands: Vec<Summand<D>>,
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort();
    v.dedup();
    v
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..1usize << n).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

fn sum_of<D: CategoryDriver>(d: &D, parts: &[D::Obj]) -> Result<D::Obj> {
    Ok(d.direct_sum(parts)?.object)
}

/// `M|_J` in the base category.
pub fn restrict_base<D: CategoryDriver>(d: &D, m: &D::Obj, j: &[usize]) -> Result<D::Obj> {
    let mut out = m.clone();
    for &c in j.iter().rev() {
        out = d.cokernel(&d.eta(c, &out))?.0;
    }
    Ok(out)
}

fn ext_failure<D: CategoryDriver>(d: &D, killed: &[usize], m: &D::Obj, t: &D::Obj) -> Result<Option<(usize, usize)>> {
    for k in 1..=d.ext_bound().max(1) {
        let e = d
            .ext_dim(killed, m, t, k)?
            .ok_or_else(|| Error::Unsupported("the driver does not compute Ext in killed subcategories".into()))?;
        if e > 0 {
            return Ok(Some((k, e)));
        }
    }
    Ok(None)
}

/// Checks, for all disjoint `H`, `J` and `a` outside both, that
/// `eta_a(T_H|_J)` is mono and that `Ext^{>0}(T_H|_J, T_{H u J})` vanishes
/// in the subcategory killed by `H u J`.
pub fn check_general_conditions<D: CategoryDriver>(d: &D, family: &Family<D>) -> Result<Vec<ConditionFailure>> {
    let n = d.directions();
    let all = subsets(n);
    let get = |h: &[usize]| -> Result<D::Obj> { sum_of(d, family.get(h).map(Vec::as_slice).unwrap_or(&[])) };
    let mut out = Vec::new();
    for h in &all {
        let th = get(h)?;
        for j in &all {
            if j.iter().any(|x| h.contains(x)) {
                continue;
            }
            let r = restrict_base(d, &th, j)?;
            let hj = union(h, j);
            for a in (0..n).filter(|a| !hj.contains(a)) {
                if !d.is_mono(&d.eta(a, &r))? {
                    out.push(ConditionFailure {
                        condition: 1,
                        h: h.clone(),
                        j: j.clone(),
                        a: Some(a),
                        degree: None,
                        dim: 0,
                    });
                }
            }
            if let Some((k, e)) = ext_failure(d, &hj, &r, &get(&hj)?)? {
                out.push(ConditionFailure {
                    condition: 2,
                    h: h.clone(),
                    j: j.clone(),
                    a: None,
                    degree: Some(k),
                    dim: e,
                });
            }
        }
    }
    Ok(out)
}

fn lift<D: CategoryDriver>(
    d: &D,
    weights: &[usize],
    subset: &[usize],
    base: &D::Obj,
    lengths: Option<&[usize]>,
) -> Result<GridObject<D>> {
    let mut g = GridObject::from_base(d, base);
    for (k, &a) in subset.iter().enumerate() {
        let q = weights[a] - 1;
        g = match lengths {
            Some(ls) => chain(d, &g, a, q, ls[k])?,
            None => delta(d, &g, a, q)?,
        };
    }
    for &a in subset {
        g = iota(d, &g, a)?;
    }
    for b in (0..weights.len()).filter(|b| !subset.contains(b)) {
        g = pi_rho(d, &g, b, weights[b])?;
    }
    Ok(g)
}

fn length_tuples(weights: &[usize], subset: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &a in subset {
        let mut next = Vec::new();
        for t in &out {
            for k in (1..weights[a]).rev() {
                let mut u = t.clone();
                u.push(k);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// `sum_H pi_rho^{rest} iota^H T_H^H`, after checking the hypotheses.
pub fn build_cotilting_general<D: CategoryDriver>(
    d: &D,
    weights: &[usize],
    family: &Family<D>,
) -> Result<Cotilting<D>> {
    if weights.len() != d.directions() || weights.iter().any(|&p| p < 2) {
        return Err(Error::InvalidInput("one weight >= 2 per direction is required".into()));
    }
    let failures = check_general_conditions(d, family)?;
    if let Some(f) = failures.first() {
        let all: Vec<String> = failures.iter().map(|f| f.to_string()).collect();
        return Err(Error::Precondition(format!("{f} ({} failures: {})", failures.len(), all.join("; "))));
    }
    assemble(d, weights, family)
}

/// The construction without the checks.
pub fn assemble<D: CategoryDriver>(d: &D, weights: &[usize], family: &Family<D>) -> Result<Cotilting<D>> {
    let mut summands = Vec::new();
    for (h, parts) in family {
        for base in parts {
            for ls in length_tuples(weights, h) {
                let grid = lift(d, weights, h, base, Some(&ls))?;
                summands.push(Summand { subset: h.clone(), lengths: ls, base: base.clone(), grid });
            }
        }
    }
    let shape = GridShape::weighted(weights);
    let grids: Vec<GridObject<D>> = summands.iter().map(|s| s.grid.clone()).collect();
    let object = if grids.is_empty() { GridObject::zero(d, &shape) } else { grid_direct_sum(d, &shape, &grids)?.0 };
    Ok(Cotilting { object, summands })
}

/// `iota delta(T) + pi_rho U` in one weighted direction `i`, provided
/// `eta(U)` is mono and `Ext^{>0}(cok eta(U), T)` vanishes among objects
/// killed by `eta`.
pub fn build_cotilting_one_weight<D: CategoryDriver>(
    d: &D,
    i: usize,
    p: usize,
    t: &[D::Obj],
    u: &[D::Obj],
) -> Result<Cotilting<D>> {
    let uu = sum_of(d, u)?;
    let tt = sum_of(d, t)?;
    let eu = d.eta(i, &uu);
    if !d.is_mono(&eu)? {
        return Err(Error::Precondition(format!("condition 1: eta_{}(U) is not mono", i + 1)));
    }
    let c = d.cokernel(&eu)?.0;
    if let Some((k, e)) = ext_failure(d, &[i], &c, &tt)? {
        return Err(Error::Precondition(format!("condition 2: Ext^{k}(cok eta(U), T) has dimension {e}")));
    }
    if t.is_empty() && u.is_empty() {
        return Err(Error::InvalidInput("both T and U are empty".into()));
    }
    let mut summands = Vec::new();
    for base in t {
        for k in (1..p).rev() {
            let g = iota(d, &chain(d, &GridObject::from_base(d, base), i, p - 1, k)?, i)?;
            summands.push(Summand { subset: vec![i], lengths: vec![k], base: base.clone(), grid: g });
        }
    }
    for base in u {
        let g = pi_rho(d, &GridObject::from_base(d, base), i, p)?;
        summands.push(Summand { subset: Vec::new(), lengths: Vec::new(), base: base.clone(), grid: g });
    }
    let shape = summands[0].grid.shape.clone();
    let grids: Vec<GridObject<D>> = summands.iter().map(|s| s.grid.clone()).collect();
    let object = grid_direct_sum(d, &shape, &grids)?.0;
    Ok(Cotilting { object, summands })
}
