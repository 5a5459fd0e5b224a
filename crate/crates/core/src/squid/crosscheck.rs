//! Block dimensions of a squid against Hom spaces between the summands it
//! is supposed to present.
//!
//! On the line the comparison is exact: every summand is built as a grid
//! object over [`CohP1Driver`] and every `Hom` is computed there. In higher
//! dimension only two kinds of pairs are checked: the line bundle vertices
//! against section counts of `O(t' - t)` and the fully supported vertices
//! against the order on grid indices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::cohp1::{P1Sheaf, Point};
use crate::error::{Error, Result};
use crate::exactla::{Field, RootFinding};
use crate::gridcat::cotilt::{assemble, Family};
use crate::gridcat::{grid_hom_dim, CohP1Driver, GridObject};
use crate::quivalg::PathAlgebra;
use crate::squid::build::{build_pd_squid, SquidSpec, SquidVertex};

/// One compared pair of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub source: String,
    pub target: String,
    /// Paths from source to target modulo relations.
    pub algebra: usize,
    pub oracle: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub d: usize,
    /// Whether every pair was compared.
    pub full: bool,
    pub algebra_total: usize,
    /// Sum of algebra dimensions over the compared pairs.
    pub compared_algebra: usize,
    /// Sum of oracle dimensions over the compared pairs.
    pub oracle_total: usize,
    pub pairs: Vec<PairCheck>,
}

impl CrosscheckReport {
    pub fn mismatches(&self) -> Vec<&PairCheck> {
        self.pairs.iter().filter(|p| p.algebra != p.oracle).collect()
    }

    pub fn passed(&self) -> bool {
        self.compared_algebra == self.oracle_total
            && self.mismatches().is_empty()
            && (!self.full || self.algebra_total == self.oracle_total)
    }
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = if self.full { "full" } else { "partial" };
        writeln!(
            f,
            "d={} {mode}: algebra {} (compared {}), oracle {}, {} pairs, {}",
            self.d,
            self.algebra_total,
            self.compared_algebra,
            self.oracle_total,
            self.pairs.len(),
            if self.passed() { "ok" } else { "MISMATCH" }
        )?;
        for p in self.mismatches() {
            writeln!(f, "  {} -> {}: algebra {}, oracle {}", p.source, p.target, p.algebra, p.oracle)?;
        }
        Ok(())
    }
}

/// The point cut out by the binary form `a X0 + b X1`.
pub fn point_of_form<F: Field>(field: &F, form: &[i64]) -> Result<Point<F::Elem>> {
    if form.len() != 2 {
        return Err(Error::InvalidInput(format!("a form on the line has 2 coefficients, got {}", form.len())));
    }
    Point::new(field, field.from_i64(-form[1]), field.from_i64(form[0]))
}

/// Compares the squid of `spec` with its oracle over `field`.
pub fn end_dim_crosscheck<F: RootFinding>(field: &F, spec: &SquidSpec) -> Result<CrosscheckReport> {
    spec.validate()?;
    let alg = build_pd_squid(field, spec)?.algebra()?;
    match spec.d {
        0 => Err(Error::InvalidInput("the squid needs d >= 1".into())),
        1 => line_crosscheck(field, spec, &alg),
        _ => partial_crosscheck(spec, &alg),
    }
}

fn squid_vertex(alg: &PathAlgebra<impl Field>, v: usize) -> SquidVertex {
    let vx = &alg.quiver().vertices[v];
    SquidVertex {
        alpha: vx.alpha.clone().expect("squid vertices carry grid indices"),
        twist: vx.twist.expect("squid vertices carry twists") as usize,
    }
}

fn line_crosscheck<F: RootFinding>(field: &F, spec: &SquidSpec, alg: &PathAlgebra<F>) -> Result<CrosscheckReport> {
    let points = spec.forms.iter().map(|l| point_of_form(field, l)).collect::<Result<Vec<_>>>()?;
    let d = CohP1Driver::new(field.clone(), points)?;
    let mut fam: Family<CohP1Driver<F>> = BTreeMap::new();
    fam.insert(vec![], vec![P1Sheaf::line(0), P1Sheaf::line(1)]);
    for (j, p) in d.points.iter().enumerate() {
        fam.insert(vec![j], vec![P1Sheaf::skyscraper(p.clone(), 1)]);
    }
    let t = assemble(&d, &spec.weights, &fam)?;
    let mut grids: HashMap<SquidVertex, &GridObject<CohP1Driver<F>>> = HashMap::new();
    for s in &t.summands {
        let base = vec![1usize; spec.n()];
        let key = match s.subset.as_slice() {
            [] => SquidVertex { alpha: base, twist: s.base.twists[0] as usize },
            [j] => {
                let mut alpha = base;
                alpha[*j] = spec.weights[*j] + 1 - s.lengths[0];
                SquidVertex { alpha, twist: 1 }
            }
            _ => unreachable!("line families have no summands over two points"),
        };
        grids.insert(key, &s.grid);
    }
    let nv = alg.quiver().vertex_count();
    if grids.len() != nv {
        return Err(Error::Precondition(format!("{} summands for {nv} vertices", grids.len())));
    }
    let keys: Vec<SquidVertex> = (0..nv).map(|v| squid_vertex(alg, v)).collect();
    let mut pairs = Vec::new();
    for (u, ku) in keys.iter().enumerate() {
        for (v, kv) in keys.iter().enumerate() {
            let oracle = grid_hom_dim(&d, grids[ku], grids[kv])?;
            pairs.push(PairCheck { source: ku.label(), target: kv.label(), algebra: alg.block_dim(u, v), oracle });
        }
    }
    Ok(summarize(1, true, alg, pairs))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn partial_crosscheck<F: Field>(spec: &SquidSpec, alg: &PathAlgebra<F>) -> Result<CrosscheckReport> {
    let d = spec.d;
    let nv = alg.quiver().vertex_count();
    let keys: Vec<SquidVertex> = (0..nv).map(|v| squid_vertex(alg, v)).collect();
    let mut pairs = Vec::new();
    for (u, ku) in keys.iter().enumerate() {
        for (v, kv) in keys.iter().enumerate() {
            let (su, sv) = (ku.support(), kv.support());
            let oracle = if su.is_empty() && sv.is_empty() {
                if kv.twist >= ku.twist {
                    binomial(kv.twist - ku.twist + d, d)
                } else {
                    0
                }
            } else if su.len() == d && sv.len() == d {
                usize::from(su == sv && ku.alpha.iter().zip(&kv.alpha).all(|(a, b)| a <= b))
            } else {
                continue;
            };
            pairs.push(PairCheck { source: ku.label(), target: kv.label(), algebra: alg.block_dim(u, v), oracle });
        }
    }
    Ok(summarize(d, false, alg, pairs))
}

fn summarize<F: Field>(d: usize, full: bool, alg: &PathAlgebra<F>, pairs: Vec<PairCheck>) -> CrosscheckReport {
    CrosscheckReport {
        d,
        full,
        algebra_total: alg.dimension(),
        compared_algebra: pairs.iter().map(|p| p.algebra).sum(),
        oracle_total: pairs.iter().map(|p| p.oracle).sum(),
        pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 1), 3);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 2), 1);
    }

    #[test]
    fn two_points_on_the_line() {
        let spec = SquidSpec::new(1, vec![vec![1, 0], vec![0, 1]], vec![2, 2]);
        let r = end_dim_crosscheck(&Rationals, &spec).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((r.algebra_total, r.oracle_total), (10, 10));
    }

    #[test]
    fn one_point_on_the_line() {
        let spec = SquidSpec::new(1, vec![vec![1, 0]], vec![2]);
        let r = end_dim_crosscheck(&PrimeField::new(32003).unwrap(), &spec).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.oracle_total, 7);
    }

    #[test]
    fn plane_example_partial() {
        let spec = SquidSpec::new(2, vec![vec![1, 0, 0], vec![0, 1, 0]], vec![3, 3]);
        let r = end_dim_crosscheck(&Rationals, &spec).unwrap();
        assert!(!r.full);
        assert!(r.passed(), "{r}");
    }
}
