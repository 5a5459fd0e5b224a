//! Coherent sheaves on the projective line with marked points.
//!
//! Every direction uses `F = (-1)`; direction `i` has `eta_i` given by the
//! linear form of the point `lambda_i`.

use serde_json::json;

use crate::cohp1::{self, P1Morphism, P1Sheaf, Point, SheafJson};
use crate::error::{Error, Result};
use crate::exactla::RootFinding;
use crate::gridcat::driver::{CategoryDriver, DirectSum};

#[derive(Clone, Debug)]
pub struct CohP1Driver<F: RootFinding> {
    pub field: F,
    pub points: Vec<Point<F::Elem>>,
}

impl<F: RootFinding> CohP1Driver<F> {
    pub fn new(field: F, points: Vec<Point<F::Elem>>) -> Result<Self> {
        for (a, p) in points.iter().enumerate() {
            if points[..a].contains(p) {
                return Err(Error::InvalidInput(format!("point {} is repeated", p.display(&field))));
            }
        }
        Ok(CohP1Driver { field, points })
    }
}

type Sheaf<F> = P1Sheaf<<F as crate::exactla::Field>::Elem>;
type Mor<F> = P1Morphism<<F as crate::exactla::Field>::Elem>;

/// Slot of each part's components inside the sorted sum.
fn place<T: PartialEq>(sum: &[T], parts: &[&[T]]) -> Vec<Vec<usize>> {
    let mut used = vec![false; sum.len()];
    parts
        .iter()
        .map(|part| {
            part.iter()
                .map(|x| {
                    let k = (0..sum.len()).find(|&k| !used[k] && sum[k] == *x).expect("summand in sum");
                    used[k] = true;
                    k
                })
                .collect()
        })
        .collect()
}

impl<F: RootFinding> CategoryDriver for CohP1Driver<F> {
    type F = F;
    type Obj = Sheaf<F>;
    type Mor = Mor<F>;

    fn field(&self) -> &F {
        &self.field
    }

    fn directions(&self) -> usize {
        self.points.len()
    }

    fn zero_object(&self) -> Sheaf<F> {
        P1Sheaf::zero()
    }

    fn is_zero(&self, m: &Sheaf<F>) -> bool {
        m.is_zero()
    }

    fn source(&self, f: &Mor<F>) -> Sheaf<F> {
        f.source.clone()
    }

    fn target(&self, f: &Mor<F>) -> Sheaf<F> {
        f.target.clone()
    }

    fn identity(&self, m: &Sheaf<F>) -> Mor<F> {
        P1Morphism::identity(&self.field, m)
    }

    fn zero_morphism(&self, a: &Sheaf<F>, b: &Sheaf<F>) -> Mor<F> {
        P1Morphism::zero(&self.field, a, b)
    }

    fn compose(&self, g: &Mor<F>, f: &Mor<F>) -> Result<Mor<F>> {
        P1Morphism::compose(&self.field, g, f)
    }

    fn add(&self, f: &Mor<F>, g: &Mor<F>) -> Result<Mor<F>> {
        f.add(&self.field, g)
    }

    fn scale(&self, f: &Mor<F>, c: &F::Elem) -> Mor<F> {
        f.scale(&self.field, c)
    }

    fn hom_basis(&self, a: &Sheaf<F>, b: &Sheaf<F>) -> Result<Vec<Mor<F>>> {
        Ok(cohp1::hom_basis(&self.field, a, b))
    }

    fn flatten(&self, f: &Mor<F>) -> Vec<F::Elem> {
        f.flatten()
    }

    fn flat_len(&self, a: &Sheaf<F>, b: &Sheaf<F>) -> usize {
        P1Morphism::hom_dim(a, b)
    }

    fn kernel(&self, f: &Mor<F>) -> Result<(Sheaf<F>, Mor<F>)> {
        cohp1::kernel(&self.field, f)
    }

    fn cokernel(&self, f: &Mor<F>) -> Result<(Sheaf<F>, Mor<F>)> {
        cohp1::cokernel(&self.field, f)
    }

    fn direct_sum(&self, parts: &[Sheaf<F>]) -> Result<DirectSum<Sheaf<F>, Mor<F>>> {
        let field = &self.field;
        let object = parts.iter().fold(P1Sheaf::zero(), |acc, p| acc.direct_sum(p));
        let twists: Vec<&[i64]> = parts.iter().map(|p| p.twists.as_slice()).collect();
        let tors: Vec<&[_]> = parts.iter().map(|p| p.torsion.as_slice()).collect();
        let tw_pos = place(&object.twists, &twists);
        let to_pos = place(&object.torsion, &tors);
        let mut inclusions = Vec::new();
        let mut projections = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            let mut inc = P1Morphism::zero(field, p, &object);
            let mut proj = P1Morphism::zero(field, &object, p);
            for (a, &pos) in tw_pos[k].iter().enumerate() {
                inc.ff[pos][a] = vec![field.one()];
                proj.ff[a][pos] = vec![field.one()];
            }
            for (j, &pos) in to_pos[k].iter().enumerate() {
                inc.tt[pos][j][0] = field.one();
                proj.tt[j][pos][0] = field.one();
            }
            inclusions.push(inc);
            projections.push(proj);
        }
        Ok(DirectSum { object, inclusions, projections })
    }

    fn apply_f(&self, _i: usize, m: &Sheaf<F>) -> Sheaf<F> {
        cohp1::sheaf::twist_down(m)
    }

    fn apply_f_mor(&self, _i: usize, f: &Mor<F>) -> Mor<F> {
        f.twist(-1)
    }

    fn eta(&self, i: usize, m: &Sheaf<F>) -> Mor<F> {
        cohp1::eta(&self.field, m, &self.points[i])
    }

    fn ext_dim(&self, killed: &[usize], m: &Sheaf<F>, n: &Sheaf<F>, k: usize) -> Result<Option<usize>> {
        Ok(Some(match killed.len() {
            0 => cohp1::ext_dim(m, n, k),
            // sheaves killed by one linear form: vector spaces at the point
            1 if k == 0 => P1Morphism::hom_dim(m, n),
            _ => 0,
        }))
    }

    fn invariants(&self, m: &Sheaf<F>) -> Vec<i64> {
        vec![m.rank() as i64, m.degree(), m.torsion_length() as i64]
    }

    fn describe(&self, m: &Sheaf<F>) -> serde_json::Value {
        serde_json::to_value(SheafJson::from_sheaf(&self.field, m)).expect("sheaf serialises")
    }

    fn describe_mor(&self, f: &Mor<F>) -> serde_json::Value {
        let fmt = |blocks: &Vec<Vec<Vec<F::Elem>>>| -> Vec<Vec<Vec<String>>> {
            blocks
                .iter()
                .map(|row| row.iter().map(|e| e.iter().map(|x| self.field.format(x)).collect()).collect())
                .collect()
        };
        json!({"ff": fmt(&f.ff), "ft": fmt(&f.ft), "tt": fmt(&f.tt)})
    }
}
