//! The interface a base abelian category has to provide.

use std::fmt::Debug;

use crate::error::Result;
use crate::exactla::{Field, Matrix};

pub type Elem<D> = <<D as CategoryDriver>::F as Field>::Elem;

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum<O, M> {
    pub object: O,
    pub inclusions: Vec<M>,
    pub projections: Vec<M>,
}

/// An abelian category with commuting exact endofunctors `F_i` and natural
/// maps `eta_i: F_i -> id`.
///
/// `F_i` must commute strictly on objects and morphisms, and `F_i` of the
/// zero object must be the zero object: grids store their wrap-around
/// positions as literal `F_i`-images.
pub trait CategoryDriver: Clone {
    type F: Field;
    type Obj: Clone + Debug + PartialEq;
    type Mor: Clone + Debug;

    fn field(&self) -> &Self::F;
    /// Number of pairs `(F_i, eta_i)`.
    fn directions(&self) -> usize;

    fn zero_object(&self) -> Self::Obj;
    fn is_zero(&self, m: &Self::Obj) -> bool;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, m: &Self::Obj) -> Self::Mor;
    fn zero_morphism(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// `g . f`
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn add(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn scale(&self, f: &Self::Mor, c: &Elem<Self>) -> Self::Mor;

    fn hom_basis(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>>;
    /// Coordinates of `f` under a linear embedding of `Hom(a, b)` into
    /// `k^flat_len(a, b)`.
    fn flatten(&self, f: &Self::Mor) -> Vec<Elem<Self>>;
    fn flat_len(&self, a: &Self::Obj, b: &Self::Obj) -> usize;

    fn kernel(&self, f: &Self::Mor) -> Result<(Self::Obj, Self::Mor)>;
    fn cokernel(&self, f: &Self::Mor) -> Result<(Self::Obj, Self::Mor)>;
    fn direct_sum(&self, parts: &[Self::Obj]) -> Result<DirectSum<Self::Obj, Self::Mor>>;

    fn apply_f(&self, i: usize, m: &Self::Obj) -> Self::Obj;
    fn apply_f_mor(&self, i: usize, f: &Self::Mor) -> Self::Mor;
    fn eta(&self, i: usize, m: &Self::Obj) -> Self::Mor;

    /// `dim Ext^k(m, n)` inside the subcategory killed by `eta_i` for `i`
    /// in `killed`, when the driver knows it.
    fn ext_dim(&self, _killed: &[usize], _m: &Self::Obj, _n: &Self::Obj, _k: usize) -> Result<Option<usize>> {
        Ok(None)
    }

    /// Degrees past which the driver's Ext groups vanish.
    fn ext_bound(&self) -> usize {
        1
    }

    /// Numerical invariants of the isomorphism class (dimensions, ranks).
    fn invariants(&self, m: &Self::Obj) -> Vec<i64>;
    fn describe(&self, m: &Self::Obj) -> serde_json::Value;
    fn describe_mor(&self, f: &Self::Mor) -> serde_json::Value;

    fn is_zero_mor(&self, f: &Self::Mor) -> bool {
        let fl = self.field();
        self.flatten(f).iter().all(|x| fl.is_zero(x))
    }

    /// Equality of parallel morphisms.
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.flatten(f) == self.flatten(g)
    }

    /// `sum c_k b_k`, or the zero map when `basis` is empty.
    fn combine(&self, a: &Self::Obj, b: &Self::Obj, basis: &[Self::Mor], coeffs: &[Elem<Self>]) -> Result<Self::Mor> {
        let mut acc = self.zero_morphism(a, b);
        for (m, c) in basis.iter().zip(coeffs) {
            if !self.field().is_zero(c) {
                acc = self.add(&acc, &self.scale(m, c))?;
            }
        }
        Ok(acc)
    }

    /// Some `x: a -> B` with `f . x = target`, for `f: B -> C`.
    fn factor_through(&self, f: &Self::Mor, a: &Self::Obj, target: &Self::Mor) -> Result<Option<Self::Mor>> {
        let b = self.source(f);
        let c = self.target(f);
        let basis = self.hom_basis(a, &b)?;
        let cols: Vec<Vec<Elem<Self>>> =
            basis.iter().map(|x| self.compose(f, x).map(|y| self.flatten(&y))).collect::<Result<_>>()?;
        let m = Matrix::from_columns(self.field(), self.flat_len(a, &c), &cols);
        match m.solve(&self.flatten(target))? {
            Some(x) => Ok(Some(self.combine(a, &b, &basis, &x)?)),
            None => Ok(None),
        }
    }

    /// Some `x: B -> X` with `x . f = target`, for `f: A -> B`.
    fn extend_along(&self, f: &Self::Mor, x: &Self::Obj, target: &Self::Mor) -> Result<Option<Self::Mor>> {
        let a = self.source(f);
        let b = self.target(f);
        let basis = self.hom_basis(&b, x)?;
        let cols: Vec<Vec<Elem<Self>>> =
            basis.iter().map(|y| self.compose(y, f).map(|z| self.flatten(&z))).collect::<Result<_>>()?;
        let m = Matrix::from_columns(self.field(), self.flat_len(&a, x), &cols);
        match m.solve(&self.flatten(target))? {
            Some(c) => Ok(Some(self.combine(&b, x, &basis, &c)?)),
            None => Ok(None),
        }
    }

    /// The two-sided inverse of `f`, if there is one.
    fn inverse(&self, f: &Self::Mor) -> Result<Option<Self::Mor>> {
        let a = self.source(f);
        let b = self.target(f);
        let Some(g) = self.factor_through(f, &b, &self.identity(&b))? else {
            return Ok(None);
        };
        let back = self.compose(&g, f)?;
        Ok(if self.mor_eq(&back, &self.identity(&a)) { Some(g) } else { None })
    }

    fn is_mono(&self, f: &Self::Mor) -> Result<bool> {
        Ok(self.is_zero(&self.kernel(f)?.0))
    }

    fn is_epi(&self, f: &Self::Mor) -> Result<bool> {
        Ok(self.is_zero(&self.cokernel(f)?.0))
    }

    /// `F_{i_1} ... F_{i_k}`
    fn apply_f_many(&self, dirs: &[usize], m: &Self::Obj) -> Self::Obj {
        dirs.iter().fold(m.clone(), |acc, &i| self.apply_f(i, &acc))
    }

    fn apply_f_mor_many(&self, dirs: &[usize], f: &Self::Mor) -> Self::Mor {
        dirs.iter().fold(f.clone(), |acc, &i| self.apply_f_mor(i, &acc))
    }
}
