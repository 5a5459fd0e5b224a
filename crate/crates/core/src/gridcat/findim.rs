//! Representations of a finite-dimensional algebra as a base category.

use std::sync::Arc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::gridcat::driver::{CategoryDriver, DirectSum};
use crate::quivalg::rep::{cokernel, hom_space, kernel};
use crate::quivalg::{AlgebraPresentation, PathAlgebra, RepMorphism, Representation};

/// How a direction acts on the base category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DirectionKind {
    /// `F = 0`, `eta = 0`.
    Zero,
    /// `F = id`, `eta = id`.
    Identity,
}

/// A morphism of representations with its endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMap<F: Field> {
    pub source: Representation<F>,
    pub target: Representation<F>,
    pub components: Vec<Matrix<F>>,
}

impl<F: Field> RepMap<F> {
    pub fn as_rep_morphism(&self) -> RepMorphism<F> {
        RepMorphism { components: self.components.clone() }
    }
}

#[derive(Clone, Debug)]
pub struct FinDimDriver<F: Field> {
    pub algebra: Arc<PathAlgebra<F>>,
    pub kinds: Vec<DirectionKind>,
}

impl<F: Field> FinDimDriver<F> {
    pub fn new(presentation: AlgebraPresentation<F>, kinds: Vec<DirectionKind>) -> Result<Self> {
        Ok(FinDimDriver { algebra: Arc::new(presentation.algebra()?), kinds })
    }

    /// The base field itself as an algebra: one vertex, no arrows.
    pub fn ground(field: F, kinds: Vec<DirectionKind>) -> Self {
        let q = crate::quivalg::linear_quiver(1);
        Self::new(AlgebraPresentation::free(field, q), kinds).expect("ground algebra")
    }

    pub fn vertex_count(&self) -> usize {
        self.algebra.quiver().vertex_count()
    }

    /// The representation with the given dimensions and arrow matrices;
    /// checked against the relations.
    pub fn representation(&self, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Representation<F>> {
        let r = Representation { dims, maps };
        r.validate(&self.algebra)?;
        Ok(r)
    }
}

impl<F: Field> CategoryDriver for FinDimDriver<F> {
    type F = F;
    type Obj = Representation<F>;
    type Mor = RepMap<F>;

    fn field(&self) -> &F {
        self.algebra.field()
    }

    fn directions(&self) -> usize {
        self.kinds.len()
    }

    fn zero_object(&self) -> Representation<F> {
        Representation::zero(self.field(), self.algebra.quiver())
    }

    fn is_zero(&self, m: &Representation<F>) -> bool {
        m.is_zero()
    }

    fn source(&self, f: &RepMap<F>) -> Representation<F> {
        f.source.clone()
    }

    fn target(&self, f: &RepMap<F>) -> Representation<F> {
        f.target.clone()
    }

    fn identity(&self, m: &Representation<F>) -> RepMap<F> {
        RepMap {
            source: m.clone(),
            target: m.clone(),
            components: m.dims.iter().map(|&d| Matrix::identity(self.field(), d)).collect(),
        }
    }

    fn zero_morphism(&self, a: &Representation<F>, b: &Representation<F>) -> RepMap<F> {
        RepMap {
            source: a.clone(),
            target: b.clone(),
            components: a.dims.iter().zip(&b.dims).map(|(&c, &r)| Matrix::zeros(self.field(), r, c)).collect(),
        }
    }

    fn compose(&self, g: &RepMap<F>, f: &RepMap<F>) -> Result<RepMap<F>> {
        if f.target.dims != g.source.dims {
            return Err(Error::DimensionMismatch("representation maps do not compose".into()));
        }
        let components = g.components.iter().zip(&f.components).map(|(a, b)| a.mul(b)).collect::<Result<_>>()?;
        Ok(RepMap { source: f.source.clone(), target: g.target.clone(), components })
    }

    fn add(&self, f: &RepMap<F>, g: &RepMap<F>) -> Result<RepMap<F>> {
        let components = f.components.iter().zip(&g.components).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(RepMap { source: f.source.clone(), target: f.target.clone(), components })
    }

    fn scale(&self, f: &RepMap<F>, c: &F::Elem) -> RepMap<F> {
        RepMap {
            source: f.source.clone(),
            target: f.target.clone(),
            components: f.components.iter().map(|m| m.scale(c)).collect(),
        }
    }

    fn hom_basis(&self, a: &Representation<F>, b: &Representation<F>) -> Result<Vec<RepMap<F>>> {
        Ok(hom_space(self.field(), self.algebra.quiver(), a, b)?
            .into_iter()
            .map(|h| RepMap { source: a.clone(), target: b.clone(), components: h.components })
            .collect())
    }

    fn flatten(&self, f: &RepMap<F>) -> Vec<F::Elem> {
        let mut out = Vec::new();
        for m in &f.components {
            for i in 0..m.rows() {
                out.extend_from_slice(m.row(i));
            }
        }
        out
    }

    fn flat_len(&self, a: &Representation<F>, b: &Representation<F>) -> usize {
        a.dims.iter().zip(&b.dims).map(|(x, y)| x * y).sum()
    }

    fn kernel(&self, f: &RepMap<F>) -> Result<(Representation<F>, RepMap<F>)> {
        let (k, inc) = kernel(self.field(), self.algebra.quiver(), &f.source, &f.as_rep_morphism())?;
        let m = RepMap { source: k.clone(), target: f.source.clone(), components: inc.components };
        Ok((k, m))
    }

    fn cokernel(&self, f: &RepMap<F>) -> Result<(Representation<F>, RepMap<F>)> {
        let (c, proj) = cokernel(self.field(), self.algebra.quiver(), &f.target, &f.as_rep_morphism())?;
        let m = RepMap { source: f.target.clone(), target: c.clone(), components: proj.components };
        Ok((c, m))
    }

    fn direct_sum(&self, parts: &[Representation<F>]) -> Result<DirectSum<Representation<F>, RepMap<F>>> {
        let field = self.field();
        let mut object = self.zero_object();
        for p in parts {
            object = object.direct_sum(field, p);
        }
        let nv = self.vertex_count();
        let mut offsets = vec![vec![0usize; nv]];
        for p in parts {
            let last = offsets.last().unwrap().clone();
            offsets.push((0..nv).map(|v| last[v] + p.dims[v]).collect());
        }
        let mut inclusions = Vec::new();
        let mut projections = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            let mut inc = Vec::new();
            let mut proj = Vec::new();
            for v in 0..nv {
                let mut a = Matrix::zeros(field, object.dims[v], p.dims[v]);
                let mut b = Matrix::zeros(field, p.dims[v], object.dims[v]);
                for j in 0..p.dims[v] {
                    a.set(offsets[k][v] + j, j, field.one());
                    b.set(j, offsets[k][v] + j, field.one());
                }
                inc.push(a);
                proj.push(b);
            }
            inclusions.push(RepMap { source: p.clone(), target: object.clone(), components: inc });
            projections.push(RepMap { source: object.clone(), target: p.clone(), components: proj });
        }
        Ok(DirectSum { object, inclusions, projections })
    }

    fn apply_f(&self, i: usize, m: &Representation<F>) -> Representation<F> {
        match self.kinds[i] {
            DirectionKind::Zero => self.zero_object(),
            DirectionKind::Identity => m.clone(),
        }
    }

    fn apply_f_mor(&self, i: usize, f: &RepMap<F>) -> RepMap<F> {
        match self.kinds[i] {
            DirectionKind::Zero => self.zero_morphism(&self.zero_object(), &self.zero_object()),
            DirectionKind::Identity => f.clone(),
        }
    }

    fn eta(&self, i: usize, m: &Representation<F>) -> RepMap<F> {
        match self.kinds[i] {
            DirectionKind::Zero => self.zero_morphism(&self.zero_object(), m),
            DirectionKind::Identity => self.identity(m),
        }
    }

    fn ext_dim(
        &self,
        killed: &[usize],
        m: &Representation<F>,
        n: &Representation<F>,
        k: usize,
    ) -> Result<Option<usize>> {
        if killed.iter().any(|&i| self.kinds[i] == DirectionKind::Identity) {
            // only the zero object is killed by an identity
            return Ok(Some(0));
        }
        Ok(Some(self.algebra.ext_dim(m, n, k)?))
    }

    fn ext_bound(&self) -> usize {
        match self.algebra.global_dimension() {
            Ok(Some(g)) => g,
            _ => self.vertex_count(),
        }
    }

    fn invariants(&self, m: &Representation<F>) -> Vec<i64> {
        m.dims.iter().map(|&d| d as i64).collect()
    }

    fn describe(&self, m: &Representation<F>) -> serde_json::Value {
        let f = self.field();
        let maps: Vec<Vec<Vec<String>>> = m
            .maps
            .iter()
            .map(|a| (0..a.rows()).map(|i| a.row(i).iter().map(|x| f.format(x)).collect()).collect())
            .collect();
        json!({"dims": m.dims, "maps": maps})
    }

    fn describe_mor(&self, g: &RepMap<F>) -> serde_json::Value {
        let f = self.field();
        let comps: Vec<Vec<Vec<String>>> = g
            .components
            .iter()
            .map(|a| (0..a.rows()).map(|i| a.row(i).iter().map(|x| f.format(x)).collect()).collect())
            .collect();
        json!({"components": comps})
    }
}
