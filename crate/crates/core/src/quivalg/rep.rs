use crate::error::{Error, Result};
use crate::exactla::{equalizer_basis, Field, Matrix};
use crate::quivalg::algebra::PathAlgebra;
use crate::quivalg::quiver::{Path, Quiver};

/// A representation: a vector space per vertex, a matrix
/// `M_a : M_{s(a)} -> M_{t(a)}` per arrow.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F: Field> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMorphism<F: Field> {
    pub components: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn zero(field: &F, q: &Quiver) -> Self {
        Representation {
            dims: vec![0; q.vertex_count()],
            maps: q.arrows.iter().map(|_| Matrix::zeros(field, 0, 0)).collect(),
        }
    }

    pub fn simple(field: &F, q: &Quiver, v: usize) -> Self {
        let mut dims = vec![0; q.vertex_count()];
        dims[v] = 1;
        let maps = q.arrows.iter().map(|a| Matrix::zeros(field, dims[a.target], dims[a.source])).collect();
        Representation { dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The matrix of a path, `M_{a_n} ... M_{a_1}`.
    pub fn path_map(&self, field: &F, p: &Path) -> Matrix<F> {
        let mut m = Matrix::identity(field, self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m).expect("path shapes");
        }
        m
    }

    /// Checks shapes and that every relation acts by zero.
    pub fn validate(&self, alg: &PathAlgebra<F>) -> Result<()> {
        let q = alg.quiver();
        let f = alg.field();
        if self.dims.len() != q.vertex_count() || self.maps.len() != q.arrows.len() {
            return Err(Error::DimensionMismatch("representation does not fit the quiver".into()));
        }
        for (i, a) in q.arrows.iter().enumerate() {
            let m = &self.maps[i];
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::DimensionMismatch(format!("arrow {} has a wrong shape", a.label)));
            }
        }
        for (k, r) in alg.presentation.relations.iter().enumerate() {
            let (s, t) = r.endpoints()?;
            let mut acc = Matrix::zeros(f, self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                acc = acc.add(&self.path_map(f, p).scale(c))?;
            }
            if !acc.is_zero() {
                return Err(Error::InvalidInput(format!("relation {k} does not vanish")));
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, field: &F, other: &Self) -> Self {
        Representation {
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| Matrix::block_diag(field, &[a, b])).collect(),
        }
    }

    /// The dual representation of the opposite quiver (transposes).
    pub fn dual(&self) -> Self {
        Representation { dims: self.dims.clone(), maps: self.maps.iter().map(Matrix::transpose).collect() }
    }

    pub fn identity(&self, field: &F) -> RepMorphism<F> {
        RepMorphism { components: self.dims.iter().map(|&d| Matrix::identity(field, d)).collect() }
    }
}

impl<F: Field> RepMorphism<F> {
    pub fn compose(&self, after: &Self) -> Result<Self> {
        let components = self.components.iter().zip(&after.components).map(|(f, g)| g.mul(f)).collect::<Result<_>>()?;
        Ok(RepMorphism { components })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }
}

fn offsets(dims: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    let mut out = Vec::new();
    for d in dims {
        out.push(acc);
        acc += d;
    }
    out.push(acc);
    out
}

/// Basis of `Hom(M, N)`. Each basis element is a tuple of vertex matrices.
pub fn hom_space<F: Field>(
    field: &F,
    q: &Quiver,
    m: &Representation<F>,
    n: &Representation<F>,
) -> Result<Vec<RepMorphism<F>>> {
    if m.dims.len() != q.vertex_count() || n.dims.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch("representations of different quivers".into()));
    }
    // unknowns: row-major entries of X_v (n_v x m_v), vertex by vertex
    let off = offsets((0..q.vertex_count()).map(|v| n.dims[v] * m.dims[v]));
    let total = *off.last().unwrap();
    let mut constraints = Vec::new();
    for (ai, a) in q.arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ms, mt, ns, nt) = (m.dims[s], m.dims[t], n.dims[s], n.dims[t]);
        if nt * ms == 0 {
            continue;
        }
        // N_a X_s and X_t M_a, both nt x ms, as linear maps in the unknowns
        let mut lhs = Matrix::zeros(field, nt * ms, total);
        let mut rhs = Matrix::zeros(field, nt * ms, total);
        let na = &n.maps[ai];
        let ma = &m.maps[ai];
        for i in 0..nt {
            for j in 0..ms {
                let row = i * ms + j;
                for k in 0..ns {
                    let c = na.get(i, k);
                    if !field.is_zero(c) {
                        let col = off[s] + k * ms + j;
                        lhs.set(row, col, field.add(lhs.get(row, col), c));
                    }
                }
                for k in 0..mt {
                    let c = ma.get(k, j);
                    if !field.is_zero(c) {
                        let col = off[t] + i * mt + k;
                        rhs.set(row, col, field.add(rhs.get(row, col), c));
                    }
                }
            }
        }
        constraints.push((lhs, rhs));
    }
    let basis = equalizer_basis(field, total, &constraints)?;
    Ok(basis
        .into_iter()
        .map(|x| RepMorphism {
            components: (0..q.vertex_count())
                .map(|v| {
                    let (r, c) = (n.dims[v], m.dims[v]);
                    let mut mat = Matrix::zeros(field, r, c);
                    for i in 0..r {
                        for j in 0..c {
                            mat.set(i, j, x[off[v] + i * c + j].clone());
                        }
                    }
                    mat
                })
                .collect(),
        })
        .collect())
}

pub fn hom_dim<F: Field>(field: &F, q: &Quiver, m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    Ok(hom_space(field, q, m, n)?.len())
}

/// Kernel subrepresentation with its inclusion.
pub fn kernel<F: Field>(
    field: &F,
    q: &Quiver,
    m: &Representation<F>,
    f: &RepMorphism<F>,
) -> Result<(Representation<F>, RepMorphism<F>)> {
    let bases: Vec<Matrix<F>> =
        (0..q.vertex_count()).map(|v| Matrix::from_columns(field, m.dims[v], &f.components[v].kernel())).collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut maps = Vec::new();
    for (ai, a) in q.arrows.iter().enumerate() {
        let img = m.maps[ai].mul(&bases[a.source])?;
        let restricted = bases[a.target]
            .solve_matrix(&img)?
            .ok_or_else(|| Error::Precondition("kernel is not a subrepresentation".into()))?;
        maps.push(restricted);
    }
    Ok((Representation { dims, maps }, RepMorphism { components: bases }))
}

/// Cokernel with its projection.
pub fn cokernel<F: Field>(
    field: &F,
    q: &Quiver,
    n: &Representation<F>,
    f: &RepMorphism<F>,
) -> Result<(Representation<F>, RepMorphism<F>)> {
    // projection onto N_v / im f_v: rows spanning the left kernel of f_v
    let projs: Vec<Matrix<F>> = (0..q.vertex_count())
        .map(|v| {
            let left = f.components[v].transpose().kernel();
            Matrix::from_rows(field, n.dims[v], left).expect("row lengths")
        })
        .collect();
    let dims: Vec<usize> = projs.iter().map(Matrix::rows).collect();
    let mut maps = Vec::new();
    for (ai, a) in q.arrows.iter().enumerate() {
        // find C_a with C_a P_s = P_t N_a
        let target = projs[a.target].mul(&n.maps[ai])?;
        let ca = projs[a.source]
            .transpose()
            .solve_matrix(&target.transpose())?
            .ok_or_else(|| Error::Precondition("image is not a subrepresentation".into()))?
            .transpose();
        maps.push(ca);
    }
    Ok((Representation { dims, maps }, RepMorphism { components: projs }))
}

impl<F: Field> PathAlgebra<F> {
    /// The indecomposable projective `P_u = e_? A e_u`: paths starting at
    /// `u`, arrows acting by extension.
    pub fn projective(&self, u: usize) -> Representation<F> {
        let q = self.quiver();
        let f = self.field();
        let dims: Vec<usize> = (0..q.vertex_count()).map(|v| self.block_dim(u, v)).collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows.iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let mut m = Matrix::zeros(f, dims[t], dims[s]);
            if let (Some(bs), Some(bt)) = (self.block(u, s), self.block(u, t)) {
                for (col, &pi) in bs.basis.iter().enumerate() {
                    let ext = bs.paths[pi].then(&q.arrow_path(ai)).unwrap();
                    for (row, c) in bt.reduce_path(f, &ext).into_iter().enumerate() {
                        m.set(row, col, c);
                    }
                }
            }
            maps.push(m);
        }
        Representation { dims, maps }
    }

    pub fn simple(&self, v: usize) -> Representation<F> {
        Representation::simple(self.field(), self.quiver(), v)
    }

    /// Projective cover `P -> M`, with the multiplicity of each `P_v` in `P`.
    pub fn projective_cover(&self, m: &Representation<F>) -> Result<(Representation<F>, RepMorphism<F>, Vec<usize>)> {
        let q = self.quiver();
        let f = self.field();
        let nv = q.vertex_count();
        // top generators: complements of the radical at each vertex
        let mut gens: Vec<Vec<Vec<F::Elem>>> = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut rad: Vec<Vec<F::Elem>> = Vec::new();
            for a in q.incoming(v) {
                let ma = &m.maps[a];
                for j in 0..ma.cols() {
                    rad.push(ma.column(j));
                }
            }
            let units: Vec<Vec<F::Elem>> = (0..m.dims[v])
                .map(|i| {
                    let mut e = vec![f.zero(); m.dims[v]];
                    e[i] = f.one();
                    e
                })
                .collect();
            let chosen = crate::exactla::matrix::independent_modulo(f, m.dims[v], &rad, &units);
            gens.push(chosen.into_iter().map(|i| units[i].clone()).collect());
        }
        let mult: Vec<usize> = gens.iter().map(Vec::len).collect();
        let mut cover = Representation::zero(f, q);
        let mut comps: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); nv];
        for u in 0..nv {
            if gens[u].is_empty() {
                continue;
            }
            let pu = self.projective(u);
            for g in &gens[u] {
                cover = cover.direct_sum(f, &pu);
                // basis path p of block (u, v) goes to M_p g
                for (v, comp) in comps.iter_mut().enumerate() {
                    if let Some(b) = self.block(u, v) {
                        for &pi in &b.basis {
                            comp.push(m.path_map(f, &b.paths[pi]).mul_vec(g)?);
                        }
                    }
                }
            }
        }
        let components = (0..nv).map(|v| Matrix::from_columns(f, m.dims[v], &comps[v])).collect();
        Ok((cover, RepMorphism { components }, mult))
    }

    /// First syzygy together with the cover multiplicities.
    pub fn syzygy(&self, m: &Representation<F>) -> Result<(Representation<F>, Vec<usize>)> {
        let (p, pi, mult) = self.projective_cover(m)?;
        let (k, _) = kernel(self.field(), self.quiver(), &p, &pi)?;
        Ok((k, mult))
    }

    /// Default bound on resolution lengths.
    pub fn resolution_bound(&self) -> usize {
        2 * self.quiver().vertex_count()
    }

    pub fn hom_dim(&self, m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
        hom_dim(self.field(), self.quiver(), m, n)
    }

    /// `dim Ext^i(M, N)`.
    pub fn ext_dim(&self, m: &Representation<F>, n: &Representation<F>, i: usize) -> Result<usize> {
        self.ext_dim_bounded(m, n, i, self.resolution_bound())
    }

    pub fn ext_dim_bounded(
        &self,
        m: &Representation<F>,
        n: &Representation<F>,
        i: usize,
        bound: usize,
    ) -> Result<usize> {
        if i == 0 {
            return self.hom_dim(m, n);
        }
        if i > bound + 1 {
            return Err(Error::ResolutionBound { bound });
        }
        let mut k = m.clone();
        for _ in 1..i {
            if k.is_zero() {
                return Ok(0);
            }
            k = self.syzygy(&k)?.0;
        }
        if k.is_zero() {
            return Ok(0);
        }
        let (omega, mult) = self.syzygy(&k)?;
        let hom_p: usize = mult.iter().enumerate().map(|(v, &t)| t * n.dims[v]).sum();
        let a = self.hom_dim(&omega, n)?;
        let b = self.hom_dim(&k, n)?;
        Ok(a + b - hom_p)
    }

    pub fn projective_dimension(&self, m: &Representation<F>) -> Result<usize> {
        let bound = self.resolution_bound();
        let mut k = m.clone();
        let mut pd: usize = 0;
        loop {
            if k.is_zero() {
                return Ok(pd.saturating_sub(1));
            }
            if pd > bound {
                return Err(Error::ResolutionBound { bound });
            }
            k = self.syzygy(&k)?.0;
            pd += 1;
        }
    }

    /// Maximal projective dimension of the simples; `None` for the zero
    /// algebra.
    pub fn global_dimension(&self) -> Result<Option<usize>> {
        let mut best = None;
        for v in 0..self.quiver().vertex_count() {
            let pd = self.projective_dimension(&self.simple(v))?;
            best = Some(best.map_or(pd, |b: usize| b.max(pd)));
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};
    use crate::quivalg::algebra::{AlgebraPresentation, Relation};
    use crate::quivalg::quiver::linear_quiver;

    #[test]
    fn a2_ext_between_simples() {
        let a = AlgebraPresentation::free(Rationals, linear_quiver(2)).algebra().unwrap();
        let (s1, s2) = (a.simple(0), a.simple(1));
        assert_eq!(a.hom_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(a.ext_dim(&s1, &s2, 1).unwrap(), 1);
        assert_eq!(a.ext_dim(&s2, &s1, 1).unwrap(), 0);
        assert_eq!(a.global_dimension().unwrap(), Some(1));
    }

    #[test]
    fn projectives_have_no_extensions() {
        let f = PrimeField::new(5).unwrap();
        let a = AlgebraPresentation::free(f, linear_quiver(3)).algebra().unwrap();
        for u in 0..3 {
            let p = a.projective(u);
            p.validate(&a).unwrap();
            for v in 0..3 {
                assert_eq!(a.ext_dim(&p, &a.simple(v), 1).unwrap(), 0);
            }
        }
        assert_eq!(a.projective(0).dims, vec![1, 1, 1]);
    }

    #[test]
    fn zero_relation_raises_global_dimension() {
        let f = Rationals;
        let q = linear_quiver(3);
        let p = Path { source: 0, target: 2, arrows: vec![0, 1] };
        let a = AlgebraPresentation::new(f, q, vec![Relation::new(vec![(f.one(), p)])]).algebra().unwrap();
        assert_eq!(a.global_dimension().unwrap(), Some(2));
        assert_eq!(a.ext_dim(&a.simple(0), &a.simple(2), 2).unwrap(), 1);
    }
}
