use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::quivalg::quiver::{Path, Quiver};

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, Path)>,
    /// Free-form tag, e.g. "commutativity".
    pub kind: Option<String>,
}

impl<F: Field> Relation<F> {
    pub fn new(terms: Vec<(F::Elem, Path)>) -> Self {
        Relation { terms, kind: None }
    }

    pub fn tagged(mut self, kind: &str) -> Self {
        self.kind = Some(kind.to_string());
        self
    }

    /// `p - q`
    pub fn commutativity(field: &F, p: Path, q: Path) -> Self {
        Relation::new(vec![(field.one(), p), (field.neg(&field.one()), q)]).tagged("commutativity")
    }

    /// Common (source, target); errors if the terms are not parallel.
    pub fn endpoints(&self) -> Result<(usize, usize)> {
        let first = self.terms.first().ok_or_else(|| Error::InvalidInput("empty relation".into()))?;
        let st = (first.1.source, first.1.target);
        for (_, p) in &self.terms {
            if (p.source, p.target) != st {
                return Err(Error::InvalidInput("relation mixes paths with different endpoints".into()));
            }
        }
        Ok(st)
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraPresentation<F: Field> {
    pub field: F,
    pub quiver: Quiver,
    pub relations: Vec<Relation<F>>,
}

/// Normal forms for one block `e_v A e_u`: paths from `u` to `v` modulo
/// the ideal.
#[derive(Clone, Debug)]
pub struct Block<F: Field> {
    pub paths: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Reduced echelon rows spanning the ideal part, with their pivots.
    ideal: Matrix<F>,
    pivots: Vec<usize>,
    /// Paths (by index) forming a basis of the quotient.
    pub basis: Vec<usize>,
}

impl<F: Field> Block<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates, on the normal basis, of a combination of paths.
    pub fn reduce(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if field.is_zero(&c) {
                continue;
            }
            for (j, e) in self.ideal.row(r).iter().enumerate() {
                if !field.is_zero(e) {
                    v[j] = field.sub(&v[j], &field.mul(&c, e));
                }
            }
        }
        self.basis.iter().map(|&j| v[j].clone()).collect()
    }

    pub fn reduce_path(&self, field: &F, p: &Path) -> Vec<F::Elem> {
        let mut v = vec![field.zero(); self.paths.len()];
        v[self.index[p]] = field.one();
        self.reduce(field, &v)
    }
}

/// The finite-dimensional algebra `kQ/I` with per-block normal forms.
#[derive(Clone, Debug)]
pub struct PathAlgebra<F: Field> {
    pub presentation: AlgebraPresentation<F>,
    blocks: BTreeMap<(usize, usize), Block<F>>,
}

impl<F: Field> AlgebraPresentation<F> {
    pub fn new(field: F, quiver: Quiver, relations: Vec<Relation<F>>) -> Self {
        AlgebraPresentation { field, quiver, relations }
    }

    pub fn free(field: F, quiver: Quiver) -> Self {
        Self::new(field, quiver, Vec::new())
    }

    pub fn check(&self) -> Result<()> {
        self.quiver.check()?;
        for r in &self.relations {
            r.endpoints()?;
            for (_, p) in &r.terms {
                let mut at = p.source;
                for &a in &p.arrows {
                    let arr =
                        self.quiver.arrows.get(a).ok_or_else(|| Error::InvalidInput(format!("unknown arrow {a}")))?;
                    if arr.source != at {
                        return Err(Error::InvalidInput("relation path does not compose".into()));
                    }
                    at = arr.target;
                }
                if at != p.target {
                    return Err(Error::InvalidInput("relation path has a wrong target".into()));
                }
            }
        }
        Ok(())
    }

    /// Builds the per-block normal forms. Acyclic quivers only.
    pub fn algebra(&self) -> Result<PathAlgebra<F>> {
        self.check()?;
        let f = &self.field;
        let paths = self.quiver.all_paths()?;
        let n = self.quiver.vertex_count();
        let empty = Vec::new();
        let paths_between = |u: usize, v: usize| paths.get(&(u, v)).unwrap_or(&empty);

        // span of q . r . p inside each block
        let mut ideal_rows: BTreeMap<(usize, usize), Vec<Vec<(usize, F::Elem)>>> = BTreeMap::new();
        let mut index: BTreeMap<(usize, usize), HashMap<Path, usize>> = BTreeMap::new();
        for (&k, ps) in &paths {
            index.insert(k, ps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect());
        }
        for rel in &self.relations {
            let (s, t) = rel.endpoints()?;
            for u in 0..n {
                for before in paths_between(u, s) {
                    for v in 0..n {
                        for after in paths_between(t, v) {
                            let idx = &index[&(u, v)];
                            let mut row: Vec<(usize, F::Elem)> = Vec::new();
                            for (c, p) in &rel.terms {
                                let full = before.then(p).unwrap().then(after).unwrap();
                                row.push((idx[&full], c.clone()));
                            }
                            ideal_rows.entry((u, v)).or_default().push(row);
                        }
                    }
                }
            }
        }

        let mut blocks = BTreeMap::new();
        for (k, ps) in paths {
            let width = ps.len();
            let rows: Vec<Vec<F::Elem>> = ideal_rows
                .remove(&k)
                .unwrap_or_default()
                .into_iter()
                .map(|sparse| {
                    let mut row = vec![f.zero(); width];
                    for (j, c) in sparse {
                        row[j] = f.add(&row[j], &c);
                    }
                    row
                })
                .collect();
            // Longer paths first, so normal forms prefer short paths.
            let mut order: Vec<usize> = (0..width).collect();
            order.sort_by_key(|&j| (std::cmp::Reverse(ps[j].len()), j));
            let ordered_paths: Vec<Path> = order.iter().map(|&j| ps[j].clone()).collect();
            let m = Matrix::from_rows(f, width, rows)?.select_cols(&order);
            let e = m.echelon();
            let rank = e.pivots.len();
            let ideal = e.reduced.select_rows(&(0..rank).collect::<Vec<_>>());
            let mut is_pivot = vec![false; width];
            for &p in &e.pivots {
                is_pivot[p] = true;
            }
            let basis = (0..width).filter(|&j| !is_pivot[j]).collect();
            let index = ordered_paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            blocks.insert(k, Block { paths: ordered_paths, index, ideal, pivots: e.pivots, basis });
        }
        Ok(PathAlgebra { presentation: self.clone(), blocks })
    }

    /// Total dimension and the nonzero block dimensions `dim e_v A e_u`,
    /// keyed by `(u, v)`.
    pub fn algebra_dimension(&self) -> Result<(usize, BTreeMap<(usize, usize), usize>)> {
        let a = self.algebra()?;
        let dims: BTreeMap<(usize, usize), usize> =
            a.blocks.iter().map(|(&k, b)| (k, b.dim())).filter(|&(_, d)| d > 0).collect();
        Ok((dims.values().sum(), dims))
    }

    /// The presentation of the opposite algebra.
    pub fn opposite(&self) -> Self {
        let rev =
            |p: &Path| Path { source: p.target, target: p.source, arrows: p.arrows.iter().rev().copied().collect() };
        AlgebraPresentation {
            field: self.field.clone(),
            quiver: self.quiver.opposite(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r.terms.iter().map(|(c, p)| (c.clone(), rev(p))).collect(),
                    kind: r.kind.clone(),
                })
                .collect(),
        }
    }
}

impl<F: Field> PathAlgebra<F> {
    pub fn field(&self) -> &F {
        &self.presentation.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn block(&self, u: usize, v: usize) -> Option<&Block<F>> {
        self.blocks.get(&(u, v))
    }

    pub fn block_dim(&self, u: usize, v: usize) -> usize {
        self.block(u, v).map_or(0, Block::dim)
    }

    pub fn dimension(&self) -> usize {
        self.blocks.values().map(Block::dim).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;
    use crate::quivalg::quiver::{linear_quiver, Vertex};

    #[test]
    fn a3_dimension() {
        let a = AlgebraPresentation::free(Rationals, linear_quiver(3));
        assert_eq!(a.algebra_dimension().unwrap().0, 6);
    }

    #[test]
    fn zero_relation_on_a3() {
        let q = linear_quiver(3);
        let p = Path { source: 0, target: 2, arrows: vec![0, 1] };
        let a = AlgebraPresentation::new(Rationals, q, vec![Relation::new(vec![(Rationals.one(), p)])]);
        assert_eq!(a.algebra_dimension().unwrap().0, 5);
    }

    #[test]
    fn commutative_square() {
        let f = Rationals;
        let mut q = Quiver::new();
        for l in ["a", "b", "c", "d"] {
            q.add_vertex(Vertex::named(l));
        }
        let ab = q.add_arrow("ab", 0, 1);
        let ac = q.add_arrow("ac", 0, 2);
        let bd = q.add_arrow("bd", 1, 3);
        let cd = q.add_arrow("cd", 2, 3);
        let p1 = Path { source: 0, target: 3, arrows: vec![ab, bd] };
        let p2 = Path { source: 0, target: 3, arrows: vec![ac, cd] };
        let a = AlgebraPresentation::new(f, q, vec![Relation::commutativity(&f, p1, p2)]);
        let (total, blocks) = a.algebra_dimension().unwrap();
        assert_eq!(total, 9);
        assert_eq!(blocks[&(0, 3)], 1);
    }
}
