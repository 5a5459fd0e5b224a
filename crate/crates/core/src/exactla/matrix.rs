//! Dense matrices over an exact field.

use crate::error::{Error, Result};
use crate::exactla::field::Field;

/// A dense row-major matrix. The field travels with the matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        Ok(Matrix { field: field.clone(), rows: r, cols, data })
    }

    pub fn from_i64(field: &F, rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols, "entry count");
        Matrix { field: field.clone(), rows, cols, data: vals.iter().map(|&v| field.from_i64(v)).collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: &F, cols: usize, parts: &[&Self]) -> Result<Self> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::DimensionMismatch(format!("vstack of {} columns into {cols}", p.cols)));
            }
            rows += p.rows;
            data.extend(p.data.iter().cloned());
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(field: &F, rows: usize, parts: &[&Self]) -> Result<Self> {
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for p in parts {
            if p.rows != rows {
                return Err(Error::DimensionMismatch(format!("hstack of {} rows into {rows}", p.rows)));
            }
            for i in 0..rows {
                for j in 0..p.cols {
                    out.set(i, off + j, p.get(i, j).clone());
                }
            }
            off += p.cols;
        }
        Ok(out)
    }

    pub fn block_diag(field: &F, parts: &[&Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out.set(r0 + i, c0 + j, p.get(i, j).clone());
                }
            }
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(r, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                out.set(i, c, self.get(i, j).clone());
            }
        }
        out
    }

    /// Gauss-Jordan elimination.
    pub fn echelon(&self) -> Echelon<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !f.is_zero(&m.data[idx]) {
                    m.data[idx] = f.mul(&m.data[idx], &inv);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let pv = &m.data[r * m.cols + j];
                    if f.is_zero(pv) {
                        continue;
                    }
                    let t = f.mul(&factor, pv);
                    let idx = i * m.cols + j;
                    m.data[idx] = f.sub(&m.data[idx], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Rank and a basis of the right kernel.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<F::Elem>>) {
        let f = &self.field;
        let Echelon { reduced, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                let e = reduced.get(r, free);
                if !f.is_zero(e) {
                    v[p] = f.neg(e);
                }
            }
            basis.push(v);
        }
        (pivots.len(), basis)
    }

    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        self.rank_kernel().1
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let cols = self.cols;
        let rhs = Matrix::from_columns(f, self.rows, &[b.to_vec()]);
        let aug = Matrix::hstack(f, self.rows, &[self, &rhs])?;
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(r, cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves `self * X = B` column by column.
    pub fn solve_matrix(&self, b: &Self) -> Result<Option<Self>> {
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            match self.solve(&b.column(j))? {
                Some(x) => cols.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_columns(&self.field, self.cols, &cols)))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let id = Self::identity(&self.field, self.rows);
        let aug = Matrix::hstack(&self.field, self.rows, &[self, &id]).ok()?;
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.len() < self.rows || pivots[self.rows - 1] >= self.cols {
            return None;
        }
        let idx: Vec<usize> = (self.cols..2 * self.cols).collect();
        Some(reduced.select_cols(&idx))
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.echelon().pivots
    }
}

/// Basis of the joint solution space `{x : A_i x = B_i x}` on a source of
/// dimension `dim`.
pub fn equalizer_basis<F: Field>(
    field: &F,
    dim: usize,
    constraints: &[(Matrix<F>, Matrix<F>)],
) -> Result<Vec<Vec<F::Elem>>> {
    let mut diffs = Vec::with_capacity(constraints.len());
    for (i, (a, b)) in constraints.iter().enumerate() {
        if a.cols() != dim || b.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "constraint {i} acts on dimensions {} and {}, expected {dim}",
                a.cols(),
                b.cols()
            )));
        }
        diffs.push(a.sub(b)?);
    }
    let refs: Vec<&Matrix<F>> = diffs.iter().collect();
    let stacked = Matrix::vstack(field, dim, &refs)?;
    Ok(stacked.kernel())
}

/// Greedy scan: indices of `candidates` that extend the span of `base`
/// (all vectors of length `n`).
pub fn independent_modulo<F: Field>(
    field: &F,
    n: usize,
    base: &[Vec<F::Elem>],
    candidates: &[Vec<F::Elem>],
) -> Vec<usize> {
    let mut current: Vec<Vec<F::Elem>> = Vec::new();
    let mut rank = 0;
    if !base.is_empty() {
        let m = Matrix::from_rows(field, n, base.to_vec()).expect("row lengths");
        let e = m.echelon();
        rank = e.pivots.len();
        current = (0..rank).map(|i| e.reduced.row(i).to_vec()).collect();
    }
    let mut chosen = Vec::new();
    for (k, c) in candidates.iter().enumerate() {
        let mut trial = current.clone();
        trial.push(c.clone());
        let m = Matrix::from_rows(field, n, trial).expect("row lengths");
        let e = m.echelon();
        if e.pivots.len() > rank {
            rank = e.pivots.len();
            current = (0..rank).map(|i| e.reduced.row(i).to_vec()).collect();
            chosen.push(k);
        }
    }
    chosen
}

/// A basis of the span of the given vectors (subset of the input).
pub fn span_basis<F: Field>(field: &F, n: usize, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    independent_modulo(field, n, &[], vectors).into_iter().map(|k| vectors[k].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::{PrimeField, Rationals};

    #[test]
    fn identity_has_trivial_kernel() {
        let m = Matrix::identity(&Rationals, 2);
        let (r, k) = m.rank_kernel();
        assert_eq!(r, 2);
        assert!(k.is_empty());
    }

    #[test]
    fn row_of_ones() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, 1, 2, &[1, 1]);
        let (r, k) = m.rank_kernel();
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![q.from_i64(-1), q.from_i64(1)]]);
    }

    #[test]
    fn zero_matrix_inconsistent() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::zeros(&f, 2, 2);
        assert_eq!(m.solve(&[1, 0]).unwrap(), None);
        assert!(m.solve(&[1]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&q, 2));
        assert!(Matrix::from_i64(&q, 2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn vacuous_equalizers() {
        let q = Rationals;
        assert_eq!(equalizer_basis(&q, 3, &[]).unwrap().len(), 3);
        let a = Matrix::from_i64(&q, 2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(equalizer_basis(&q, 3, &[(a.clone(), a)]).unwrap().len(), 3);
    }
}
