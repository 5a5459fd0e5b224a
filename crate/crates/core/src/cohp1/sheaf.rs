//! Split coherent sheaves on the projective line and their morphisms.

use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::cohp1::point::{form_mul, jet, monomial, trunc_mul, vec_add, Point};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

/// A torsion summand `O_x / m_x^mult`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Torsion<E> {
    pub point: Point<E>,
    pub mult: usize,
}

impl<E: Ord> PartialOrd for Torsion<E> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Ord> Ord for Torsion<E> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.point.cmp(&other.point).then(self.mult.cmp(&other.mult))
    }
}

/// `O(a_1) + ... + O(a_r) + torsion`, twists ascending, torsion sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct P1Sheaf<E> {
    pub twists: Vec<i64>,
    pub torsion: Vec<Torsion<E>>,
}

/// Block data of a morphism `M -> N`.
///
/// * `ff[j][i]`: binary form of degree `b_j - a_i` (empty when negative);
/// * `ft[j][i]`: image in `k[u]/u^l_j` of the local generator `w^a_i`;
/// * `tt[j][i]`: multiplier in `k[u]/u^l_j`, zero unless the points agree,
///   and divisible by `u^(l_j - l_i)`.
///
/// Torsion never maps to the free part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct P1Morphism<E> {
    pub source: P1Sheaf<E>,
    pub target: P1Sheaf<E>,
    pub ff: Vec<Vec<Vec<E>>>,
    pub ft: Vec<Vec<Vec<E>>>,
    pub tt: Vec<Vec<Vec<E>>>,
}

impl<E: Clone + Ord> P1Sheaf<E> {
    pub fn zero() -> Self {
        P1Sheaf { twists: Vec::new(), torsion: Vec::new() }
    }

    pub fn new(mut twists: Vec<i64>, mut torsion: Vec<Torsion<E>>) -> Self {
        twists.sort();
        torsion.sort();
        P1Sheaf { twists, torsion }
    }

    pub fn line(a: i64) -> Self {
        P1Sheaf { twists: vec![a], torsion: Vec::new() }
    }

    pub fn lines(twists: &[i64]) -> Self {
        Self::new(twists.to_vec(), Vec::new())
    }

    pub fn skyscraper(point: Point<E>, mult: usize) -> Self {
        P1Sheaf { twists: Vec::new(), torsion: vec![Torsion { point, mult }] }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn torsion_length(&self) -> usize {
        self.torsion.iter().map(|t| t.mult).sum()
    }

    pub fn degree(&self) -> i64 {
        self.twists.iter().sum::<i64>() + self.torsion_length() as i64
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degree() + self.rank() as i64
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty() && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut t = self.twists.clone();
        t.extend(&other.twists);
        let mut s = self.torsion.clone();
        s.extend(other.torsion.iter().cloned());
        Self::new(t, s)
    }

    /// `M(k)`
    pub fn twist(&self, k: i64) -> Self {
        P1Sheaf { twists: self.twists.iter().map(|a| a + k).collect(), torsion: self.torsion.clone() }
    }

    pub fn max_twist(&self) -> Option<i64> {
        self.twists.last().copied()
    }

    pub fn min_twist(&self) -> Option<i64> {
        self.twists.first().copied()
    }
}

/// Sorting permutation: `perm[new] = old`.
pub(crate) fn sort_perm<T: Ord>(items: &[T]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..items.len()).collect();
    idx.sort_by(|&a, &b| items[a].cmp(&items[b]).then(a.cmp(&b)));
    idx
}

fn ff_len(src: i64, tgt: i64) -> usize {
    if tgt >= src {
        (tgt - src + 1) as usize
    } else {
        0
    }
}

fn tt_range<E: PartialEq>(s: &Torsion<E>, t: &Torsion<E>) -> std::ops::Range<usize> {
    if s.point == t.point {
        t.mult.saturating_sub(s.mult)..t.mult
    } else {
        0..0
    }
}

impl<E: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync + 'static> P1Morphism<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F, source: &P1Sheaf<E>, target: &P1Sheaf<E>) -> Self {
        let ff = target
            .twists
            .iter()
            .map(|&b| source.twists.iter().map(|&a| vec![field.zero(); ff_len(a, b)]).collect())
            .collect();
        let ft =
            target.torsion.iter().map(|t| source.twists.iter().map(|_| vec![field.zero(); t.mult]).collect()).collect();
        let tt = target
            .torsion
            .iter()
            .map(|t| source.torsion.iter().map(|_| vec![field.zero(); t.mult]).collect())
            .collect();
        P1Morphism { source: source.clone(), target: target.clone(), ff, ft, tt }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, m: &P1Sheaf<E>) -> Self {
        let mut id = Self::zero(field, m, m);
        for i in 0..m.rank() {
            id.ff[i][i] = vec![field.one()];
        }
        for j in 0..m.torsion.len() {
            id.tt[j][j][0] = field.one();
        }
        id
    }

    /// Number of free coordinates of `Hom(M, N)`, which is its dimension.
    pub fn hom_dim(source: &P1Sheaf<E>, target: &P1Sheaf<E>) -> usize {
        let ff: usize = target.twists.iter().map(|&b| source.twists.iter().map(|&a| ff_len(a, b)).sum::<usize>()).sum();
        let ft: usize = target.torsion.iter().map(|t| t.mult * source.rank()).sum();
        let tt: usize =
            target.torsion.iter().map(|t| source.torsion.iter().map(|s| tt_range(s, t).len()).sum::<usize>()).sum();
        ff + ft + tt
    }

    /// Coordinates in the order: free-free, free-torsion, torsion-torsion.
    pub fn flatten(&self) -> Vec<E> {
        let mut out = Vec::new();
        for row in &self.ff {
            for f in row {
                out.extend(f.iter().cloned());
            }
        }
        for row in &self.ft {
            for f in row {
                out.extend(f.iter().cloned());
            }
        }
        for (j, row) in self.tt.iter().enumerate() {
            for (i, f) in row.iter().enumerate() {
                let r = tt_range(&self.source.torsion[i], &self.target.torsion[j]);
                out.extend(f[r].iter().cloned());
            }
        }
        out
    }

    pub fn from_coords<F: Field<Elem = E>>(field: &F, source: &P1Sheaf<E>, target: &P1Sheaf<E>, coords: &[E]) -> Self {
        let mut m = Self::zero(field, source, target);
        let mut k = 0;
        for row in m.ff.iter_mut() {
            for f in row.iter_mut() {
                for c in f.iter_mut() {
                    *c = coords[k].clone();
                    k += 1;
                }
            }
        }
        for row in m.ft.iter_mut() {
            for f in row.iter_mut() {
                for c in f.iter_mut() {
                    *c = coords[k].clone();
                    k += 1;
                }
            }
        }
        for (j, row) in m.tt.iter_mut().enumerate() {
            for (i, f) in row.iter_mut().enumerate() {
                for idx in tt_range(&source.torsion[i], &target.torsion[j]) {
                    f[idx] = coords[k].clone();
                    k += 1;
                }
            }
        }
        assert_eq!(k, coords.len(), "coordinate count");
        m
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.flatten().iter().all(|c| field.is_zero(c))
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch("adding morphisms between different sheaves".into()));
        }
        let a = self.flatten();
        let b = other.flatten();
        let c: Vec<E> = a.iter().zip(&b).map(|(x, y)| field.add(x, y)).collect();
        Ok(Self::from_coords(field, &self.source, &self.target, &c))
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        let c: Vec<E> = self.flatten().iter().map(|x| field.mul(x, s)).collect();
        Self::from_coords(field, &self.source, &self.target, &c)
    }

    /// `g . f`
    pub fn compose<F: Field<Elem = E>>(field: &F, g: &Self, f: &Self) -> Result<Self> {
        if f.target != g.source {
            return Err(Error::DimensionMismatch("morphisms do not compose".into()));
        }
        let (a, b, c) = (&f.source, &f.target, &g.target);
        let mut out = Self::zero(field, a, c);
        for k in 0..c.rank() {
            for i in 0..a.rank() {
                let mut acc = vec![field.zero(); ff_len(a.twists[i], c.twists[k])];
                for j in 0..b.rank() {
                    let p = form_mul(field, &g.ff[k][j], &f.ff[j][i]);
                    if !p.is_empty() {
                        vec_add(field, &mut acc, &p);
                    }
                }
                out.ff[k][i] = acc;
            }
        }
        for (k, tk) in c.torsion.iter().enumerate() {
            let l = tk.mult;
            for i in 0..a.rank() {
                let mut acc = vec![field.zero(); l];
                for j in 0..b.rank() {
                    if f.ff[j][i].is_empty() {
                        continue;
                    }
                    let loc = jet(field, &f.ff[j][i], &tk.point, l);
                    vec_add(field, &mut acc, &trunc_mul(field, &g.ft[k][j], &loc, l));
                }
                for j in 0..b.torsion.len() {
                    vec_add(field, &mut acc, &trunc_mul(field, &g.tt[k][j], &f.ft[j][i], l));
                }
                out.ft[k][i] = acc;
            }
            for i in 0..a.torsion.len() {
                let mut acc = vec![field.zero(); l];
                for j in 0..b.torsion.len() {
                    vec_add(field, &mut acc, &trunc_mul(field, &g.tt[k][j], &f.tt[j][i], l));
                }
                out.tt[k][i] = acc;
            }
        }
        Ok(out)
    }

    /// The same data read as a morphism `F(M) -> F(N)` for `F = (-1)`.
    pub fn twist(&self, k: i64) -> Self {
        P1Morphism { source: self.source.twist(k), target: self.target.twist(k), ..self.clone() }
    }
}

/// Basis of `Hom(M, N)`, one element per coordinate.
pub fn hom_basis<F: Field>(field: &F, m: &P1Sheaf<F::Elem>, n: &P1Sheaf<F::Elem>) -> Vec<P1Morphism<F::Elem>> {
    let d = P1Morphism::hom_dim(m, n);
    (0..d)
        .map(|k| {
            let mut c = vec![field.zero(); d];
            c[k] = field.one();
            P1Morphism::from_coords(field, m, n, &c)
        })
        .collect()
}

/// `F(M) = M(-1)`.
pub fn twist_down<E: Clone + Ord>(m: &P1Sheaf<E>) -> P1Sheaf<E> {
    m.twist(-1)
}

/// The map `eta(M): M(-1) -> M` given by the linear form of `lambda`.
pub fn eta<F: Field>(field: &F, m: &P1Sheaf<F::Elem>, lambda: &Point<F::Elem>) -> P1Morphism<F::Elem> {
    let src = twist_down(m);
    let mut out = P1Morphism::zero(field, &src, m);
    let form = lambda.linear_form(field);
    for i in 0..m.rank() {
        out.ff[i][i] = form.clone();
    }
    for (j, t) in m.torsion.iter().enumerate() {
        out.tt[j][j] = jet(field, &form, &t.point, t.mult);
    }
    out
}

/// Matrix of `h |-> f . h` from `Hom(X, B)` to `Hom(X, C)` in coordinates.
pub fn post_compose_matrix<F: Field>(field: &F, f: &P1Morphism<F::Elem>, x: &P1Sheaf<F::Elem>) -> Result<Matrix<F>> {
    let basis = hom_basis(field, x, &f.source);
    let rows = P1Morphism::hom_dim(x, &f.target);
    let cols: Vec<Vec<F::Elem>> =
        basis.iter().map(|h| P1Morphism::compose(field, f, h).map(|c| c.flatten())).collect::<Result<_>>()?;
    Ok(Matrix::from_columns(field, rows, &cols))
}

/// Matrix of `h |-> h . f` from `Hom(B, X)` to `Hom(A, X)` in coordinates.
pub fn pre_compose_matrix<F: Field>(field: &F, f: &P1Morphism<F::Elem>, x: &P1Sheaf<F::Elem>) -> Result<Matrix<F>> {
    let basis = hom_basis(field, &f.target, x);
    let rows = P1Morphism::hom_dim(&f.source, x);
    let cols: Vec<Vec<F::Elem>> =
        basis.iter().map(|h| P1Morphism::compose(field, h, f).map(|c| c.flatten())).collect::<Result<_>>()?;
    Ok(Matrix::from_columns(field, rows, &cols))
}

/// `dim Ext^1(M, N)`, from Serre duality summand by summand.
pub fn ext1_dim<E: Clone + Ord>(m: &P1Sheaf<E>, n: &P1Sheaf<E>) -> usize {
    let mut total = 0usize;
    for &a in &m.twists {
        for &b in &n.twists {
            // h^1(O(b - a)) = h^0(O(a - b - 2))
            total += (a - b - 1).max(0) as usize;
        }
    }
    for t in &m.torsion {
        total += t.mult * n.rank();
        for s in &n.torsion {
            if s.point == t.point {
                total += t.mult.min(s.mult);
            }
        }
    }
    total
}

/// `dim Ext^i(M, N)`; the line is hereditary.
pub fn ext_dim<E: Clone + Ord + Debug + Eq + Hash + Send + Sync + 'static>(
    m: &P1Sheaf<E>,
    n: &P1Sheaf<E>,
    i: usize,
) -> usize {
    match i {
        0 => P1Morphism::hom_dim(m, n),
        1 => ext1_dim(m, n),
        _ => 0,
    }
}

/// `dim Hom - dim Ext^1` from ranks and degrees alone.
pub fn euler_form<E: Clone + Ord>(m: &P1Sheaf<E>, n: &P1Sheaf<E>) -> i64 {
    let (rm, rn) = (m.rank() as i64, n.rank() as i64);
    rm * rn + rm * n.degree() - rn * m.degree()
}

/// A monomial section `x^(d-k) y^k` viewed as a map `O(a) -> O(a + d)`.
pub fn monomial_map<F: Field>(field: &F, a: i64, d: usize, k: usize) -> P1Morphism<F::Elem> {
    let mut m = P1Morphism::zero(field, &P1Sheaf::line(a), &P1Sheaf::line(a + d as i64));
    m.ff[0][0] = monomial(field, d, k);
    m
}

/// JSON form `{"twists":[..], "torsion":[{"point":[p,q],"mult":m}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SheafJson {
    #[serde(default)]
    pub twists: Vec<i64>,
    #[serde(default)]
    pub torsion: Vec<TorsionJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorsionJson {
    pub point: [Scalar; 2],
    pub mult: usize,
}

/// A scalar written as a JSON integer or as a string such as `"-2/3"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn to_elem<F: Field>(&self, field: &F) -> Result<F::Elem> {
        match self {
            Scalar::Int(v) => Ok(field.from_i64(*v)),
            Scalar::Text(s) => field.parse(s),
        }
    }

    pub fn from_elem<F: Field>(field: &F, e: &F::Elem) -> Self {
        let s = field.format(e);
        match s.parse::<i64>() {
            Ok(v) => Scalar::Int(v),
            Err(_) => Scalar::Text(s),
        }
    }
}

impl SheafJson {
    pub fn to_sheaf<F: Field>(&self, field: &F) -> Result<P1Sheaf<F::Elem>> {
        let mut torsion = Vec::new();
        for t in &self.torsion {
            if t.mult == 0 {
                return Err(Error::InvalidInput("torsion multiplicity must be positive".into()));
            }
            let point = Point::new(field, t.point[0].to_elem(field)?, t.point[1].to_elem(field)?)?;
            torsion.push(Torsion { point, mult: t.mult });
        }
        Ok(P1Sheaf::new(self.twists.clone(), torsion))
    }

    pub fn from_sheaf<F: Field>(field: &F, m: &P1Sheaf<F::Elem>) -> Self {
        SheafJson {
            twists: m.twists.clone(),
            torsion: m
                .torsion
                .iter()
                .map(|t| TorsionJson {
                    point: [Scalar::from_elem(field, &t.point.l0), Scalar::from_elem(field, &t.point.l1)],
                    mult: t.mult,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    #[test]
    fn hom_dimensions() {
        let q = Rationals;
        let lam = Point::from_i64(&q, 1, 0).unwrap();
        type M = P1Morphism<num_rational::BigRational>;
        assert_eq!(M::hom_dim(&P1Sheaf::line(0), &P1Sheaf::line(2)), 3);
        assert_eq!(M::hom_dim(&P1Sheaf::skyscraper(lam.clone(), 1), &P1Sheaf::line(5)), 0);
        assert_eq!(M::hom_dim(&P1Sheaf::line(-1), &P1Sheaf::skyscraper(lam.clone(), 2)), 2);
        let t3 = P1Sheaf::skyscraper(lam.clone(), 3);
        let t1 = P1Sheaf::skyscraper(lam, 1);
        assert_eq!(M::hom_dim(&t3, &t1), 1);
        assert_eq!(M::hom_dim(&t1, &t3), 1);
        assert_eq!(M::hom_dim(&t3, &t3), 3);
    }

    #[test]
    fn ext_values() {
        let q = Rationals;
        let lam = Point::from_i64(&q, 0, 1).unwrap();
        assert_eq!(ext1_dim(&P1Sheaf::<num_rational::BigRational>::line(1), &P1Sheaf::line(-1)), 1);
        for k in -1..4 {
            assert_eq!(ext1_dim(&P1Sheaf::<num_rational::BigRational>::line(0), &P1Sheaf::line(k)), 0);
        }
        assert_eq!(ext1_dim(&P1Sheaf::skyscraper(lam, 1), &P1Sheaf::line(3)), 1);
    }

    #[test]
    fn eta_on_skyscrapers() {
        let q = Rationals;
        let lam = Point::from_i64(&q, 1, 2).unwrap();
        let mu = Point::from_i64(&q, 1, 5).unwrap();
        let e = eta(&q, &P1Sheaf::skyscraper(lam.clone(), 1), &lam);
        assert!(e.is_zero(&q));
        let e = eta(&q, &P1Sheaf::skyscraper(mu, 1), &lam);
        assert!(!q.is_zero(&e.tt[0][0][0]));
    }

    #[test]
    fn identity_laws() {
        let q = Rationals;
        let lam = Point::from_i64(&q, 1, 1).unwrap();
        let m = P1Sheaf::new(vec![0, 1], vec![Torsion { point: lam, mult: 2 }]);
        let n = P1Sheaf::lines(&[1, 3]).direct_sum(&m);
        for f in hom_basis(&q, &m, &n) {
            let id_m = P1Morphism::identity(&q, &m);
            let id_n = P1Morphism::identity(&q, &n);
            assert_eq!(P1Morphism::compose(&q, &f, &id_m).unwrap(), f);
            assert_eq!(P1Morphism::compose(&q, &id_n, &f).unwrap(), f);
        }
    }
}
