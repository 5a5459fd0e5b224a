//! Univariate polynomials over an exact field, root finding, and Euclidean
//! elimination over `k[y]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::field::{Field, PrimeField, Rationals};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug + Eq + std::hash::Hash + Ord + Send + Sync + 'static> Poly<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        Self::new(field, vec![c])
    }

    /// `y - c`
    pub fn linear_root<F: Field<Elem = E>>(field: &F, c: &E) -> Self {
        Self::new(field, vec![field.neg(c), field.one()])
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, field: &F, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i))).collect();
        Self::new(field, c)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| field.sub(&self.coeff(field, i), &other.coeff(field, i))).collect();
        Self::new(field, c)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        Self::new(field, self.coeffs.iter().map(|c| field.mul(c, s)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !field.is_zero(b) {
                    c[i + j] = field.add(&c[i + j], &field.mul(a, b));
                }
            }
        }
        Self::new(field, c)
    }

    pub fn divrem<F: Field<Elem = E>>(&self, field: &F, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(d.lead().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = field.mul(&r[k + dd], &lead_inv);
            if field.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = field.sub(&r[k + j], &field.mul(&c, dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(field, q), Self::new(field, r))
    }

    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(field, &field.inv(l).unwrap()),
        }
    }

    pub fn gcd<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(field, &b).1;
            a = b;
            b = r;
        }
        a.monic(field)
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: &E) -> E {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    pub fn derivative<F: Field<Elem = E>>(&self, field: &F) -> Self {
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| field.mul(c, &field.from_i64(i as i64))).collect();
        Self::new(field, c)
    }

    /// Multiplicity of `c` as a root.
    pub fn root_multiplicity<F: Field<Elem = E>>(&self, field: &F, c: &E) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear_root(field, c);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = p.divrem(field, &lin);
            if !r.is_zero() {
                return m;
            }
            p = q;
            m += 1;
        }
    }

    fn powmod<F: Field<Elem = E>>(&self, field: &F, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.divrem(field, modulus).1;
        let mut acc = Self::constant(field, field.one()).divrem(field, modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).divrem(field, modulus).1;
            }
            base = base.mul(field, &base).divrem(field, modulus).1;
            e >>= 1;
        }
        acc
    }
}

/// Univariate root finding in the ground field itself.
pub trait RootFinding: Field {
    /// The distinct roots of `p` that lie in the field, sorted.
    fn roots(&self, p: &Poly<Self::Elem>) -> Result<Vec<Self::Elem>>;
}

impl RootFinding for Rationals {
    fn roots(&self, p: &Poly<BigRational>) -> Result<Vec<BigRational>> {
        rational_roots(p)
    }
}

impl RootFinding for PrimeField {
    fn roots(&self, p: &Poly<u64>) -> Result<Vec<u64>> {
        Ok(prime_roots(self, p))
    }
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let small = n
        .to_u64()
        .filter(|&v| v <= DIVISOR_LIMIT)
        .ok_or_else(|| Error::Unsupported(format!("coefficient {n} too large for rational root search")))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

fn rational_roots(p: &Poly<BigRational>) -> Result<Vec<BigRational>> {
    let q = Rationals;
    if p.is_zero() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    // clear denominators, strip powers of y
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        p.coeffs().iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let shift = ints.iter().position(|c| !c.is_zero()).unwrap();
    if shift > 0 {
        roots.push(BigRational::zero());
    }
    let ints = &ints[shift..];
    if ints.len() > 1 {
        let a0 = &ints[0];
        let an = ints.last().unwrap();
        let trimmed = Poly::new(&q, ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
        for num in divisors(a0)? {
            for den in divisors(an)? {
                for sign in [1, -1] {
                    let cand = BigRational::new(num.clone() * sign, den.clone());
                    if trimmed.eval(&q, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

fn prime_roots(f: &PrimeField, p: &Poly<u64>) -> Vec<u64> {
    let q = f.modulus();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    // g = gcd(p, y^q - y) is the product of the distinct linear factors
    let y = Poly::new(f, vec![0, 1]);
    let yq = y.powmod(f, q, &p.monic(f));
    let g = p.gcd(f, &yq.sub(f, &y));
    let mut roots = Vec::new();
    if q <= 4096 {
        roots.extend((0..q).filter(|a| g.eval(f, a) == 0));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(q);
        split_linear(f, &g, &mut rng, &mut roots);
    }
    roots.sort();
    roots
}

/// Equal-degree splitting of a product of distinct linear factors (odd q).
fn split_linear(f: &PrimeField, g: &Poly<u64>, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic(f);
            out.push(f.neg(&m.coeffs()[0]));
        }
        Some(_) => loop {
            let a = rng.gen_range(0..f.modulus());
            let shifted = Poly::new(f, vec![a, 1]);
            let h = shifted.powmod(f, (f.modulus() - 1) / 2, g);
            let d = g.gcd(f, &h.sub(f, &Poly::constant(f, 1)));
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                let other = g.divrem(f, &d).0;
                split_linear(f, &d, rng, out);
                split_linear(f, &other, rng, out);
                return;
            }
        },
    }
}

/// Rank over `k(y)` of a matrix with entries in `k[y]`, together with the
/// product of the pivots of a row echelon form reached by unimodular row
/// operations. Every point where the rank drops is a root of that product.
pub fn echelon_over_polys<F: Field>(field: &F, rows: &[Vec<Poly<F::Elem>>]) -> (usize, Poly<F::Elem>) {
    let mut m: Vec<Vec<Poly<F::Elem>>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prod = Poly::constant(field, field.one());
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            // row of smallest degree in column c among rows r..
            let best = (r..m.len()).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].degree());
            let Some(best) = best else { break };
            m.swap(r, best);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let (qt, _) = m[i][c].divrem(field, &m[r][c]);
                for j in c..ncols {
                    let t = qt.mul(field, &m[r][j]);
                    m[i][j] = m[i][j].sub(field, &t);
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                prod = prod.mul(field, &m[r][c]);
                r += 1;
                break;
            }
        }
    }
    (r, prod)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(c: &[i64]) -> Poly<BigRational> {
        let q = Rationals;
        Poly::new(&q, c.iter().map(|&v| q.from_i64(v)).collect())
    }

    #[test]
    fn division_identity() {
        let q = Rationals;
        let a = qpoly(&[1, 2, 3, 4]);
        let b = qpoly(&[-1, 1]);
        let (qt, r) = a.divrem(&q, &b);
        assert_eq!(qt.mul(&q, &b).add(&q, &r), a);
        assert_eq!(r, qpoly(&[10]));
    }

    #[test]
    fn rational_root_search() {
        let q = Rationals;
        // (2y - 1)(y + 3) y
        let p = qpoly(&[0, -3, 5, 2]);
        let roots = q.roots(&p).unwrap();
        assert_eq!(roots, vec![q.from_i64(-3), q.from_i64(0), q.parse("1/2").unwrap()]);
        assert!(q.roots(&qpoly(&[2, 0, -1])).unwrap().is_empty());
    }

    #[test]
    fn prime_roots_small_and_large() {
        // both moduli are 3 mod 4, so y^2 + 1 contributes no roots
        for modulus in [7u64, 1_000_003] {
            let f = PrimeField::new(modulus).unwrap();
            // (y - 2)(y - 5)^2 (y^2 + 1) over F_q
            let mut p = Poly::new(&f, vec![1, 0, 1]);
            for r in [2, 5, 5] {
                p = p.mul(&f, &Poly::linear_root(&f, &r));
            }
            assert_eq!(f.roots(&p).unwrap(), vec![2, 5]);
            assert_eq!(p.root_multiplicity(&f, &5), 2);
        }
    }

    #[test]
    fn generic_rank_of_polynomial_matrix() {
        let q = Rationals;
        let row1 = vec![qpoly(&[0, 1]), qpoly(&[1])];
        let row2 = vec![qpoly(&[0, 0, 1]), qpoly(&[0, 1])];
        let (r, _) = echelon_over_polys(&q, &[row1.clone(), row2]);
        assert_eq!(r, 1);
        let row3 = vec![qpoly(&[1]), qpoly(&[1])];
        let (r, prod) = echelon_over_polys(&q, &[row1, row3]);
        assert_eq!(r, 2);
        assert_eq!(prod.degree(), Some(1));
    }
}
