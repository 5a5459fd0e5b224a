//! Points of the projective line, binary forms, and local jets.
//!
//! A binary form of degree `d` is stored as `d + 1` coefficients, entry
//! `k` being the coefficient of `x^(d-k) y^k`. At a point `(1:c)` the local
//! chart is `w = x`, `u = y/x - c`; at `(0:1)` it is `w = y`, `u = x/y`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactla::Field;

/// A point `(l0 : l1)` with its first nonzero coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point<E> {
    pub l0: E,
    pub l1: E,
}

impl<E: Ord> PartialOrd for Point<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Ord> Ord for Point<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        // points of the chart x = 1 first, ordered by their affine coordinate
        (other.l0.cmp(&self.l0)).then_with(|| self.l1.cmp(&other.l1))
    }
}

impl<E: Clone + PartialEq> Point<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, l0: E, l1: E) -> Result<Self> {
        if let Some(inv) = field.inv(&l0) {
            Ok(Point { l0: field.one(), l1: field.mul(&l1, &inv) })
        } else if !field.is_zero(&l1) {
            Ok(Point { l0: field.zero(), l1: field.one() })
        } else {
            Err(Error::InvalidInput("the point (0:0) does not exist".into()))
        }
    }

    pub fn from_i64<F: Field<Elem = E>>(field: &F, l0: i64, l1: i64) -> Result<Self> {
        Self::new(field, field.from_i64(l0), field.from_i64(l1))
    }

    /// The point `(1 : c)`.
    pub fn affine<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        Point { l0: field.one(), l1: c }
    }

    pub fn infinity<F: Field<Elem = E>>(field: &F) -> Self {
        Point { l0: field.zero(), l1: field.one() }
    }

    pub fn is_infinity<F: Field<Elem = E>>(&self, field: &F) -> bool {
        field.is_zero(&self.l0)
    }

    /// `l1 X0 - l0 X1`, a degree-1 form vanishing exactly here.
    pub fn linear_form<F: Field<Elem = E>>(&self, field: &F) -> Vec<E> {
        vec![self.l1.clone(), field.neg(&self.l0)]
    }

    pub fn display<F: Field<Elem = E>>(&self, field: &F) -> String {
        format!("({}:{})", field.format(&self.l0), field.format(&self.l1))
    }
}

/// Product of two forms.
pub fn form_mul<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !field.is_zero(y) {
                out[i + j] = field.add(&out[i + j], &field.mul(x, y));
            }
        }
    }
    out
}

/// The monomial `x^(d-k) y^k`.
pub fn monomial<F: Field>(field: &F, d: usize, k: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); d + 1];
    v[k] = field.one();
    v
}

/// Series `f / w^d` in the local parameter, truncated to `n` terms.
pub fn jet<F: Field>(field: &F, f: &[F::Elem], p: &Point<F::Elem>, n: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    if f.is_empty() || n == 0 {
        return out;
    }
    let d = f.len() - 1;
    if p.is_infinity(field) {
        // f(u, 1) = sum f_k u^(d-k)
        for (k, c) in f.iter().enumerate() {
            if d - k < n {
                out[d - k] = c.clone();
            }
        }
    } else {
        // f(1, c + u) by Horner in k[u]/u^n
        let c = &p.l1;
        for coef in f.iter().rev() {
            // out = out * (c + u) + coef
            let mut next = vec![field.zero(); n];
            for i in 0..n {
                if field.is_zero(&out[i]) {
                    continue;
                }
                next[i] = field.add(&next[i], &field.mul(&out[i], c));
                if i + 1 < n {
                    next[i + 1] = field.add(&next[i + 1], &out[i]);
                }
            }
            next[0] = field.add(&next[0], coef);
            out = next;
        }
    }
    out
}

/// Product in `k[u]/u^n`.
pub fn trunc_mul<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem], n: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !field.is_zero(y) {
                out[i + j] = field.add(&out[i + j], &field.mul(x, y));
            }
        }
    }
    out
}

pub fn vec_add<F: Field>(field: &F, a: &mut [F::Elem], b: &[F::Elem]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !field.is_zero(y) {
            *x = field.add(x, y);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    #[test]
    fn linear_form_vanishes_at_point() {
        let q = Rationals;
        let p = Point::from_i64(&q, 2, 3).unwrap();
        let l = p.linear_form(&q);
        assert!(q.is_zero(&jet(&q, &l, &p, 1)[0]));
        assert!(!q.is_zero(&jet(&q, &l, &p, 2)[1]));
        let inf = Point::infinity(&q);
        assert_eq!(inf.linear_form(&q), vec![q.one(), q.zero()]);
        assert!(q.is_zero(&jet(&q, &inf.linear_form(&q), &inf, 1)[0]));
    }

    #[test]
    fn jets_at_finite_point() {
        let q = Rationals;
        // y^2 at (1:1): (1 + u)^2
        let f = monomial(&q, 2, 2);
        let p = Point::affine(&q, q.one());
        assert_eq!(jet(&q, &f, &p, 3), vec![q.from_i64(1), q.from_i64(2), q.from_i64(1)]);
    }
}
