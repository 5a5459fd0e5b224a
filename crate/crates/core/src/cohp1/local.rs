//! Nilpotent linear algebra for modules over `k[u]/u^N`.

use crate::exactla::matrix::independent_modulo;
use crate::exactla::{Field, Matrix};

/// Jordan chains of a nilpotent matrix `n`: pairs `(e, v)` such that the
/// vectors `n^i v` for `i < e`, over all chains, form a basis and
/// `n^e v = 0`. Chains come out longest first.
pub fn jordan_chains<F: Field>(field: &F, n: &Matrix<F>) -> Vec<(usize, Vec<F::Elem>)> {
    let m = n.rows();
    if m == 0 {
        return Vec::new();
    }
    // kernels of n^j until they exhaust the space
    let mut kernels: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new()];
    let mut power = Matrix::identity(field, m);
    loop {
        power = n.mul(&power).expect("square");
        let k = power.kernel();
        let full = k.len() == m;
        kernels.push(k);
        if full {
            break;
        }
        assert!(kernels.len() <= m + 1, "matrix is not nilpotent");
    }
    let top = kernels.len() - 1;
    let mut chains: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    for j in (1..=top).rev() {
        let mut base = kernels[j - 1].clone();
        for (len, v) in &chains {
            let mut w = v.clone();
            for _ in 0..(len - j) {
                w = n.mul_vec(&w).expect("square");
            }
            base.push(w);
        }
        for k in independent_modulo(field, m, &base, &kernels[j]) {
            chains.push((j, kernels[j][k].clone()));
        }
    }
    chains
}

/// The shift `u` on `k[u]/u^l_1 + ... + k[u]/u^l_r`, blocks in order.
pub fn shift_operator<F: Field>(field: &F, lengths: &[usize]) -> Matrix<F> {
    let dim: usize = lengths.iter().sum();
    let mut u = Matrix::zeros(field, dim, dim);
    let mut off = 0;
    for &l in lengths {
        for k in 0..l.saturating_sub(1) {
            u.set(off + k + 1, off + k, field.one());
        }
        off += l;
    }
    u
}

/// `u^k a` truncated to `n` terms.
pub fn shift_series<F: Field>(field: &F, a: &[F::Elem], k: usize, n: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    for (i, c) in a.iter().enumerate() {
        if i + k < n {
            out[i + k] = c.clone();
        }
    }
    out
}
