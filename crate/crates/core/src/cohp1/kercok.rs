//! Kernels and cokernels of morphisms of split sheaves.
//!
//! Free parts are recovered from graded section spaces: the kernel's free
//! part through `Hom(O(-t), ker)`, the cokernel's through the dual spaces
//! `Hom(cok, O(t))`. Torsion parts are computed locally at each point.

use crate::cohp1::local::{jordan_chains, shift_operator, shift_series};
use crate::cohp1::point::{form_mul, jet, monomial, Point};
use crate::cohp1::sheaf::{post_compose_matrix, pre_compose_matrix, sort_perm, P1Morphism, P1Sheaf, Torsion};
use crate::error::{Error, Result};
use crate::exactla::matrix::independent_modulo;
use crate::exactla::poly::{echelon_over_polys, Poly, RootFinding};
use crate::exactla::{Field, Matrix};

type Mor<F> = P1Morphism<<F as Field>::Elem>;
type Sheaf<F> = P1Sheaf<<F as Field>::Elem>;

fn free_block_polys<F: Field>(field: &F, phi: &Mor<F>) -> Vec<Vec<Poly<F::Elem>>> {
    phi.ff.iter().map(|row| row.iter().map(|f| Poly::new(field, f.clone())).collect()).collect()
}

/// Rank of the free-to-free block over the function field.
pub fn generic_rank<F: Field>(field: &F, phi: &Mor<F>) -> usize {
    if phi.source.rank() == 0 || phi.target.rank() == 0 {
        return 0;
    }
    echelon_over_polys(field, &free_block_polys(field, phi)).0
}

/// Assembles a sheaf from unsorted summands and returns the sorting maps.
fn sorted_sheaf<E: Clone + Ord>(twists: Vec<i64>, torsion: Vec<Torsion<E>>) -> (P1Sheaf<E>, Vec<usize>, Vec<usize>) {
    let fp = sort_perm(&twists);
    let tp = sort_perm(&torsion);
    let sheaf = P1Sheaf {
        twists: fp.iter().map(|&i| twists[i]).collect(),
        torsion: tp.iter().map(|&i| torsion[i].clone()).collect(),
    };
    (sheaf, fp, tp)
}

fn distinct_points<E: Clone + Ord>(ts: &[Torsion<E>]) -> Vec<Point<E>> {
    let mut pts: Vec<Point<E>> = ts.iter().map(|t| t.point.clone()).collect();
    pts.sort();
    pts.dedup();
    pts
}

/// Kernel of the torsion-to-torsion block at one point, as cyclic pieces
/// with the images of their generators in the source torsion.
fn local_torsion_kernel<F: Field>(
    field: &F,
    phi: &Mor<F>,
    point: &Point<F::Elem>,
) -> Result<Vec<(usize, Vec<(usize, Vec<F::Elem>)>)>> {
    let src: Vec<usize> = (0..phi.source.torsion.len()).filter(|&j| &phi.source.torsion[j].point == point).collect();
    let tgt: Vec<usize> = (0..phi.target.torsion.len()).filter(|&i| &phi.target.torsion[i].point == point).collect();
    let slen: Vec<usize> = src.iter().map(|&j| phi.source.torsion[j].mult).collect();
    let tlen: Vec<usize> = tgt.iter().map(|&i| phi.target.torsion[i].mult).collect();
    let dim_v: usize = slen.iter().sum();
    let dim_w: usize = tlen.iter().sum();
    let mut map = Matrix::zeros(field, dim_w, dim_v);
    let mut col = 0;
    for (jj, &j) in src.iter().enumerate() {
        for k in 0..slen[jj] {
            let mut row = 0;
            for (ii, &i) in tgt.iter().enumerate() {
                let img = shift_series(field, &phi.tt[i][j], k, tlen[ii]);
                for (r, c) in img.into_iter().enumerate() {
                    map.set(row + r, col, c);
                }
                row += tlen[ii];
            }
            col += 1;
        }
    }
    let ker = map.kernel();
    if ker.is_empty() {
        return Ok(Vec::new());
    }
    let kmat = Matrix::from_columns(field, dim_v, &ker);
    let u = shift_operator(field, &slen);
    let restricted = kmat
        .solve_matrix(&u.mul(&kmat)?)?
        .ok_or_else(|| Error::Precondition("torsion kernel is not a submodule".into()))?;
    let mut out = Vec::new();
    for (e, c) in jordan_chains(field, &restricted) {
        let v = kmat.mul_vec(&c)?;
        let mut parts = Vec::new();
        let mut off = 0;
        for (jj, &j) in src.iter().enumerate() {
            parts.push((j, v[off..off + slen[jj]].to_vec()));
            off += slen[jj];
        }
        out.push((e, parts));
    }
    Ok(out)
}

fn padded<F: Field>(field: &F, f: Vec<F::Elem>, len: usize) -> Vec<F::Elem> {
    if f.is_empty() {
        vec![field.zero(); len]
    } else {
        f
    }
}

fn window_bound(what: &str) -> Error {
    Error::WindowInstability(format!("{what} did not stabilise inside the degree window"))
}

/// Kernel of `phi`, as a split sheaf with its inclusion.
pub fn kernel<F: Field>(field: &F, phi: &Mor<F>) -> Result<(Sheaf<F>, Mor<F>)> {
    let m = &phi.source;
    let n = &phi.target;
    let r_k = m.rank() - generic_rank(field, phi);

    // torsion pieces
    let mut tors: Vec<Torsion<F::Elem>> = Vec::new();
    let mut tors_maps: Vec<Vec<(usize, Vec<F::Elem>)>> = Vec::new();
    for p in distinct_points(&m.torsion) {
        for (e, parts) in local_torsion_kernel(field, phi, &p)? {
            tors.push(Torsion { point: p.clone(), mult: e });
            tors_maps.push(parts);
        }
    }

    // free generators, degree by degree
    let mut gens: Vec<(i64, Vec<F::Elem>)> = Vec::new();
    if r_k > 0 {
        let max_m = m.max_twist().unwrap();
        let r_i = (m.rank() - r_k) as i64;
        let deg_i_max = r_i * n.max_twist().unwrap_or(0) + n.torsion_length() as i64;
        let deg_kfree_min = m.degree() - deg_i_max - m.torsion_length() as i64;
        let min_twist = deg_kfree_min - (r_k as i64 - 1) * max_m;
        let (t_lo, t_hi) = (-max_m, -min_twist + 1);
        let mut t = t_lo;
        while gens.len() < r_k {
            if t > t_hi {
                return Err(window_bound("kernel splitting type"));
            }
            let x = P1Sheaf::line(-t);
            let post = post_compose_matrix(field, phi, &x)?;
            let ker = post.kernel();
            let nfree: usize = m.twists.iter().map(|&a| (a + t + 1).max(0) as usize).sum();
            // forms times earlier generators
            let mut old: Vec<Vec<F::Elem>> = Vec::new();
            for (tg, g) in &gens {
                let gm = P1Morphism::from_coords(field, &P1Sheaf::line(-tg), m, g);
                let d = (t - tg) as usize;
                for k in 0..=d {
                    let mut v = Vec::with_capacity(nfree);
                    for i in 0..m.rank() {
                        let len = (m.twists[i] + t + 1).max(0) as usize;
                        v.extend(padded(field, form_mul(field, &monomial(field, d, k), &gm.ff[i][0]), len));
                    }
                    old.push(v);
                }
            }
            let cands: Vec<Vec<F::Elem>> = ker.iter().map(|v| v[..nfree].to_vec()).collect();
            for k in independent_modulo(field, nfree, &old, &cands) {
                gens.push((t, ker[k].clone()));
            }
            t += 1;
        }
        if gens.len() > r_k {
            return Err(window_bound("kernel generator count"));
        }
    }

    let twists: Vec<i64> = gens.iter().map(|(t, _)| -t).collect();
    let (k_sheaf, fp, tp) = sorted_sheaf(twists, tors.clone());
    let mut incl = P1Morphism::zero(field, &k_sheaf, m);
    for (new, &old) in fp.iter().enumerate() {
        let (t, g) = &gens[old];
        let gm = P1Morphism::from_coords(field, &P1Sheaf::line(-t), m, g);
        for i in 0..m.rank() {
            incl.ff[i][new] = gm.ff[i][0].clone();
        }
        for c in 0..m.torsion.len() {
            incl.ft[c][new] = gm.ft[c][0].clone();
        }
    }
    for (new, &old) in tp.iter().enumerate() {
        for (j, v) in &tors_maps[old] {
            incl.tt[*j][new] = v.clone();
        }
    }
    Ok((k_sheaf, incl))
}

/// A cyclic piece of a local cokernel: length, images of the local
/// generators of the free summands of the target, and multipliers on
/// its torsion summands.
struct LocalPiece<E> {
    len: usize,
    free_images: Vec<Vec<E>>,
    torsion_images: Vec<Vec<E>>,
}

/// Cokernel of `phi: M -> S` at one point, truncated at `u^trunc`.
fn local_cokernel<F: Field>(
    field: &F,
    phi: &Mor<F>,
    point: &Point<F::Elem>,
    trunc: usize,
) -> Result<Vec<LocalPiece<F::Elem>>> {
    let (m, s) = (&phi.source, &phi.target);
    let s_tors: Vec<usize> = (0..s.torsion.len()).filter(|&c| &s.torsion[c].point == point).collect();
    let m_tors: Vec<usize> = (0..m.torsion.len()).filter(|&j| &m.torsion[j].point == point).collect();
    let mut lengths = vec![trunc; s.rank()];
    lengths.extend(s_tors.iter().map(|&c| s.torsion[c].mult));
    let dim_v: usize = lengths.iter().sum();
    let tors_off: Vec<usize> = {
        let mut acc = s.rank() * trunc;
        s_tors
            .iter()
            .map(|&c| {
                let o = acc;
                acc += s.torsion[c].mult;
                o
            })
            .collect()
    };

    let mut image: Vec<Vec<F::Elem>> = Vec::new();
    for a in 0..m.rank() {
        let free_jets: Vec<Vec<F::Elem>> = (0..s.rank()).map(|b| jet(field, &phi.ff[b][a], point, trunc)).collect();
        for k in 0..trunc {
            let mut v = vec![field.zero(); dim_v];
            for (b, j) in free_jets.iter().enumerate() {
                for (i, c) in shift_series(field, j, k, trunc).into_iter().enumerate() {
                    v[b * trunc + i] = c;
                }
            }
            for (cc, &c) in s_tors.iter().enumerate() {
                let l = s.torsion[c].mult;
                for (i, x) in shift_series(field, &phi.ft[c][a], k, l).into_iter().enumerate() {
                    v[tors_off[cc] + i] = x;
                }
            }
            image.push(v);
        }
    }
    for &j in &m_tors {
        for k in 0..m.torsion[j].mult {
            let mut v = vec![field.zero(); dim_v];
            for (cc, &c) in s_tors.iter().enumerate() {
                let l = s.torsion[c].mult;
                for (i, x) in shift_series(field, &phi.tt[c][j], k, l).into_iter().enumerate() {
                    v[tors_off[cc] + i] = x;
                }
            }
            image.push(v);
        }
    }

    // quotient map V -> Q
    let proj_rows = if image.is_empty() {
        (0..dim_v)
            .map(|i| {
                let mut e = vec![field.zero(); dim_v];
                e[i] = field.one();
                e
            })
            .collect()
    } else {
        Matrix::from_rows(field, dim_v, image)?.kernel()
    };
    if proj_rows.is_empty() {
        return Ok(Vec::new());
    }
    // rows y with y . w = 0 for all image vectors w
    let proj = Matrix::from_rows(field, dim_v, proj_rows)?;
    let u_v = shift_operator(field, &lengths);
    let target = proj.mul(&u_v)?;
    let u_q = proj
        .transpose()
        .solve_matrix(&target.transpose())?
        .ok_or_else(|| Error::Precondition("image is not a submodule".into()))?
        .transpose();
    let chains = jordan_chains(field, &u_q);
    let q_dim = proj.rows();
    let mut basis_cols = Vec::with_capacity(q_dim);
    for (e, v) in &chains {
        let mut w = v.clone();
        for _ in 0..*e {
            basis_cols.push(w.clone());
            w = u_q.mul_vec(&w)?;
        }
    }
    let basis = Matrix::from_columns(field, q_dim, &basis_cols);
    let coords = basis.inverse().ok_or_else(|| Error::Precondition("Jordan basis is singular".into()))?.mul(&proj)?;
    let mut out = Vec::new();
    let mut off = 0;
    for (e, _) in &chains {
        let column = |idx: usize| -> Vec<F::Elem> { (0..*e).map(|i| coords.get(off + i, idx).clone()).collect() };
        let free_images = (0..s.rank()).map(|b| column(b * trunc)).collect();
        let mut torsion_images = vec![vec![field.zero(); *e]; s.torsion.len()];
        for (cc, &c) in s_tors.iter().enumerate() {
            torsion_images[c] = column(tors_off[cc]);
        }
        out.push(LocalPiece { len: *e, free_images, torsion_images });
        off += e;
    }
    Ok(out)
}

/// Solves `f . x = target` for `x: A -> B`, with `f: B -> C` given.
pub fn factor_through<F: Field>(field: &F, f: &Mor<F>, a: &Sheaf<F>, target: &Mor<F>) -> Result<Option<Mor<F>>> {
    let post = post_compose_matrix(field, f, a)?;
    Ok(post.solve(&target.flatten())?.map(|x| P1Morphism::from_coords(field, a, &f.source, &x)))
}

/// Solves `x . f = target` for `x: B -> X`, with `f: A -> B` given.
pub fn extend_along<F: Field>(field: &F, f: &Mor<F>, x: &Sheaf<F>, target: &Mor<F>) -> Result<Option<Mor<F>>> {
    let pre = pre_compose_matrix(field, f, x)?;
    Ok(pre.solve(&target.flatten())?.map(|c| P1Morphism::from_coords(field, &f.target, x, &c)))
}

/// Cokernel of `phi`, as a split sheaf with its projection.
pub fn cokernel<F: RootFinding>(field: &F, phi: &Mor<F>) -> Result<(Sheaf<F>, Mor<F>)> {
    let m = &phi.source;
    let n = &phi.target;
    let r_c = n.rank() - generic_rank(field, phi);
    let (k_sheaf, _) = kernel(field, phi)?;

    // free quotient from the dual section spaces Hom(cok, O(t))
    let mut gens: Vec<(i64, Vec<F::Elem>)> = Vec::new();
    if r_c > 0 {
        let min_n = n.min_twist().unwrap();
        let r_k = k_sheaf.rank() as i64;
        let deg_k_max = r_k * m.max_twist().unwrap_or(0) + m.torsion_length() as i64;
        let deg_c_max = n.degree() - m.degree() + deg_k_max;
        let max_twist = deg_c_max - (r_c as i64 - 1) * min_n;
        let mut t = min_n;
        while gens.len() < r_c {
            if t > max_twist + 1 {
                return Err(window_bound("cokernel splitting type"));
            }
            let x = P1Sheaf::line(t);
            let ker = pre_compose_matrix(field, phi, &x)?.kernel();
            let dim = P1Morphism::hom_dim(n, &x);
            let mut old: Vec<Vec<F::Elem>> = Vec::new();
            for (tg, g) in &gens {
                let gm = P1Morphism::from_coords(field, n, &P1Sheaf::line(*tg), g);
                let d = (t - tg) as usize;
                for k in 0..=d {
                    let mut v = Vec::with_capacity(dim);
                    for i in 0..n.rank() {
                        let len = (t - n.twists[i] + 1).max(0) as usize;
                        v.extend(padded(field, form_mul(field, &monomial(field, d, k), &gm.ff[0][i]), len));
                    }
                    old.push(v);
                }
            }
            for k in independent_modulo(field, dim, &old, &ker) {
                gens.push((t, ker[k].clone()));
            }
            t += 1;
        }
        if gens.len() > r_c {
            return Err(window_bound("cokernel generator count"));
        }
    }
    let c_free = P1Sheaf::lines(&gens.iter().map(|(t, _)| *t).collect::<Vec<_>>());
    let mut q_free = P1Morphism::zero(field, n, &c_free);
    for (row, (t, g)) in gens.iter().enumerate() {
        let gm = P1Morphism::from_coords(field, n, &P1Sheaf::line(*t), g);
        q_free.ff[row] = gm.ff[0].clone();
    }

    // S = ker q_free contains the image; the rest of the cokernel is torsion
    let (s, j) = if r_c > 0 { kernel(field, &q_free)? } else { (n.clone(), P1Morphism::identity(field, n)) };
    let phi_s = factor_through(field, &j, m, phi)?
        .ok_or_else(|| Error::Precondition("image is not contained in the free kernel".into()))?;
    let expected = s.degree() - m.degree() + k_sheaf.degree();
    if expected < 0 {
        return Err(Error::Precondition("negative torsion length in cokernel".into()));
    }
    let expected = expected as usize;

    let mut pieces: Vec<(Point<F::Elem>, LocalPiece<F::Elem>)> = Vec::new();
    if expected > 0 {
        let mut candidates = distinct_points(&s.torsion);
        candidates.push(Point::infinity(field));
        if s.rank() > 0 && m.rank() > 0 {
            let (_, det) = echelon_over_polys(field, &free_block_polys(field, &phi_s));
            if det.degree().unwrap_or(0) > 0 {
                for c in field.roots(&det)? {
                    candidates.push(Point::affine(field, c));
                }
            }
        } else if s.rank() > 0 {
            return Err(Error::Precondition("free part survives in a torsion cokernel".into()));
        }
        candidates.sort();
        candidates.dedup();
        let longest = s.torsion.iter().chain(&m.torsion).map(|t| t.mult).max().unwrap_or(0);
        let trunc = expected.max(longest) + 1;
        for p in candidates {
            for piece in local_cokernel(field, &phi_s, &p, trunc)? {
                pieces.push((p.clone(), piece));
            }
        }
        let found: usize = pieces.iter().map(|(_, pc)| pc.len).sum();
        if found < expected {
            return Err(Error::UnsupportedField(format!(
                "cokernel torsion of length {} is supported at points outside the ground field",
                expected - found
            )));
        }
        if found > expected {
            return Err(Error::Precondition(format!(
                "local torsion length {found} exceeds the global count {expected}"
            )));
        }
    }

    let tors: Vec<Torsion<F::Elem>> = pieces.iter().map(|(p, pc)| Torsion { point: p.clone(), mult: pc.len }).collect();
    let (t_sheaf, _, tp) = sorted_sheaf(Vec::new(), tors);
    let mut r = P1Morphism::zero(field, &s, &t_sheaf);
    for (new, &old) in tp.iter().enumerate() {
        let pc = &pieces[old].1;
        for b in 0..s.rank() {
            r.ft[new][b] = pc.free_images[b].clone();
        }
        for c in 0..s.torsion.len() {
            r.tt[new][c] = pc.torsion_images[c].clone();
        }
    }
    let r_ext = extend_along(field, &j, &t_sheaf, &r)?
        .ok_or_else(|| Error::Precondition("torsion quotient does not extend".into()))?;

    let cok = c_free.direct_sum(&t_sheaf);
    let mut pi = P1Morphism::zero(field, n, &cok);
    pi.ff = q_free.ff.clone();
    for c in 0..t_sheaf.torsion.len() {
        pi.ft[c] = r_ext.ft[c].clone();
        pi.tt[c] = r_ext.tt[c].clone();
    }
    Ok((cok, pi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohp1::sheaf::monomial_map;
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn cokernel_of_zero_into_torsion() {
        let q = Rationals;
        let s = P1Sheaf::skyscraper(Point::affine(&q, q.zero()), 1);
        let n = s.direct_sum(&s).direct_sum(&P1Sheaf::line(2));
        let (c, _) = cokernel(&q, &P1Morphism::zero(&q, &P1Sheaf::zero(), &n)).unwrap();
        assert_eq!(c, n);
    }

    fn linear_map<F: Field>(field: &F, a: i64, forms: &[Vec<F::Elem>]) -> Mor<F> {
        let src = P1Sheaf::lines(&vec![a - 1; forms.len()]);
        let mut f = P1Morphism::zero(field, &src, &P1Sheaf::line(a));
        for (i, l) in forms.iter().enumerate() {
            f.ff[0][i] = l.clone();
        }
        f
    }

    #[test]
    fn kernel_of_coordinates() {
        let q = Rationals;
        let phi = linear_map(&q, 0, &[monomial(&q, 1, 0), monomial(&q, 1, 1)]);
        let (k, i) = kernel(&q, &phi).unwrap();
        assert_eq!(k, P1Sheaf::line(-2));
        assert!(P1Morphism::compose(&q, &phi, &i).unwrap().is_zero(&q));
        let (c, _) = cokernel(&q, &phi).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn cokernel_of_linear_form() {
        let q = Rationals;
        for (a, b) in [(1, 3), (0, 1), (2, -5)] {
            let p = Point::from_i64(&q, a, b).unwrap();
            let phi = linear_map(&q, 0, &[p.linear_form(&q)]);
            let (c, pi) = cokernel(&q, &phi).unwrap();
            assert_eq!(c, P1Sheaf::skyscraper(p.clone(), 1));
            assert!(P1Morphism::compose(&q, &pi, &phi).unwrap().is_zero(&q));
            assert!(!pi.is_zero(&q));
            assert!(kernel(&q, &phi).unwrap().0.is_zero());
        }
    }

    #[test]
    fn cokernel_of_square_and_product() {
        let q = Rationals;
        let p = Point::from_i64(&q, 1, 2).unwrap();
        let l = p.linear_form(&q);
        let mut sq = P1Morphism::zero(&q, &P1Sheaf::line(-2), &P1Sheaf::line(0));
        sq.ff[0][0] = form_mul(&q, &l, &l);
        let (c, _) = cokernel(&q, &sq).unwrap();
        assert_eq!(c, P1Sheaf::skyscraper(p.clone(), 2));

        // x * y has two simple zeros
        let xy = monomial_map(&q, -2, 2, 1);
        let (c, _) = cokernel(&q, &xy).unwrap();
        assert_eq!(c.torsion.len(), 2);
        assert_eq!(c.torsion_length(), 2);
    }

    #[test]
    fn irrational_support_is_reported() {
        let q = Rationals;
        // x^2 + y^2
        let mut f = P1Morphism::zero(&q, &P1Sheaf::line(-2), &P1Sheaf::line(0));
        f.ff[0][0] = vec![q.one(), q.zero(), q.one()];
        assert!(matches!(cokernel(&q, &f), Err(Error::UnsupportedField(_))));
        let f7 = PrimeField::new(5).unwrap();
        let mut g = P1Morphism::zero(&f7, &P1Sheaf::line(-2), &P1Sheaf::line(0));
        g.ff[0][0] = vec![f7.one(), f7.zero(), f7.one()];
        // -1 is a square mod 5
        assert_eq!(cokernel(&f7, &g).unwrap().0.torsion.len(), 2);
    }

    #[test]
    fn maps_between_skyscrapers() {
        let q = Rationals;
        let p = Point::affine(&q, q.zero());
        let t2 = P1Sheaf::skyscraper(p.clone(), 2);
        let t3 = P1Sheaf::skyscraper(p.clone(), 3);
        // T3 -> T2 the quotient, T2 -> T3 multiplication by u
        let mut down = P1Morphism::zero(&q, &t3, &t2);
        down.tt[0][0] = vec![q.one(), q.zero()];
        let (k, _) = kernel(&q, &down).unwrap();
        assert_eq!(k, P1Sheaf::skyscraper(p.clone(), 1));
        let mut up = P1Morphism::zero(&q, &t2, &t3);
        up.tt[0][0] = vec![q.zero(), q.one(), q.zero()];
        let (c, _) = cokernel(&q, &up).unwrap();
        assert_eq!(c, P1Sheaf::skyscraper(p.clone(), 1));
        assert!(kernel(&q, &up).unwrap().0.is_zero());
    }

    #[test]
    fn free_cokernel_with_torsion() {
        let q = Rationals;
        // (x, x): O(-1) -> O + O, with x vanishing at (0:1)
        let mut f = P1Morphism::zero(&q, &P1Sheaf::line(-1), &P1Sheaf::lines(&[0, 0]));
        f.ff[0][0] = monomial(&q, 1, 0);
        f.ff[1][0] = monomial(&q, 1, 0);
        let (c, pi) = cokernel(&q, &f).unwrap();
        assert_eq!(c, P1Sheaf::new(vec![0], vec![Torsion { point: Point::infinity(&q), mult: 1 }]));
        assert!(P1Morphism::compose(&q, &pi, &f).unwrap().is_zero(&q));
        // (x, y) instead gives O(1)
        f.ff[1][0] = monomial(&q, 1, 1);
        assert_eq!(cokernel(&q, &f).unwrap().0, P1Sheaf::line(1));
    }
}
