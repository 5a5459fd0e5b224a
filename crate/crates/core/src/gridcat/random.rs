//! Random grids for property tests.
//!
//! Building blocks are images of base objects under `pi_lambda`, `pi_rho`
//! and `iota` of truncated chains; random grids are kernels and cokernels
//! of random morphisms between sums of blocks.

use rand::Rng;

use crate::error::Result;
use crate::gridcat::driver::{CategoryDriver, Elem};
use crate::gridcat::functors::{chain, iota, pi_lambda, pi_rho, restrict};
use crate::gridcat::grid::{
    grid_cokernel, grid_direct_sum, grid_hom, grid_kernel, Axis, GridMorphism, GridObject, GridShape,
};

/// A block in an all-weighted `shape` built from the base object `m`.
pub fn random_block<D: CategoryDriver, R: Rng>(
    d: &D,
    shape: &GridShape,
    m: &D::Obj,
    rng: &mut R,
) -> Result<GridObject<D>> {
    let n = shape.n();
    // 0: pi_lambda, 1: pi_rho, 2: iota of a chain
    let kinds: Vec<u8> =
        shape.axes.iter().map(|a| if matches!(a, Axis::Eta(_)) { rng.gen_range(0..3) } else { 3 }).collect();
    let mut g = GridObject::from_base(d, m);
    for i in 0..n {
        if kinds[i] == 2 {
            g = restrict(d, &g, i)?;
        }
    }
    for i in 0..n {
        if kinds[i] == 2 {
            let p = shape.axes[i].len();
            let k = rng.gen_range(1..p);
            g = iota(d, &chain(d, &g, i, p - 1, k)?, i)?;
        }
    }
    for i in 0..n {
        match (kinds[i], shape.axes[i]) {
            (0, Axis::Eta(p)) => g = pi_lambda(d, &g, i, p)?,
            (1, Axis::Eta(p)) => g = pi_rho(d, &g, i, p)?,
            _ => {}
        }
    }
    Ok(g)
}

fn random_sum<D: CategoryDriver, R: Rng>(
    d: &D,
    shape: &GridShape,
    base: &[D::Obj],
    rng: &mut R,
    max_parts: usize,
) -> Result<GridObject<D>> {
    let k = rng.gen_range(1..=max_parts);
    let parts: Vec<GridObject<D>> =
        (0..k).map(|_| random_block(d, shape, &base[rng.gen_range(0..base.len())], rng)).collect::<Result<_>>()?;
    Ok(grid_direct_sum(d, shape, &parts)?.0)
}

/// A random element of `Hom(X, Y)`.
pub fn random_grid_morphism<D: CategoryDriver, R: Rng>(
    d: &D,
    x: &GridObject<D>,
    y: &GridObject<D>,
    rng: &mut R,
    coeff: impl Fn(&mut R) -> Elem<D>,
) -> Result<GridMorphism<D>> {
    let basis = grid_hom(d, x, y)?;
    let mut acc = GridMorphism::zero(d, x, y);
    for b in &basis {
        if rng.gen_bool(0.7) {
            acc = acc.add(d, &b.scale(d, &coeff(rng)))?;
        }
    }
    Ok(acc)
}

/// A random grid of an all-weighted `shape`: a block sum, or the kernel or
/// cokernel of a random map between block sums. Draws that the driver
/// cannot handle (cokernels with torsion away from rational points) and
/// zero results are redrawn; after eight failures the plain block sum is returned.
pub fn random_grid<D: CategoryDriver, R: Rng>(
    d: &D,
    shape: &GridShape,
    base: &[D::Obj],
    rng: &mut R,
    coeff: impl Fn(&mut R) -> Elem<D>,
) -> Result<GridObject<D>> {
    let x = random_sum(d, shape, base, rng, 2)?;
    for _ in 0..8 {
        let mode = rng.gen_range(0..3);
        if mode == 0 {
            return Ok(x);
        }
        let y = random_sum(d, shape, base, rng, 2)?;
        let attempt = (|| -> Result<GridObject<D>> {
            if mode == 1 {
                let f = random_grid_morphism(d, &x, &y, rng, &coeff)?;
                Ok(grid_cokernel(d, &y, &f)?.0)
            } else {
                let f = random_grid_morphism(d, &y, &x, rng, &coeff)?;
                Ok(grid_kernel(d, &y, &f)?.0)
            }
        })();
        match attempt {
            Ok(g) if !g.is_zero(d) => return Ok(g),
            _ => {}
        }
    }
    Ok(x)
}
