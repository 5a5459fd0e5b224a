//! Random split sheaves and morphisms for tests and benchmarks.

use rand::Rng;

use crate::cohp1::point::Point;
use crate::cohp1::sheaf::{P1Morphism, P1Sheaf, Torsion};
use crate::exactla::Field;

/// A small random field element, drawn from `-range..=range`.
pub fn random_elem<F: Field, R: Rng>(field: &F, rng: &mut R, range: i64) -> F::Elem {
    field.from_i64(rng.gen_range(-range..=range))
}

/// Random sheaf with up to `max_rank` line bundles of twist in
/// `-max_twist..=max_twist` and up to `max_torsion` skyscrapers at `points`.
pub fn random_sheaf<F: Field, R: Rng>(
    rng: &mut R,
    points: &[Point<F::Elem>],
    max_rank: usize,
    max_twist: i64,
    max_torsion: usize,
) -> P1Sheaf<F::Elem> {
    let r = rng.gen_range(0..=max_rank);
    let twists = (0..r).map(|_| rng.gen_range(-max_twist..=max_twist)).collect();
    let t = if points.is_empty() { 0 } else { rng.gen_range(0..=max_torsion) };
    let torsion = (0..t)
        .map(|_| Torsion { point: points[rng.gen_range(0..points.len())].clone(), mult: rng.gen_range(1..=2) })
        .collect();
    P1Sheaf::new(twists, torsion)
}

/// Random morphism: each coordinate is a small integer, zero with
/// probability `sparsity`.
pub fn random_morphism<F: Field, R: Rng>(
    field: &F,
    rng: &mut R,
    m: &P1Sheaf<F::Elem>,
    n: &P1Sheaf<F::Elem>,
    sparsity: f64,
) -> P1Morphism<F::Elem> {
    let d = P1Morphism::hom_dim(m, n);
    let coords: Vec<F::Elem> =
        (0..d).map(|_| if rng.gen_bool(sparsity) { field.zero() } else { random_elem(field, rng, 3) }).collect();
    P1Morphism::from_coords(field, m, n, &coords)
}
