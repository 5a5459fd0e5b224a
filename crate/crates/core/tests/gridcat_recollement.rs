use gltilt::cohp1::{P1Sheaf, Point};
use gltilt::exactla::{Field, Rationals};
use gltilt::gridcat::checks::recollement_check;
use gltilt::gridcat::functors::{iota_lambda, iota_rho, pi};
use gltilt::gridcat::random::random_grid;
use gltilt::gridcat::{CategoryDriver, CohP1Driver, DirectionKind, FinDimDriver, GridShape};
use gltilt::quivalg::{linear_quiver, AlgebraPresentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coeff(r: &mut ChaCha8Rng) -> <Rationals as Field>::Elem {
    Rationals.from_i64(r.gen_range(-3..=3))
}

fn run_suite<D>(d: &D, base: &[D::Obj], shapes: &[Vec<usize>], samples: usize, seed: u64)
where
    D: CategoryDriver<F = Rationals>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let weights = &shapes[s % shapes.len()];
        let shape = GridShape::weighted(weights);
        let i = rng.gen_range(0..weights.len());
        let x = random_grid(d, &shape, base, &mut rng, coeff).unwrap();
        let m = pi(d, &random_grid(d, &shape, base, &mut rng, coeff).unwrap(), i).unwrap();
        let y = random_grid(d, &shape, base, &mut rng, coeff).unwrap();
        let n = if rng.gen_bool(0.5) { iota_lambda(d, &y, i) } else { iota_rho(d, &y, i) }.unwrap();
        let r = recollement_check(d, &x, i, &m, &n).unwrap();
        assert!(r.all(), "sample {s}, weights {weights:?}, direction {i}: {:?}", r.failures());
    }
}

fn a2(kind: DirectionKind) -> FinDimDriver<Rationals> {
    FinDimDriver::new(AlgebraPresentation::free(Rationals, linear_quiver(2)), vec![kind]).unwrap()
}

fn a2_base(d: &FinDimDriver<Rationals>) -> Vec<gltilt::quivalg::Representation<Rationals>> {
    let a = &d.algebra;
    vec![a.simple(0), a.simple(1), a.projective(0), a.projective(1)]
}

#[test]
fn recollement_over_findim_with_zero_eta() {
    let d = a2(DirectionKind::Zero);
    run_suite(&d, &a2_base(&d), &[vec![2], vec![3]], 50, 1);
}

#[test]
fn recollement_over_findim_with_identity_eta() {
    let d = a2(DirectionKind::Identity);
    run_suite(&d, &a2_base(&d), &[vec![2], vec![3]], 50, 2);
}

fn p1_driver(n: usize) -> CohP1Driver<Rationals> {
    let q = Rationals;
    let pts = (0..n).map(|k| Point::affine(&q, q.from_i64(k as i64))).collect();
    CohP1Driver::new(q, pts).unwrap()
}

fn p1_base(d: &CohP1Driver<Rationals>) -> Vec<P1Sheaf<<Rationals as Field>::Elem>> {
    let mut v: Vec<_> = (-1..=2).map(P1Sheaf::line).collect();
    for p in &d.points {
        v.push(P1Sheaf::skyscraper(p.clone(), 1));
    }
    v
}

#[test]
fn recollement_over_p1_one_point() {
    let d = p1_driver(1);
    run_suite(&d, &p1_base(&d), &[vec![2], vec![3]], 50, 3);
}

#[test]
fn recollement_over_p1_two_points() {
    let d = p1_driver(2);
    run_suite(&d, &p1_base(&d), &[vec![2, 2], vec![2, 3], vec![3, 2]], 50, 4);
}
