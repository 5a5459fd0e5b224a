use gltilt::cohp1::random::{random_morphism, random_sheaf};
use gltilt::cohp1::Point;
use gltilt::exactla::{Field, PrimeField, Rationals};
use gltilt::gridcat::functors::{pi_lambda, pi_rho};
use gltilt::gridcat::random::random_grid_morphism;
use gltilt::gridcat::{CategoryDriver, CohP1Driver, DirectionKind, FinDimDriver, GridObject, GridViolation};
use gltilt::quivalg::{linear_quiver, AlgebraPresentation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p1() -> CohP1Driver<Rationals> {
    let q = Rationals;
    CohP1Driver::new(q, vec![Point::affine(&q, q.zero()), Point::infinity(&q)]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn eta_is_natural_on_p1(seed in 0u64..10_000) {
        let d = p1();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_sheaf::<Rationals, _>(&mut rng, &d.points, 2, 2, 2);
        let n = random_sheaf::<Rationals, _>(&mut rng, &d.points, 2, 2, 2);
        let g = random_morphism(&d.field, &mut rng, &m, &n, 0.3);
        for i in 0..2 {
            let lhs = d.compose(&d.eta(i, &n), &d.apply_f_mor(i, &g)).unwrap();
            let rhs = d.compose(&g, &d.eta(i, &m)).unwrap();
            prop_assert!(d.mor_eq(&lhs, &rhs));
        }
        let fg = d.apply_f_mor(0, &d.apply_f_mor(1, &g));
        let gf = d.apply_f_mor(1, &d.apply_f_mor(0, &g));
        prop_assert!(d.mor_eq(&fg, &gf));
    }

    #[test]
    fn pi_images_validate_on_p1(seed in 0u64..10_000, p in 2usize..4) {
        let d = p1();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = GridObject::from_base(&d, &random_sheaf::<Rationals, _>(&mut rng, &d.points, 3, 3, 2));
        let i = rng.gen_range(0..2);
        prop_assert!(pi_rho(&d, &m, i, p).unwrap().is_valid(&d).unwrap());
        prop_assert!(pi_lambda(&d, &m, i, p).unwrap().is_valid(&d).unwrap());
    }
}

#[test]
fn broken_cycle_is_reported() {
    let q = PrimeField::new(7).unwrap();
    let d = CohP1Driver::new(q.clone(), vec![Point::affine(&q, q.zero())]).unwrap();
    let m = GridObject::from_base(&d, &gltilt::cohp1::P1Sheaf::lines(&[0]));
    let mut x = pi_rho(&d, &m, 0, 3).unwrap();
    x.maps[0][2] = d.scale(&x.maps[0][2], &q.from_i64(2));
    assert_eq!(x.validate(&d).unwrap(), Some(GridViolation::Cycle { direction: 1, alpha: vec![1] }));
}

#[test]
fn grid_hom_contains_the_identity() {
    let d =
        FinDimDriver::new(AlgebraPresentation::free(Rationals, linear_quiver(2)), vec![DirectionKind::Zero]).unwrap();
    let m = GridObject::from_base(&d, &d.algebra.projective(0));
    let x = pi_lambda(&d, &m, 0, 3).unwrap();
    let basis = gltilt::gridcat::grid_hom(&d, &x, &x).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = random_grid_morphism(&d, &x, &x, &mut rng, |r: &mut ChaCha8Rng| Rationals.from_i64(r.gen_range(-2..=2)))
        .unwrap();
    assert!(f.is_morphism(&d, &x, &x).unwrap());
    assert!(x.identity(&d).is_morphism(&d, &x, &x).unwrap());
    assert!(!basis.is_empty());
}
