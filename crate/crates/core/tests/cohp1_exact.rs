use gltilt::cohp1::random::{random_morphism, random_sheaf};
use gltilt::cohp1::{cokernel, kernel, post_compose_matrix, pre_compose_matrix, P1Morphism, P1Sheaf, Point};
use gltilt::exactla::{Field, PrimeField, Rationals};
use gltilt::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Test objects: line bundles around the window and simple skyscrapers.
fn probes<E: Clone + Ord + std::hash::Hash + std::fmt::Debug + Send + Sync + 'static>(
    points: &[Point<E>],
) -> Vec<P1Sheaf<E>> {
    let mut out: Vec<P1Sheaf<E>> = (-8..=8).map(P1Sheaf::line).collect();
    for p in points {
        out.push(P1Sheaf::skyscraper(p.clone(), 1));
        out.push(P1Sheaf::skyscraper(p.clone(), 3));
    }
    out
}

// Exactness of 0 -> K -> M -> N -> C -> 0 seen through Hom(X, -) and Hom(-, X).
fn check<F: Field>(
    field: &F,
    phi: &P1Morphism<F::Elem>,
    inc: &P1Morphism<F::Elem>,
    pi: &P1Morphism<F::Elem>,
    points: &[Point<F::Elem>],
) -> Result<(), String> {
    if !P1Morphism::compose(field, phi, inc).unwrap().is_zero(field) {
        return Err("phi . inc != 0".into());
    }
    if !P1Morphism::compose(field, pi, phi).unwrap().is_zero(field) {
        return Err("pi . phi != 0".into());
    }
    for x in probes(points) {
        let ker_dim = post_compose_matrix(field, phi, &x).unwrap().kernel().len();
        let inc_mat = post_compose_matrix(field, inc, &x).unwrap();
        if inc_mat.rank() != inc_mat.cols() || inc_mat.cols() != ker_dim {
            return Err(format!("Hom({x:?}, K) is not the kernel"));
        }
        let cok_dim = pre_compose_matrix(field, phi, &x).unwrap().kernel().len();
        let pi_mat = pre_compose_matrix(field, pi, &x).unwrap();
        if pi_mat.rank() != pi_mat.cols() || pi_mat.cols() != cok_dim {
            return Err(format!("Hom(C, {x:?}) is not the cokernel"));
        }
    }
    let (k, m, n, c) = (&inc.source, &phi.source, &phi.target, &pi.target);
    let chi = k.euler_characteristic() - m.euler_characteristic() + n.euler_characteristic() - c.euler_characteristic();
    if chi != 0 {
        return Err("Euler characteristic is not additive".into());
    }
    Ok(())
}

fn run<F: gltilt::exactla::RootFinding>(field: &F, seed: u64, points: &[Point<F::Elem>]) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_sheaf::<F, _>(&mut rng, points, 3, 3, 2);
    let n = random_sheaf::<F, _>(&mut rng, points, 3, 3, 2);
    let phi = random_morphism(field, &mut rng, &m, &n, 0.3);
    let (_, inc) = kernel(field, &phi).map_err(|e| e.to_string())?;
    let (_, pi) = match cokernel(field, &phi) {
        Ok(r) => r,
        Err(Error::UnsupportedField(_)) => return Ok(false),
        Err(e) => return Err(e.to_string()),
    };
    check(field, &phi, &inc, &pi, points)?;
    Ok(true)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn exact_over_rationals(seed in any::<u64>()) {
        let q = Rationals;
        let pts = vec![Point::from_i64(&q, 1, 0).unwrap(), Point::from_i64(&q, 1, 1).unwrap(), Point::infinity(&q)];
        run(&q, seed, &pts).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn exact_over_f5(seed in any::<u64>()) {
        let f = PrimeField::new(5).unwrap();
        let pts = vec![Point::from_i64(&f, 1, 2).unwrap(), Point::infinity(&f)];
        run(&f, seed, &pts).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn most_random_cokernels_are_rational() {
    let f = PrimeField::new(5).unwrap();
    let pts = vec![Point::from_i64(&f, 1, 2).unwrap(), Point::infinity(&f)];
    let ok = (0..300u64).filter(|&s| run(&f, s, &pts).unwrap()).count();
    println!("{ok} of 300 cokernels split over F_5");
    assert!(ok >= 100);
}
