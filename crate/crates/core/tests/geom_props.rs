use gltilt::geom::variety::{add, euler_characteristic, sub};
use gltilt::geom::{canonical_class, cohomology_dim, intersection_number, VarietyModel};
use proptest::prelude::*;

// Lattice points of the section polytope of a F + b C on Sigma_m,
// using the fan with rays (1,0), (0,1), (-1,m), (0,-1).
fn toric_h0(m: i64, a: i64, b: i64) -> u64 {
    let mut count = 0;
    for u2 in 0..=b {
        count += (-a..=m * u2).count() as u64;
    }
    count
}

// Monomials of degree n in d + 1 variables.
fn monomials(d: usize, n: i64) -> u64 {
    fn go(vars: usize, n: i64) -> u64 {
        if vars == 1 {
            return 1;
        }
        (0..=n).map(|k| go(vars - 1, n - k)).sum()
    }
    if n < 0 {
        0
    } else {
        go(d + 1, n)
    }
}

fn surfaces() -> Vec<VarietyModel> {
    vec![
        VarietyModel::ProjectiveSpace { d: 2 },
        VarietyModel::Hirzebruch { m: 0 },
        VarietyModel::Hirzebruch { m: 1 },
        VarietyModel::Hirzebruch { m: 2 },
    ]
}

#[test]
fn section_counts_match_oracles() {
    for m in 0..=3 {
        for a in -6..=6 {
            for b in -3..=4 {
                let v = VarietyModel::Hirzebruch { m };
                assert_eq!(cohomology_dim(&v, &[a, b], 0).unwrap(), toric_h0(m, a, b), "m={m} ({a},{b})");
            }
        }
    }
    for d in 1..=4 {
        for n in -8..=8 {
            let v = VarietyModel::ProjectiveSpace { d };
            assert_eq!(cohomology_dim(&v, &[n], 0).unwrap(), monomials(d, n));
        }
    }
}

#[test]
fn projective_euler_characteristic_is_binomial() {
    for d in 1..=4usize {
        for n in -10i64..=10 {
            // (n+1)(n+2)...(n+d)/d! as a polynomial in n
            let num: i64 = (1..=d as i64).map(|k| n + k).product();
            let den: i64 = (1..=d as i64).product();
            let v = VarietyModel::ProjectiveSpace { d };
            assert_eq!(euler_characteristic(&v, &[n]).unwrap(), num / den);
        }
    }
}

proptest! {
    #[test]
    fn serre_duality_and_riemann_roch(a in -30i64..30, b in -30i64..30, k in 0usize..4) {
        let v = surfaces()[k];
        let c: Vec<i64> = if v.picard_rank() == 1 { vec![a] } else { vec![a, b] };
        let kc = canonical_class(&v);
        for i in 0..=2 {
            prop_assert_eq!(cohomology_dim(&v, &c, i).unwrap(), cohomology_dim(&v, &sub(&kc, &c), 2 - i).unwrap());
        }
        let cc = intersection_number(&v, &c, &sub(&c, &kc)).unwrap();
        prop_assert_eq!(2 * euler_characteristic(&v, &c).unwrap(), 2 + cc);
    }

    #[test]
    fn restriction_is_additive(a in -9i64..9, b in -9i64..9, c in -9i64..9, e in -9i64..9, m in 0i64..3) {
        let v = VarietyModel::Hirzebruch { m };
        for curve in [vec![1, 0], vec![2, 1], vec![0, 1]] {
            let lhs = intersection_number(&v, &add(&[a, b], &[c, e]), &curve).unwrap();
            let rhs = intersection_number(&v, &[a, b], &curve).unwrap() + intersection_number(&v, &[c, e], &curve).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
