use std::collections::BTreeMap;
use std::time::Instant;

use gltilt::exactla::{PrimeField, Rationals};
use gltilt::quivalg::AlgebraPresentation;
use gltilt::squid::{build_pd_squid, build_weighted_line_squid, end_dim_crosscheck, point_of_form, SquidSpec};
use gltilt::tiltcheck::{default_family, summand_count};
use proptest::prelude::*;

const LINE_FORMS: [[i64; 2]; 3] = [[1, 0], [0, 1], [1, -1]];
const PLANE_FORMS: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn weight_tuples(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (2..=max).map(move |p| [w.clone(), vec![p]].concat())).collect();
    }
    out
}

fn line_spec(weights: &[usize]) -> SquidSpec {
    SquidSpec::new(1, LINE_FORMS[..weights.len()].iter().map(|f| f.to_vec()).collect(), weights.to_vec())
}

#[test]
fn line_crosscheck_sweep() {
    let field = PrimeField::new(32003).unwrap();
    let start = Instant::now();
    let mut runs = 0;
    for n in 1..=3 {
        for w in weight_tuples(n, 4) {
            let r = end_dim_crosscheck(&field, &line_spec(&w)).unwrap();
            assert!(r.full);
            assert!(r.passed(), "{w:?}: {r}");
            runs += 1;
        }
    }
    assert_eq!(runs, 3 + 9 + 27);
    assert!(start.elapsed().as_secs() < 60, "{:?}", start.elapsed());
}

#[test]
fn line_crosscheck_totals() {
    let ten = end_dim_crosscheck(&Rationals, &line_spec(&[2, 2])).unwrap();
    assert_eq!((ten.algebra_total, ten.oracle_total), (10, 10));
    let seven = end_dim_crosscheck(&Rationals, &line_spec(&[2])).unwrap();
    assert_eq!((seven.algebra_total, seven.oracle_total), (7, 7));
    let r = end_dim_crosscheck(&Rationals, &line_spec(&[3, 3])).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn plane_partial_crosscheck() {
    for w in [vec![3, 3], vec![2, 4], vec![2, 2, 2]] {
        let spec = SquidSpec::new(2, PLANE_FORMS[..w.len()].iter().map(|f| f.to_vec()).collect(), w.clone());
        let r = end_dim_crosscheck(&Rationals, &spec).unwrap();
        assert!(!r.full);
        assert!(r.passed(), "{w:?}: {r}");
    }
}

#[test]
fn vertex_count_matches_summand_count() {
    let mut specs: Vec<SquidSpec> = weight_tuples(2, 4).iter().map(|w| line_spec(w)).collect();
    for w in weight_tuples(2, 3).into_iter().chain(weight_tuples(3, 2)) {
        specs.push(SquidSpec::new(2, PLANE_FORMS[..w.len()].iter().map(|f| f.to_vec()).collect(), w));
    }
    specs.push(SquidSpec::new(3, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]], vec![3, 2]));
    for spec in specs {
        let cfg = spec.to_config();
        let count = summand_count(&cfg, &default_family(&cfg).unwrap()).unwrap();
        let q = build_pd_squid(&Rationals, &spec).unwrap();
        assert_eq!(q.quiver.vertex_count(), count, "{spec:?}");
    }
}

type Shape = (Vec<(Vec<usize>, i64)>, BTreeMap<(String, usize, usize), usize>);

/// Vertices by grid data and arrows by label and endpoints, which makes
/// two squids comparable without caring about vertex order.
fn shape(a: &AlgebraPresentation<Rationals>) -> Shape {
    let q = &a.quiver;
    let key = |v: usize| (q.vertices[v].alpha.clone().unwrap(), q.vertices[v].twist.unwrap());
    let mut verts: Vec<_> = (0..q.vertex_count()).map(key).collect();
    verts.sort();
    let pos = |v: usize| verts.binary_search(&key(v)).unwrap();
    let mut arrows = BTreeMap::new();
    for ar in &q.arrows {
        *arrows.entry((ar.label.clone(), pos(ar.source), pos(ar.target))).or_insert(0) += 1;
    }
    (verts, arrows)
}

fn keyed_blocks(a: &AlgebraPresentation<Rationals>) -> BTreeMap<(Vec<usize>, i64, Vec<usize>, i64), usize> {
    let q = &a.quiver;
    let (_, dims) = a.algebra_dimension().unwrap();
    let key = |v: usize| (q.vertices[v].alpha.clone().unwrap(), q.vertices[v].twist.unwrap());
    dims.into_iter()
        .map(|((u, v), d)| {
            let ((au, tu), (av, tv)) = (key(u), key(v));
            ((au, tu, av, tv), d)
        })
        .collect()
}

#[test]
fn projective_squid_on_the_line_is_the_line_squid() {
    for n in 1..=3 {
        for w in weight_tuples(n, 4) {
            let spec = line_spec(&w);
            let points: Vec<_> = spec.forms.iter().map(|f| point_of_form(&Rationals, f).unwrap()).collect();
            let line = build_weighted_line_squid(&Rationals, &points, &w).unwrap();
            let pd = build_pd_squid(&Rationals, &spec).unwrap();
            assert_eq!(shape(&line), shape(&pd), "{w:?}");
            assert_eq!(keyed_blocks(&line), keyed_blocks(&pd), "{w:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn squids_are_acyclic_with_homogeneous_relations(
        d in 1usize..=3,
        weights in prop::collection::vec(2usize..=4, 1..=3),
    ) {
        let forms: Vec<Vec<i64>> = (0..weights.len())
            .map(|j| (0..=d).map(|k| i64::from(k == j % (d + 1))).collect())
            .collect();
        let spec = SquidSpec::new(d, forms, weights);
        prop_assume!(spec.validate().is_ok());
        let a = build_pd_squid(&Rationals, &spec).unwrap();
        prop_assert!(a.quiver.is_acyclic());
        for r in &a.relations {
            prop_assert!(r.endpoints().is_ok());
        }
        for ar in &a.quiver.arrows {
            let (s, t) = (&a.quiver.vertices[ar.source], &a.quiver.vertices[ar.target]);
            let weight = |v: &gltilt::quivalg::Vertex| (v.alpha.as_ref().unwrap().iter().sum::<usize>(), v.twist.unwrap());
            prop_assert!(weight(s) < weight(t));
        }
    }
}
