use std::path::PathBuf;

use gltilt::geom::{intersection_number, validate_snc, SncConfig, StratumBundle};
use gltilt::tiltcheck::{auto_twist, default_family, summand_count, summand_list, tilting_report, TiltingFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn configs() -> Vec<(String, SncConfig)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    let mut out: Vec<(String, SncConfig)> = std::fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            let name = p.file_name()?.to_str()?.to_string();
            if !name.ends_with(".json") || name.starts_with("squid") || name.starts_with("family") {
                return None;
            }
            Some((name, SncConfig::parse(&std::fs::read_to_string(&p).unwrap()).unwrap()))
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[test]
fn shipped_configs_pass() {
    for (name, cfg) in configs() {
        let v = validate_snc(&cfg);
        assert!(v.valid, "{name}: {:?}", v.diagnostics);
        let fam = default_family(&cfg).unwrap();
        let r = tilting_report(&cfg, &fam).unwrap();
        assert!(r.pass, "{name}: {:?}", r.first_failure());
        assert!(r.conditions2.iter().all(|c| c.dim == 0));
        assert_eq!(r.gldim, cfg.variety.dim(), "{name}");
        assert_eq!(r.total, summand_count(&cfg, &fam).unwrap());
        // global ample twist keeps the verdict
        let twisted = TiltingFamily {
            bundles: fam
                .bundles
                .iter()
                .map(|(i, b)| {
                    let b = match (b, i.len()) {
                        (StratumBundle::Degrees(d), _) => {
                            // degree of the restriction of the ample twist
                            let ample = match cfg.variety {
                                gltilt::geom::VarietyModel::ProjectiveSpace { .. } => vec![2],
                                gltilt::geom::VarietyModel::Hirzebruch { .. } => vec![2, 2],
                            };
                            let shift = if cfg.all_hyperplanes() || i.len() > 1 {
                                2
                            } else {
                                intersection_number(&cfg.variety, &ample, &cfg.divisors[i[0]].class).unwrap()
                            };
                            StratumBundle::Degrees(d.iter().map(|x| x + shift).collect())
                        }
                        (b, _) => b.twist(2),
                    };
                    (i.clone(), b)
                })
                .collect(),
        };
        assert!(tilting_report(&cfg, &twisted).unwrap().pass, "{name} after twist");
    }
}

#[test]
fn p2_example_has_fifteen_summands() {
    let cfg = configs().into_iter().find(|(n, _)| n == "p2_two_lines_33.json").unwrap().1;
    let fam = default_family(&cfg).unwrap();
    assert_eq!(fam.get(&[]), Some(&StratumBundle::Classes(vec![vec![0], vec![1], vec![2]])));
    assert_eq!(summand_list(&cfg, &fam).unwrap().len(), 15);
}

#[test]
fn negative_shift_of_a_line_bundle_fails() {
    let cfg = configs().into_iter().find(|(n, _)| n == "p2_line_conic.json").unwrap().1;
    let fam = default_family(&cfg).unwrap();
    let r = tilting_report(&cfg, &fam.shifted(&[0], -3)).unwrap();
    assert!(!r.pass);
    let f = r.first_failure().unwrap();
    assert_eq!((f.i.clone(), f.j.clone(), f.degree), (vec![], vec![1], 1));
    // O(-3 + 0) to O from degrees {-2,-1,0}: h^1(O(-3)) + h^1(O(-2)) + h^1(O(-1)) + ...
    assert_eq!(f.dim, 2 + 1 + 1);
}

#[test]
fn auto_twist_repairs_low_family() {
    let cfg = configs().into_iter().find(|(n, _)| n == "p2_two_lines_33.json").unwrap().1;
    let mut fam = default_family(&cfg).unwrap();
    fam.insert(vec![0], StratumBundle::Degrees(vec![-5, -4]));
    assert!(!tilting_report(&cfg, &fam).unwrap().pass);
    let fixed = auto_twist(&cfg, &fam, 100).unwrap();
    assert_eq!(fixed.get(&[0]), Some(&StratumBundle::Degrees(vec![1, 2])));
    assert!(tilting_report(&cfg, &fixed).unwrap().pass);
    let good = default_family(&cfg).unwrap();
    assert_eq!(auto_twist(&cfg, &good, 100).unwrap(), good);
}

#[test]
fn family_json_round_trip() {
    for (_, cfg) in configs() {
        let fam = default_family(&cfg).unwrap();
        assert_eq!(TiltingFamily::parse(&fam.to_json()).unwrap(), fam);
    }
}

fn random_config(rng: &mut ChaCha8Rng) -> SncConfig {
    use serde_json::json;
    if rng.gen_bool(0.5) {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(0..=d + 2);
        loop {
            let divisors: Vec<_> = (0..n)
                .map(|k| {
                    let form: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..=3)).collect();
                    json!({"label": format!("H{k}"), "class": [1], "weight": rng.gen_range(2..5), "form": form})
                })
                .collect();
            let cfg: SncConfig =
                serde_json::from_value(json!({"variety": {"kind": "p", "d": d}, "divisors": divisors})).unwrap();
            if validate_snc(&cfg).valid {
                return cfg;
            }
        }
    } else {
        let m = rng.gen_range(0..=3i64);
        let n = rng.gen_range(0..=3usize);
        let classes: Vec<[i64; 2]> =
            (0..n).map(|_| if rng.gen_bool(0.4) { [1, 0] } else { [rng.gen_range(0..=2), 1] }).collect();
        let mut inter = serde_json::Map::new();
        let mut counter = 0;
        for a in 0..n {
            for b in a + 1..n {
                let (x, y) = (classes[a], classes[b]);
                let k = x[0] * y[1] + x[1] * y[0] + m * x[1] * y[1];
                let pts: Vec<_> = (0..k)
                    .map(|_| {
                        counter += 1;
                        json!([format!("p{counter}")])
                    })
                    .collect();
                if k > 0 {
                    inter.insert(format!("D{a},D{b}"), json!(pts));
                }
            }
        }
        let divisors: Vec<_> = classes
            .iter()
            .enumerate()
            .map(|(k, c)| json!({"label": format!("D{k}"), "class": c, "weight": 2}))
            .collect();
        serde_json::from_value(json!({"variety": {"kind": "hirzebruch", "m": m}, "divisors": divisors,
            "intersections": inter}))
        .unwrap()
    }
}

#[test]
fn global_dimension_on_random_configs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let cfg = random_config(&mut rng);
        assert!(validate_snc(&cfg).valid, "{:?}", validate_snc(&cfg));
        let (g, _) = gltilt::tiltcheck::global_dimension(&cfg).unwrap();
        assert_eq!(g, cfg.variety.dim());
        let fam = default_family(&cfg).unwrap();
        assert!(tilting_report(&cfg, &fam).unwrap().pass);
    }
}
