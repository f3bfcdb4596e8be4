use kstab_core::fixtures;
use kstab_core::toric::{
    effective_check, nef_check, pair_curve_divisor, polytope_barycenter, DivisorClass, Polytope,
    ToricModel,
};
use kstab_core::Error;
use kstab_core::{q, qi, Rational};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::OnceLock;

fn combo(m: &ToricModel, terms: &[(&str, Rational)]) -> DivisorClass {
    let map: BTreeMap<String, Rational> = terms
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    m.combination(&map).unwrap()
}

#[test]
fn every_bundled_model_loads() {
    for name in fixtures::model_names() {
        let m = fixtures::model(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(m.name(), name);
    }
}

#[test]
fn printed_tables_reproduce_entry_for_entry() {
    for name in fixtures::model_names() {
        let m = fixtures::model(name).unwrap();
        for e in &m.spec.printed_products {
            let ds: Vec<DivisorClass> = e.factors.iter().map(|f| m.divisor(f).unwrap()).collect();
            let refs: Vec<&DivisorClass> = ds.iter().collect();
            assert_eq!(
                m.intersection_product(&refs).unwrap(),
                e.value,
                "{name} {:?}",
                e.factors
            );
        }
        for (c, row) in &m.spec.printed_curves {
            let curve = m.curve(c).unwrap();
            for (d, v) in row {
                let got = pair_curve_divisor(&curve, &m.divisor(d).unwrap());
                match m.erratum(&format!("{c}.{d}")) {
                    Some(e) => {
                        assert_eq!(e.printed, v.0);
                        assert_eq!(got, e.corrected, "{name} {c}.{d}");
                    }
                    None => assert_eq!(got, v.0, "{name} {c}.{d}"),
                }
            }
        }
        assert_eq!(
            m.printed_table_mismatches().unwrap(),
            Vec::<String>::new(),
            "{name}"
        );
    }
}

#[test]
fn named_intersection_oracles() {
    for name in ["Y0-A1", "Y0-A2"] {
        let m = fixtures::model(name).unwrap();
        // {1,2,4} is a primitive collection, so it spans no cone.
        assert_eq!(m.distinct_product(&[1, 2, 4]).unwrap(), qi(0));
        assert_eq!(m.distinct_product(&[1, 2, 5]).unwrap(), qi(1));
        assert_eq!(m.distinct_product(&[0, 3, 1]).unwrap(), qi(0));
        assert_eq!(m.self_power(&DivisorClass::ray(5)).unwrap(), qi(4));
    }
    let y0 = fixtures::model("Y0-A2").unwrap();
    assert_eq!(y0.self_power(&DivisorClass::ray(0)).unwrap(), q(1, 18));
    assert_eq!(y0.distinct_product(&[0, 1, 2]).unwrap(), q(1, 3));
    let y2 = fixtures::model("Y2-A2").unwrap();
    let d = combo(&y2, &[("F0", qi(1)), ("F1", qi(1)), ("F5", q(1, 3))]);
    assert_eq!(y2.self_power(&d).unwrap(), q(1, 9));
    let y = fixtures::model("Y0-A1").unwrap();
    assert_eq!(
        pair_curve_divisor(&y.curve("C12").unwrap(), &DivisorClass::ray(1)),
        qi(-1)
    );
    let y1 = fixtures::model("Y1-A2").unwrap();
    assert_eq!(
        pair_curve_divisor(&y1.curve("C05").unwrap(), &DivisorClass::ray(0)),
        q(-1, 6)
    );
}

#[test]
fn out_of_range_index_is_an_error() {
    let m = fixtures::model("Y0-A1").unwrap();
    assert!(m.distinct_product(&[0, 1, 9]).is_err());
    assert!(m.divisor("F17").is_err());
    assert!(m.divisor("G").is_err());
}

#[test]
fn invalid_models_are_rejected() {
    let text = fixtures::MODELS[0].1;
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["grading"][0][0] = serde_json::json!(5);
    assert!(ToricModel::from_json(&v.to_string()).is_err());
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["irrelevant_ideal"] = serde_json::Value::Null;
    assert!(ToricModel::from_json(&v.to_string()).is_err());
}

/// (3 - u)F0 + 3F1 + F5 on the A1 model Y0.
fn l_of_u(m: &ToricModel, u: Rational) -> DivisorClass {
    combo(m, &[("F0", qi(3) - u), ("F1", qi(3)), ("F5", qi(1))])
}

#[test]
fn nef_and_effective_checks_on_y0() {
    let m = fixtures::model("Y0-A1").unwrap();
    let mori = m.mori_generators().unwrap();
    let eff = m.effective_generators().unwrap();
    let r = nef_check(&l_of_u(&m, qi(1)), &mori);
    assert!(r.nef);
    assert!(r.pairings.contains(&("C12".to_string(), qi(0))));
    assert!(nef_check(&DivisorClass::zero(), &mori).nef);
    assert!(effective_check(&m, &DivisorClass::ray(0), &eff).unwrap());
    let r = nef_check(&l_of_u(&m, qi(2)), &mori);
    assert!(!r.nef);
    assert_eq!(r.violated, vec!["C12".to_string()]);
    assert!(effective_check(&m, &l_of_u(&m, qi(3)), &eff).unwrap());
    assert!(!effective_check(&m, &l_of_u(&m, qi(4)), &eff).unwrap());
}

#[test]
fn toric_degeneration_has_degree_28() {
    let m = fixtures::model("X42-toric").unwrap();
    assert_eq!(m.max_cones().len(), 16);
    let k = m.divisor("minusK").unwrap();
    assert_eq!(m.self_power(&k).unwrap(), qi(28));
}

#[test]
fn y2_curve_erratum_follows_from_products() {
    let m = fixtures::model("Y2-A2").unwrap();
    let f = |i| DivisorClass::ray(i);
    let f3 = combo(&m, &[("F1", qi(1)), ("F0", qi(3))]);
    assert_eq!(m.degree(&f3), m.degree(&f(3)));
    let v = m.intersection_product(&[&f(0), &f(0), &f3]).unwrap();
    assert_eq!(v, qi(-1));
    assert_eq!(pair_curve_divisor(&m.curve("C03").unwrap(), &f(0)), v);
}

fn v3(x: i64, y: i64, z: i64) -> [Rational; 3] {
    [qi(x), qi(y), qi(z)]
}

fn moment_polytope() -> Polytope {
    let pts = [
        (0, 0, 1),
        (1, 0, 1),
        (1, 1, 1),
        (0, 1, 1),
        (1, 1, 0),
        (-1, 1, 0),
        (-1, -1, 0),
        (1, -1, 0),
        (0, 0, -1),
        (-1, 0, -1),
        (-1, -1, -1),
        (0, -1, -1),
    ];
    Polytope::new(pts.iter().map(|&(x, y, z)| v3(x, y, z)).collect())
}

fn cube(shift: [i64; 3]) -> Polytope {
    let mut vs = Vec::new();
    for x in 0..2 {
        for y in 0..2 {
            for z in 0..2 {
                vs.push(v3(x + shift[0], y + shift[1], z + shift[2]));
            }
        }
    }
    Polytope::new(vs)
}

#[test]
fn barycenter_oracles() {
    let p = moment_polytope();
    assert_eq!(polytope_barycenter(&p).unwrap(), v3(0, 0, 0));
    assert_eq!(p.volume() * qi(6), qi(28));
    let half = q(1, 2);
    assert_eq!(
        polytope_barycenter(&cube([0, 0, 0])).unwrap(),
        [half.clone(), half.clone(), half.clone()]
    );
    assert_eq!(
        polytope_barycenter(&cube([1, 0, 0])).unwrap(),
        [q(3, 2), half.clone(), half]
    );
    assert_eq!(cube([0, 0, 0]).volume(), qi(1));
    let flat = Polytope::new(vec![v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)]);
    assert!(matches!(
        polytope_barycenter(&flat),
        Err(Error::DegeneratePolytope)
    ));
}

#[test]
fn toric_fan_is_the_normal_fan_of_the_moment_polytope() {
    let m = fixtures::model("X42-toric").unwrap();
    let p = moment_polytope();
    for ray in &m.spec.rays {
        let n = v3(ray[0], ray[1], ray[2]);
        let vals: Vec<Rational> = p
            .vertices
            .iter()
            .map(|v| n.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect();
        let lo = vals.iter().min().unwrap().clone();
        assert_eq!(lo, qi(-1), "reflexive facet height for {ray:?}");
        assert!(vals.iter().filter(|x| **x == lo).count() >= 3);
    }
}

fn small_q() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn divisor_on(n: usize) -> impl Strategy<Value = DivisorClass> {
    prop::collection::vec(small_q(), n)
        .prop_map(|c| DivisorClass::from_pairs(c.into_iter().enumerate()))
}

fn model_strategy() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "Y0-A1",
        "Y1-A1",
        "Y0-A2",
        "Y1-A2",
        "Y2-A2",
        "Ytilde-A2",
        "X42-toric",
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_symmetric_and_trilinear(name in model_strategy(), a in divisor_on(10), b in divisor_on(10), c in divisor_on(10), e in divisor_on(10)) {
        let m = cached(name);
        let [a, b, c, e] = [a, b, c, e].map(|d| truncate(&d, m.n_rays()));
        let abc = m.intersection_product(&[&a, &b, &c]).unwrap();
        prop_assert_eq!(&abc, &m.intersection_product(&[&c, &a, &b]).unwrap());
        prop_assert_eq!(&abc, &m.intersection_product(&[&b, &a, &c]).unwrap());
        let lhs = m.intersection_product(&[&a.add(&e.scale(&q(2, 3))), &b, &c]).unwrap();
        let rhs = abc + m.intersection_product(&[&e, &b, &c]).unwrap() * q(2, 3);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn distinct_triples_ignore_order(name in model_strategy(), i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        prop_assume!(i != j && j != k && i != k);
        let m = cached(name);
        let v = m.distinct_product(&[i, j, k]).unwrap();
        prop_assert_eq!(&v, &m.distinct_product(&[k, i, j]).unwrap());
        prop_assert_eq!(&v, &m.distinct_product(&[j, k, i]).unwrap());
    }

    #[test]
    fn linear_equivalence_leaves_products_unchanged(name in model_strategy(), r in 0usize..6, x in divisor_on(6), y in divisor_on(6)) {
        let m = cached(name);
        let alt = m.equivalent_away_from(r, &[r]).unwrap();
        prop_assert!(alt.coeff(r) == qi(0));
        prop_assert_eq!(m.degree(&alt), m.degree(&DivisorClass::ray(r)));
        let f = DivisorClass::ray(r);
        prop_assert_eq!(m.intersection_product(&[&f, &x, &y]).unwrap(), m.intersection_product(&[&alt, &x, &y]).unwrap());
    }

    #[test]
    fn barycenter_is_translation_equivariant(t in prop::array::uniform3(-5i64..=5), perm in Just(()).prop_perturb(|_, mut rng| {
        let mut idx: Vec<usize> = (0..12).collect();
        for i in (1..idx.len()).rev() { idx.swap(i, (rng.next_u32() as usize) % (i + 1)); }
        idx
    })) {
        let p = moment_polytope();
        let moved = Polytope::new(perm.iter().map(|&i| {
            let v = &p.vertices[i];
            [&v[0] + qi(t[0]), &v[1] + qi(t[1]), &v[2] + qi(t[2])]
        }).collect());
        prop_assert_eq!(polytope_barycenter(&moved).unwrap(), v3(t[0], t[1], t[2]));
    }
}

fn cached(name: &str) -> &'static ToricModel {
    static MODELS: OnceLock<Vec<ToricModel>> = OnceLock::new();
    let all = MODELS.get_or_init(|| {
        fixtures::model_names()
            .map(|n| fixtures::model(n).unwrap())
            .collect()
    });
    all.iter().find(|m| m.name() == name).unwrap()
}

fn truncate(d: &DivisorClass, n: usize) -> DivisorClass {
    DivisorClass::from_pairs(
        d.0.iter()
            .filter(|(k, _)| **k < n)
            .map(|(k, v)| (*k, v.clone())),
    )
}
