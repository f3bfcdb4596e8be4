use std::collections::BTreeMap;

use kstab_core::exact::{Affine, Interval, PiecewisePolynomial};
use kstab_core::fixtures;
use kstab_core::toric::DivisorClass;
use kstab_core::zariski::{
    parametric_surface_zariski, pseudoeffective_region, pseudoeffective_threshold, surface_zariski,
    threefold_chamber_volume, volume_discrepancies, AffineU, Polygon, SurfaceLattice,
};
use kstab_core::{q, qi, Error, Poly, Rational};
use proptest::prelude::*;

fn lattice(names: &[&str], gram: &[&[Rational]]) -> SurfaceLattice {
    SurfaceLattice::new(
        names.iter().map(|s| s.to_string()).collect(),
        gram.iter().map(|r| r.to_vec()).collect(),
    )
    .unwrap()
}

fn hirzebruch_one() -> SurfaceLattice {
    lattice(&["e", "f"], &[&[qi(-1), qi(1)], &[qi(1), qi(0)]])
}

/// Blowup of a point on a fibre, away from a section of self-intersection -dmu.
fn transversal(dmu: Rational) -> SurfaceLattice {
    lattice(
        &["S", "f", "E"],
        &[
            &[-dmu, qi(1), qi(0)],
            &[qi(1), qi(-1), qi(1)],
            &[qi(0), qi(1), qi(-1)],
        ],
    )
}

#[test]
fn surface_zariski_oracles() {
    let l = hirzebruch_one();
    let d = surface_zariski(&l, &[qi(1), qi(2)]).unwrap();
    assert!(d.support.is_empty());
    assert_eq!(d.positive, vec![qi(1), qi(2)]);
    let d = surface_zariski(&l, &[qi(2), qi(1)]).unwrap();
    assert_eq!(d.negative, vec![qi(1), qi(0)]);
    assert_eq!(d.positive, vec![qi(1), qi(1)]);
    assert_eq!(l.square(&d.positive), qi(1));

    // a = 3/2, d*mu = 2, u = 0, v = 3/2.
    let l = transversal(qi(2));
    let d = surface_zariski(&l, &[qi(1), qi(3), q(3, 2)]).unwrap();
    assert_eq!(
        d.negative_named(&l),
        BTreeMap::from([("f".to_string(), q(1, 2))])
    );
}

#[test]
fn non_negative_definite_support_is_reported() {
    let l = lattice(&["a", "b"], &[&[qi(-1), qi(2)], &[qi(2), qi(-1)]]);
    let r = surface_zariski(&l, &[qi(-1), qi(-1)]);
    assert!(matches!(
        r,
        Err(Error::NonNegativeDefiniteSupport(_)) | Err(Error::NegativePart { .. })
    ));
    let asym = SurfaceLattice::new(
        vec!["a".into(), "b".into()],
        vec![vec![qi(0), qi(1)], vec![qi(2), qi(0)]],
    );
    assert!(asym.is_err());
}

fn affine_family(c: &[(i64, i64, i64)]) -> Vec<Affine> {
    c.iter()
        .map(|&(a, b, d)| Affine::new(qi(a), qi(b), qi(d)))
        .collect()
}

#[test]
fn constant_nef_family_is_one_chamber() {
    let l = hirzebruch_one();
    let fam = affine_family(&[(1, 0, 0), (2, 0, 0)]);
    let region = Polygon::rectangle(
        &Interval::new(qi(0), qi(1)).unwrap(),
        &Interval::new(qi(0), qi(1)).unwrap(),
    );
    let dec = parametric_surface_zariski(&l, &fam, &region).unwrap();
    assert_eq!(dec.chamber_count(), 1);
    assert!(dec.pieces.iter().all(|p| p.support.is_empty()));
    assert_eq!(dec.area(), qi(1));
}

/// `h^*(D_1) - vE` for a = 3/2, d = 4, mu = 1/2 on both u-ranges.
fn transversal_family(second: bool) -> Vec<Affine> {
    let (a, dmu, mu) = (q(3, 2), qi(2), q(1, 2));
    let c_dmu = Affine::in_u(&a * &dmu, -&mu * &dmu);
    let e = c_dmu.sub(&Affine::new(qi(0), qi(0), qi(1)));
    if second {
        vec![Affine::in_u(a, -mu), c_dmu, e]
    } else {
        vec![Affine::constant(qi(1)), c_dmu, e]
    }
}

#[test]
fn transversal_family_chambers() {
    let l = transversal(qi(2));
    let basis = [0, 1, 2];
    let mut supports = Vec::new();
    let mut total = qi(0);
    for (second, range) in [(false, (qi(0), qi(1))), (true, (qi(1), qi(3)))] {
        let fam = transversal_family(second);
        let u = Interval::new(range.0, range.1).unwrap();
        let region = pseudoeffective_region(&l, &fam, &basis, &u).unwrap();
        let dec = parametric_surface_zariski(&l, &fam, &region).unwrap();
        assert_eq!(dec.area(), region.area());
        for p in &dec.pieces {
            for &s in &p.support {
                let poly = l.dot_curve_affine(&p.positive, s);
                assert!(poly.is_zero(), "orthogonality on support {s}");
            }
        }
        total += dec.integrate(|p| l.square_affine(&p.positive)).unwrap();
        supports.push(dec.chamber_count());
    }
    // Three chambers for u <= 1 and two beyond.
    assert_eq!(supports, vec![3, 2]);
    // (3 / D^3) * total is S(W; E) = 29/26 with D^3 = 13.
    assert_eq!(total, q(29, 6));
}

#[test]
fn pseudoeffective_region_needs_a_decreasing_coordinate() {
    let l = hirzebruch_one();
    let fam = affine_family(&[(1, 0, 0), (1, 0, 0)]);
    let r = pseudoeffective_region(&l, &fam, &[0, 1], &Interval::new(qi(0), qi(1)).unwrap());
    assert_eq!(r, Err(Error::Unbounded));
}

fn printed(pieces: &[(i64, i64, &[Rational])]) -> PiecewisePolynomial {
    PiecewisePolynomial::from_pairs(
        pieces
            .iter()
            .map(|(a, b, c)| {
                (
                    Interval::new(qi(*a), qi(*b)).unwrap(),
                    Poly::from_coeffs_u(c),
                )
            })
            .collect(),
    )
    .unwrap()
}

#[test]
fn a1_volume_matches_the_printed_pieces() {
    let models = fixtures::all_models().unwrap();
    let fam = fixtures::family("a1").unwrap();
    let vol = threefold_chamber_volume(&models, &fam).unwrap();
    let want = printed(&[
        (0, 1, &[qi(13), qi(0), qi(0), qi(-1)]),
        (1, 2, &[qi(12), qi(3), qi(-3)]),
        (2, 3, &[qi(0), qi(27), qi(-18), qi(3)]),
    ]);
    assert_eq!(vol, want);
    assert!(volume_discrepancies(&vol, &fam.printed_volume).is_empty());
    assert_eq!(vol.integral().unwrap(), q(49, 2));
}

#[test]
fn a2_volume_recomputed_and_misprints_flagged() {
    let models = fixtures::all_models().unwrap();
    let fam = fixtures::family("a2").unwrap();
    let vol = threefold_chamber_volume(&models, &fam).unwrap();
    let want = printed(&[
        (0, 3, &[qi(13), qi(0), qi(0), q(-1, 18)]),
        (3, 5, &[q(23, 2), q(3, 2), q(-1, 2)]),
        (5, 6, &[qi(-51), qi(39), qi(-8), q(1, 2)]),
        (6, 9, &[qi(81), qi(-27), qi(3), q(-1, 9)]),
    ]);
    assert_eq!(vol, want);
    assert_eq!(vol.integral().unwrap(), q(127, 2));
    let bad = volume_discrepancies(&vol, &fam.printed_volume);
    let at: Vec<(Rational, Rational)> = bad
        .iter()
        .map(|d| (d.interval.lo.clone(), d.interval.hi.clone()))
        .collect();
    assert_eq!(at, vec![(qi(3), qi(5)), (qi(5), qi(6))]);
}

#[test]
fn tampered_chambers_are_rejected() {
    let models = fixtures::all_models().unwrap();
    let mut fam = fixtures::family("a1").unwrap();
    fam.chambers[0].interval = Interval::new(qi(0), qi(2)).unwrap();
    fam.chambers[1].interval = Interval::new(qi(2), qi(3)).unwrap();
    fam.chambers.truncate(2);
    assert!(matches!(
        threefold_chamber_volume(&models, &fam),
        Err(Error::NefViolation { .. })
    ));

    let mut fam = fixtures::family("a1").unwrap();
    fam.chambers[2].negative.insert(
        "F5".into(),
        AffineU {
            c0: qi(-1),
            cu: qi(1),
        },
    );
    assert!(matches!(
        threefold_chamber_volume(&models, &fam),
        Err(Error::DecompositionMismatch { .. })
    ));

    let mut fam = fixtures::family("a2").unwrap();
    fam.chambers[3].negative.insert(
        "F1".into(),
        AffineU {
            c0: qi(-7),
            cu: qi(1),
        },
    );
    assert!(matches!(
        threefold_chamber_volume(&models, &fam),
        Err(Error::NegativePart { .. })
    ));
}

#[test]
fn pseudoeffective_thresholds() {
    let a1 = fixtures::family("a1").unwrap();
    let a2 = fixtures::family("a2").unwrap();
    assert_eq!(
        pseudoeffective_threshold(&fixtures::model("Y0-A1").unwrap(), &a1.divisor).unwrap(),
        qi(3)
    );
    assert_eq!(
        pseudoeffective_threshold(&fixtures::model("Y0-A2").unwrap(), &a2.divisor).unwrap(),
        qi(9)
    );
    let constant = BTreeMap::from([(
        "F0".to_string(),
        AffineU {
            c0: qi(1),
            cu: qi(0),
        },
    )]);
    assert_eq!(
        pseudoeffective_threshold(&fixtures::model("Y0-A1").unwrap(), &constant),
        Err(Error::Unbounded)
    );
}

#[test]
fn volume_is_non_increasing_and_continuous() {
    let models = fixtures::all_models().unwrap();
    for name in ["a1", "a2"] {
        let vol = threefold_chamber_volume(&models, &fixtures::family(name).unwrap()).unwrap();
        assert!(vol.continuity_gaps().is_empty());
        let mut pts = Vec::new();
        for p in vol.pieces() {
            pts.push(p.interval.lo.clone());
            pts.push(p.interval.midpoint());
            pts.push(p.interval.hi.clone());
        }
        let vals: Vec<Rational> = pts.iter().map(|u| vol.eval(u).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[1] <= w[0]), "{name}");
        assert_eq!(vals.last().unwrap(), &qi(0));
    }
}

/// Positive parts on the partial resolution of the A2 models, per chamber.
fn ytilde_positive(k: usize, u: &Rational) -> DivisorClass {
    let one = qi(1);
    let t = qi(9) - u;
    let coeffs: [Rational; 9] = match k {
        0 => [t, qi(3), qi(0), qi(0), qi(0), one, qi(9), qi(4), qi(9)],
        1 => [
            t,
            qi(3),
            qi(0),
            qi(0),
            qi(0),
            one,
            qi(12) - u,
            qi(4),
            (qi(21) - u) / qi(2),
        ],
        2 => [
            t.clone(),
            qi(3),
            qi(0),
            qi(0),
            qi(0),
            one,
            qi(12) - u,
            t.clone(),
            qi(2) * &t,
        ],
        _ => [
            t.clone(),
            t.clone(),
            qi(0),
            qi(0),
            qi(0),
            &t / qi(3),
            qi(2) * &t,
            t.clone(),
            qi(2) * &t,
        ],
    };
    DivisorClass::from_pairs(coeffs.into_iter().enumerate())
}

fn ytilde_negative(k: usize, u: &Rational) -> DivisorClass {
    let c: [Rational; 9] = match k {
        0 => Default::default(),
        1 => {
            let mut a: [Rational; 9] = Default::default();
            a[6] = u - qi(3);
            a[8] = (u - qi(3)) / qi(2);
            a
        }
        2 => {
            let mut a: [Rational; 9] = Default::default();
            a[6] = u - qi(3);
            a[7] = u - qi(5);
            a[8] = qi(2) * u - qi(9);
            a
        }
        _ => {
            let mut a: [Rational; 9] = Default::default();
            a[1] = u - qi(6);
            a[5] = (u - qi(6)) / qi(3);
            a[6] = qi(2) * u - qi(9);
            a[7] = u - qi(5);
            a[8] = qi(2) * u - qi(9);
            a
        }
    };
    DivisorClass::from_pairs(c.into_iter().enumerate())
}

#[test]
fn resolution_data_reproduces_the_volume() {
    let yt = fixtures::model("Ytilde-A2").unwrap();
    let models = fixtures::all_models().unwrap();
    let vol = threefold_chamber_volume(&models, &fixtures::family("a2").unwrap()).unwrap();
    let ends = [(0, 3), (3, 5), (5, 6), (6, 9)];
    for (k, (a, b)) in ends.into_iter().enumerate() {
        for u in [
            qi(a),
            (qi(a) + qi(b)) / qi(2),
            qi(b),
            (qi(a) + qi(2) * qi(b)) / qi(3),
        ] {
            let p = ytilde_positive(k, &u);
            assert_eq!(
                yt.self_power(&p).unwrap(),
                vol.eval(&u).unwrap(),
                "chamber {k} at {u}"
            );
            let pullback = ytilde_positive(0, &u);
            let total = p.add(&ytilde_negative(k, &u));
            assert_eq!(
                yt.degree(&total),
                yt.degree(&pullback),
                "chamber {k} at {u}"
            );
            assert!(ytilde_negative(k, &u).0.values().all(|c| *c >= qi(0)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zariski_is_orthogonal_and_permutation_invariant(
        coeffs in prop::collection::vec((0i64..=12, 1i64..=4), 3),
        perm in Just(()).prop_perturb(|_, mut rng| {
            let mut p = vec![0usize, 1, 2];
            for i in (1..3).rev() { p.swap(i, (rng.next_u32() as usize) % (i + 1)); }
            p
        }),
    ) {
        let l = transversal(qi(2));
        let d: Vec<Rational> = coeffs.iter().map(|&(n, m)| q(n, m)).collect();
        let dec = surface_zariski(&l, &d).unwrap();
        for &s in &dec.support {
            prop_assert_eq!(l.dot_curve(&dec.positive, s), qi(0));
        }
        for j in 0..3 {
            prop_assert!(l.dot_curve(&dec.positive, j) >= qi(0));
            prop_assert!(dec.negative[j] >= qi(0));
        }
        let names: Vec<String> = perm.iter().map(|&i| l.curves[i].clone()).collect();
        let gram = perm.iter().map(|&i| perm.iter().map(|&j| l.gram[i][j].clone()).collect()).collect();
        let lp = SurfaceLattice::new(names, gram).unwrap();
        let dp: Vec<Rational> = perm.iter().map(|&i| d[i].clone()).collect();
        let decp = surface_zariski(&lp, &dp).unwrap();
        prop_assert_eq!(decp.negative_named(&lp), dec.negative_named(&l));
    }
}
