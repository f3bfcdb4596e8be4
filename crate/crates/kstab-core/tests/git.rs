use std::collections::BTreeMap;

use kstab_core::git::*;
use kstab_core::{qi, Error, Rational};
use proptest::prelude::*;

fn support(s: &str) -> MonomialSupport {
    s.parse().unwrap()
}

fn lambda(r0: i64, r1: i64) -> OneParamSubgroup {
    OneParamSubgroup::new(r0, r1).unwrap()
}

const UNSTABLE: &str = "02,12,21,22";

#[test]
fn weights_from_the_stability_argument() {
    assert_eq!(
        hm_weight(&MonomialSupport::full(), lambda(1, 1)).unwrap(),
        4
    );
    let singular = MonomialSupport::full().without(&[(0, 0), (1, 0), (0, 1)]);
    assert_eq!(hm_weight(&singular, lambda(1, 1)).unwrap(), 0);
    assert_eq!(hm_weight(&support(UNSTABLE), lambda(1, 2)).unwrap(), -2);
}

#[test]
fn weight_formulas_per_monomial() {
    for (i, j) in MonomialSupport::full().entries().iter().copied() {
        let (ii, jj) = (i64::from(i), i64::from(j));
        assert_eq!(lambda(1, 1).monomial_weight(i, j), 4 - 2 * (ii + jj));
        assert_eq!(lambda(1, 2).monomial_weight(i, j), 6 - 2 * (ii + 2 * jj));
    }
}

#[test]
fn destabilizers() {
    let d = find_destabilizer(&support(UNSTABLE), 5).unwrap().unwrap();
    assert_eq!(
        (d.lambda, d.weight, d.certificate),
        (lambda(1, 2), -2, Certificate::Unstable)
    );
    assert_eq!(
        find_destabilizer(&MonomialSupport::full(), 5).unwrap(),
        None
    );
    let singular = MonomialSupport::full().without(&[(0, 0), (1, 0), (0, 1)]);
    assert!(singular.contains(1, 1));
    let d = find_destabilizer(&singular, 5).unwrap().unwrap();
    assert_eq!(
        (d.lambda, d.weight, d.certificate),
        (lambda(1, 1), 0, Certificate::NotStable)
    );
    // removing a11 and a20 as well leaves the printed unstable locus
    let locus = singular.without(&[(1, 1), (2, 0)]);
    assert_eq!(locus, support(UNSTABLE));
    let d = find_destabilizer(&locus, 1).unwrap().unwrap();
    assert_eq!(d.certificate, Certificate::NotStable);
}

#[test]
fn errors() {
    assert_eq!(
        hm_weight(&MonomialSupport::default(), lambda(0, 1)),
        Err(Error::EmptySupport)
    );
    assert_eq!(
        find_destabilizer(&MonomialSupport::default(), 3),
        Err(Error::EmptySupport)
    );
    assert!(find_destabilizer(&support("00"), 0).is_err());
    assert!(OneParamSubgroup::new(2, 1).is_err());
    assert!(OneParamSubgroup::new(0, 0).is_err());
    assert!(OneParamSubgroup::new(-1, 1).is_err());
    assert!("03".parse::<MonomialSupport>().is_err());
    assert!("1".parse::<MonomialSupport>().is_err());
    assert_eq!(support(UNSTABLE).to_string(), UNSTABLE);
}

#[test]
fn singular_fixed_point() {
    let map = |pairs: &[((u8, u8), i64)]| {
        pairs
            .iter()
            .map(|&(k, v)| (k, qi(v)))
            .collect::<BTreeMap<_, Rational>>()
    };
    assert!(!fixed_point_singularity(&map(&[
        ((0, 0), 1),
        ((2, 2), 5),
        ((1, 1), -3)
    ])));
    assert!(fixed_point_singularity(&map(&[((1, 1), 1)])));
    assert!(!fixed_point_singularity(&map(&[((0, 1), 1)])));
    assert!(fixed_point_singularity(&map(&[((0, 0), 0), ((2, 1), 7)])));
}

#[test]
fn opposite_corner_monomials() {
    for r0 in 0..6 {
        for r1 in 1..6 {
            let l = OneParamSubgroup::raw(r0, r1);
            let xv = hm_weight(&support("02"), l).unwrap();
            assert_eq!(xv, -hm_weight_min(&support("20"), l).unwrap());
            assert_eq!(xv, -hm_weight(&support("20"), l).unwrap());
        }
    }
}

fn arb_support() -> impl Strategy<Value = MonomialSupport> {
    (1u16..512).prop_map(|mask| {
        MonomialSupport::new(
            (0..9u8)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| (b / 3, b % 3)),
        )
        .unwrap()
    })
}

fn arb_lambda() -> impl Strategy<Value = OneParamSubgroup> {
    (1i64..20)
        .prop_flat_map(|r1| (0..=r1).prop_map(move |r0| OneParamSubgroup::new(r0, r1).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_monomials_never_lowers_the_weight(s in arb_support(), l in arb_lambda(), b in 0u8..9) {
        let bigger = s.with((b / 3, b % 3)).unwrap();
        prop_assert!(hm_weight(&bigger, l).unwrap() >= hm_weight(&s, l).unwrap());
    }

    #[test]
    fn exchanging_factors_preserves_the_weight(s in arb_support(), l in arb_lambda()) {
        prop_assert_eq!(hm_weight(&s.transpose(), l.swapped()).unwrap(), hm_weight(&s, l).unwrap());
    }

    #[test]
    fn weights_scale_linearly(s in arb_support(), l in arb_lambda(), c in 1i64..7) {
        let scaled = OneParamSubgroup::new(c * l.r0, c * l.r1).unwrap();
        prop_assert_eq!(hm_weight(&s, scaled).unwrap(), c * hm_weight(&s, l).unwrap());
    }

    #[test]
    fn certificates_are_primitive_and_honest(s in arb_support(), bound in 1i64..8) {
        if let Some(d) = find_destabilizer(&s, bound).unwrap() {
            prop_assert!(d.lambda.is_primitive() && d.lambda.r1 <= bound);
            prop_assert_eq!(hm_weight(&s, d.lambda).unwrap(), d.weight);
            prop_assert!(d.weight <= 0);
            if d.lambda.r0 > 0 {
                prop_assert!(fixed_point_singularity(
                    &s.entries().iter().map(|&k| (k, qi(1))).collect()
                ));
            } else {
                // lambda = (0, 1) only sees the second factor: v divides the form
                prop_assert!(s.entries().iter().all(|&(_, j)| j > 0));
            }
        }
    }
}
