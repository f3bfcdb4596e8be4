use kstab_core::exact::{Interval, PiecewisePolynomial};
use kstab_core::fixtures;
use kstab_core::formulas::{k3, s_base_term, s_sminus};
use kstab_core::functionals::*;
use kstab_core::zariski::threefold_chamber_volume;
use kstab_core::{q, qi, Error, Poly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn flag(name: &str) -> FlagCase {
    fixtures::flag(name).unwrap()
}

fn surface(name: &str) -> Rational {
    let v = s_flag_surface(&flag(name)).unwrap();
    assert!(v.is_consistent());
    v.value
}

fn point(name: &str, q: &str) -> (Rational, Rational) {
    let c = flag(name);
    let v = s_flag_point(&c, q).unwrap();
    assert!(v.is_consistent());
    (point_quadratic_term(&c).unwrap(), f_q_term(&c, q).unwrap())
}

fn family_volume(name: &str) -> (PiecewisePolynomial, Rational) {
    let fam = fixtures::family(name).unwrap();
    let vol = threefold_chamber_volume(&fixtures::all_models().unwrap(), &fam).unwrap();
    (vol, fam.a_top)
}

#[test]
fn s_of_the_exceptional_surface_from_chamber_volumes() {
    let (vol, a) = family_volume("a1");
    assert_eq!(s_from_volume(&vol, &a).unwrap(), q(49, 26));
    assert_eq!(qi(2) / s_from_volume(&vol, &a).unwrap(), q(52, 49));
    let (vol, a) = family_volume("a2");
    let s = s_divisor(&vol, &a).unwrap();
    assert_eq!(s.value, q(127, 26));
    assert_eq!(s.provenance.len(), 4);
    assert!(s.is_consistent());
    assert_eq!(qi(5) / s.value, q(130, 127));
}

#[test]
fn constant_volume_gives_one() {
    let vol = PiecewisePolynomial::from_pairs(vec![(
        Interval::new(qi(0), qi(1)).unwrap(),
        Poly::constant(qi(7)),
    )])
    .unwrap();
    assert_eq!(s_from_volume(&vol, &qi(7)).unwrap(), qi(1));
    assert_eq!(beta_divisor(&qi(1), &vol, &qi(7)).unwrap(), qi(0));
    assert!(s_from_volume(&vol, &qi(0)).is_err());
}

#[test]
fn beta_of_exceptional_divisors() {
    let c42 = fixtures::volume_case("family42/E_hat").unwrap();
    assert_eq!(c42.beta().unwrap(), q(1, 14));
    let c39 = fixtures::volume_case("family39/E_hat").unwrap();
    assert_eq!(c39.s().unwrap(), q(19, 26));
    assert_eq!(c39.beta().unwrap(), q(7, 26));
    // the same divisor normalized by A^3 = 26
    let doubled = PiecewisePolynomial::from_pairs(
        c39.volume()
            .unwrap()
            .pieces()
            .iter()
            .map(|p| (p.interval.clone(), p.poly.scale(&qi(2))))
            .collect(),
    )
    .unwrap();
    assert_eq!(beta_divisor(&qi(1), &doubled, &qi(26)).unwrap(), q(7, 26));
    assert!(c42.beta().unwrap() > Rational::zero() && c39.beta().unwrap() > Rational::zero());
}

#[test]
fn flag_on_the_exceptional_quadric() {
    assert_eq!(surface("family39/flag_s"), q(5, 13));
}

#[test]
fn flag_along_the_negative_section() {
    let c = flag("a1/flag_e");
    let s = s_flag_surface(&c).unwrap();
    assert_eq!(s.value, q(20, 13));
    // the ord term is nonzero on the last two chambers
    assert_eq!(
        s.provenance
            .iter()
            .filter(|p| p.label.starts_with("ord"))
            .count(),
        2
    );
    assert_eq!(c.a_log.clone().unwrap() / s.value, q(13, 10));
}

#[test]
fn point_on_the_negative_section() {
    // P(u,v).e is v, u-1+v, 2u-3+v on the three chambers; integrals 1/12, 7/6, 25/12
    let (quad, fq) = point("a1/flag_e", "O");
    assert_eq!(fq, qi(0));
    assert_eq!(quad, q(3, 13) * (q(1, 12) + q(7, 6) + q(25, 12)));
    assert_eq!(quad, q(10, 13));
}

#[test]
fn ordinary_blowup_flag() {
    assert_eq!(surface("a1/flag_C_ordinary"), q(29, 26));
    assert_eq!(point("a1/flag_C_ordinary", "general"), (q(9, 26), qi(0)));
    assert_eq!(point("a1/flag_C_ordinary", "C.B"), (q(9, 26), qi(0)));
    assert_eq!(point("a1/flag_C_ordinary", "C.f"), (q(9, 26), q(11, 26)));
}

#[test]
fn weighted_blowup_flag() {
    assert_eq!(surface("a1/flag_C_weighted"), q(49, 26));
    assert_eq!(qi(2) / surface("a1/flag_C_weighted"), q(52, 49));
    assert_eq!(point("a1/flag_C_weighted", "general"), (q(9, 52), qi(0)));
    assert_eq!(point("a1/flag_C_weighted", "sing"), (q(9, 52), qi(0)));
}

#[test]
fn weighted_blowup_correction_at_the_fiber_recomputed() {
    // Hand integration of (P.C) * coeff_f(N) over the five chambers with
    // nonzero negative part: 1/48 + (1/6 + 5/24) + (3/4 + 7/48) = 31/24.
    let (quad, fq) = point("a1/flag_C_weighted", "C.f");
    assert_eq!(quad, q(9, 52));
    assert_eq!(fq, q(6, 13) * q(31, 24));
    assert_eq!(fq, q(31, 52));
    // agrees with the tangential base case at a = 3/2, d mu = 2
    let base = base_case_flag(&q(3, 2), &qi(4), &q(1, 2), BaseContact::Tangential).unwrap();
    assert_eq!(f_q_term(&base, "E.f").unwrap(), fq);
}

#[test]
fn first_flag_on_the_weighted_plane() {
    assert_eq!(surface("a2/flag_C1"), q(10, 13));
    assert_eq!(point("a2/flag_C1", "general"), (q(9, 52), qi(0)));
    let (quad, fq) = point("a2/flag_C1", "C1.C3");
    assert_eq!(fq, q(1, 12));
    assert_eq!(&quad + &fq, q(10, 39));
    let c = flag("a2/flag_C1");
    assert_eq!(
        c.point("C1.C3").unwrap().a_log.clone().unwrap() / (quad + fq),
        q(13, 10)
    );
}

#[test]
fn singular_curve_flag() {
    assert_eq!(surface("a2/flag_C3"), q(10, 39));
    assert_eq!(point("a2/flag_C3", "general"), (q(9, 26), qi(0)));
}

#[test]
fn pencil_member_flag() {
    assert_eq!(surface("a2/flag_pencil"), q(9, 26));
    assert_eq!(point("a2/flag_pencil", "general"), (q(10, 39), qi(0)));
}

#[test]
fn unknown_point_is_missing_multiplicity() {
    let c = flag("a1/flag_C_ordinary");
    assert_eq!(
        f_q_term(&c, "nowhere"),
        Err(Error::MissingMultiplicity("nowhere".into()))
    );
    assert!(s_flag_point(&c, "nowhere").is_err());
}

#[test]
fn malformed_flag_cases_are_rejected() {
    let text = fixtures::FLAGS
        .iter()
        .find(|(n, _)| *n == "a1/flag_e")
        .unwrap()
        .1;
    let bad_top = text.replace("\"a_top\": \"13\"", "\"a_top\": \"-13\"");
    assert!(FlagCase::from_json(&bad_top).is_err());
    let bad_gap = text.replace(
        "\"interval\": [\"2\", \"3\"]",
        "\"interval\": [\"5/2\", \"3\"]",
    );
    assert!(FlagCase::from_json(&bad_gap).is_err());
    let bad_curve = text.replace("\"flag\": \"e\"", "\"flag\": \"x\"");
    assert!(FlagCase::from_json(&bad_curve).is_err());
}

#[test]
fn log_discrepancies() {
    let half = |order| BoundaryTerm {
        coefficient: q(1, 2),
        order,
    };
    assert_eq!(
        log_discrepancy_weighted_blowup(1, 1, &[half(qi(1))]).unwrap(),
        q(3, 2)
    );
    assert_eq!(
        log_discrepancy_weighted_blowup(1, 2, &[half(qi(2))]).unwrap(),
        qi(2)
    );
    assert_eq!(log_discrepancy_weighted_blowup(1, 1, &[]).unwrap(), qi(2));
    assert!(log_discrepancy_weighted_blowup(
        1,
        1,
        &[BoundaryTerm {
            coefficient: qi(1),
            order: qi(2)
        }]
    )
    .is_err());
    assert!(log_discrepancy_weighted_blowup(0, 1, &[]).is_err());
}

#[test]
fn delta_bounds_for_the_quartic_double_cover() {
    let a = q(3, 2);
    let on_section = delta_bound_report(&[
        DeltaEntry::new("negative section", qi(1), s_sminus(3, &a).unwrap()),
        DeltaEntry::new("base", q(3, 2), s_base_term(3, &a)),
    ])
    .unwrap();
    assert_eq!(on_section.ratios[0].1, q(26, 17));
    assert_eq!(on_section.bound, q(13, 10));
    assert_eq!(on_section.attained_by, "base");
    assert!(on_section.exceeds_one);
    let off =
        delta_bound_report(&[DeltaEntry::new("fiber", qi(1), k3(&a, &qi(4), &q(1, 2)))]).unwrap();
    assert_eq!(off.bound, q(52, 49));
    assert_eq!(off.as_value().value, q(52, 49));
    let trivial = delta_bound_report(&[DeltaEntry::new("x", qi(1), qi(1))]).unwrap();
    assert_eq!(trivial.bound, qi(1));
    assert!(!trivial.exceeds_one);
    assert_eq!(
        delta_bound_report(&[]).unwrap_err(),
        Error::Empty("delta entries")
    );
    assert_eq!(
        delta_bound_report(&[DeltaEntry::new("z", qi(1), qi(0))]).unwrap_err(),
        Error::ZeroS
    );
}

/// Closed forms for the base case, in `a` and `t = d mu`.
fn base_closed_forms(
    a: &Rational,
    t: &Rational,
    contact: BaseContact,
) -> (Rational, Rational, Rational) {
    let den = qi(3) * a * a - qi(3) * a + qi(1);
    let a3 = a * a * a;
    let total = t * (qi(2) * a - qi(1)) * (qi(2) * a * a - qi(2) * a + qi(1)) / (qi(4) * &den);
    match contact {
        BaseContact::Transversal => (
            (qi(4) * &a3 * t + qi(6) * (qi(1) - t) * a * a + qi(4) * (t - qi(2)) * a - t + qi(3))
                / (qi(4) * &den),
            (qi(6) * a * a - qi(8) * a + qi(3)) / (qi(4) * &den),
            total,
        ),
        BaseContact::Tangential => (
            (qi(8) * &a3 * t + qi(6) * (qi(1) - qi(2) * t) * a * a + qi(8) * (t - qi(1)) * a
                - qi(2) * t
                + qi(3))
                / (qi(4) * &den),
            (qi(6) * a * a - qi(8) * a + qi(3)) / (qi(8) * &den),
            total,
        ),
    }
}

#[test]
fn base_case_matches_closed_forms() {
    for (a, d, mu) in [
        (q(3, 2), qi(4), q(1, 2)),
        (q(5, 4), qi(3), qi(1)),
        (qi(2), qi(5), q(1, 2)),
        (qi(3), qi(9), q(1, 3)),
    ] {
        for contact in [BaseContact::Transversal, BaseContact::Tangential] {
            let case = base_case_flag(&a, &d, &mu, contact).unwrap();
            let (s, quad, total) = base_closed_forms(&a, &(&d * &mu), contact);
            assert_eq!(
                s_flag_surface(&case).unwrap().value,
                s,
                "{a} {d} {mu} {contact:?}"
            );
            assert_eq!(
                point_quadratic_term(&case).unwrap(),
                quad,
                "{a} {d} {mu} {contact:?}"
            );
            assert_eq!(
                s_flag_point(&case, "E.f").unwrap().value,
                total,
                "{a} {d} {mu} {contact:?}"
            );
        }
    }
}

#[test]
fn base_case_requires_a_nontrivial_fiber_degree() {
    assert!(base_case_flag(&q(3, 2), &qi(1), &qi(1), BaseContact::Transversal).is_err());
    assert!(base_case_flag(&q(1, 2), &qi(4), &qi(1), BaseContact::Transversal).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn refining_outer_chambers_changes_nothing(idx in 0usize..7, num in 1i64..90, den in 1i64..10) {
        let name = fixtures::FLAGS[idx].0;
        let case = flag(name);
        let wall = q(num, den);
        let refined = case.refined(&[wall.clone(), wall / qi(2)]).unwrap();
        prop_assert_eq!(s_flag_surface(&refined).unwrap().value, s_flag_surface(&case).unwrap().value);
        for p in &case.points {
            prop_assert_eq!(f_q_term(&refined, &p.name).unwrap(), f_q_term(&case, &p.name).unwrap());
        }
        prop_assert_eq!(point_quadratic_term(&refined).unwrap(), point_quadratic_term(&case).unwrap());
    }

    #[test]
    fn s_is_invariant_under_common_scaling(num in 1i64..50, den in 1i64..50) {
        let c = q(num, den);
        let (vol, a) = family_volume("a1");
        let scaled = PiecewisePolynomial::from_pairs(
            vol.pieces().iter().map(|p| (p.interval.clone(), p.poly.scale(&c))).collect(),
        ).unwrap();
        prop_assert_eq!(s_from_volume(&scaled, &(&a * &c)).unwrap(), s_from_volume(&vol, &a).unwrap());
    }
}
