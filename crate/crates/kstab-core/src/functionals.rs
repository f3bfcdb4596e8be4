//! Stability functionals: S invariants from volumes, beta, nested flag
//! functionals on a surface, and min-aggregated delta bounds.
//!
//! A flag case lives on a surface `F` inside the threefold. For each outer
//! chamber in `u` it supplies the restrictions `P(u)|F` and `N(u)|F`; the
//! inner family `P(u)|F - vC` is decomposed here chamber by chamber
//! in the `(u, v)` plane.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    definite_integral, fmt_rational, qserde, Affine, Interval, PiecewisePolynomial, Rational,
};
use crate::qi;
use crate::zariski::{
    parametric_surface_zariski, pseudoeffective_region, AffineU, ChamberDecomposition,
    PrintedPiece, SurfaceLattice,
};

/// What a [`StabilityValue`] measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueKind {
    SDivisor,
    SFlagSurface,
    SFlagPoint,
    Beta,
    DeltaBound,
}

/// One additive contribution to a value, labelled by where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Contribution {
    pub label: String,
    pub value: Rational,
}

/// A computed functional with its per-chamber breakdown.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityValue {
    pub kind: ValueKind,
    pub value: Rational,
    pub provenance: Vec<Contribution>,
}

impl StabilityValue {
    fn from_parts(kind: ValueKind, provenance: Vec<Contribution>) -> Self {
        let value = provenance.iter().map(|c| c.value.clone()).sum();
        Self {
            kind,
            value,
            provenance,
        }
    }

    /// Whether the contributions add up to the value.
    pub fn is_consistent(&self) -> bool {
        self.provenance
            .iter()
            .map(|c| c.value.clone())
            .sum::<Rational>()
            == self.value
    }
}

/// `S = (1/A) * integral of vol`.
pub fn s_from_volume(vol: &PiecewisePolynomial, a_top: &Rational) -> Result<Rational> {
    Ok(s_divisor(vol, a_top)?.value)
}

/// [`s_from_volume`] with one contribution per volume piece.
pub fn s_divisor(vol: &PiecewisePolynomial, a_top: &Rational) -> Result<StabilityValue> {
    if !a_top.is_positive() {
        return Err(Error::InvalidParameter(
            "top self-intersection must be positive".into(),
        ));
    }
    let mut parts = Vec::new();
    for p in vol.pieces() {
        parts.push(Contribution {
            label: format!("vol on {}", p.interval),
            value: p.integral()? / a_top,
        });
    }
    Ok(StabilityValue::from_parts(ValueKind::SDivisor, parts))
}

/// `beta = A - S`.
pub fn beta_divisor(
    a_log: &Rational,
    vol: &PiecewisePolynomial,
    a_top: &Rational,
) -> Result<Rational> {
    Ok(a_log - s_from_volume(vol, a_top)?)
}

/// A divisor given by printed volume pieces, with its log discrepancy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeCase {
    pub label: String,
    #[serde(default)]
    pub citation: String,
    #[serde(with = "qserde")]
    pub a_top: Rational,
    #[serde(with = "qserde")]
    pub a_log: Rational,
    pub pieces: Vec<PrintedPiece>,
}

impl VolumeCase {
    pub fn volume(&self) -> Result<PiecewisePolynomial> {
        PiecewisePolynomial::from_pairs(
            self.pieces
                .iter()
                .map(|p| (p.interval.clone(), p.poly()))
                .collect(),
        )
    }

    pub fn s(&self) -> Result<Rational> {
        s_from_volume(&self.volume()?, &self.a_top)
    }

    pub fn beta(&self) -> Result<Rational> {
        beta_divisor(&self.a_log, &self.volume()?, &self.a_top)
    }
}

/// Outer chamber of a flag case: restrictions of `P(u)` and `N(u)` to the
/// flag surface, as affine functions of `u` per curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlagChamber {
    #[serde(with = "crate::exact::qserde::interval")]
    pub interval: Interval,
    pub positive: BTreeMap<String, AffineU>,
    #[serde(default)]
    pub negative: BTreeMap<String, AffineU>,
}

/// A point on the flag curve with local intersection multiplicities of the
/// lattice curves with the flag curve there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlagPoint {
    pub name: String,
    #[serde(default)]
    pub citation: String,
    /// Log discrepancy of the point on the flag curve with its different.
    #[serde(default, with = "qserde::opt")]
    pub a_log: Option<Rational>,
    #[serde(default, with = "qserde::map")]
    pub multiplicities: BTreeMap<String, Rational>,
}

/// One nested flag computation `F > C > Q`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlagCase {
    pub label: String,
    #[serde(default)]
    pub citation: String,
    /// Top self-intersection of the polarization on the ambient threefold.
    #[serde(with = "qserde")]
    pub a_top: Rational,
    #[serde(default = "default_dim")]
    pub dim: u32,
    /// Log discrepancy of the flag curve.
    #[serde(default, with = "qserde::opt")]
    pub a_log: Option<Rational>,
    pub lattice: SurfaceLattice,
    /// Generators of the effective cone, forming a basis of the lattice.
    pub effective: Vec<String>,
    /// Name of the flag curve, used to read its order in `N(u)|F`.
    pub flag: String,
    /// Numerical class of the flag curve; defaults to the lattice curve `flag`.
    #[serde(default, with = "qserde::map")]
    pub flag_class: BTreeMap<String, Rational>,
    /// Exceptional part of the pullback of the flag curve.
    #[serde(default, with = "qserde::map")]
    pub sigma: BTreeMap<String, Rational>,
    pub chambers: Vec<FlagChamber>,
    #[serde(default)]
    pub points: Vec<FlagPoint>,
}

fn default_dim() -> u32 {
    3
}

/// Inner decomposition of one outer chamber.
#[derive(Debug, Clone, PartialEq)]
pub struct InnerChambers {
    pub interval: Interval,
    pub decomposition: ChamberDecomposition,
}

impl FlagCase {
    pub fn from_json(text: &str) -> Result<Self> {
        let case: Self = serde_json::from_str(text).map_err(|e| Error::Fixture {
            name: "flag case".into(),
            reason: e.to_string(),
        })?;
        case.validate()?;
        Ok(case)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Error::Fixture {
            name: self.label.clone(),
            reason,
        };
        if !self.a_top.is_positive() {
            return Err(bad("top self-intersection must be positive".into()));
        }
        if self.a_log.as_ref().is_some_and(|a| !a.is_positive())
            || self
                .points
                .iter()
                .any(|p| p.a_log.as_ref().is_some_and(|a| !a.is_positive()))
        {
            return Err(bad("log discrepancies must be positive".into()));
        }
        self.lattice.clone().validate()?;
        self.flag_vector()?;
        self.lattice.vector(&self.sigma)?;
        self.basis()?;
        let mut prev: Option<&Rational> = None;
        for ch in &self.chambers {
            if let Some(p) = prev {
                if *p != ch.interval.lo {
                    return Err(bad(format!(
                        "chambers leave a gap or overlap at {}",
                        ch.interval
                    )));
                }
            }
            prev = Some(&ch.interval.hi);
            for name in ch.positive.keys().chain(ch.negative.keys()) {
                if name != &self.flag {
                    self.lattice.index(name)?;
                }
            }
        }
        if self.chambers.is_empty() {
            return Err(bad("no chambers".into()));
        }
        Ok(())
    }

    fn basis(&self) -> Result<Vec<usize>> {
        self.effective
            .iter()
            .map(|n| self.lattice.index(n))
            .collect()
    }

    /// Class of the flag curve over the lattice curves.
    pub fn flag_vector(&self) -> Result<Vec<Rational>> {
        if self.flag_class.is_empty() {
            let mut v = vec![Rational::zero(); self.lattice.len()];
            v[self.lattice.index(&self.flag)?] = Rational::one();
            Ok(v)
        } else {
            self.lattice.vector(&self.flag_class)
        }
    }

    fn factor(&self) -> Rational {
        Rational::from_integer(self.dim.into()) / &self.a_top
    }

    /// Copy with every chamber containing one of `walls` in its interior split
    /// there. The functionals must not change.
    pub fn refined(&self, walls: &[Rational]) -> Result<Self> {
        let mut out = self.clone();
        out.chambers.clear();
        for ch in &self.chambers {
            let mut cuts: Vec<Rational> = walls
                .iter()
                .filter(|w| ch.interval.lo < **w && **w < ch.interval.hi)
                .cloned()
                .collect();
            cuts.sort();
            cuts.dedup();
            let mut lo = ch.interval.lo.clone();
            for c in cuts
                .into_iter()
                .chain(std::iter::once(ch.interval.hi.clone()))
            {
                out.chambers.push(FlagChamber {
                    interval: Interval::new(lo, c.clone())?,
                    ..ch.clone()
                });
                lo = c;
            }
        }
        Ok(out)
    }

    /// Restricted positive part of chamber `ch` as affine forms in `u`.
    fn positive_forms(&self, ch: &FlagChamber) -> Result<Vec<Affine>> {
        let mut out = vec![Affine::zero(); self.lattice.len()];
        for (name, a) in &ch.positive {
            let i = self.lattice.index(name)?;
            out[i] = out[i].add(&Affine::in_u(a.c0.clone(), a.cu.clone()));
        }
        Ok(out)
    }

    /// `d(u)`, the order of the flag curve in `N(u)|F`.
    fn flag_order(&self, ch: &FlagChamber) -> Affine {
        ch.negative
            .get(&self.flag)
            .map(|a| Affine::in_u(a.c0.clone(), a.cu.clone()))
            .unwrap_or_else(Affine::zero)
    }

    /// The family `P(u)|F - vC` over one chamber.
    fn family(&self, ch: &FlagChamber) -> Result<Vec<Affine>> {
        let c = self.flag_vector()?;
        let mut fam = self.positive_forms(ch)?;
        for (f, coef) in fam.iter_mut().zip(c) {
            if !coef.is_zero() {
                *f = f.add(&Affine::new(Rational::zero(), Rational::zero(), -coef));
            }
        }
        Ok(fam)
    }

    /// Chamber decomposition of the inner family for every outer chamber.
    pub fn inner_chambers(&self) -> Result<Vec<InnerChambers>> {
        let basis = self.basis()?;
        let mut out = Vec::new();
        for ch in &self.chambers {
            let fam = self.family(ch)?;
            let region = pseudoeffective_region(&self.lattice, &fam, &basis, &ch.interval)?;
            let decomposition = parametric_surface_zariski(&self.lattice, &fam, &region)?;
            out.push(InnerChambers {
                interval: ch.interval.clone(),
                decomposition,
            });
        }
        Ok(out)
    }

    pub fn point(&self, name: &str) -> Result<&FlagPoint> {
        self.points
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::MissingMultiplicity(name.to_string()))
    }
}

/// `P . C` as an affine form, where `P` is a family over the lattice.
fn pair_with(lattice: &SurfaceLattice, family: &[Affine], class: &[Rational]) -> Affine {
    (0..lattice.len()).fold(Affine::zero(), |acc, j| {
        acc.add(&family[j].scale(&lattice.dot_curve(class, j)))
    })
}

/// `S(W;C)` with one refined and one integrated contribution per chamber.
pub fn s_flag_surface(case: &FlagCase) -> Result<StabilityValue> {
    let k = case.factor();
    let inner = case.inner_chambers()?;
    let mut parts = Vec::new();
    for (ch, inn) in case.chambers.iter().zip(&inner) {
        let d = case.flag_order(ch);
        if !d.is_zero() {
            let p2 = case.lattice.square_affine(&case.positive_forms(ch)?);
            let value = definite_integral(&(&p2 * &d.to_poly()), &ch.interval)? * &k;
            parts.push(Contribution {
                label: format!("ord term on {}", ch.interval),
                value,
            });
        }
        let value = inn
            .decomposition
            .integrate(|p| case.lattice.square_affine(&p.positive))?
            * &k;
        parts.push(Contribution {
            label: format!("inner volume on {}", ch.interval),
            value,
        });
    }
    Ok(StabilityValue::from_parts(ValueKind::SFlagSurface, parts))
}

/// The quadratic part `(n/A) * integral of (P(u,v).C)^2`.
pub fn point_quadratic_term(case: &FlagCase) -> Result<Rational> {
    let c = case.flag_vector()?;
    let k = case.factor();
    let mut acc = Rational::zero();
    for inn in case.inner_chambers()? {
        acc += inn.decomposition.integrate(|p| {
            let pc = pair_with(&case.lattice, &p.positive, &c).to_poly();
            &pc * &pc
        })?;
    }
    Ok(acc * k)
}

/// `F_Q = (2n/A) * integral of (P.C) * ord_Q(N'(u) + N(u,v) - (v + d(u)) Sigma)`.
pub fn f_q_term(case: &FlagCase, q: &str) -> Result<Rational> {
    let point = case.point(q)?;
    let c = case.flag_vector()?;
    let sigma = case.lattice.vector(&case.sigma)?;
    let mult = case.lattice.vector(&point.multiplicities)?;
    let k = case.factor() * qi(2);
    let inner = case.inner_chambers()?;
    let mut acc = Rational::zero();
    for (ch, inn) in case.chambers.iter().zip(&inner) {
        let d = case.flag_order(ch);
        let mut n_prime = vec![Affine::zero(); case.lattice.len()];
        for (name, a) in &ch.negative {
            if name != &case.flag {
                n_prime[case.lattice.index(name)?] = Affine::in_u(a.c0.clone(), a.cu.clone());
            }
        }
        let shift = d.add(&Affine::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        ));
        acc += inn.decomposition.integrate(|p| {
            let mut ord = Affine::zero();
            for i in 0..case.lattice.len() {
                if !mult[i].is_zero() {
                    let coeff = n_prime[i].add(&p.negative[i]).sub(&shift.scale(&sigma[i]));
                    ord = ord.add(&coeff.scale(&mult[i]));
                }
            }
            &pair_with(&case.lattice, &p.positive, &c).to_poly() * &ord.to_poly()
        })?;
    }
    Ok(acc * k)
}

/// `S(W;Q)`: the quadratic term plus `F_Q`.
pub fn s_flag_point(case: &FlagCase, q: &str) -> Result<StabilityValue> {
    case.point(q)?;
    let parts = vec![
        Contribution {
            label: "quadratic term".into(),
            value: point_quadratic_term(case)?,
        },
        Contribution {
            label: format!("F_Q at {q}"),
            value: f_q_term(case, q)?,
        },
    ];
    Ok(StabilityValue::from_parts(ValueKind::SFlagPoint, parts))
}

/// One boundary component through the blown-up point.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTerm {
    pub coefficient: Rational,
    /// Weighted order of the component at the point.
    pub order: Rational,
}

/// Log discrepancy `w1 + w2 - sum c_i ord_i` of a weighted blowup of a
/// smooth surface point. Errors when the result is not positive.
pub fn log_discrepancy_weighted_blowup(
    w1: u32,
    w2: u32,
    boundary: &[BoundaryTerm],
) -> Result<Rational> {
    if w1 == 0 || w2 == 0 {
        return Err(Error::InvalidParameter("weights must be positive".into()));
    }
    let a = boundary
        .iter()
        .fold(qi(i64::from(w1) + i64::from(w2)), |acc, t| {
            acc - &t.coefficient * &t.order
        });
    if !a.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "log discrepancy {} is not positive",
            fmt_rational(&a)
        )));
    }
    Ok(a)
}

/// A named `(A, S)` pair entering a delta bound.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaEntry {
    pub label: String,
    pub a_log: Rational,
    pub s: Rational,
}

impl DeltaEntry {
    pub fn new(label: &str, a_log: Rational, s: Rational) -> Self {
        Self {
            label: label.to_string(),
            a_log,
            s,
        }
    }
}

/// Outcome of a min-aggregated bound.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaReport {
    pub bound: Rational,
    pub ratios: Vec<(String, Rational)>,
    /// Label of an entry attaining the minimum.
    pub attained_by: String,
    pub exceeds_one: bool,
}

impl DeltaReport {
    pub fn as_value(&self) -> StabilityValue {
        StabilityValue {
            kind: ValueKind::DeltaBound,
            value: self.bound.clone(),
            provenance: vec![Contribution {
                label: self.attained_by.clone(),
                value: self.bound.clone(),
            }],
        }
    }
}

/// `min A/S` over the entries.
pub fn delta_bound_report(entries: &[DeltaEntry]) -> Result<DeltaReport> {
    if entries.is_empty() {
        return Err(Error::Empty("delta entries"));
    }
    let mut ratios = Vec::new();
    for e in entries {
        if e.s.is_zero() {
            return Err(Error::ZeroS);
        }
        ratios.push((e.label.clone(), &e.a_log / &e.s));
    }
    let (attained_by, bound) = ratios
        .iter()
        .min_by(|a, b| a.1.cmp(&b.1))
        .cloned()
        .expect("nonempty");
    Ok(DeltaReport {
        exceeds_one: bound > Rational::one(),
        bound,
        ratios,
        attained_by,
    })
}

/// Which plt blowup of the base-case point is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseContact {
    /// Ordinary blowup; the fiber meets the branch curve transversally.
    Transversal,
    /// `(1,2)` weighted blowup; the fiber is tangent to the branch curve.
    Tangential,
}

/// The three-dimensional base case as a flag case: the exceptional curve `E`
/// of a plt blowup of a point on the negative section `S`, with fiber `f`,
/// over `u` in `[0, a/mu]`. Requires `a >= 1`, `mu > 0` and `d mu > 1`.
pub fn base_case_flag(
    a: &Rational,
    d: &Rational,
    mu: &Rational,
    contact: BaseContact,
) -> Result<FlagCase> {
    let dmu = d * mu;
    if *a < Rational::one() || !mu.is_positive() || dmu <= Rational::one() {
        return Err(Error::InvalidParameter(
            "need a >= 1, mu > 0 and d mu > 1".into(),
        ));
    }
    let (w, f2, e2) = match contact {
        BaseContact::Transversal => (qi(1), qi(-1), qi(-1)),
        BaseContact::Tangential => (qi(2), qi(-2), crate::q(-1, 2)),
    };
    let z = Rational::zero();
    let lattice = SurfaceLattice::new(
        vec!["S".into(), "f".into(), "E".into()],
        vec![
            vec![-dmu.clone(), qi(1), z.clone()],
            vec![qi(1), f2, qi(1)],
            vec![z.clone(), qi(1), e2],
        ],
    )?;
    let au = |c0: Rational, cu: Rational| AffineU { c0, cu };
    // c(u) = a - mu u
    let wall = (a - qi(1)) / mu;
    let first = FlagChamber {
        interval: Interval::new(z.clone(), wall.clone())?,
        positive: BTreeMap::from([
            ("S".to_string(), au(qi(1), z.clone())),
            ("f".to_string(), au(a * &dmu, -(mu * &dmu))),
            ("E".to_string(), au(&w * a * &dmu, -(&w * mu * &dmu))),
        ]),
        negative: BTreeMap::new(),
    };
    let second = FlagChamber {
        interval: Interval::new(wall, a / mu)?,
        positive: BTreeMap::from([
            ("S".to_string(), au(a.clone(), -mu.clone())),
            ("f".to_string(), au(a * &dmu, -(mu * &dmu))),
            ("E".to_string(), au(&w * a * &dmu, -(&w * mu * &dmu))),
        ]),
        negative: BTreeMap::from([("S".to_string(), au(qi(1) - a, mu.clone()))]),
    };
    let a_top = d * (crate::exact::rpow(a, 3) - crate::exact::rpow(&(a - qi(1)), 3));
    Ok(FlagCase {
        label: format!("base case, {contact:?}"),
        citation: String::new(),
        a_top,
        dim: 3,
        a_log: Some(match contact {
            BaseContact::Transversal => crate::q(3, 2),
            BaseContact::Tangential => qi(2),
        }),
        lattice,
        effective: vec!["S".into(), "f".into(), "E".into()],
        flag: "E".into(),
        flag_class: BTreeMap::new(),
        sigma: BTreeMap::new(),
        chambers: vec![first, second],
        points: vec![
            FlagPoint {
                name: "E.f".into(),
                citation: String::new(),
                a_log: Some(qi(1)),
                multiplicities: BTreeMap::from([("f".to_string(), qi(1))]),
            },
            FlagPoint {
                name: "general".into(),
                citation: String::new(),
                a_log: Some(qi(1)),
                multiplicities: BTreeMap::new(),
            },
        ],
    })
}
