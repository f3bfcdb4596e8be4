//! Verification of supplied threefold Zariski chambers.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, interpolate, qserde, Interval, PiecewisePolynomial, Rational};
use crate::toric::{degree_coordinates, nef_check, DivisorClass, ToricModel};
use crate::{q, qi, Poly};

/// `c0 + cu*u`, written `["c0", "cu"]` in fixtures.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineU {
    pub c0: Rational,
    pub cu: Rational,
}

impl AffineU {
    pub fn eval(&self, u: &Rational) -> Rational {
        &self.c0 + &self.cu * u
    }
}

impl Serialize for AffineU {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [qserde::Q(self.c0.clone()), qserde::Q(self.cu.clone())].serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineU {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [c0, cu] = <[qserde::Q; 2]>::deserialize(d)?;
        Ok(Self { c0: c0.0, cu: cu.0 })
    }
}

pub type AffineDivisor = BTreeMap<String, AffineU>;

fn divisor_at(model: &ToricModel, d: &AffineDivisor, u: &Rational) -> Result<DivisorClass> {
    let terms: BTreeMap<String, Rational> = d.iter().map(|(k, a)| (k.clone(), a.eval(u))).collect();
    model.combination(&terms)
}

/// One chamber: interval, birational model, and the claimed decomposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreefoldChamber {
    #[serde(with = "crate::exact::qserde::interval")]
    pub interval: Interval,
    pub model: String,
    pub positive: AffineDivisor,
    #[serde(default)]
    pub negative: AffineDivisor,
}

/// A volume piece as printed, ascending coefficients in `u`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrintedPiece {
    #[serde(with = "crate::exact::qserde::interval")]
    pub interval: Interval,
    #[serde(with = "qserde::vec")]
    pub coeffs: Vec<Rational>,
}

impl PrintedPiece {
    pub fn poly(&self) -> Poly {
        Poly::from_coeffs_u(&self.coeffs)
    }
}

/// Fixture: the family `L(u)`, its chambers, and optionally printed volumes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreefoldFamily {
    pub name: String,
    #[serde(default)]
    pub citation: String,
    #[serde(with = "qserde")]
    pub a_top: Rational,
    /// `L(u)` in terms of boundary divisors; same names on every model.
    pub divisor: AffineDivisor,
    pub chambers: Vec<ThreefoldChamber>,
    #[serde(default)]
    pub printed_volume: Vec<PrintedPiece>,
}

impl ThreefoldFamily {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Fixture {
            name: "threefold family".into(),
            reason: e.to_string(),
        })
    }
}

fn find<'a>(models: &'a [ToricModel], name: &str) -> Result<&'a ToricModel> {
    models
        .iter()
        .find(|m| m.name() == name)
        .ok_or_else(|| Error::Fixture {
            name: name.to_string(),
            reason: "model not supplied".into(),
        })
}

fn label(c: &ThreefoldChamber) -> String {
    format!("{} on {}", c.interval, c.model)
}

/// Verifies each chamber and returns `vol(L(u)) = P(u)^3` piecewise.
///
/// Checks at both endpoints (sufficient, as everything is affine in `u`):
/// `P` nef against the model's Mori generators, `N >= 0`, and
/// `deg(P + N) = deg(L)`. Volumes must agree across every wall.
pub fn threefold_chamber_volume(
    models: &[ToricModel],
    family: &ThreefoldFamily,
) -> Result<PiecewisePolynomial> {
    let mut pieces = Vec::new();
    for ch in &family.chambers {
        let model = find(models, &ch.model)?;
        let mori = model.mori_generators()?;
        let ends = [ch.interval.lo.clone(), ch.interval.hi.clone()];
        for u in &ends {
            let p = divisor_at(model, &ch.positive, u)?;
            let report = nef_check(&p, &mori);
            if !report.nef {
                return Err(Error::NefViolation {
                    chamber: label(ch),
                    detail: format!("at u={} negative on {:?}", fmt_rational(u), report.violated),
                });
            }
            for (k, a) in &ch.negative {
                if a.eval(u).is_negative() {
                    return Err(Error::NegativePart {
                        chamber: label(ch),
                        detail: format!("coefficient of {k} at u={}", fmt_rational(u)),
                    });
                }
            }
            let total = p.add(&divisor_at(model, &ch.negative, u)?);
            let l = divisor_at(model, &family.divisor, u)?;
            if model.degree(&total) != model.degree(&l) {
                return Err(Error::DecompositionMismatch {
                    chamber: label(ch),
                    detail: format!("P+N and L differ in degree at u={}", fmt_rational(u)),
                });
            }
        }
        pieces.push((
            ch.interval.clone(),
            cube_in_u(model, &ch.positive, &ch.interval)?,
        ));
    }
    let vol = PiecewisePolynomial::from_pairs(pieces)?;
    if let Some(gap) = vol.continuity_gaps().into_iter().next() {
        return Err(Error::DiscontinuousVolume {
            at: fmt_rational(&gap.at),
            left: fmt_rational(&gap.left),
            right: fmt_rational(&gap.right),
        });
    }
    Ok(vol)
}

/// `P(u)^3` as an exact cubic, interpolated from five samples.
fn cube_in_u(model: &ToricModel, p: &AffineDivisor, range: &Interval) -> Result<Poly> {
    let width = range.width();
    let mut samples = Vec::new();
    for k in 0..5 {
        let u = &range.lo + &width * q(k, 4) + if width.is_zero() { qi(k) } else { qi(0) };
        let d = divisor_at(model, p, &u)?;
        samples.push((u, model.self_power(&d)?));
    }
    interpolate(&samples, 3)
}

/// Printed piece that disagrees with the recomputed volume.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeDiscrepancy {
    pub interval: Interval,
    pub printed: Poly,
    pub computed: Poly,
}

/// Printed pieces compared against recomputed pieces on matching intervals.
pub fn volume_discrepancies(
    vol: &PiecewisePolynomial,
    printed: &[PrintedPiece],
) -> Vec<VolumeDiscrepancy> {
    let mut out = Vec::new();
    for p in printed {
        let computed = vol
            .pieces()
            .iter()
            .find(|c| c.interval == p.interval)
            .map(|c| c.poly.clone());
        match computed {
            Some(c) if c == p.poly() => {}
            Some(c) => out.push(VolumeDiscrepancy {
                interval: p.interval.clone(),
                printed: p.poly(),
                computed: c,
            }),
            None => out.push(VolumeDiscrepancy {
                interval: p.interval.clone(),
                printed: p.poly(),
                computed: Poly::zero(),
            }),
        }
    }
    out
}

/// Largest `u` with `L(u)` in the simplicial effective cone of `model`.
pub fn pseudoeffective_threshold(model: &ToricModel, family: &AffineDivisor) -> Result<Rational> {
    let eff = model.effective_generators()?;
    let at0 = degree_coordinates(model, &divisor_at(model, family, &qi(0))?, &eff)?;
    let at1 = degree_coordinates(model, &divisor_at(model, family, &qi(1))?, &eff)?;
    let mut best: Option<Rational> = None;
    for (c0, c1) in at0.iter().zip(&at1) {
        let slope = c1 - c0;
        if slope.is_negative() {
            let root = c0 / -slope;
            best = Some(match best {
                Some(b) if b < root => b,
                _ => root,
            });
        }
    }
    best.ok_or(Error::Unbounded)
}
