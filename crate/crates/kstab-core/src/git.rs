//! Hilbert-Mumford weights for diagonal one-parameter subgroups of
//! `SL2 x SL2` acting on forms of bidegree (2,2), written as
//! `sum a_ij x^(2-i) y^i u^(2-j) v^j`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Indices `(i, j)` of the nonzero coefficients, each in `0..=2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialSupport(BTreeSet<(u8, u8)>);

impl MonomialSupport {
    pub fn new(entries: impl IntoIterator<Item = (u8, u8)>) -> Result<Self> {
        let set: BTreeSet<_> = entries.into_iter().collect();
        if let Some(&(i, j)) = set.iter().find(|(i, j)| *i > 2 || *j > 2) {
            return Err(Error::BadMonomial(format!("{i}{j}")));
        }
        Ok(Self(set))
    }

    pub fn full() -> Self {
        Self((0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect())
    }

    /// The support of a coefficient map, dropping zeros.
    pub fn of_coefficients(coeffs: &BTreeMap<(u8, u8), Rational>) -> Result<Self> {
        Self::new(coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(k, _)| *k))
    }

    pub fn entries(&self) -> &BTreeSet<(u8, u8)> {
        &self.0
    }

    pub fn contains(&self, i: u8, j: u8) -> bool {
        self.0.contains(&(i, j))
    }

    pub fn without(&self, drop: &[(u8, u8)]) -> Self {
        Self(
            self.0
                .iter()
                .filter(|e| !drop.contains(e))
                .copied()
                .collect(),
        )
    }

    pub fn with(&self, extra: (u8, u8)) -> Result<Self> {
        Self::new(self.0.iter().copied().chain([extra]))
    }

    /// Exchanges the two factors: `(i, j) -> (j, i)`.
    pub fn transpose(&self) -> Self {
        Self(self.0.iter().map(|&(i, j)| (j, i)).collect())
    }
}

impl FromStr for MonomialSupport {
    type Err = Error;

    /// Parses `"02,12,21,22"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let digits: Vec<u8> = tok.bytes().map(|b| b.wrapping_sub(b'0')).collect();
            match digits[..] {
                [i, j] if i <= 2 && j <= 2 => out.push((i, j)),
                _ => return Err(Error::BadMonomial(tok.to_string())),
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for MonomialSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(i, j)| format!("{i}{j}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `t -> (diag(t^r0, t^-r0), diag(t^r1, t^-r1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OneParamSubgroup {
    pub r0: i64,
    pub r1: i64,
}

impl OneParamSubgroup {
    /// Admissible subgroups have `r1 >= r0 >= 0` and `r1 > 0`.
    pub fn new(r0: i64, r1: i64) -> Result<Self> {
        if r1 >= r0 && r0 >= 0 && r1 > 0 {
            Ok(Self { r0, r1 })
        } else {
            Err(Error::InvalidSubgroup { r0, r1 })
        }
    }

    /// Any pair of exponents, for the symmetry checks that leave the
    /// admissible range.
    pub fn raw(r0: i64, r1: i64) -> Self {
        Self { r0, r1 }
    }

    pub fn swapped(self) -> Self {
        Self {
            r0: self.r1,
            r1: self.r0,
        }
    }

    pub fn is_primitive(self) -> bool {
        self.r0.gcd(&self.r1) == 1
    }

    /// Weight of the single monomial with index `(i, j)`.
    pub fn monomial_weight(self, i: u8, j: u8) -> i64 {
        self.r0 * (2 - 2 * i64::from(i)) + self.r1 * (2 - 2 * i64::from(j))
    }
}

/// `max { r0(2-2i) + r1(2-2j) : a_ij != 0 }`.
pub fn hm_weight(s: &MonomialSupport, l: OneParamSubgroup) -> Result<i64> {
    s.0.iter()
        .map(|&(i, j)| l.monomial_weight(i, j))
        .max()
        .ok_or(Error::EmptySupport)
}

/// The same weights with `min` in place of `max`.
pub fn hm_weight_min(s: &MonomialSupport, l: OneParamSubgroup) -> Result<i64> {
    s.0.iter()
        .map(|&(i, j)| l.monomial_weight(i, j))
        .min()
        .ok_or(Error::EmptySupport)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// Negative weight: the form is unstable.
    Unstable,
    /// Zero weight: not stable, semistability undecided by this subgroup.
    NotStable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Destabilizer {
    pub lambda: OneParamSubgroup,
    pub weight: i64,
    pub certificate: Certificate,
}

/// Scans primitive admissible subgroups with `r1 <= bound`, ordered by
/// `(r1, r0)`. Returns the first negative weight, else the first zero weight.
pub fn find_destabilizer(s: &MonomialSupport, bound: i64) -> Result<Option<Destabilizer>> {
    if bound < 1 {
        return Err(Error::InvalidParameter("bound must be at least 1".into()));
    }
    if s.0.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut zero = None;
    for r1 in 1..=bound {
        for r0 in 0..=r1 {
            let lambda = OneParamSubgroup::new(r0, r1)?;
            if !lambda.is_primitive() {
                continue;
            }
            let weight = hm_weight(s, lambda)?;
            if weight < 0 {
                return Ok(Some(Destabilizer {
                    lambda,
                    weight,
                    certificate: Certificate::Unstable,
                }));
            }
            if weight == 0 && zero.is_none() {
                zero = Some(Destabilizer {
                    lambda,
                    weight,
                    certificate: Certificate::NotStable,
                });
            }
        }
    }
    Ok(zero)
}

/// The curve passes through `([1:0],[1:0])` singularly iff `a00 = a10 = a01 = 0`.
pub fn fixed_point_singularity(coeffs: &BTreeMap<(u8, u8), Rational>) -> bool {
    [(0, 0), (1, 0), (0, 1)]
        .iter()
        .all(|k| coeffs.get(k).is_none_or(Zero::is_zero))
}

/// Plane quartic GIT classification, recorded from the literature as labels.
pub const QUARTIC_CLASSES: &[(&str, &str)] = &[
    ("stable", "smooth, or only A1 or A2 singularities"),
    (
        "strictly polystable",
        "the remaining curves of the quartic double cover family",
    ),
    ("unstable", "everything else"),
];
