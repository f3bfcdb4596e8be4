//! Serde adapters that render rationals as `"p/q"` strings.
//!
//! Deserialization also accepts bare JSON integers so hand-written fixtures
//! can write `3` instead of `"3"`.

use std::collections::BTreeMap;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::{fmt_rational, parse_rational, Rational};

/// Wire form of one rational.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawQ {
    Int(i64),
    Str(String),
}

impl RawQ {
    pub fn to_rational<E: de::Error>(&self) -> Result<Rational, E> {
        match self {
            RawQ::Int(n) => Ok(super::qi(*n)),
            RawQ::Str(s) => parse_rational(s).map_err(E::custom),
        }
    }
}

/// Newtype used inside containers that need a serde-aware rational.
#[derive(Debug, Clone, PartialEq, PartialOrd)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        RawQ::deserialize(d)?.to_rational().map(Q)
    }
}

pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(x))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    RawQ::deserialize(d)?.to_rational()
}

pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref().map(|r| Q(r.clone())).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Ok(Option::<Q>::deserialize(d)?.map(|q| q.0))
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(|r| Q(r.clone()))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Ok(Vec::<Q>::deserialize(d)?.into_iter().map(|q| q.0).collect())
    }
}

pub mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(|row| row.iter().map(|r| Q(r.clone())).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        Ok(Vec::<Vec<Q>>::deserialize(d)?
            .into_iter()
            .map(|row| row.into_iter().map(|q| q.0).collect())
            .collect())
    }
}

pub mod map {
    use super::*;

    pub fn serialize<S: Serializer>(
        x: &BTreeMap<String, Rational>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(|(k, v)| (k.clone(), Q(v.clone())))
            .collect::<BTreeMap<_, _>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<String, Rational>, D::Error> {
        Ok(BTreeMap::<String, Q>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| (k, v.0))
            .collect())
    }
}

/// `Interval` as `["lo", "hi"]`, validated on read.
pub mod interval {
    use super::*;
    use crate::exact::Interval;

    pub fn serialize<S: Serializer>(x: &Interval, s: S) -> Result<S::Ok, S::Error> {
        [Q(x.lo.clone()), Q(x.hi.clone())].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Interval, D::Error> {
        let [lo, hi] = <[Q; 2]>::deserialize(d)?;
        Interval::new(lo.0, hi.0).map_err(de::Error::custom)
    }
}
