use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::qserde::Q;
use super::{fmt_rational, Interval, Rational, Scalar};
use crate::error::{Error, Result};

/// Polynomial in the outer variable `u` and the inner variable `v`.
///
/// Terms are keyed by `(exp_u, exp_v)`; zero coefficients are never stored,
/// so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T = Rational> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The outer variable.
    pub fn u() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    /// The inner variable.
    pub fn v() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    pub fn monomial(c: T, eu: u32, ev: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, eu, ev);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (T, u32, u32)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, eu, ev) in terms {
            p.add_term(c, eu, ev);
        }
        p
    }

    /// Univariate polynomial in `u` from ascending coefficients.
    pub fn from_coeffs_u(coeffs: &[T]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (c.clone(), k as u32, 0)),
        )
    }

    fn add_term(&mut self, c: T, eu: u32, ev: u32) {
        if c.is_zero() {
            return;
        }
        let key = (eu, ev);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(coeff, exp_u, exp_v)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&T, u32, u32)> {
        self.terms.iter().map(|(&(eu, ev), c)| (c, eu, ev))
    }

    pub fn coeff(&self, eu: u32, ev: u32) -> T {
        self.terms.get(&(eu, ev)).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree; zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn degree_u(&self) -> u32 {
        self.terms.keys().map(|(a, _)| *a).max().unwrap_or(0)
    }

    pub fn degree_v(&self) -> u32 {
        self.terms.keys().map(|(_, b)| *b).max().unwrap_or(0)
    }

    pub fn uses_u(&self) -> bool {
        self.terms.keys().any(|(a, _)| *a > 0)
    }

    pub fn uses_v(&self) -> bool {
        self.terms.keys().any(|(_, b)| *b > 0)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(x, eu, ev)| (x.clone() * c.clone(), eu, ev)),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, u: &T, v: &T) -> T {
        let mut acc = T::zero();
        for (c, eu, ev) in self.terms() {
            acc = acc + c.clone() * ipow(u, eu) * ipow(v, ev);
        }
        acc
    }

    /// Value of a polynomial that does not involve `v`.
    pub fn eval_u(&self, u: &T) -> T {
        self.eval(u, &T::zero())
    }

    /// Substitutes `v := g`, where `g` is a polynomial in `u` only.
    pub fn substitute_v(&self, g: &Self) -> Self {
        let mut out = Self::zero();
        for (c, eu, ev) in self.terms() {
            out = out + Self::monomial(c.clone(), eu, 0) * g.pow(ev);
        }
        out
    }

    /// Exchanges the roles of `u` and `v`.
    pub fn swap_variables(&self) -> Self {
        Self::from_terms(self.terms().map(|(c, eu, ev)| (c.clone(), ev, eu)))
    }

    /// Antiderivative with respect to `v` vanishing at `v = 0`.
    pub fn antiderivative_v(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(c, eu, ev)| (c.clone() / from_u32::<T>(ev + 1), eu, ev + 1)),
        )
    }

    /// Antiderivative with respect to `u` vanishing at `u = 0`.
    pub fn antiderivative_u(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(c, eu, ev)| (c.clone() / from_u32::<T>(eu + 1), eu + 1, ev)),
        )
    }

    pub fn derivative_u(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(_, eu, _)| *eu > 0)
                .map(|(c, eu, ev)| (c.clone() * from_u32::<T>(eu), eu - 1, ev)),
        )
    }

    pub fn derivative_v(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(_, _, ev)| *ev > 0)
                .map(|(c, eu, ev)| (c.clone() * from_u32::<T>(ev), eu, ev - 1)),
        )
    }
}

fn from_u32<T: Scalar>(k: u32) -> T {
    T::from_u32(k).expect("small integers are representable")
}

fn ipow<T: Scalar>(x: &T, k: u32) -> T {
    let mut acc = T::one();
    for _ in 0..k {
        acc = acc * x.clone();
    }
    acc
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let mut out = self.clone();
        for (c, eu, ev) in rhs.terms() {
            out.add_term(c.clone(), eu, ev);
        }
        out
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let mut out = self.clone();
        for (c, eu, ev) in rhs.terms() {
            out.add_term(-c.clone(), eu, ev);
        }
        out
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_terms(self.terms().map(|(c, eu, ev)| (-c.clone(), eu, ev)))
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        let mut out = Polynomial::zero();
        for (a, au, av) in self.terms() {
            for (b, bu, bv) in rhs.terms() {
                out.add_term(a.clone() * b.clone(), au + bu, av + bv);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, eu, ev) in self.terms.iter().rev().map(|(&(a, b), c)| (c, a, b)) {
            let neg = c < &Rational::from_integer(0.into());
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match (eu, ev) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = Vec::new();
                    if eu == 1 {
                        s.push("u".to_string());
                    } else if eu > 1 {
                        s.push(format!("u^{eu}"));
                    }
                    if ev == 1 {
                        s.push("v".to_string());
                    } else if ev > 1 {
                        s.push(format!("v^{ev}"));
                    }
                    s.join("*")
                }
            };
            let one = Rational::from_integer(1.into());
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag == one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term(Q, u32, u32);
        self.terms()
            .map(|(c, eu, ev)| Term(Q(c.clone()), eu, ev))
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term(Q, u32, u32);
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(Self::from_terms(
            terms.into_iter().map(|Term(c, eu, ev)| (c.0, eu, ev)),
        ))
    }
}

/// Affine form `c0 + cu*u + cv*v`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Affine<T = Rational> {
    pub c0: T,
    pub cu: T,
    pub cv: T,
}

impl<T: Scalar> Affine<T> {
    pub fn new(c0: T, cu: T, cv: T) -> Self {
        Self { c0, cu, cv }
    }

    pub fn constant(c0: T) -> Self {
        Self::new(c0, T::zero(), T::zero())
    }

    /// Affine in the outer variable only.
    pub fn in_u(c0: T, cu: T) -> Self {
        Self::new(c0, cu, T::zero())
    }

    pub fn zero() -> Self {
        Self::constant(T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.cu.is_zero() && self.cv.is_zero()
    }

    pub fn eval(&self, u: &T, v: &T) -> T {
        self.c0.clone() + self.cu.clone() * u.clone() + self.cv.clone() * v.clone()
    }

    pub fn to_poly(&self) -> Polynomial<T> {
        Polynomial::from_terms([
            (self.c0.clone(), 0, 0),
            (self.cu.clone(), 1, 0),
            (self.cv.clone(), 0, 1),
        ])
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.c0.clone() + o.c0.clone(),
            self.cu.clone() + o.cu.clone(),
            self.cv.clone() + o.cv.clone(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(
            self.c0.clone() * c.clone(),
            self.cu.clone() * c.clone(),
            self.cv.clone() * c.clone(),
        )
    }
}

/// Exact integral of a univariate polynomial over `range`.
///
/// The polynomial may be written in either variable but not both.
pub fn definite_integral<T: Scalar>(p: &Polynomial<T>, range: &Interval<T>) -> Result<T> {
    let q = match (p.uses_u(), p.uses_v()) {
        (true, true) => return Err(Error::NotUnivariate(format!("{p:?}"))),
        (false, true) => p.swap_variables(),
        _ => p.clone(),
    };
    let a = q.antiderivative_u();
    Ok(a.eval_u(&range.hi) - a.eval_u(&range.lo))
}

/// Iterated integral `int_outer int_{lo(u)}^{hi(u)} f dv du`, inner `v` first.
///
/// Bounds must be affine in `u`; they may touch but not cross on `outer`.
pub fn double_integral<T: Scalar>(
    f: &Polynomial<T>,
    inner: (&Affine<T>, &Affine<T>),
    outer: &Interval<T>,
) -> Result<T> {
    let (lo, hi) = inner;
    if !lo.cv.is_zero() || !hi.cv.is_zero() {
        return Err(Error::BoundUsesInnerVariable);
    }
    let gap = hi.sub(lo);
    let z = T::zero();
    if gap.eval(&outer.lo, &z) < z || gap.eval(&outer.hi, &z) < z {
        return Err(Error::InvertedBounds {
            lo: format!("{:?}", outer.lo),
            hi: format!("{:?}", outer.hi),
        });
    }
    let anti = f.antiderivative_v();
    let g = anti.substitute_v(&hi.to_poly()) - anti.substitute_v(&lo.to_poly());
    definite_integral(&g, outer)
}
