//! Exact arithmetic substrate: rationals, two-variable polynomials,
//! piecewise functions, iterated integrals and interpolation.
//!
//! Polynomials and the integration routines are generic over [`Scalar`] so
//! that the same code runs on `f64` for quick experiments, but every
//! computation in this crate instantiates them with [`Rational`].

mod interp;
pub mod linalg;
mod piecewise;
mod poly;
pub mod qserde;

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

use crate::error::{Error, Result};

pub use interp::interpolate;
pub use piecewise::{piecewise_integral, ContinuityGap, Piece, PiecewisePolynomial};
pub use poly::{definite_integral, double_integral, Affine, Polynomial};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = BigRational;

/// Field-like scalar accepted by the generic polynomial layer.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + Debug + Num + Neg<Output = Self> + FromPrimitive
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + PartialOrd + Debug + Num + Neg<Output = T> + FromPrimitive
{
}

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or a decimal integer with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::ParseRational(s.to_string()))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::ParseRational(s.to_string()))?;
    if d.is_zero() {
        return Err(Error::ParseRational(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Integer power with a possibly zero base.
pub fn rpow(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Minimum of a nonempty slice of rationals.
pub fn rmin(xs: &[Rational]) -> Option<Rational> {
    xs.iter().cloned().reduce(|a, b| if b < a { b } else { a })
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval<T = Rational> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: format!("{lo:?}"),
                hi: format!("{hi:?}"),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn contains(&self, x: &T) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        (self.lo.clone() + self.hi.clone()) / T::from_i64(2).expect("2 is representable")
    }
}

impl Interval<Rational> {
    pub fn parse(lo: &str, hi: &str) -> Result<Self> {
        Self::new(parse_rational(lo)?, parse_rational(hi)?)
    }
}

impl std::fmt::Display for Interval<Rational> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}, {}]",
            fmt_rational(&self.lo),
            fmt_rational(&self.hi)
        )
    }
}
