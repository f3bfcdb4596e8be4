use super::{definite_integral, double_integral, Affine, Interval, Polynomial, Rational, Scalar};
use crate::error::{Error, Result};

/// One piece: a polynomial over an interval of `u`, optionally integrated
/// over `v` between two affine bounds as well.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece<T = Rational> {
    pub interval: Interval<T>,
    pub poly: Polynomial<T>,
    pub inner: Option<(Affine<T>, Affine<T>)>,
}

impl<T: Scalar> Piece<T> {
    pub fn new(interval: Interval<T>, poly: Polynomial<T>) -> Self {
        Self {
            interval,
            poly,
            inner: None,
        }
    }

    pub fn with_inner(
        interval: Interval<T>,
        poly: Polynomial<T>,
        lo: Affine<T>,
        hi: Affine<T>,
    ) -> Self {
        Self {
            interval,
            poly,
            inner: Some((lo, hi)),
        }
    }

    pub fn integral(&self) -> Result<T> {
        match &self.inner {
            None => definite_integral(&self.poly, &self.interval),
            Some((lo, hi)) => double_integral(&self.poly, (lo, hi), &self.interval),
        }
    }
}

/// Value mismatch between neighbouring pieces at a shared endpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuityGap<T = Rational> {
    pub at: T,
    pub left: T,
    pub right: T,
}

/// Pieces sorted by left endpoint. Continuity is reported, never assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePolynomial<T = Rational> {
    pieces: Vec<Piece<T>>,
}

impl<T: Scalar> Default for PiecewisePolynomial<T> {
    fn default() -> Self {
        Self { pieces: Vec::new() }
    }
}

impl<T: Scalar> PiecewisePolynomial<T> {
    pub fn new(mut pieces: Vec<Piece<T>>) -> Result<Self> {
        pieces.sort_by(|a, b| {
            a.interval
                .lo
                .partial_cmp(&b.interval.lo)
                .expect("scalars are ordered")
        });
        for w in pieces.windows(2) {
            if w[1].interval.lo < w[0].interval.hi {
                return Err(Error::OverlappingPieces {
                    first: format!("{:?}", w[0].interval),
                    second: format!("{:?}", w[1].interval),
                });
            }
        }
        Ok(Self { pieces })
    }

    /// Univariate pieces from `(interval, polynomial)` pairs.
    pub fn from_pairs(pairs: Vec<(Interval<T>, Polynomial<T>)>) -> Result<Self> {
        Self::new(pairs.into_iter().map(|(i, p)| Piece::new(i, p)).collect())
    }

    pub fn pieces(&self) -> &[Piece<T>] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn integral(&self) -> Result<T> {
        let mut acc = T::zero();
        for p in &self.pieces {
            acc = acc + p.integral()?;
        }
        Ok(acc)
    }

    /// Value at `u` using the first piece whose closed interval contains it.
    pub fn eval(&self, u: &T) -> Option<T> {
        self.pieces
            .iter()
            .find(|p| p.interval.contains(u))
            .map(|p| p.poly.eval_u(u))
    }

    /// Jumps between univariate neighbours sharing an endpoint.
    pub fn continuity_gaps(&self) -> Vec<ContinuityGap<T>> {
        let mut out = Vec::new();
        for w in self.pieces.windows(2) {
            if w[0].inner.is_some() || w[1].inner.is_some() || w[0].interval.hi != w[1].interval.lo
            {
                continue;
            }
            let at = w[0].interval.hi.clone();
            let left = w[0].poly.eval_u(&at);
            let right = w[1].poly.eval_u(&at);
            if left != right {
                out.push(ContinuityGap { at, left, right });
            }
        }
        out
    }
}

/// Sum of the piece integrals; rejects overlapping interiors.
pub fn piecewise_integral<T: Scalar>(pieces: &[Piece<T>]) -> Result<T> {
    PiecewisePolynomial::new(pieces.to_vec())?.integral()
}
