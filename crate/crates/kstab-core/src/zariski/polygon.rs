//! Exact convex polygons in the `(u, v)` parameter plane.

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::exact::{double_integral, Affine, Interval, Rational};
use crate::{qi, Poly};

pub type Point = (Rational, Rational);

/// Convex polygon, vertices counter-clockwise. May be degenerate after clipping.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    pub vertices: Vec<Point>,
}

impl Polygon {
    pub fn rectangle(u: &Interval, v: &Interval) -> Self {
        Self {
            vertices: vec![
                (u.lo.clone(), v.lo.clone()),
                (u.hi.clone(), v.lo.clone()),
                (u.hi.clone(), v.hi.clone()),
                (u.lo.clone(), v.hi.clone()),
            ],
        }
    }

    /// Part where `h >= 0`.
    pub fn clip(&self, h: &Affine) -> Self {
        let n = self.vertices.len();
        let mut out: Vec<Point> = Vec::new();
        for k in 0..n {
            let p = &self.vertices[k];
            let q = &self.vertices[(k + 1) % n];
            let (hp, hq) = (h.eval(&p.0, &p.1), h.eval(&q.0, &q.1));
            if !hp.is_negative() {
                push_distinct(&mut out, p.clone());
            }
            if (hp.is_positive() && hq.is_negative()) || (hp.is_negative() && hq.is_positive()) {
                let t = &hp / (&hp - &hq);
                let x = (&p.0 + &t * (&q.0 - &p.0), &p.1 + &t * (&q.1 - &p.1));
                push_distinct(&mut out, x);
            }
        }
        if out.len() > 1 && out.first() == out.last() {
            out.pop();
        }
        Self { vertices: out }
    }

    pub fn area(&self) -> Rational {
        let n = self.vertices.len();
        let mut s = Rational::zero();
        for k in 0..n {
            let (a, b) = (&self.vertices[k], &self.vertices[(k + 1) % n]);
            s += &a.0 * &b.1 - &b.0 * &a.1;
        }
        s / qi(2)
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3 || self.area().is_zero()
    }

    /// Vertex average, an interior point of a nondegenerate convex polygon.
    pub fn interior_point(&self) -> Point {
        let n = qi(self.vertices.len() as i64);
        let su: Rational = self.vertices.iter().map(|p| p.0.clone()).sum();
        let sv: Rational = self.vertices.iter().map(|p| p.1.clone()).sum();
        (su / &n, sv / n)
    }

    /// Integral of `f` over the polygon, inner variable `v`.
    pub fn integrate(&self, f: &Poly) -> Result<Rational> {
        if self.is_degenerate() {
            return Ok(Rational::zero());
        }
        let mut xs: Vec<Rational> = self.vertices.iter().map(|p| p.0.clone()).collect();
        xs.sort();
        xs.dedup();
        let n = self.vertices.len();
        let mut acc = Rational::zero();
        for w in xs.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let mid = (a + b) / qi(2);
            let mut edges: Vec<(Rational, Affine)> = Vec::new();
            for k in 0..n {
                let (p, q) = (&self.vertices[k], &self.vertices[(k + 1) % n]);
                let (lo, hi) = if p.0 <= q.0 { (p, q) } else { (q, p) };
                if lo.0 <= *a && hi.0 >= *b && lo.0 != hi.0 {
                    let slope = (&hi.1 - &lo.1) / (&hi.0 - &lo.0);
                    let line = Affine::in_u(&lo.1 - &slope * &lo.0, slope);
                    edges.push((line.eval(&mid, &Rational::zero()), line));
                }
            }
            let lower = edges
                .iter()
                .min_by(|x, y| x.0.cmp(&y.0))
                .map(|e| e.1.clone());
            let upper = edges
                .iter()
                .max_by(|x, y| x.0.cmp(&y.0))
                .map(|e| e.1.clone());
            if let (Some(lo), Some(hi)) = (lower, upper) {
                acc += double_integral(f, (&lo, &hi), &Interval::new(a.clone(), b.clone())?)?;
            }
        }
        Ok(acc)
    }
}

fn push_distinct(out: &mut Vec<Point>, p: Point) {
    if out.last() != Some(&p) {
        out.push(p);
    }
}
