//! Zariski decompositions.
//!
//! Surfaces use the classical iterative algorithm, run exactly. Parametric
//! families on surfaces are split into chambers of constant negative support
//! by sampling and exact wall clipping. Threefold decompositions are supplied
//! chamber by chamber and verified here before integration.

mod polygon;
mod threefold;

pub use polygon::{Point, Polygon};
pub use threefold::{
    pseudoeffective_threshold, threefold_chamber_volume, volume_discrepancies, AffineU,
    PrintedPiece, ThreefoldChamber, ThreefoldFamily, VolumeDiscrepancy,
};

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{qserde, Affine, Rational};
use crate::Poly;

/// Curves on a surface with their full intersection matrix.
///
/// The curves may be linearly dependent; coefficient vectors are then just
/// one representative of a numerical class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceLattice {
    pub curves: Vec<String>,
    #[serde(with = "qserde::matrix")]
    pub gram: Matrix<Rational>,
}

impl SurfaceLattice {
    pub fn new(curves: Vec<String>, gram: Matrix<Rational>) -> Result<Self> {
        let n = curves.len();
        let bad = |reason: &str| Error::InvalidModel {
            model: "surface lattice".into(),
            reason: reason.into(),
        };
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(bad("gram matrix does not match the curve list"));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(bad("gram matrix is not symmetric"));
                }
            }
        }
        Ok(Self { curves, gram })
    }

    pub fn validate(self) -> Result<Self> {
        Self::new(self.curves, self.gram)
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.curves
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Coefficient vector from named coefficients.
    pub fn vector(&self, terms: &BTreeMap<String, Rational>) -> Result<Vec<Rational>> {
        let mut x = vec![Rational::zero(); self.len()];
        for (k, c) in terms {
            x[self.index(k)?] += c;
        }
        Ok(x)
    }

    pub fn dot_curve(&self, x: &[Rational], j: usize) -> Rational {
        x.iter().zip(&self.gram).map(|(c, row)| c * &row[j]).sum()
    }

    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Rational {
        (0..self.len()).map(|j| &y[j] * self.dot_curve(x, j)).sum()
    }

    pub fn square(&self, x: &[Rational]) -> Rational {
        self.pair(x, x)
    }

    /// Affine family paired with curve `j`.
    pub fn dot_curve_affine(&self, x: &[Affine], j: usize) -> Affine {
        x.iter()
            .zip(&self.gram)
            .fold(Affine::zero(), |acc, (c, row)| acc.add(&c.scale(&row[j])))
    }

    /// Self-intersection of an affine family, a quadratic polynomial.
    pub fn square_affine(&self, x: &[Affine]) -> Poly {
        let polys: Vec<Poly> = x.iter().map(Affine::to_poly).collect();
        let mut acc = Poly::zero();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if !self.gram[i][j].is_zero() && !polys[i].is_zero() && !polys[j].is_zero() {
                    acc = acc + (&polys[i] * &polys[j]).scale(&self.gram[i][j]);
                }
            }
        }
        acc
    }

    fn sub_gram(&self, s: &[usize]) -> Matrix<Rational> {
        s.iter()
            .map(|&i| s.iter().map(|&j| self.gram[i][j].clone()).collect())
            .collect()
    }

    fn names(&self, s: &[usize]) -> Vec<String> {
        s.iter().map(|&i| self.curves[i].clone()).collect()
    }

    /// Coordinates in a basis of generators `basis`, from pairings against them.
    pub fn coordinates(&self, x: &[Rational], basis: &[usize]) -> Result<Vec<Rational>> {
        let g = self.sub_gram(basis);
        if linalg::det(&g).is_zero() {
            return Err(Error::SingularBasis);
        }
        let b: Vec<Rational> = basis.iter().map(|&j| self.dot_curve(x, j)).collect();
        linalg::solve(&g, &b).ok_or(Error::SingularBasis)
    }

    /// Affine coordinates of an affine family in the basis `basis`.
    pub fn coordinates_affine(&self, x: &[Affine], basis: &[usize]) -> Result<Vec<Affine>> {
        let g = self.sub_gram(basis);
        if linalg::det(&g).is_zero() {
            return Err(Error::SingularBasis);
        }
        let b: Vec<Affine> = basis.iter().map(|&j| self.dot_curve_affine(x, j)).collect();
        solve_affine(&g, &b).ok_or(Error::SingularBasis)
    }
}

/// Solves `g x = b` componentwise for an affine right-hand side.
fn solve_affine(g: &Matrix<Rational>, b: &[Affine]) -> Option<Vec<Affine>> {
    let c0 = linalg::solve(g, &b.iter().map(|a| a.c0.clone()).collect::<Vec<_>>())?;
    let cu = linalg::solve(g, &b.iter().map(|a| a.cu.clone()).collect::<Vec<_>>())?;
    let cv = linalg::solve(g, &b.iter().map(|a| a.cv.clone()).collect::<Vec<_>>())?;
    Some(
        (0..c0.len())
            .map(|k| Affine::new(c0[k].clone(), cu[k].clone(), cv[k].clone()))
            .collect(),
    )
}

/// `D = P + N` on a surface, as coefficient vectors over the lattice curves.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceDecomposition {
    pub positive: Vec<Rational>,
    pub negative: Vec<Rational>,
    /// Curves of the negative part, in lattice order.
    pub support: Vec<usize>,
}

impl SurfaceDecomposition {
    pub fn negative_named(&self, lattice: &SurfaceLattice) -> BTreeMap<String, Rational> {
        self.support
            .iter()
            .map(|&i| (lattice.curves[i].clone(), self.negative[i].clone()))
            .collect()
    }
}

/// Negative part supported on `s` making `D - N` orthogonal to `s`.
fn negative_on(lattice: &SurfaceLattice, d: &[Rational], s: &[usize]) -> Result<Vec<Rational>> {
    let g = lattice.sub_gram(s);
    if !linalg::is_negative_definite(&g) {
        return Err(Error::NonNegativeDefiniteSupport(lattice.names(s)));
    }
    let b: Vec<Rational> = s.iter().map(|&j| lattice.dot_curve(d, j)).collect();
    let x = linalg::solve(&g, &b).ok_or_else(|| Error::NoConvergence(lattice.names(s)))?;
    let mut n = vec![Rational::zero(); lattice.len()];
    for (k, &i) in s.iter().enumerate() {
        n[i] = x[k].clone();
    }
    Ok(n)
}

/// Iterative Zariski decomposition: grow the support by every curve that the
/// current positive part meets negatively, then re-solve on the support.
pub fn surface_zariski(lattice: &SurfaceLattice, d: &[Rational]) -> Result<SurfaceDecomposition> {
    let mut support: Vec<usize> = Vec::new();
    let mut negative = vec![Rational::zero(); lattice.len()];
    for _ in 0..=lattice.len() {
        let positive: Vec<Rational> = d.iter().zip(&negative).map(|(a, b)| a - b).collect();
        let new: Vec<usize> = (0..lattice.len())
            .filter(|j| !support.contains(j) && lattice.dot_curve(&positive, *j).is_negative())
            .collect();
        if new.is_empty() {
            if negative.iter().any(|c| c.is_negative()) {
                return Err(Error::NegativePart {
                    chamber: "surface".into(),
                    detail: format!("{negative:?}"),
                });
            }
            return Ok(SurfaceDecomposition {
                positive,
                negative,
                support,
            });
        }
        support.extend(new);
        support.sort();
        negative = negative_on(lattice, d, &support)?;
    }
    Err(Error::NoConvergence(lattice.names(&support)))
}

/// One convex piece of parameter space with constant negative support.
#[derive(Debug, Clone, PartialEq)]
pub struct ChamberPiece {
    pub polygon: Polygon,
    pub support: Vec<usize>,
    pub positive: Vec<Affine>,
    pub negative: Vec<Affine>,
}

/// Chamber decomposition of an affine family over a convex region.
#[derive(Debug, Clone, PartialEq)]
pub struct ChamberDecomposition {
    pub pieces: Vec<ChamberPiece>,
}

impl ChamberDecomposition {
    /// Distinct negative supports met on a region of positive area.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = self.pieces.iter().map(|p| p.support.clone()).collect();
        s.sort();
        s.dedup();
        s
    }

    pub fn chamber_count(&self) -> usize {
        self.supports().len()
    }

    pub fn area(&self) -> Rational {
        self.pieces.iter().map(|p| p.polygon.area()).sum()
    }

    /// Sum over pieces of the integral of `f(piece)`.
    pub fn integrate<F: Fn(&ChamberPiece) -> Poly>(&self, f: F) -> Result<Rational> {
        let mut acc = Rational::zero();
        for p in &self.pieces {
            acc += p.polygon.integrate(&f(p))?;
        }
        Ok(acc)
    }
}

fn eval_family(family: &[Affine], p: &Point) -> Vec<Rational> {
    family.iter().map(|a| a.eval(&p.0, &p.1)).collect()
}

/// Negative and positive parts on support `s` as affine forms, with the
/// half-planes cutting out the closed chamber of that support.
fn chamber_forms(
    lattice: &SurfaceLattice,
    family: &[Affine],
    s: &[usize],
) -> Result<(Vec<Affine>, Vec<Affine>, Vec<Affine>)> {
    let mut negative = vec![Affine::zero(); lattice.len()];
    if !s.is_empty() {
        let g = lattice.sub_gram(s);
        let b: Vec<Affine> = s
            .iter()
            .map(|&j| lattice.dot_curve_affine(family, j))
            .collect();
        let x = solve_affine(&g, &b).ok_or_else(|| Error::NoConvergence(lattice.names(s)))?;
        for (k, &i) in s.iter().enumerate() {
            negative[i] = x[k].clone();
        }
    }
    let positive: Vec<Affine> = family
        .iter()
        .zip(&negative)
        .map(|(a, b)| a.sub(b))
        .collect();
    let mut walls: Vec<Affine> = s.iter().map(|&i| negative[i].clone()).collect();
    for j in 0..lattice.len() {
        if !s.contains(&j) {
            walls.push(lattice.dot_curve_affine(&positive, j));
        }
    }
    walls.retain(|w| !w.is_zero());
    Ok((positive, negative, walls))
}

/// Splits `region` into convex pieces of constant negative support.
///
/// Each recursion samples an interior point, builds the exact chamber of the
/// support found there, keeps its intersection with the current cell and
/// recurses on the convex remainders. Chambers along one recursion path are
/// distinct, so the depth is bounded by the number of chambers.
pub fn parametric_surface_zariski(
    lattice: &SurfaceLattice,
    family: &[Affine],
    region: &Polygon,
) -> Result<ChamberDecomposition> {
    if family.len() != lattice.len() {
        return Err(Error::InvalidParameter(
            "family length differs from the lattice".into(),
        ));
    }
    let mut pieces = Vec::new();
    explore(lattice, family, region, 0, &mut pieces)?;
    let out = ChamberDecomposition { pieces };
    if out.area() != region.area() {
        return Err(Error::ChamberCover(format!(
            "pieces cover {} of {}",
            out.area(),
            region.area()
        )));
    }
    Ok(out)
}

fn explore(
    lattice: &SurfaceLattice,
    family: &[Affine],
    cell: &Polygon,
    depth: usize,
    out: &mut Vec<ChamberPiece>,
) -> Result<()> {
    if cell.is_degenerate() {
        return Ok(());
    }
    if depth > 4 * lattice.len() + 8 {
        return Err(Error::ChamberCover(
            "chamber recursion did not terminate".into(),
        ));
    }
    let centre = cell.interior_point();
    let mut samples = vec![centre.clone()];
    samples.extend(cell.vertices.iter().map(|v| midpoint(&centre, v)));
    for sample in samples {
        let dec = surface_zariski(lattice, &eval_family(family, &sample))?;
        let (positive, negative, walls) = chamber_forms(lattice, family, &dec.support)?;
        let inside = walls.iter().fold(cell.clone(), |p, w| p.clip(w));
        if inside.is_degenerate() {
            continue;
        }
        out.push(ChamberPiece {
            polygon: inside,
            support: dec.support.clone(),
            positive,
            negative,
        });
        let mut rest = cell.clone();
        for w in &walls {
            let outside = rest.clip(&w.scale(&-Rational::from_integer(1.into())));
            explore(lattice, family, &outside, depth + 1, out)?;
            rest = rest.clip(w);
        }
        return Ok(());
    }
    Err(Error::ChamberCover(
        "no sample point found a full-dimensional chamber".into(),
    ))
}

fn midpoint(a: &Point, b: &Point) -> Point {
    let two = Rational::from_integer(2.into());
    ((&a.0 + &b.0) / &two, (&a.1 + &b.1) / two)
}

/// Region `{u in [u0,u1], v >= 0, D(u) - v*class pseudoeffective}` for a
/// simplicial effective cone with generators `basis`.
pub fn pseudoeffective_region(
    lattice: &SurfaceLattice,
    family: &[Affine],
    basis: &[usize],
    u: &crate::exact::Interval,
) -> Result<Polygon> {
    let coords = lattice.coordinates_affine(family, basis)?;
    let mut vmax: Option<Rational> = None;
    for c in &coords {
        if c.cv.is_negative() {
            let at = |x: &Rational| (&c.c0 + &c.cu * x) / -&c.cv;
            let hi = std::cmp::max(at(&u.lo), at(&u.hi));
            vmax = Some(match vmax {
                Some(m) if m < hi => m,
                _ => hi,
            });
        }
    }
    let vmax = vmax.ok_or(Error::Unbounded)?;
    if vmax.is_negative() {
        return Ok(Polygon {
            vertices: Vec::new(),
        });
    }
    let zero = Rational::zero();
    let mut poly = Polygon::rectangle(u, &crate::exact::Interval::new(zero, vmax)?);
    for c in &coords {
        poly = poly.clip(c);
    }
    Ok(poly)
}
