//! Simplicial toric models: boundary-divisor intersection numbers, curve
//! pairings, nef and effectivity tests, and polytope barycenters.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{fmt_rational, qi, qserde, Rational};

/// Formal combination of boundary divisors `sum a_i F_i`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DivisorClass(pub BTreeMap<usize, Rational>);

impl DivisorClass {
    pub fn zero() -> Self {
        Self(BTreeMap::new())
    }

    /// The boundary divisor `F_i`.
    pub fn ray(i: usize) -> Self {
        Self::from_pairs([(i, qi(1))])
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut d = Self::zero();
        for (i, c) in pairs {
            d.add_term(i, c);
        }
        d
    }

    fn add_term(&mut self, i: usize, c: Rational) {
        let s = self.0.remove(&i).unwrap_or_else(Rational::zero) + c;
        if !s.is_zero() {
            self.0.insert(i, s);
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut d = self.clone();
        for (&i, c) in &o.0 {
            d.add_term(i, c.clone());
        }
        d
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_pairs(self.0.iter().map(|(&i, x)| (i, x * c)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&qi(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Curve class recorded through its pairings `C . F_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveClass {
    pub name: String,
    pub pairing: BTreeMap<usize, Rational>,
}

/// Bilinear pairing of a curve with a divisor.
pub fn pair_curve_divisor(curve: &CurveClass, d: &DivisorClass) -> Rational {
    d.0.iter()
        .map(|(i, a)| a * curve.pairing.get(i).cloned().unwrap_or_else(Rational::zero))
        .sum()
}

/// Fixture form of a curve: either the torus-invariant curve `F_i . F_j`
/// (pairings derived from the fan) or explicit pairings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<usize>>,
    #[serde(
        default,
        skip_serializing_if = "BTreeMap::is_empty",
        with = "qserde::map"
    )]
    pub pairing: BTreeMap<String, Rational>,
}

/// One printed intersection number used as a regression anchor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrintedEntry {
    pub factors: Vec<String>,
    #[serde(with = "qserde")]
    pub value: Rational,
}

/// A printed value that disagrees with the fan, with the value the fan forces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Erratum {
    /// `C.F` for a curve pairing, or the factors joined by `*` for a product.
    pub entry: String,
    #[serde(with = "qserde")]
    pub printed: Rational,
    #[serde(with = "qserde")]
    pub corrected: Rational,
    pub reason: String,
}

/// Fixture document for one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToricModelSpec {
    pub name: String,
    #[serde(default)]
    pub citation: String,
    pub rays: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_cones: Option<Vec<Vec<usize>>>,
    /// Primary components of the irrelevant ideal, i.e. the primitive collections.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irrelevant_ideal: Option<Vec<Vec<usize>>>,
    /// Rows of the weight matrix; column `i` is the degree of `F_i`.
    pub grading: Vec<Vec<i64>>,
    #[serde(default)]
    pub divisors: BTreeMap<String, BTreeMap<String, qserde::Q>>,
    #[serde(default)]
    pub curves: BTreeMap<String, CurveSpec>,
    #[serde(default)]
    pub mori_generators: Vec<String>,
    #[serde(default)]
    pub effective_generators: Vec<String>,
    #[serde(default)]
    pub printed_products: Vec<PrintedEntry>,
    #[serde(default)]
    pub printed_curves: BTreeMap<String, BTreeMap<String, qserde::Q>>,
    #[serde(default)]
    pub errata: Vec<Erratum>,
}

/// Validated model with its full intersection tensor.
#[derive(Debug, Clone)]
pub struct ToricModel {
    pub spec: ToricModelSpec,
    pub dim: usize,
    cones: Vec<Vec<usize>>,
    tensor: BTreeMap<Vec<usize>, Rational>,
}

impl ToricModel {
    pub fn new(spec: ToricModelSpec) -> Result<Self> {
        let bad = |reason: String| Error::InvalidModel {
            model: spec.name.clone(),
            reason,
        };
        let n = spec.rays.len();
        let dim = spec.rays.first().map_or(0, |r| r.len());
        if n == 0 || spec.rays.iter().any(|r| r.len() != dim) {
            return Err(bad("rays must be nonempty and of equal length".into()));
        }
        let cones = match (&spec.max_cones, &spec.irrelevant_ideal) {
            (Some(c), _) => c.iter().map(|c| sorted(c)).collect(),
            (None, Some(ideal)) => cones_from_irrelevant_ideal(n, dim, ideal),
            (None, None) => {
                return Err(bad(
                    "either max_cones or irrelevant_ideal is required".into()
                ))
            }
        };
        for c in &cones {
            if c.len() != dim || c.iter().any(|&i| i >= n) {
                return Err(bad(format!("cone {c:?} is malformed")));
            }
            if ray_det(&spec.rays, c).is_zero() {
                return Err(bad(format!("cone {c:?} has dependent rays")));
            }
        }
        if spec.grading.iter().any(|row| row.len() < n) {
            return Err(bad("grading has fewer columns than rays".into()));
        }
        for (r, row) in spec.grading.iter().enumerate() {
            for k in 0..dim {
                let s: i64 = (0..n).map(|i| row[i] * spec.rays[i][k]).sum();
                if s != 0 {
                    return Err(bad(format!(
                        "grading row {r} is not a relation among the rays"
                    )));
                }
            }
        }
        let g: Matrix<Rational> = spec
            .grading
            .iter()
            .map(|row| row[..n].iter().map(|&x| qi(x)).collect())
            .collect();
        if linalg::rank(&g) != n - dim {
            return Err(bad("grading rank differs from #rays - dim".into()));
        }
        let mut model = Self {
            spec,
            dim,
            cones,
            tensor: BTreeMap::new(),
        };
        let mut tensor = BTreeMap::new();
        for mono in multisets(n, dim) {
            let v = model.monomial(&mono)?;
            tensor.insert(mono, v);
        }
        model.tensor = tensor;
        Ok(model)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: ToricModelSpec = serde_json::from_str(text).map_err(|e| Error::Fixture {
            name: "toric model".into(),
            reason: e.to_string(),
        })?;
        Self::new(spec)
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn n_rays(&self) -> usize {
        self.spec.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n_rays() {
            return Err(Error::IndexOutOfRange {
                model: self.name().to_string(),
                index: i,
                len: self.n_rays(),
            });
        }
        Ok(())
    }

    fn in_common_cone(&self, idx: &[usize]) -> bool {
        self.cones.iter().any(|c| idx.iter().all(|i| c.contains(i)))
    }

    /// Degree of `F_i`: column `i` of the grading.
    pub fn degree_of_ray(&self, i: usize) -> Vec<Rational> {
        self.spec.grading.iter().map(|row| qi(row[i])).collect()
    }

    pub fn degree(&self, d: &DivisorClass) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.spec.grading.len()];
        for (&i, a) in &d.0 {
            for (o, g) in out.iter_mut().zip(self.degree_of_ray(i)) {
                *o += a * g;
            }
        }
        out
    }

    /// Product of `dim` pairwise distinct boundary divisors.
    pub fn distinct_product(&self, idx: &[usize]) -> Result<Rational> {
        for &i in idx {
            self.check_index(i)?;
        }
        let s = sorted(idx);
        if s.len() != self.dim || s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidModel {
                model: self.name().into(),
                reason: format!("{idx:?} is not {} distinct indices", self.dim),
            });
        }
        if !self.in_common_cone(&s) {
            return Ok(Rational::zero());
        }
        Ok(Rational::one() / ray_det(&self.spec.rays, &s).abs())
    }

    /// Intersection number of a multiset of boundary divisors.
    fn monomial(&self, mono: &[usize]) -> Result<Rational> {
        let mut distinct = mono.to_vec();
        distinct.dedup();
        if !self.in_common_cone(&distinct) {
            return Ok(Rational::zero());
        }
        if distinct.len() == self.dim {
            return self.distinct_product(mono);
        }
        let r = mono
            .windows(2)
            .find(|w| w[0] == w[1])
            .map(|w| w[0])
            .expect("a repeated index exists");
        let rep = self.equivalent_away_from(r, &distinct)?;
        let mut acc = Rational::zero();
        let pos = mono.iter().position(|&x| x == r).expect("r occurs");
        for (k, c) in rep.0 {
            let mut next = mono.to_vec();
            next[pos] = k;
            next.sort();
            acc += c * self.monomial(&next)?;
        }
        Ok(acc)
    }

    /// A divisor of the same degree as `F_r` supported off `avoid`.
    ///
    /// Free variables of the exact solve are set to zero, which keeps the
    /// support small and the choice deterministic.
    pub fn equivalent_away_from(&self, r: usize, avoid: &[usize]) -> Result<DivisorClass> {
        let cols: Vec<usize> = (0..self.n_rays()).filter(|k| !avoid.contains(k)).collect();
        let a: Matrix<Rational> = self
            .spec
            .grading
            .iter()
            .map(|row| cols.iter().map(|&k| qi(row[k])).collect())
            .collect();
        let b = self.degree_of_ray(r);
        let x = linalg::solve(&a, &b).ok_or_else(|| Error::NoEquivalentRepresentative {
            model: self.name().into(),
            ray: r,
            avoid: avoid.to_vec(),
        })?;
        Ok(DivisorClass::from_pairs(cols.into_iter().zip(x)))
    }

    /// Multilinear intersection product of `dim` divisor classes.
    pub fn intersection_product(&self, ds: &[&DivisorClass]) -> Result<Rational> {
        if ds.len() != self.dim {
            return Err(Error::InvalidModel {
                model: self.name().into(),
                reason: format!("need {} divisors, got {}", self.dim, ds.len()),
            });
        }
        for d in ds {
            for &i in d.0.keys() {
                self.check_index(i)?;
            }
        }
        let mut acc = Rational::zero();
        let mut stack: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), Rational::one())];
        for d in ds {
            let mut next = Vec::new();
            for (idx, c) in &stack {
                for (&i, a) in &d.0 {
                    let mut m = idx.clone();
                    m.push(i);
                    next.push((m, c * a));
                }
            }
            stack = next;
        }
        for (mut idx, c) in stack {
            idx.sort();
            acc += c * &self.tensor[&idx];
        }
        Ok(acc)
    }

    /// `D^dim`.
    pub fn self_power(&self, d: &DivisorClass) -> Result<Rational> {
        self.intersection_product(&vec![d; self.dim])
    }

    /// Resolves a divisor alias (`F3`, or a fixture-declared name).
    pub fn divisor(&self, name: &str) -> Result<DivisorClass> {
        if let Some(map) = self.spec.divisors.get(name) {
            let mut d = DivisorClass::zero();
            for (k, c) in map {
                d = d.add(&self.divisor(k)?.scale(&c.0));
            }
            return Ok(d);
        }
        let i = name
            .strip_prefix('F')
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        self.check_index(i)?;
        Ok(DivisorClass::ray(i))
    }

    /// Linear combination of named divisors.
    pub fn combination(&self, terms: &BTreeMap<String, Rational>) -> Result<DivisorClass> {
        let mut d = DivisorClass::zero();
        for (k, c) in terms {
            d = d.add(&self.divisor(k)?.scale(c));
        }
        Ok(d)
    }

    /// Curve class by fixture name, pairings derived from the fan when the
    /// curve is given as `F_i . F_j`.
    pub fn curve(&self, name: &str) -> Result<CurveClass> {
        let spec = self
            .spec
            .curves
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        let mut pairing = BTreeMap::new();
        if let Some(rays) = &spec.rays {
            let base: Vec<DivisorClass> = rays.iter().map(|&i| DivisorClass::ray(i)).collect();
            for k in 0..self.n_rays() {
                let fk = DivisorClass::ray(k);
                let mut args: Vec<&DivisorClass> = base.iter().collect();
                args.push(&fk);
                let v = self.intersection_product(&args)?;
                if !v.is_zero() {
                    pairing.insert(k, v);
                }
            }
        } else {
            for (k, c) in &spec.pairing {
                let d = self.divisor(k)?;
                if d.0.len() != 1 {
                    return Err(Error::UnknownName(k.clone()));
                }
                let (&i, a) = d.0.iter().next().expect("one entry");
                pairing.insert(i, c / a);
            }
        }
        Ok(CurveClass {
            name: name.to_string(),
            pairing,
        })
    }

    pub fn mori_generators(&self) -> Result<Vec<CurveClass>> {
        self.spec
            .mori_generators
            .iter()
            .map(|n| self.curve(n))
            .collect()
    }

    /// Correction registered for a printed entry, if any.
    pub fn erratum(&self, entry: &str) -> Option<&Erratum> {
        self.spec.errata.iter().find(|e| e.entry == entry)
    }

    /// Printed table entries the fan does not reproduce. Entries with an
    /// erratum must match its corrected value instead.
    pub fn printed_table_mismatches(&self) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for e in &self.spec.printed_products {
            let ds = e
                .factors
                .iter()
                .map(|f| self.divisor(f))
                .collect::<Result<Vec<_>>>()?;
            let got = self.intersection_product(&ds.iter().collect::<Vec<_>>())?;
            if got != e.value {
                bad.push(format!(
                    "{}: {got} vs printed {}",
                    e.factors.join("*"),
                    e.value
                ));
            }
        }
        for (c, row) in &self.spec.printed_curves {
            let curve = self.curve(c)?;
            for (d, v) in row {
                let got = pair_curve_divisor(&curve, &self.divisor(d)?);
                let want = match self.erratum(&format!("{c}.{d}")) {
                    Some(e) if e.printed == v.0 => &e.corrected,
                    _ => &v.0,
                };
                if &got != want {
                    bad.push(format!("{c}.{d}: {got} vs {want}"));
                }
            }
        }
        Ok(bad)
    }

    /// Number of printed entries, products and curve pairings together.
    pub fn printed_entry_count(&self) -> usize {
        self.spec.printed_products.len()
            + self
                .spec
                .printed_curves
                .values()
                .map(|r| r.len())
                .sum::<usize>()
    }

    pub fn effective_generators(&self) -> Result<Vec<DivisorClass>> {
        self.spec
            .effective_generators
            .iter()
            .map(|n| self.divisor(n))
            .collect()
    }
}

/// Nefness verdict with the generators that pair negatively.
#[derive(Debug, Clone, PartialEq)]
pub struct NefReport {
    pub nef: bool,
    pub violated: Vec<String>,
    pub pairings: Vec<(String, Rational)>,
}

pub fn nef_check(d: &DivisorClass, mori_generators: &[CurveClass]) -> NefReport {
    let pairings: Vec<(String, Rational)> = mori_generators
        .iter()
        .map(|c| (c.name.clone(), pair_curve_divisor(c, d)))
        .collect();
    let violated: Vec<String> = pairings
        .iter()
        .filter(|(_, v)| v.is_negative())
        .map(|(n, _)| n.clone())
        .collect();
    NefReport {
        nef: violated.is_empty(),
        violated,
        pairings,
    }
}

/// Coordinates of `deg(D)` in the basis of generator degrees.
pub fn degree_coordinates(
    model: &ToricModel,
    d: &DivisorClass,
    effective_generators: &[DivisorClass],
) -> Result<Vec<Rational>> {
    let rows = model.spec.grading.len();
    if effective_generators.len() != rows {
        return Err(Error::SingularBasis);
    }
    let gens: Vec<Vec<Rational>> = effective_generators
        .iter()
        .map(|g| model.degree(g))
        .collect();
    let a = linalg::transpose(&gens);
    if linalg::det(&a).is_zero() {
        return Err(Error::SingularBasis);
    }
    linalg::solve(&a, &model.degree(d)).ok_or(Error::SingularBasis)
}

/// True iff every degree coordinate in the generator basis is nonnegative.
pub fn effective_check(
    model: &ToricModel,
    d: &DivisorClass,
    effective_generators: &[DivisorClass],
) -> Result<bool> {
    Ok(degree_coordinates(model, d, effective_generators)?
        .iter()
        .all(|x| !x.is_negative()))
}

/// Maximal cones of a simplicial fan from its primitive collections.
pub fn cones_from_irrelevant_ideal(
    n: usize,
    dim: usize,
    components: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    subsets(n, dim)
        .into_iter()
        .filter(|s| components.iter().all(|c| !c.iter().all(|i| s.contains(i))))
        .collect()
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort();
    s
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn ray_det(rays: &[Vec<i64>], idx: &[usize]) -> Rational {
    let m: Matrix<Rational> = idx
        .iter()
        .map(|&i| rays[i].iter().map(|&x| qi(x)).collect())
        .collect();
    linalg::det(&m)
}

/// Convex polytope given by its vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    pub vertices: Vec<[Rational; 3]>,
}

type V3 = [Rational; 3];

fn sub3(a: &V3, b: &V3) -> V3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn dot3(a: &V3, b: &V3) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross3(a: &V3, b: &V3) -> V3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn mean3(pts: &[&V3]) -> V3 {
    let n = qi(pts.len() as i64);
    let mut s = [Rational::zero(), Rational::zero(), Rational::zero()];
    for p in pts {
        for k in 0..3 {
            s[k] += &p[k];
        }
    }
    s.map(|x| x / &n)
}

impl Polytope {
    pub fn new(vertices: Vec<[Rational; 3]>) -> Self {
        Self { vertices }
    }

    /// Facets as vertex-index lists in cyclic order.
    fn facets(&self) -> Vec<Vec<usize>> {
        let vs = &self.vertices;
        let n = vs.len();
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for t in subsets(n, 3) {
            let nrm = cross3(&sub3(&vs[t[1]], &vs[t[0]]), &sub3(&vs[t[2]], &vs[t[0]]));
            if nrm.iter().all(|x| x.is_zero()) {
                continue;
            }
            let side: Vec<Rational> = vs.iter().map(|p| dot3(&nrm, &sub3(p, &vs[t[0]]))).collect();
            let pos = side.iter().any(|s| s.is_positive());
            let neg = side.iter().any(|s| s.is_negative());
            if pos && neg {
                continue;
            }
            let on: Vec<usize> = (0..n).filter(|&i| side[i].is_zero()).collect();
            if seen.contains(&on) {
                continue;
            }
            seen.push(on);
        }
        seen.into_iter().map(|f| self.cyclic(&f)).collect()
    }

    fn cyclic(&self, f: &[usize]) -> Vec<usize> {
        let vs = &self.vertices;
        let pts: Vec<&V3> = f.iter().map(|&i| &vs[i]).collect();
        let g = mean3(&pts);
        let nrm = cross3(&sub3(&vs[f[1]], &vs[f[0]]), &sub3(&vs[f[2]], &vs[f[0]]));
        let r = sub3(&vs[f[0]], &g);
        let half = |p: &V3| {
            let d = sub3(p, &g);
            let s = dot3(&nrm, &cross3(&r, &d));
            if s.is_positive() || (s.is_zero() && !dot3(&r, &d).is_negative()) {
                0
            } else {
                1
            }
        };
        let mut out = f.to_vec();
        out.sort_by(|&a, &b| {
            let (ha, hb) = (half(&vs[a]), half(&vs[b]));
            if ha != hb {
                return ha.cmp(&hb);
            }
            let s = dot3(&nrm, &cross3(&sub3(&vs[a], &g), &sub3(&vs[b], &g)));
            if s.is_positive() {
                std::cmp::Ordering::Less
            } else if s.is_negative() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        out
    }

    /// Tetrahedra `(vertex centroid, facet fan triangle)` with signed-free volumes.
    fn tetrahedra(&self) -> Vec<(Rational, V3)> {
        let c = mean3(&self.vertices.iter().collect::<Vec<_>>());
        let mut out = Vec::new();
        for f in self.facets() {
            let a = &self.vertices[f[0]];
            for w in f[1..].windows(2) {
                let (b, d) = (&self.vertices[w[0]], &self.vertices[w[1]]);
                let vol = dot3(&sub3(a, &c), &cross3(&sub3(b, &c), &sub3(d, &c))).abs() / qi(6);
                out.push((vol, mean3(&[&c, a, b, d])));
            }
        }
        out
    }

    pub fn volume(&self) -> Rational {
        self.tetrahedra().into_iter().map(|(v, _)| v).sum()
    }

    /// Volume-weighted centroid.
    pub fn barycenter(&self) -> Result<[Rational; 3]> {
        let tets = self.tetrahedra();
        let total: Rational = tets.iter().map(|(v, _)| v.clone()).sum();
        if total.is_zero() {
            return Err(Error::DegeneratePolytope);
        }
        let mut s = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (v, g) in &tets {
            for k in 0..3 {
                s[k] += v * &g[k];
            }
        }
        Ok(s.map(|x| x / &total))
    }
}

/// Volume-weighted centroid of a polytope.
pub fn polytope_barycenter(p: &Polytope) -> Result<[Rational; 3]> {
    p.barycenter()
}

/// Renders a degree or coordinate vector.
pub fn fmt_vec(v: &[Rational]) -> String {
    format!(
        "({})",
        v.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
    )
}
