//! Invariants of `SL2 x SL2` on forms of bidegree (2,2). Coefficients are
//! indexed like the weight module: `a_ij` multiplies `x^(2-i) y^i u^(2-j) v^j`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interpolate;
use crate::exact::linalg::{det, rank, Matrix};
use crate::exact::qserde::{self, Q};
use crate::exact::Rational;
use crate::{q, qi};

pub const DIMENSION_BOUND: usize = 12;

/// The nine coefficients `a[i][j]`. On the wire: `{"ij": "p/q", ...}` with
/// absent keys read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    pub a: [[Rational; 3]; 3],
}

impl Serialize for CoefficientVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = BTreeMap::new();
        for (i, row) in self.a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    m.insert(format!("{i}{j}"), Q(x.clone()));
                }
            }
        }
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoefficientVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = BTreeMap::<String, Q>::deserialize(d)?;
        let mut c = Self::zero();
        for (k, v) in m {
            match k.as_bytes() {
                [i @ b'0'..=b'2', j @ b'0'..=b'2'] => {
                    c.a[(i - b'0') as usize][(j - b'0') as usize] = v.0
                }
                _ => {
                    return Err(serde::de::Error::custom(format!(
                        "bad coefficient index {k:?}"
                    )))
                }
            }
        }
        Ok(c)
    }
}

impl CoefficientVector {
    pub fn zero() -> Self {
        Self {
            a: Default::default(),
        }
    }

    pub fn from_entries(entries: &[((usize, usize), Rational)]) -> Self {
        let mut c = Self::zero();
        for ((i, j), v) in entries {
            c.a[*i][*j] = v.clone();
        }
        c
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let mut c = Self::zero();
        for row in c.a.iter_mut() {
            for x in row.iter_mut() {
                *x = q(rng.gen_range(-9..=9), rng.gen_range(1..=5));
            }
        }
        c
    }

    /// `a_ij -> a_ji`, exchanging the two factors.
    pub fn transpose(&self) -> Self {
        let mut c = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                c.a[j][i] = self.a[i][j].clone();
            }
        }
        c
    }

    pub fn scale(&self, t: &Rational) -> Self {
        let mut c = self.clone();
        c.a.iter_mut().flatten().for_each(|x| *x *= t);
        c
    }

    fn flat(&self) -> Vec<Rational> {
        self.a.iter().flatten().cloned().collect()
    }

    fn from_flat(v: &[Rational]) -> Self {
        let mut c = Self::zero();
        for (k, x) in v.iter().enumerate() {
            c.a[k / 3][k % 3] = x.clone();
        }
        c
    }
}

pub type Mat2 = [[Rational; 2]; 2];

/// A pair of determinant-one matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    g1: Mat2,
    g2: Mat2,
}

fn det2(m: &Mat2) -> Rational {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn id2() -> Mat2 {
    [[qi(1), qi(0)], [qi(0), qi(1)]]
}

impl GroupElement {
    pub fn new(g1: Mat2, g2: Mat2) -> Result<Self> {
        if !det2(&g1).is_one() || !det2(&g2).is_one() {
            return Err(Error::InvalidParameter(
                "group element needs determinant one".into(),
            ));
        }
        Ok(Self { g1, g2 })
    }

    pub fn identity() -> Self {
        Self {
            g1: id2(),
            g2: id2(),
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            g1: mul2(&self.g1, &other.g1),
            g2: mul2(&self.g2, &other.g2),
        }
    }

    /// Product of shears, a torus element and a Pythagorean rotation per factor.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let mut one = || {
            let s = q(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            let t = q(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            let d = q(rng.gen_range(1..=4), rng.gen_range(1..=4));
            let upper = [[qi(1), s], [qi(0), qi(1)]];
            let lower = [[qi(1), qi(0)], [t, qi(1)]];
            let torus = [[d.clone(), qi(0)], [qi(0), qi(1) / d]];
            let rot = [[q(3, 5), q(4, 5)], [q(-4, 5), q(3, 5)]];
            let rot = if rng.gen_bool(0.5) { rot } else { id2() };
            mul2(&mul2(&upper, &lower), &mul2(&torus, &rot))
        };
        let g1 = one();
        let g2 = one();
        Self { g1, g2 }
    }
}

/// `B[i][k]`: coefficient of `x^(2-k) y^k` in `X^(2-i) Y^i`, where
/// `(X, Y) = (x, y) g`.
fn induced(g: &Mat2) -> [[Rational; 3]; 3] {
    let lin_x = [g[0][0].clone(), g[1][0].clone()];
    let lin_y = [g[0][1].clone(), g[1][1].clone()];
    let mul = |p: &[Rational; 2], r: &[Rational; 2]| {
        [&p[0] * &r[0], &p[0] * &r[1] + &p[1] * &r[0], &p[1] * &r[1]]
    };
    [
        mul(&lin_x, &lin_x),
        mul(&lin_x, &lin_y),
        mul(&lin_y, &lin_y),
    ]
}

/// Coefficients of `f((x, y) g1, (u, v) g2)`.
pub fn act(g: &GroupElement, c: &CoefficientVector) -> CoefficientVector {
    let (b1, b2) = (induced(&g.g1), induced(&g.g2));
    let mut out = CoefficientVector::zero();
    for i in 0..3 {
        for j in 0..3 {
            if c.a[i][j].is_zero() {
                continue;
            }
            for k in 0..3 {
                for l in 0..3 {
                    out.a[k][l] += &c.a[i][j] * &b1[i][k] * &b2[j][l];
                }
            }
        }
    }
    out
}

/// The trace-free 4x4 matrix whose characteristic polynomial carries the invariants.
pub fn peano_matrix(c: &CoefficientVector) -> Matrix<Rational> {
    let a = |i: usize, j: usize| c.a[i][j].clone();
    let h = &c.a[1][1] / qi(2);
    vec![
        vec![h.clone(), -a(1, 0), -a(0, 1), qi(2) * a(0, 0)],
        vec![a(1, 2), -h.clone(), qi(-2) * a(0, 2), a(0, 1)],
        vec![a(2, 1), qi(-2) * a(2, 0), -h.clone(), a(1, 0)],
        vec![qi(2) * a(2, 2), -a(2, 1), -a(1, 2), h],
    ]
}

/// `det(T I - M)` as coefficients of `T^0..T^4`.
pub fn characteristic_polynomial(m: &Matrix<Rational>) -> Vec<Rational> {
    let n = m.len();
    let samples: Vec<(Rational, Rational)> = (0..=n as i64)
        .map(|t| {
            let shifted: Matrix<Rational> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                qi(t) - &m[i][j]
                            } else {
                                -m[i][j].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            (qi(t), det(&shifted))
        })
        .collect();
    let p = interpolate(&samples, n).expect("n + 1 distinct samples");
    (0..=n as u32).map(|k| p.coeff(k, 0)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeanoInvariants {
    #[serde(with = "qserde")]
    pub j2: Rational,
    #[serde(with = "qserde")]
    pub j3: Rational,
    #[serde(with = "qserde")]
    pub j4: Rational,
}

/// `char(T) = T^4 + J2 T^2 + J3 T + J4`.
pub fn peano_invariants(c: &CoefficientVector) -> PeanoInvariants {
    let ch = characteristic_polynomial(&peano_matrix(c));
    debug_assert!(ch[3].is_zero() && ch[4].is_one());
    PeanoInvariants {
        j2: ch[2].clone(),
        j3: ch[1].clone(),
        j4: ch[0].clone(),
    }
}

pub fn verify_invariance(c: &CoefficientVector, g: &GroupElement) -> bool {
    peano_invariants(&act(g, c)) == peano_invariants(c)
}

/// Outcome of seeded random invariance checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceTrials {
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
}

pub fn invariance_trials(trials: usize, seed: u64) -> InvarianceTrials {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let passed = (0..trials)
        .filter(|_| {
            let c = CoefficientVector::random(&mut rng);
            let g = GroupElement::random(&mut rng);
            verify_invariance(&c, &g)
        })
        .count();
    InvarianceTrials {
        seed,
        trials,
        passed,
    }
}

/// Rank of the Jacobian of `(J2, J3, J4)` at `c`. Each `J` restricted to a
/// coordinate line is a quartic in `t`, so its derivative at `0` follows
/// exactly from the values at `t = 0..4`.
pub fn independence_rank(c: &CoefficientVector) -> usize {
    let base = c.flat();
    let mut jac: Matrix<Rational> = vec![Vec::new(); 3];
    for k in 0..9 {
        let samples: Vec<[(Rational, Rational); 3]> = (0..=4)
            .map(|t| {
                let mut v = base.clone();
                v[k] += qi(t);
                let j = peano_invariants(&CoefficientVector::from_flat(&v));
                [(qi(t), j.j2), (qi(t), j.j3), (qi(t), j.j4)]
            })
            .collect();
        for (r, row) in jac.iter_mut().enumerate() {
            let pts: Vec<_> = samples.iter().map(|s| s[r].clone()).collect();
            row.push(interpolate(&pts, 4).expect("five samples").coeff(1, 0));
        }
    }
    rank(&jac)
}

/// Torus weight `(2-2i, 2-2j)` of each coefficient.
fn weights() -> Vec<(i64, i64)> {
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (2 - 2 * i, 2 - 2 * j)))
        .collect()
}

/// Number of degree-`k` monomials in the `a_ij` of each total weight, keyed
/// by `(w1 + 2k, w2 + 2k)`.
fn weight_multiplicities(k: usize) -> Vec<Vec<u64>> {
    let span = 4 * k + 1;
    let off = 2 * k as i64;
    let mut counts = vec![vec![vec![0u64; span]; span]; k + 1];
    counts[0][off as usize][off as usize] = 1;
    for (w1, w2) in weights() {
        for d in 1..=k {
            for x in 0..span as i64 {
                for y in 0..span as i64 {
                    let (px, py) = (x - w1, y - w2);
                    if (0..span as i64).contains(&px) && (0..span as i64).contains(&py) {
                        let add = counts[d - 1][px as usize][py as usize];
                        counts[d][x as usize][y as usize] += add;
                    }
                }
            }
        }
    }
    counts.swap_remove(k)
}

/// `m(0,0) - m(2,0) - m(0,2) + m(2,2)` over degree-`k` monomials.
pub fn invariant_dimension(k: usize) -> Result<u64> {
    if k > DIMENSION_BOUND {
        return Err(Error::BoundExceeded {
            k,
            bound: DIMENSION_BOUND,
        });
    }
    let m = weight_multiplicities(k);
    let get = |w1: i64, w2: i64| -> i64 {
        let (x, y) = (w1 + 2 * k as i64, w2 + 2 * k as i64);
        let span = (4 * k + 1) as i64;
        if (0..span).contains(&x) && (0..span).contains(&y) {
            m[x as usize][y as usize] as i64
        } else {
            0
        }
    };
    let d = get(0, 0) - get(2, 0) - get(0, 2) + get(2, 2);
    Ok(d as u64)
}

/// Series coefficients of `1/((1-t^2)(1-t^3)(1-t^4))` up to `t^n`.
pub fn hilbert_prefix(n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for part in [2, 3, 4] {
        for k in part..=n {
            c[k] += c[k - part];
        }
    }
    c
}
