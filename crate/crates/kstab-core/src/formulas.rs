//! Closed-form invariants of double covers `X -> V x P1` branched along
//! `R`, with `-K_V = aL`, `d = L^(n-1)` and `mu L` very ample.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{qserde, rpow, Rational};
use crate::qi;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: u32,
    #[serde(with = "qserde")]
    pub a: Rational,
    #[serde(with = "qserde")]
    pub d: Rational,
    #[serde(with = "qserde")]
    pub mu: Rational,
    #[serde(default = "one", with = "qserde")]
    pub delta_v: Rational,
    #[serde(default)]
    pub r: Option<u32>,
}

fn one() -> Rational {
    Rational::one()
}

impl FamilyParams {
    pub fn new(n: u32, a: Rational, d: Rational, mu: Rational) -> Self {
        Self {
            n,
            a,
            d,
            mu,
            delta_v: Rational::one(),
            r: None,
        }
    }

    pub fn with_delta_v(mut self, delta_v: Rational) -> Self {
        self.delta_v = delta_v;
        self
    }

    /// `V = P^(n-1)`, `L = O(r)`.
    pub fn projective_space(n: u32, r: u32) -> Self {
        let rq = qi(r.into());
        Self {
            n,
            a: qi(n.into()) / &rq,
            d: rpow(&rq, n - 1),
            mu: Rational::one() / rq,
            delta_v: Rational::one(),
            r: Some(r),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter("n must be at least 2".into()));
        }
        if self.a < Rational::one()
            || !self.d.is_positive()
            || !self.mu.is_positive()
            || !self.delta_v.is_positive()
        {
            return Err(Error::InvalidParameter(
                "need a >= 1 and d, mu, delta(V) > 0".into(),
            ));
        }
        Ok(())
    }

    /// `d mu^(n-2)`.
    pub fn d_mu(&self) -> Rational {
        &self.d * rpow(&self.mu, self.n - 2)
    }

    fn am1(&self) -> Rational {
        &self.a - qi(1)
    }

    /// `a^k - (a-1)^k`.
    fn gap(&self, k: u32) -> Rational {
        rpow(&self.a, k) - rpow(&self.am1(), k)
    }
}

fn n1(p: &FamilyParams) -> Rational {
    qi((p.n + 1).into())
}

/// `D(a)^n = d(a^n - (a-1)^n)`.
pub fn vol_da(p: &FamilyParams) -> Rational {
    &p.d * p.gap(p.n)
}

/// `S` of the negative section: `((n+1-a)a^n + (a-1)^(n+1)) / ((n+1)(a^n - (a-1)^n))`.
pub fn s_sminus(n: u32, a: &Rational) -> Result<Rational> {
    let p = FamilyParams::new(n, a.clone(), qi(1), qi(1));
    let den = n1(&p) * p.gap(n);
    if den.is_zero() {
        return Err(Error::InvalidParameter("a^n = (a-1)^n".into()));
    }
    Ok(((n1(&p) - a) * rpow(a, n) + rpow(&p.am1(), n + 1)) / den)
}

/// `S` of a fiber over `V`: `(a^(n+1) - (a-1)^(n+1)) / (mu (n+1)(a^n - (a-1)^n))`.
pub fn s_vertical(p: &FamilyParams) -> Rational {
    p.gap(p.n + 1) / (&p.mu * n1(p) * p.gap(p.n))
}

/// The term paired with `delta(V; L)` in the bound at points of the
/// negative section: `n (a^(n+1) - (a-1)^(n+1)) / ((n+1)(a^n - (a-1)^n))`.
pub fn s_base_term(n: u32, a: &Rational) -> Rational {
    let p = FamilyParams::new(n, a.clone(), qi(1), qi(1));
    qi(n.into()) * p.gap(n + 1) / (n1(&p) * p.gap(n))
}

/// `(a^(n+1) - (a+n)(a-1)^n) / (2(n+1)(a^n - (a-1)^n))`.
pub fn res_n(n: u32, a: &Rational) -> Rational {
    let p = FamilyParams::new(n, a.clone(), qi(1), qi(1));
    (rpow(a, n + 1) - (a + qi(n.into())) * rpow(&p.am1(), n)) / (qi(2) * n1(&p) * p.gap(n))
}

/// Threshold of the log pair `(V, lambda R)`; the same rational function as [`res_n`].
pub fn lambda_n(n: u32, a: &Rational) -> Rational {
    let p = FamilyParams::new(n, a.clone(), qi(1), qi(1));
    let num = rpow(a, n + 1) - (a + qi(n.into())) * rpow(&p.am1(), n);
    num / (qi(2) * n1(&p) * (rpow(a, n) - rpow(&p.am1(), n)))
}

/// `k_n(a, d, mu)`.
pub fn k_general(p: &FamilyParams) -> Rational {
    let lead = p.gap(p.n + 1) / (n1(p) * p.gap(p.n)) * p.d_mu();
    lead + res_n(p.n, &p.a)
}

/// `k_3` as a single fraction in `a` and `d mu`.
pub fn k3(a: &Rational, d: &Rational, mu: &Rational) -> Rational {
    let dm = d * mu;
    let num = qi(8) * &dm * rpow(a, 3)
        + qi(6) * (qi(1) - qi(2) * &dm) * a * a
        + qi(8) * (&dm - qi(1)) * a
        - qi(2) * &dm
        + qi(3);
    num / (qi(8) * (qi(3) * a * a - qi(3) * a + qi(1)))
}

/// The three entries whose minimum is `gamma`.
pub fn gamma_entries(p: &FamilyParams) -> Result<[Rational; 3]> {
    let k = k_general(p);
    if k.is_zero() {
        return Err(Error::InvalidParameter("k_n vanishes".into()));
    }
    let s = s_sminus(p.n, &p.a)?;
    let base = s_base_term(p.n, &p.a);
    Ok([
        Rational::one() / k,
        Rational::one() / s,
        &p.a * &p.delta_v / base,
    ])
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaVerdict {
    pub gamma: Rational,
    pub entries: [Rational; 3],
    pub polystable_certified: bool,
}

/// `gamma` and whether it certifies K-polystability.
pub fn gamma_criterion(p: &FamilyParams) -> Result<GammaVerdict> {
    p.validate()?;
    if p.n < 3 {
        return Err(Error::InvalidParameter("the criterion needs n >= 3".into()));
    }
    let entries = gamma_entries(p)?;
    let gamma = entries.iter().min().cloned().expect("three entries");
    let polystable_certified = p.d_mu() >= qi(2) && gamma > Rational::one();
    Ok(GammaVerdict {
        gamma,
        entries,
        polystable_certified,
    })
}

/// Outcome of the check for `V = P^(n-1)`, `L = O(r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveVerdict {
    pub k_below_one: bool,
    pub sminus_above_one: bool,
    pub base_above_one: bool,
    pub gamma: GammaVerdict,
}

impl ProjectiveVerdict {
    pub fn holds(&self) -> bool {
        self.k_below_one && self.sminus_above_one && self.base_above_one
    }
}

/// Evaluates the three inequalities for `n > r > n/2 > 1`.
pub fn theorem15_check(n: u32, r: u32) -> Result<ProjectiveVerdict> {
    if !(n > r && 2 * r > n && n > 2) {
        return Err(Error::HypothesisViolated(format!(
            "need n > r > n/2 > 1, got n = {n}, r = {r}"
        )));
    }
    let p = FamilyParams::projective_space(n, r);
    let gamma = gamma_criterion(&p)?;
    let [k_inv, s_inv, base] = gamma.entries.clone();
    Ok(ProjectiveVerdict {
        k_below_one: k_inv > Rational::one(),
        sminus_above_one: s_inv > Rational::one(),
        base_above_one: base > Rational::one(),
        gamma,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FanoSignature {
    pub is_fano: bool,
    pub k_unstable: bool,
}

/// For `-K_V = aL` and branch data `a1 >= a2`: Fano iff `a > a1`, and then
/// K-unstable iff `a1 > a2`.
pub fn fano_signature(a: &Rational, a1: &Rational, a2: &Rational) -> Result<FanoSignature> {
    if a1 < a2 {
        return Err(Error::UnsortedInput);
    }
    let is_fano = a > a1;
    Ok(FanoSignature {
        is_fano,
        k_unstable: is_fano && a1 > a2,
    })
}

/// `chi(X, T_X) = -K^3/2 - 18 + b2 - b3/2` for a smooth Fano threefold.
pub fn euler_char_tangent(minus_k_cubed: &Rational, b2: i64, b3: i64) -> Rational {
    minus_k_cubed / qi(2) - qi(18) + qi(b2) - Rational::new(b3.into(), 2.into())
}

/// The tail inequality `n(a^(n+1) - (a-1)^(n+1)) > a((n+1-a)a^n + (a-1)^(n+1))`
/// for `a > 1`.
pub fn kento_tail_holds(n: u32, a: &Rational) -> bool {
    let p = FamilyParams::new(n, a.clone(), qi(1), qi(1));
    let lhs = qi(n.into()) * p.gap(n + 1);
    let rhs = a * ((n1(&p) - a) * rpow(a, n) + rpow(&p.am1(), n + 1));
    lhs > rhs
}

/// Named evaluator used by the command line.
pub fn eval_named(name: &str, p: &FamilyParams) -> Result<Rational> {
    match name {
        "vol_Da" | "vol_da" => Ok(vol_da(p)),
        "s_sminus" => s_sminus(p.n, &p.a),
        "s_vertical" => Ok(s_vertical(p)),
        "res_n" => Ok(res_n(p.n, &p.a)),
        "lambda_n" => Ok(lambda_n(p.n, &p.a)),
        "k_general" | "k_n" => Ok(k_general(p)),
        "k3" => Ok(k3(&p.a, &p.d, &p.mu)),
        "gamma" => Ok(gamma_criterion(p)?.gamma),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

pub const FORMULA_NAMES: &[&str] = &[
    "vol_Da",
    "s_sminus",
    "s_vertical",
    "res_n",
    "lambda_n",
    "k_general",
    "k3",
    "gamma",
];
