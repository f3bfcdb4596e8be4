//! Dispatches a case to the owning kernel module.

use std::path::Path;

use kstab_core::exact::{definite_integral, qserde, Interval};
use kstab_core::formulas::{self, FamilyParams};
use kstab_core::functionals::{self, DeltaEntry, FlagCase};
use kstab_core::git::{self, MonomialSupport, OneParamSubgroup};
use kstab_core::invariants::{self, CoefficientVector};
use kstab_core::toric::{pair_curve_divisor, polytope_barycenter, Polytope};
use kstab_core::zariski::{threefold_chamber_volume, ThreefoldFamily};
use kstab_core::{fixtures, qi, Rational};
use rand::SeedableRng;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::case::{Kind, LoadedCase, Value};
use crate::error::CliError;

/// Settings shared by every case in a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunContext {
    pub seed: u64,
}

impl Default for RunContext {
    fn default() -> Self {
        Self { seed: 2024 }
    }
}

/// Extra values a computation reports next to its main result.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub value: Option<Value>,
    /// Printed value derived from fixture data rather than stated in the case.
    pub printed: Option<Value>,
}

impl From<Value> for Outcome {
    fn from(v: Value) -> Self {
        Outcome {
            value: Some(v),
            printed: None,
        }
    }
}

struct Ctx<'a> {
    loaded: &'a LoadedCase,
    run: RunContext,
}

impl Ctx<'_> {
    fn location(&self) -> String {
        self.loaded.location.clone()
    }

    fn inputs<T: DeserializeOwned>(&self) -> Result<T, CliError> {
        serde_json::from_value(self.loaded.case.inputs.clone()).map_err(|e| CliError::Schema {
            location: self.location(),
            message: format!("inputs: {e}"),
        })
    }

    fn core<T>(&self, r: kstab_core::Result<T>) -> Result<T, CliError> {
        r.map_err(|e| match e {
            kstab_core::Error::Fixture { name, reason } => CliError::FixtureMissing {
                location: self.location(),
                name: format!("{name} ({reason})"),
            },
            source => CliError::Compute {
                location: self.location(),
                source,
            },
        })
    }

    fn schema(&self, message: impl Into<String>) -> CliError {
        CliError::Schema {
            location: self.location(),
            message: message.into(),
        }
    }

    fn read_fixture(&self, rel: &str) -> Result<String, CliError> {
        let path = match &self.loaded.base_dir {
            Some(dir) => dir.join(rel),
            None => Path::new(rel).to_path_buf(),
        };
        std::fs::read_to_string(&path).map_err(|e| CliError::FixtureMissing {
            location: self.location(),
            name: format!("{}: {e}", path.display()),
        })
    }

    fn flag(&self, r: &FlagRef) -> Result<FlagCase, CliError> {
        match (&r.flag, &r.flag_file) {
            (Some(name), None) => self.core(fixtures::flag(name)),
            (None, Some(file)) => self.core(FlagCase::from_json(&self.read_fixture(file)?)),
            _ => Err(self.schema("give exactly one of flag, flag_file")),
        }
    }

    fn family(&self, name: &str) -> Result<ThreefoldFamily, CliError> {
        self.core(fixtures::family(name))
    }
}

pub fn run(loaded: &LoadedCase, run: RunContext) -> Result<Outcome, CliError> {
    let ctx = Ctx { loaded, run };
    match loaded.case.kind {
        Kind::Volume => volume(&ctx),
        Kind::Beta => beta(&ctx),
        Kind::FlagSurface => flag_surface(&ctx),
        Kind::FlagPoint => flag_point(&ctx),
        Kind::Formula => formula(&ctx),
        Kind::Git => git_case(&ctx),
        Kind::Toric => toric(&ctx),
        Kind::Invariant => invariant(&ctx),
        Kind::Barycenter => barycenter(&ctx),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VolumeInputs {
    family: String,
    /// `integral`, `s`, `ratio` (needs `a_log`) or `piece_integral` (needs `interval`).
    output: String,
    #[serde(default, with = "qserde::opt")]
    a_log: Option<Rational>,
    #[serde(default)]
    interval: Option<(qserde::Q, qserde::Q)>,
}

fn volume(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: VolumeInputs = ctx.inputs()?;
    let fam = ctx.family(&inp.family)?;
    let models = ctx.core(fixtures::all_models())?;
    let vol = ctx.core(threefold_chamber_volume(&models, &fam))?;
    let s = || ctx.core(functionals::s_from_volume(&vol, &fam.a_top));
    let out: Value = match inp.output.as_str() {
        "integral" => ctx.core(vol.integral())?.into(),
        "s" => s()?.into(),
        "ratio" => {
            let a = inp.a_log.ok_or_else(|| ctx.schema("ratio needs a_log"))?;
            (a / s()?).into()
        }
        "piece_integral" => {
            let (lo, hi) = inp
                .interval
                .ok_or_else(|| ctx.schema("piece_integral needs interval"))?;
            let iv = ctx.core(Interval::new(lo.0, hi.0))?;
            let piece = vol
                .pieces()
                .iter()
                .find(|p| p.interval == iv)
                .ok_or_else(|| ctx.schema(format!("no chamber on {iv}")))?;
            let computed = ctx.core(definite_integral(&piece.poly, &iv))?;
            let printed = match fam.printed_volume.iter().find(|p| p.interval == iv) {
                Some(p) => Some(Value::from(ctx.core(definite_integral(&p.poly(), &iv))?)),
                None => None,
            };
            return Ok(Outcome {
                value: Some(computed.into()),
                printed,
            });
        }
        other => return Err(ctx.schema(format!("unknown volume output {other:?}"))),
    };
    Ok(out.into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BetaInputs {
    volume_case: String,
    /// `beta` (default) or `s`.
    #[serde(default)]
    output: Option<String>,
}

fn beta(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: BetaInputs = ctx.inputs()?;
    let case = ctx.core(fixtures::volume_case(&inp.volume_case))?;
    match inp.output.as_deref().unwrap_or("beta") {
        "beta" => Ok(Value::from(ctx.core(case.beta())?).into()),
        "s" => Ok(Value::from(ctx.core(case.s())?).into()),
        other => Err(ctx.schema(format!("unknown beta output {other:?}"))),
    }
}

#[derive(Deserialize)]
struct FlagRef {
    #[serde(default)]
    flag: Option<String>,
    #[serde(default)]
    flag_file: Option<String>,
}

fn flag_surface(ctx: &Ctx) -> Result<Outcome, CliError> {
    let r: FlagRef = ctx.inputs()?;
    let case = ctx.flag(&r)?;
    Ok(Value::from(ctx.core(functionals::s_flag_surface(&case))?.value).into())
}

#[derive(Deserialize)]
struct FlagPointInputs {
    #[serde(flatten)]
    flag: FlagRef,
    point: String,
    /// `total` (default), `quadratic` or `f_q`.
    #[serde(default)]
    term: Option<String>,
}

fn flag_point(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: FlagPointInputs = ctx.inputs()?;
    let case = ctx.flag(&inp.flag)?;
    let v = match inp.term.as_deref().unwrap_or("total") {
        "total" => {
            ctx.core(functionals::s_flag_point(&case, &inp.point))?
                .value
        }
        "quadratic" => {
            ctx.core(case.point(&inp.point).map(|_| ()))?;
            ctx.core(functionals::point_quadratic_term(&case))?
        }
        "f_q" => ctx.core(functionals::f_q_term(&case, &inp.point))?,
        other => return Err(ctx.schema(format!("unknown term {other:?}"))),
    };
    Ok(Value::from(v).into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormulaInputs {
    name: String,
    #[serde(default)]
    params: Option<FamilyParams>,
    /// `(n, r)` for `V = P^(n-1)`, `L = O(r)`.
    #[serde(default)]
    projective: Option<(u32, u32)>,
    #[serde(default, with = "qserde::opt")]
    minus_k_cubed: Option<Rational>,
    #[serde(default)]
    b2: Option<i64>,
    #[serde(default)]
    b3: Option<i64>,
}

fn formula(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: FormulaInputs = ctx.inputs()?;
    let params = || -> Result<FamilyParams, CliError> {
        match (&inp.params, inp.projective) {
            (Some(p), None) => ctx.core(p.validate()).map(|_| p.clone()),
            (None, Some((n, r))) => Ok(FamilyParams::projective_space(n, r)),
            _ => Err(ctx.schema("give exactly one of params, projective")),
        }
    };
    let v: Value = match inp.name.as_str() {
        "gamma_certified" => ctx
            .core(formulas::gamma_criterion(&params()?))?
            .polystable_certified
            .into(),
        "theorem_check" => {
            let (n, r) = inp
                .projective
                .ok_or_else(|| ctx.schema("theorem_check needs projective"))?;
            ctx.core(formulas::theorem15_check(n, r))?.holds().into()
        }
        "theorem_applies" => {
            let (n, r) = inp
                .projective
                .ok_or_else(|| ctx.schema("theorem_applies needs projective"))?;
            match formulas::theorem15_check(n, r) {
                Ok(_) => true.into(),
                Err(kstab_core::Error::HypothesisViolated(_)) => false.into(),
                Err(e) => {
                    return Err(CliError::Compute {
                        location: ctx.location(),
                        source: e,
                    })
                }
            }
        }
        "delta_on_negative_section" => {
            let p = params()?;
            let entries = [
                DeltaEntry::new(
                    "negative section",
                    qi(1),
                    ctx.core(formulas::s_sminus(p.n, &p.a))?,
                ),
                DeltaEntry::new("base", &p.a * &p.delta_v, formulas::s_base_term(p.n, &p.a)),
            ];
            ctx.core(functionals::delta_bound_report(&entries))?
                .bound
                .into()
        }
        "delta_off_negative_section" => {
            let p = params()?;
            let entries = [DeltaEntry::new("fiber", qi(1), formulas::k_general(&p))];
            ctx.core(functionals::delta_bound_report(&entries))?
                .bound
                .into()
        }
        "euler_char_tangent" => {
            let k = inp
                .minus_k_cubed
                .clone()
                .ok_or_else(|| ctx.schema("needs minus_k_cubed"))?;
            formulas::euler_char_tangent(&k, inp.b2.unwrap_or(0), inp.b3.unwrap_or(0)).into()
        }
        name => ctx.core(formulas::eval_named(name, &params()?))?.into(),
    };
    Ok(v.into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GitInputs {
    /// `weight`, `destabilize` or `singular`.
    op: String,
    support: String,
    #[serde(default)]
    lambda: Option<(i64, i64)>,
    #[serde(default)]
    bound: Option<i64>,
}

fn git_case(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: GitInputs = ctx.inputs()?;
    let support: MonomialSupport = ctx.core(inp.support.parse())?;
    let v: Value = match inp.op.as_str() {
        "weight" => {
            let (r0, r1) = inp
                .lambda
                .ok_or_else(|| ctx.schema("weight needs lambda"))?;
            let l = ctx.core(OneParamSubgroup::new(r0, r1))?;
            qi(ctx.core(git::hm_weight(&support, l))?).into()
        }
        "destabilize" => describe_destabilizer(
            ctx.core(git::find_destabilizer(&support, inp.bound.unwrap_or(5)))?,
        ),
        "singular" => {
            let coeffs = support.entries().iter().map(|&k| (k, qi(1))).collect();
            git::fixed_point_singularity(&coeffs).into()
        }
        other => return Err(ctx.schema(format!("unknown git op {other:?}"))),
    };
    Ok(v.into())
}

pub fn describe_destabilizer(d: Option<git::Destabilizer>) -> Value {
    Value::Text(match d {
        None => "none".into(),
        Some(d) => {
            let kind = match d.certificate {
                git::Certificate::Unstable => "unstable",
                git::Certificate::NotStable => "not stable",
            };
            format!(
                "lambda=({},{}) weight={} {kind}",
                d.lambda.r0, d.lambda.r1, d.weight
            )
        }
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ToricInputs {
    model: String,
    #[serde(default)]
    product: Option<Vec<String>>,
    #[serde(default)]
    curve: Option<String>,
    #[serde(default)]
    divisor: Option<String>,
    /// Check every printed table entry of the model.
    #[serde(default)]
    printed_tables: bool,
}

fn toric(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: ToricInputs = ctx.inputs()?;
    let m = ctx.core(fixtures::model(&inp.model))?;
    if inp.printed_tables {
        let bad = ctx.core(m.printed_table_mismatches())?;
        return Ok(Value::from(bad.is_empty() && m.printed_entry_count() > 0).into());
    }
    match (inp.product, inp.curve, inp.divisor) {
        (Some(fs), None, None) => {
            let ds = fs
                .iter()
                .map(|f| ctx.core(m.divisor(f)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(
                Value::from(ctx.core(m.intersection_product(&ds.iter().collect::<Vec<_>>()))?)
                    .into(),
            )
        }
        (None, Some(c), Some(d)) => {
            let v = pair_curve_divisor(&ctx.core(m.curve(&c))?, &ctx.core(m.divisor(&d))?);
            Ok(Value::from(v).into())
        }
        _ => Err(ctx.schema("give product, or curve and divisor, or printed_tables")),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InvariantInputs {
    /// `dimensions`, `matches_series`, `peano`, `invariance_trials` or `rank`.
    op: String,
    #[serde(default)]
    upto: Option<usize>,
    #[serde(default)]
    coeffs: Option<CoefficientVector>,
    #[serde(default)]
    which: Option<String>,
    #[serde(default)]
    trials: Option<usize>,
}

fn invariant(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: InvariantInputs = ctx.inputs()?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(ctx.run.seed);
    let coeffs = |rng: &mut rand_chacha::ChaCha8Rng| {
        inp.coeffs
            .clone()
            .unwrap_or_else(|| CoefficientVector::random(rng))
    };
    let v: Value = match inp.op.as_str() {
        "dimensions" => {
            let dims = (0..=inp.upto.unwrap_or(8))
                .map(|k| {
                    ctx.core(invariants::invariant_dimension(k))
                        .map(|d| d.to_string())
                })
                .collect::<Result<Vec<_>, _>>()?;
            Value::Text(dims.join(","))
        }
        "matches_series" => {
            let n = inp.upto.unwrap_or(8);
            let series = invariants::hilbert_prefix(n);
            let dims = (0..=n)
                .map(|k| ctx.core(invariants::invariant_dimension(k)))
                .collect::<Result<Vec<_>, _>>()?;
            (dims == series).into()
        }
        "peano" => {
            let j = invariants::peano_invariants(&coeffs(&mut rng));
            match inp.which.as_deref() {
                Some("j2") => j.j2.into(),
                Some("j3") => j.j3.into(),
                Some("j4") => j.j4.into(),
                _ => return Err(ctx.schema("peano needs which = j2, j3 or j4")),
            }
        }
        "invariance_trials" => {
            let trials = inp.trials.unwrap_or(20);
            (invariants::invariance_trials(trials, ctx.run.seed).passed == trials).into()
        }
        "rank" => qi(invariants::independence_rank(&coeffs(&mut rng)) as i64).into(),
        other => return Err(ctx.schema(format!("unknown invariant op {other:?}"))),
    };
    Ok(v.into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BarycenterInputs {
    vertices: Vec<[qserde::Q; 3]>,
}

fn barycenter(ctx: &Ctx) -> Result<Outcome, CliError> {
    let inp: BarycenterInputs = ctx.inputs()?;
    let vs = inp.vertices.into_iter().map(|v| v.map(|q| q.0)).collect();
    let b = ctx.core(polytope_barycenter(&Polytope::new(vs)))?;
    Ok(Value::Text(format_point(&b)).into())
}

pub fn format_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(kstab_core::exact::fmt_rational).collect();
    format!("({})", parts.join(", "))
}
