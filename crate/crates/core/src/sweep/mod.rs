//! Exhaustive and sampled sweeps over coefficient pairs, cross-checking a
//! family's criterion against the planarity oracles.
//!
//! Pairs are visited in lexicographic order of generator exponents
//! `(log a, log b)`. Work is spread over a rayon pool of `workers` threads and
//! collected in order, so a report depends only on the spec, never on the
//! degree of parallelism.

mod report;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criteria::{self, Family};
use crate::dopoly::parse::parse_template;
use crate::dopoly::{is_planar_bruteforce, is_planar_quadform, DoPoly};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

pub use report::{emit_report, render_report, ReportFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    /// `count` distinct pairs drawn without replacement by a ChaCha8 stream
    /// seeded with `seed`, then visited in sorted order.
    Sample { count: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleChoice {
    Quadform,
    Bruteforce,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub p: u32,
    pub m: u32,
    pub n: u32,
    pub family: Family,
    pub mode: Mode,
    pub oracle: OracleChoice,
    pub workers: usize,
    /// Run the oracle on every quartic pair, not only criterion-satisfying ones.
    pub full_oracle: bool,
    /// Keep only the summary; per-pair rows are dropped.
    pub counts_only: bool,
}

impl SweepSpec {
    /// Exhaustive quadform sweep of `family` over `F_{(p^m)^n}` on one worker.
    pub fn new(p: u32, m: u32, n: u32, family: Family) -> Self {
        SweepSpec {
            p,
            m,
            n,
            family,
            mode: Mode::Exhaustive,
            oracle: OracleChoice::Quadform,
            workers: 1,
            full_oracle: false,
            counts_only: false,
        }
    }
}

/// Modulus and generator of the field a report was computed in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub p: u32,
    pub m: u32,
    pub n: u32,
    /// Monic modulus coefficients, constant term first.
    pub modulus: Vec<u32>,
    /// Power-basis coordinates of the generator.
    pub generator: Vec<u32>,
}

impl Fingerprint {
    pub fn of(ctx: &FieldCtx) -> Self {
        Fingerprint {
            p: ctx.p(),
            m: ctx.m(),
            n: ctx.n(),
            modulus: ctx.modulus().to_vec(),
            generator: ctx.coeffs(ctx.generator()),
        }
    }
}

/// One examined pair. Elements use the generator-exponent encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub a: String,
    pub b: String,
    /// `sat`, `unsat` (iff criteria) or `no-claim` (sufficient criteria).
    pub criterion: String,
    pub branch: String,
    /// `planar`, `non-planar`, `conflict` (oracles disagree) or `skipped`.
    pub oracle: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub examined: u64,
    pub criterion_satisfied: u64,
    pub oracle_runs: u64,
    /// Planar according to the oracle; for prop-ab, zero-free triples.
    pub planar: u64,
    pub agreements: u64,
    pub mismatches: u64,
    /// Planar items the criterion makes no claim about.
    pub uncovered_planar: u64,
}

/// Wall-clock figures. Never serialized and ignored by equality, so reports
/// compare by content.
#[derive(Clone, Copy, Debug, Default)]
pub struct Timing {
    pub seconds: f64,
    pub pairs_per_second: f64,
}

impl PartialEq for Timing {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub spec: SweepSpec,
    /// Per-item records; `None` in counts-only mode.
    pub rows: Option<Vec<PairRecord>>,
    pub summary: Summary,
    pub mismatches: Vec<PairRecord>,
    /// Branch tag (or `-`) to number of items.
    pub branches: BTreeMap<String, u64>,
    pub fingerprint: Fingerprint,
    #[serde(skip)]
    pub timing: Timing,
}

impl SweepReport {
    pub fn has_mismatches(&self) -> bool {
        self.summary.mismatches > 0
    }
}

struct Outcome {
    record: PairRecord,
    satisfied: bool,
    oracle_ran: bool,
    planar: bool,
}

fn planarity(ctx: &FieldCtx, f: &DoPoly, choice: OracleChoice) -> (String, Option<bool>) {
    let (qf, bf) = match choice {
        OracleChoice::Quadform => (Some(is_planar_quadform(ctx, f).planar), None),
        OracleChoice::Bruteforce => (None, Some(is_planar_bruteforce(ctx, f).planar)),
        OracleChoice::Both => (
            Some(is_planar_quadform(ctx, f).planar),
            Some(is_planar_bruteforce(ctx, f).planar),
        ),
    };
    match (qf, bf) {
        (Some(x), Some(y)) if x != y => ("conflict".into(), None),
        (Some(v), _) | (_, Some(v)) => (if v { "planar" } else { "non-planar" }.into(), Some(v)),
        (None, None) => unreachable!(),
    }
}

/// Everything the workers need, built once per sweep.
struct Plan<'a> {
    ctx: &'a FieldCtx,
    spec: &'a SweepSpec,
    template: Option<crate::dopoly::parse::DoTemplate>,
}

impl Plan<'_> {
    fn pair(&self, a: FieldElem, b: FieldElem) -> Result<Outcome> {
        let ctx = self.ctx;
        let spec = self.spec;
        let enc = |x| ctx.encode_exp(x);
        let (verdict, iff) = match &spec.family {
            Family::Cubic1 => (Some(criteria::thm_cubic1(ctx, a, b)?), true),
            Family::Cubic2 => (Some(criteria::thm_cubic2(ctx, a, b)?), true),
            Family::Quartic => (Some(criteria::thm_quartic_sufficient(ctx, a, b)?), false),
            Family::Custom { .. } => (None, false),
            Family::Monomial | Family::PropAb => unreachable!(),
        };
        let satisfied = verdict.as_ref().is_some_and(|v| v.satisfied);
        let f = match &self.template {
            Some(t) => t.instantiate(ctx, a, b),
            None => spec.family.poly(ctx, a, b)?,
        };
        let run = !matches!(spec.family, Family::Quartic) || satisfied || spec.full_oracle;
        let (oracle, planar) = if run { planarity(ctx, &f, spec.oracle) } else { ("skipped".into(), None) };
        let conflict = run && planar.is_none();
        let agree = !conflict
            && match planar {
                None => true,
                Some(pl) if iff => pl == satisfied,
                Some(pl) => verdict.is_none() || !satisfied || pl,
            };
        let criterion = match &verdict {
            None => "-",
            Some(v) if v.satisfied => "sat",
            Some(_) if iff => "unsat",
            Some(_) => "no-claim",
        };
        Ok(Outcome {
            record: PairRecord {
                a: enc(a),
                b: enc(b),
                criterion: criterion.into(),
                branch: verdict.map_or_else(|| "-".into(), |v| v.branch_label()),
                oracle,
                agree,
            },
            satisfied,
            oracle_ran: run,
            planar: planar == Some(true),
        })
    }

    fn monomial(&self, k: u32) -> Result<Outcome> {
        let ctx = self.ctx;
        let satisfied = criteria::monomial_planar_criterion(k, ctx.n());
        let f = criteria::monomial_poly(ctx, k)?;
        let (oracle, planar) = planarity(ctx, &f, self.spec.oracle);
        let agree = planar.is_some_and(|pl| !satisfied || pl);
        Ok(Outcome {
            record: PairRecord {
                a: format!("k={k}"),
                b: "-".into(),
                criterion: if satisfied { "sat" } else { "no-claim" }.into(),
                branch: if satisfied { criteria::Branch::MonomialOdd.tag() } else { "-" }.into(),
                oracle,
                agree,
            },
            satisfied,
            oracle_ran: true,
            planar: planar == Some(true),
        })
    }

    /// One record per `r ∈ F_q`.
    fn prop_ab(&self, a: FieldElem, b: FieldElem, rs: &[FieldElem]) -> Result<Vec<Outcome>> {
        let ctx = self.ctx;
        let values = criteria::prop_ab_values(ctx, a, b);
        rs.iter()
            .map(|&r| {
                let crit = criteria::prop_ab_criterion(ctx, a, b, r)?;
                let zero_free = !values[ctx.neg(r).index() as usize];
                let label = |v: bool| if v { "no-zero" } else { "zero" };
                Ok(Outcome {
                    record: PairRecord {
                        a: ctx.encode_exp(a),
                        b: ctx.encode_exp(b),
                        criterion: label(crit).into(),
                        branch: format!("r={}", ctx.encode_exp(r)),
                        oracle: label(zero_free).into(),
                        agree: crit == zero_free,
                    },
                    satisfied: crit,
                    oracle_ran: true,
                    planar: zero_free,
                })
            })
            .collect()
    }
}

/// Largest number of pairs a single sweep will visit.
pub const MAX_PAIRS: u64 = 1 << 28;

/// Pair indices `log a · (Q-1) + log b` to visit, ascending.
fn pair_indices(mode: Mode, units: u64) -> Result<Vec<u64>> {
    let total = units * units;
    match mode {
        Mode::Exhaustive if total > MAX_PAIRS => Err(Error::Spec(format!(
            "{total} pairs exceed the exhaustive limit of {MAX_PAIRS}; use --sample"
        ))),
        Mode::Exhaustive => Ok((0..total).collect()),
        Mode::Sample { count, seed } => {
            if count > total {
                return Err(Error::Spec(format!("sample of {count} exceeds the {total} available pairs")));
            }
            if count > MAX_PAIRS {
                return Err(Error::Spec(format!("sample of {count} exceeds the limit of {MAX_PAIRS}")));
            }
            let total = usize::try_from(total).map_err(|_| Error::Spec("pair space too large".into()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut idx: Vec<u64> = rand::seq::index::sample(&mut rng, total, count as usize)
                .into_iter()
                .map(|i| i as u64)
                .collect();
            idx.sort_unstable();
            Ok(idx)
        }
    }
}

/// Runs `spec` and aggregates a report.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepReport> {
    if spec.workers == 0 {
        return Err(Error::Spec("workers must be at least 1".into()));
    }
    let ctx = crate::field::build_field(spec.p, spec.m, spec.n)?;
    spec.family.check_ctx(&ctx)?;
    let template = match &spec.family {
        Family::Custom { template } => Some(parse_template(&ctx, template)?),
        _ => None,
    };
    if matches!(spec.family, Family::Monomial) && spec.mode != Mode::Exhaustive {
        return Err(Error::Spec("the monomial family is always swept exhaustively".into()));
    }
    let plan = Plan { ctx: &ctx, spec, template };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()
        .map_err(|e| Error::Spec(format!("thread pool: {e}")))?;

    let start = Instant::now();
    let units = ctx.order() - 1;
    let outcomes: Vec<Outcome> = pool.install(|| -> Result<Vec<Outcome>> {
        match &spec.family {
            Family::Monomial => (0..ctx.n()).into_par_iter().map(|k| plan.monomial(k)).collect(),
            Family::PropAb => {
                let rs = ctx.subfield_elements(ctx.base_field());
                let idx = pair_indices(spec.mode, units)?;
                let nested: Vec<Vec<Outcome>> = idx
                    .par_iter()
                    .map(|&i| plan.prop_ab(ctx.exp_gen(i / units), ctx.exp_gen(i % units), &rs))
                    .collect::<Result<_>>()?;
                Ok(nested.into_iter().flatten().collect())
            }
            _ => pair_indices(spec.mode, units)?
                .par_iter()
                .map(|&i| plan.pair(ctx.exp_gen(i / units), ctx.exp_gen(i % units)))
                .collect(),
        }
    })?;
    let seconds = start.elapsed().as_secs_f64();

    let mut summary = Summary::default();
    let mut branches = BTreeMap::new();
    let mut mismatches = Vec::new();
    for o in &outcomes {
        summary.examined += 1;
        summary.criterion_satisfied += o.satisfied as u64;
        summary.oracle_runs += o.oracle_ran as u64;
        summary.planar += o.planar as u64;
        if o.planar && !o.satisfied && o.record.criterion == "no-claim" {
            summary.uncovered_planar += 1;
        }
        if o.record.agree {
            summary.agreements += 1;
        } else {
            summary.mismatches += 1;
            mismatches.push(o.record.clone());
        }
        if !matches!(spec.family, Family::PropAb) {
            *branches.entry(o.record.branch.clone()).or_insert(0) += 1;
        }
    }
    if matches!(spec.family, Family::PropAb) {
        branches.insert("no-zero".into(), summary.criterion_satisfied);
        branches.insert("zero".into(), summary.examined - summary.criterion_satisfied);
    }
    let examined = summary.examined as f64;
    let rows = (!spec.counts_only).then(|| outcomes.into_iter().map(|o| o.record).collect());
    Ok(SweepReport {
        spec: spec.clone(),
        fingerprint: Fingerprint::of(&ctx),
        rows,
        summary,
        mismatches,
        branches,
        timing: Timing {
            seconds,
            pairs_per_second: if seconds > 0.0 { examined / seconds } else { 0.0 },
        },
    })
}

/// Exhaustive sweep of `(A, B, r) ∈ F_{q^3}^* × F_{q^3}^* × F_q` comparing the
/// closed-form zero-avoidance criterion against a scan of every `x`.
pub fn run_propab_sweep(p: u32, m: u32, workers: usize) -> Result<SweepReport> {
    let mut spec = SweepSpec::new(p, m, 3, Family::PropAb);
    spec.oracle = OracleChoice::Bruteforce;
    spec.workers = workers;
    run_sweep(&spec)
}
