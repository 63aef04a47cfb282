//! Closed-form planarity criteria for the trinomial families, the
//! zero-avoidance criterion for `Tr(Ax^{q-1} + Bx^{1-q}) + r`, the
//! nondegeneracy formulas for `ax^{q+1} + bx^2`, and the monomial rule.
//!
//! Unless stated otherwise `Tr` and `N` are relative to `F_q`; the quartic
//! criterion uses `Tr`, `N` from `F_{q^4}` down to `F_{q^2}`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dopoly::DoPoly;
use crate::error::{invalid, Error, Result};
use crate::field::{FieldCtx, FieldElem, Subfield};

/// Coefficient families swept by the search driver.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `x^{q^2+1} + a x^{q+1} + b x^2` over `F_{q^3}`.
    Cubic1,
    /// `x^{q+1} + a x^{2q} + b x^2` over `F_{q^3}`.
    Cubic2,
    /// `x^{q^3+q} + a x^{q^2+1} + b x^2` over `F_{q^4}`.
    Quartic,
    /// `x^{q^k+1}` for `0 ≤ k < n`.
    Monomial,
    /// `Tr(A x^{q-1} + B x^{1-q}) + r` over `F_{q^3}`, swept over `(A, B, r)`.
    PropAb,
    /// Any DO template in the placeholders `a`, `b`.
    Custom { template: String },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cubic1 => "cubic1",
            Family::Cubic2 => "cubic2",
            Family::Quartic => "quartic",
            Family::Monomial => "monomial",
            Family::PropAb => "prop-ab",
            Family::Custom { .. } => "custom",
        }
    }

    /// Extension degree the family lives in, if it is fixed.
    pub fn required_n(&self) -> Option<u32> {
        match self {
            Family::Cubic1 | Family::Cubic2 | Family::PropAb => Some(3),
            Family::Quartic => Some(4),
            Family::Monomial | Family::Custom { .. } => None,
        }
    }

    pub fn check_ctx(&self, ctx: &FieldCtx) -> Result<()> {
        match self.required_n() {
            Some(n) if n != ctx.n() => Err(Error::Spec(format!(
                "family {} needs n = {n}, got n = {}",
                self.name(),
                ctx.n()
            ))),
            _ => Ok(()),
        }
    }

    /// The family member with parameters `(a, b)`.
    pub fn poly(&self, ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<DoPoly> {
        self.check_ctx(ctx)?;
        let one = ctx.one();
        match self {
            Family::Cubic1 => DoPoly::from_terms(ctx, &[(2, 0, one), (1, 0, a), (0, 0, b)]),
            Family::Cubic2 => DoPoly::from_terms(ctx, &[(1, 0, one), (1, 1, a), (0, 0, b)]),
            Family::Quartic => DoPoly::from_terms(ctx, &[(3, 1, one), (2, 0, a), (0, 0, b)]),
            Family::Custom { template } => {
                Ok(crate::dopoly::parse::parse_template(ctx, template)?.instantiate(ctx, a, b))
            }
            Family::Monomial | Family::PropAb => Err(Error::Spec(format!(
                "family {} is not parametrised by (a, b)",
                self.name()
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `x^{q^k+1}`.
pub fn monomial_poly(ctx: &FieldCtx, k: u32) -> Result<DoPoly> {
    if k >= ctx.n() {
        return invalid(format!("monomial x^(q^{k}+1) needs k < n = {}", ctx.n()));
    }
    Ok(DoPoly::monomial(ctx.n(), k as usize, 0, ctx.one()))
}

/// Which disjunct of a criterion holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "cubic1-branch-a=b^{q+1}")]
    Cubic1Norm,
    #[serde(rename = "cubic1-branch-N(a)-2ab^{q^2}+1=0")]
    Cubic1Quadric,
    #[serde(rename = "cubic2-branch-4ab=1")]
    Cubic2Product,
    #[serde(rename = "cubic2-branch-N(a)+N(b)+ab=0")]
    Cubic2NormSum,
    #[serde(rename = "quartic-case-1")]
    QuarticCase1,
    #[serde(rename = "quartic-case-2")]
    QuarticCase2,
    #[serde(rename = "monomial-odd-quotient")]
    MonomialOdd,
}

impl Branch {
    pub fn tag(self) -> &'static str {
        match self {
            Branch::Cubic1Norm => "cubic1-branch-a=b^{q+1}",
            Branch::Cubic1Quadric => "cubic1-branch-N(a)-2ab^{q^2}+1=0",
            Branch::Cubic2Product => "cubic2-branch-4ab=1",
            Branch::Cubic2NormSum => "cubic2-branch-N(a)+N(b)+ab=0",
            Branch::QuarticCase1 => "quartic-case-1",
            Branch::QuarticCase2 => "quartic-case-2",
            Branch::MonomialOdd => "monomial-odd-quotient",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub satisfied: bool,
    /// Every disjunct that holds; empty iff `!satisfied`.
    pub branches: Vec<Branch>,
    /// The `θ ∈ F_{q^2}^*` found for the second quartic case.
    pub witness: Option<FieldElem>,
}

impl CriterionVerdict {
    fn from_branches(branches: Vec<Branch>, witness: Option<FieldElem>) -> Self {
        CriterionVerdict { satisfied: !branches.is_empty(), branches, witness }
    }

    /// Branch tags joined by `|`, or `-` when none fired.
    pub fn branch_label(&self) -> String {
        if self.branches.is_empty() {
            "-".into()
        } else {
            self.branches.iter().map(|b| b.tag()).collect::<Vec<_>>().join("|")
        }
    }
}

fn need_n(ctx: &FieldCtx, n: u32) -> Result<()> {
    if ctx.n() != n {
        return invalid(format!("needs n = {n}, field has n = {}", ctx.n()));
    }
    Ok(())
}

fn need_nonzero(a: FieldElem, b: FieldElem) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return invalid("coefficients a and b must be nonzero");
    }
    Ok(())
}

fn tr(ctx: &FieldCtx, x: FieldElem, s: Subfield) -> FieldElem {
    ctx.rel_trace(x, s).expect("subfield of the context")
}

fn nm(ctx: &FieldCtx, x: FieldElem, s: Subfield) -> FieldElem {
    ctx.rel_norm(x, s).expect("subfield of the context")
}

/// Nondegeneracy of `Tr(a x^{q+1} + b x^2)`: `Tr(a)^2 - 4N(b) ≠ 0` for
/// `n = 2`, `4N(b) + N(a) - Tr(a^2 b^{q^2}) ≠ 0` for `n = 3`.
pub fn lemma_nondeg(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<bool> {
    need_nonzero(a, b)?;
    let fq = ctx.base_field();
    let four = ctx.from_int(4);
    let v = match ctx.n() {
        2 => {
            let t = tr(ctx, a, fq);
            ctx.sub(ctx.mul(t, t), ctx.mul(four, nm(ctx, b, fq)))
        }
        3 => {
            let inner = ctx.mul(ctx.mul(a, a), ctx.frobenius(b, 2));
            ctx.sub(ctx.add(ctx.mul(four, nm(ctx, b, fq)), nm(ctx, a, fq)), tr(ctx, inner, fq))
        }
        n => return Err(Error::Unsupported(format!("closed-form nondegeneracy only for n = 2, 3 (got {n})"))),
    };
    Ok(!v.is_zero())
}

/// How often each `(Tr(α), N(α)) ∈ F_q × F_q^*` occurs for `α ∈ F_{q^3}^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrNormCoverage {
    /// Every target attained.
    pub surjective: bool,
    /// `((r, s), count)` with `r` then `s` in subfield enumeration order.
    pub counts: Vec<((FieldElem, FieldElem), u64)>,
}

pub fn lemma_trn_surjectivity(ctx: &FieldCtx) -> Result<TrNormCoverage> {
    need_n(ctx, 3)?;
    let fq = ctx.base_field();
    let mut hits: HashMap<(FieldElem, FieldElem), u64> = HashMap::new();
    for alpha in ctx.elements().skip(1) {
        *hits.entry((tr(ctx, alpha, fq), nm(ctx, alpha, fq))).or_default() += 1;
    }
    let sub = ctx.subfield_elements(fq);
    let counts: Vec<_> = sub
        .iter()
        .flat_map(|&r| sub.iter().skip(1).map(move |&s| (r, s)))
        .map(|key| (key, hits.get(&key).copied().unwrap_or(0)))
        .collect();
    let surjective = counts.iter().all(|&(_, c)| c > 0);
    Ok(TrNormCoverage { surjective, counts })
}

fn check_prop_ab(ctx: &FieldCtx, a: FieldElem, b: FieldElem, r: FieldElem) -> Result<()> {
    need_n(ctx, 3)?;
    if a.is_zero() || b.is_zero() {
        return invalid("A and B must be nonzero");
    }
    if !ctx.contains(ctx.base_field(), r) {
        return invalid("r must lie in F_q");
    }
    Ok(())
}

/// True iff `Tr(A x^{q-1} + B x^{1-q}) + r` has no zero on `F_{q^3}^*`,
/// decided by `r·A·B = N(A) + N(B)` and `r ≠ 0`.
pub fn prop_ab_criterion(ctx: &FieldCtx, a: FieldElem, b: FieldElem, r: FieldElem) -> Result<bool> {
    check_prop_ab(ctx, a, b, r)?;
    let fq = ctx.base_field();
    let lhs = ctx.mul(r, ctx.mul(a, b));
    Ok(!r.is_zero() && lhs == ctx.add(nm(ctx, a, fq), nm(ctx, b, fq)))
}

/// The set of values `Tr(A x^{q-1} + B x^{1-q})` over `x ∈ F_{q^3}^*`, as a
/// membership table indexed by packed element.
pub(crate) fn prop_ab_values(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Vec<bool> {
    let fq = ctx.base_field();
    let q = ctx.q() as i64;
    let mut hit = vec![false; ctx.order() as usize];
    for x in ctx.elements().skip(1) {
        let u = ctx.pow_signed(x, q - 1);
        let v = ctx.add(ctx.mul(a, u), ctx.mul(b, ctx.inv(u)));
        hit[tr(ctx, v, fq).index() as usize] = true;
    }
    hit
}

/// Same question as [`prop_ab_criterion`], answered by scanning every `x`.
pub fn prop_ab_bruteforce(ctx: &FieldCtx, a: FieldElem, b: FieldElem, r: FieldElem) -> Result<bool> {
    check_prop_ab(ctx, a, b, r)?;
    let values = prop_ab_values(ctx, a, b);
    Ok(!values[ctx.neg(r).index() as usize])
}

/// `x^{q^2+1} + a x^{q+1} + b x^2` is planar on `F_{q^3}` iff
/// `a = b^{q+1}` with `N(b) ≠ 1`, or `N(a) - 2ab^{q^2} + 1 = 0` with `N(a)^2 ≠ 1`.
pub fn thm_cubic1(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<CriterionVerdict> {
    need_n(ctx, 3)?;
    need_nonzero(a, b)?;
    let fq = ctx.base_field();
    let one = ctx.one();
    let na = nm(ctx, a, fq);
    let mut branches = Vec::new();
    if a == ctx.mul(ctx.frobenius(b, 1), b) && nm(ctx, b, fq) != one {
        branches.push(Branch::Cubic1Norm);
    }
    let quadric = ctx.add(ctx.sub(na, ctx.mul(ctx.from_int(2), ctx.mul(a, ctx.frobenius(b, 2)))), one);
    if quadric.is_zero() && ctx.mul(na, na) != one {
        branches.push(Branch::Cubic1Quadric);
    }
    Ok(CriterionVerdict::from_branches(branches, None))
}

/// `x^{q+1} + a x^{2q} + b x^2` is planar on `F_{q^3}` iff `4ab = 1` with
/// `N(2a) ≠ -1`, or `4ab ≠ 1` with `N(a) + N(b) + ab = 0`.
pub fn thm_cubic2(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<CriterionVerdict> {
    need_n(ctx, 3)?;
    need_nonzero(a, b)?;
    let fq = ctx.base_field();
    let ab = ctx.mul(a, b);
    let four_ab_is_one = ctx.mul(ctx.from_int(4), ab) == ctx.one();
    let mut branches = Vec::new();
    if four_ab_is_one {
        if nm(ctx, ctx.mul(ctx.from_int(2), a), fq) != ctx.from_int(-1) {
            branches.push(Branch::Cubic2Product);
        }
    } else if ctx.add(ctx.add(nm(ctx, a, fq), nm(ctx, b, fq)), ab).is_zero() {
        branches.push(Branch::Cubic2NormSum);
    }
    Ok(CriterionVerdict::from_branches(branches, None))
}

/// The three clauses that a candidate `θ` must satisfy in the second quartic
/// case, given `N(a)` and `N(b)` relative to `F_{q^2}`.
pub fn quartic_theta_holds(ctx: &FieldCtx, na: FieldElem, nb: FieldElem, theta: FieldElem) -> bool {
    let q = ctx.q() as i64;
    let f2 = ctx.subfield(2).expect("n = 4");
    if theta.is_zero() || !ctx.contains(f2, theta) {
        return false;
    }
    let sign = if ((q - 1) / 2) % 2 == 0 { ctx.one() } else { ctx.from_int(-1) };
    nb == ctx.sub(na, ctx.pow_signed(theta, 1 - q))
        && ctx.pow(theta, ((q * q - 1) / 2) as u64) == sign
        && ctx.is_nonzero_square(ctx.mul(nb, theta), f2).expect("in F_{q^2}")
}

/// Sufficient conditions for `x^{q^3+q} + a x^{q^2+1} + b x^2` to be planar
/// on `F_{q^4}`. An unsatisfied verdict makes no claim.
///
/// Case 1: `t = Tr(a) ≠ 0`, `N(b) = N(a) - t^{1-q}`, `1 - 4t^{-1-q}` a
/// nonzero square in `F_q` and `N(b)t` a nonzero square in `F_{q^2}`.
/// Case 2: `Tr(a) = 0` and some `θ ∈ F_{q^2}^*` has `N(b) = N(a) - θ^{1-q}`,
/// `θ^{(q^2-1)/2} = (-1)^{(q-1)/2}` and `N(b)θ` a nonzero square in
/// `F_{q^2}`. The first such `θ` in generator-exponent order is returned.
pub fn thm_quartic_sufficient(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<CriterionVerdict> {
    need_n(ctx, 4)?;
    need_nonzero(a, b)?;
    let q = ctx.q() as i64;
    let fq = ctx.base_field();
    let f2 = ctx.subfield(2)?;
    let t = tr(ctx, a, f2);
    let na = nm(ctx, a, f2);
    let nb = nm(ctx, b, f2);
    let square = |x: FieldElem, s: Subfield| ctx.is_nonzero_square(x, s).expect("subfield element");

    if !t.is_zero() {
        let case1 = nb == ctx.sub(na, ctx.pow_signed(t, 1 - q))
            && square(ctx.sub(ctx.one(), ctx.mul(ctx.from_int(4), ctx.pow_signed(t, -1 - q))), fq)
            && square(ctx.mul(nb, t), f2);
        let branches = if case1 { vec![Branch::QuarticCase1] } else { vec![] };
        return Ok(CriterionVerdict::from_branches(branches, None));
    }
    let step = (ctx.order() - 1) / (f2.order() - 1);
    let theta = (0..f2.order() - 1)
        .map(|k| ctx.exp_gen(k * step))
        .find(|&th| quartic_theta_holds(ctx, na, nb, th));
    let branches = if theta.is_some() { vec![Branch::QuarticCase2] } else { vec![] };
    Ok(CriterionVerdict::from_branches(branches, theta))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// `x^{q^k+1}` is planar on `F_{q^n}` when `n / gcd(k, n)` is odd.
pub fn monomial_planar_criterion(k: u32, n: u32) -> bool {
    n > 0 && (n / gcd(k, n)) % 2 == 1
}
