//! The two planarity oracles.
//!
//! Both scan directions/multipliers `c = g^e` in increasing exponent `e` and
//! report the first failing `c` as witness.

use serde::{Deserialize, Serialize};

use super::{DoPoly, QuadPencil};
use crate::field::{FieldCtx, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    /// First `c` at which the check failed; present iff `!planar`.
    pub witness: Option<FieldElem>,
}

impl PlanarityVerdict {
    fn from_witness(witness: Option<FieldElem>) -> Self {
        PlanarityVerdict { planar: witness.is_none(), witness }
    }
}

/// Definition-level check: for every `c ≠ 0` the linear part `Λ_c` of the
/// affine map `x ↦ f(x+c) - f(x)` must have trivial kernel. The kernel is
/// found by scanning every `x ≠ 0`, so the cost is `O(|F|^2)` evaluations.
pub fn is_planar_bruteforce(ctx: &FieldCtx, f: &DoPoly) -> PlanarityVerdict {
    let witness = (0..ctx.order() - 1)
        .map(|e| ctx.exp_gen(e))
        .find(|&c| bruteforce_witness_holds(ctx, f, c));
    PlanarityVerdict::from_witness(witness)
}

/// True iff `x ↦ f(x+c) - f(x)` fails to permute the field.
pub fn bruteforce_witness_holds(ctx: &FieldCtx, f: &DoPoly, c: FieldElem) -> bool {
    match f.diff_map(ctx, c) {
        Ok((lam, _)) => lam.kernel_scan(ctx).is_some(),
        Err(_) => false,
    }
}

/// Quadratic-form check: `f` is planar iff `Tr(c f(x))` is a nondegenerate
/// form over `F_q` for every `c ≠ 0`.
///
/// Since `Gram(f, λc) = λ Gram(f, c)` for `λ ∈ F_q^*`, only the coset
/// representatives `g^e`, `0 ≤ e < (q^n - 1)/(q - 1)`, are examined; the first
/// degenerate one is also the first degenerate `c` over all exponents.
pub fn is_planar_quadform(ctx: &FieldCtx, f: &DoPoly) -> PlanarityVerdict {
    let pencil = QuadPencil::new(ctx, f);
    let trace = ctx.trace_table(ctx.base_field()).expect("base field");
    let reps = (ctx.order() - 1) / (ctx.q() - 1);
    let witness = (0..reps)
        .map(|e| ctx.exp_gen(e))
        .find(|&c| pencil.det_at(ctx, trace, c).is_zero());
    PlanarityVerdict::from_witness(witness)
}

/// True iff `Tr(c f(x))` is degenerate.
pub fn quadform_witness_holds(ctx: &FieldCtx, f: &DoPoly, c: FieldElem) -> bool {
    match super::gram_matrix(ctx, f, c) {
        Ok(g) => !g.is_nondegenerate(ctx),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn square_is_planar_everywhere() {
        for (p, m, n) in [(3, 1, 2), (3, 1, 3), (5, 1, 2), (3, 2, 2)] {
            let ctx = build_field(p, m, n).unwrap();
            let sq = DoPoly::monomial(n, 0, 0, ctx.one());
            assert!(is_planar_bruteforce(&ctx, &sq).planar);
            assert!(is_planar_quadform(&ctx, &sq).planar);
        }
    }

    #[test]
    fn x_q_plus_1_cubic_planar_quadratic_not() {
        let ctx = build_field(3, 1, 3).unwrap();
        let f = DoPoly::monomial(3, 1, 0, ctx.one());
        assert!(is_planar_bruteforce(&ctx, &f).planar);
        assert!(is_planar_quadform(&ctx, &f).planar);

        let ctx = build_field(3, 1, 2).unwrap();
        let f = DoPoly::monomial(2, 1, 0, ctx.one());
        let bf = is_planar_bruteforce(&ctx, &f);
        let qf = is_planar_quadform(&ctx, &f);
        assert!(!bf.planar && !qf.planar);
        assert!(bruteforce_witness_holds(&ctx, &f, bf.witness.unwrap()));
        assert!(quadform_witness_holds(&ctx, &f, qf.witness.unwrap()));
    }

    #[test]
    fn cubic_all_ones_not_planar() {
        let ctx = build_field(3, 1, 3).unwrap();
        let one = ctx.one();
        let f = DoPoly::from_terms(&ctx, &[(2, 0, one), (1, 0, one), (0, 0, one)]).unwrap();
        assert!(!is_planar_quadform(&ctx, &f).planar);
        assert!(!is_planar_bruteforce(&ctx, &f).planar);
    }

    #[test]
    fn oracles_agree_on_random_polys() {
        let ctx = build_field(3, 1, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut planar = 0;
        for _ in 0..100 {
            let f = DoPoly::random(&ctx, &mut rng);
            let bf = is_planar_bruteforce(&ctx, &f);
            let qf = is_planar_quadform(&ctx, &f);
            assert_eq!(bf.planar, qf.planar, "{f:?}");
            if let Some(c) = qf.witness {
                assert!(quadform_witness_holds(&ctx, &f, c));
                // every smaller exponent is nondegenerate
                for e in 0..ctx.dlog(c).unwrap() {
                    assert!(!quadform_witness_holds(&ctx, &f, ctx.exp_gen(e)));
                }
            }
            planar += bf.planar as u32;
        }
        assert!(planar > 0);
    }
}
