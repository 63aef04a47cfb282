//! Exact additive character sums `S(b) = Σ_t ψ(f(t) - bt)` with
//! `ψ(x) = ζ_p^{AbsTr(x)}`.

use super::DoPoly;
use crate::cyclotomic::CycInt;
use crate::field::{FieldCtx, FieldElem};

fn abs_trace(ctx: &FieldCtx, table: Option<&[FieldElem]>, x: FieldElem) -> usize {
    let t = match table {
        Some(t) => t[x.index() as usize],
        None => ctx.rel_trace(x, ctx.prime_field()).expect("prime field"),
    };
    // prime-field elements pack to their residue
    t.index() as usize
}

/// `Σ_{t ∈ F} ζ_p^{AbsTr(f(t) - b t)}` as an exact cyclotomic integer.
pub fn char_sum(ctx: &FieldCtx, f: &DoPoly, b: FieldElem) -> CycInt {
    let table = ctx.trace_table(ctx.prime_field()).expect("prime field");
    let mut counts = vec![0i64; ctx.p() as usize];
    for t in ctx.elements() {
        let v = ctx.sub(f.eval(ctx, t), ctx.mul(b, t));
        counts[abs_trace(ctx, table, v)] += 1;
    }
    CycInt::from_exponent_counts(ctx.p(), &counts).expect("p is prime")
}

/// True iff `|S(b)|^2 = |F|` for every `b`.
pub fn bent_check(ctx: &FieldCtx, f: &DoPoly) -> bool {
    let target = ctx.order() as i64;
    let table = ctx.trace_table(ctx.prime_field()).expect("prime field");
    let values: Vec<FieldElem> = ctx.elements().map(|t| f.eval(ctx, t)).collect();
    ctx.elements().all(|b| {
        let mut counts = vec![0i64; ctx.p() as usize];
        for (t, &ft) in ctx.elements().zip(&values) {
            counts[abs_trace(ctx, table, ctx.sub(ft, ctx.mul(b, t)))] += 1;
        }
        CycInt::from_exponent_counts(ctx.p(), &counts)
            .expect("p is prime")
            .norm_sq()
            .equals_integer(target)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    #[test]
    fn square_over_f3() {
        let ctx = build_field(3, 1, 1).unwrap();
        let sq = DoPoly::monomial(1, 0, 0, ctx.one());
        let s = char_sum(&ctx, &sq, ctx.zero());
        // t = 0 -> ζ^0, t = ±1 -> ζ^1
        assert_eq!(s, CycInt::from_exponent_counts(3, &[1, 2, 0]).unwrap());
        assert!(s.norm_sq().equals_integer(3));
        assert!(bent_check(&ctx, &sq));
    }

    #[test]
    fn square_bent_in_extensions() {
        for (p, m, n) in [(3, 1, 2), (3, 1, 3), (5, 1, 2)] {
            let ctx = build_field(p, m, n).unwrap();
            let sq = DoPoly::monomial(n, 0, 0, ctx.one());
            assert!(bent_check(&ctx, &sq));
        }
    }

    #[test]
    fn degenerate_binomial_not_bent() {
        let ctx = build_field(3, 1, 2).unwrap();
        let f = DoPoly::from_terms(&ctx, &[(1, 0, ctx.one()), (0, 0, ctx.one())]).unwrap();
        assert!(!bent_check(&ctx, &f));
        assert!(!char_sum(&ctx, &f, ctx.zero()).norm_sq().equals_integer(9));
    }

    #[test]
    fn character_orthogonality() {
        // Σ_t ψ(u t) = 0 for u != 0: the linear DO-free case via b = -u, f = 0.
        let ctx = build_field(3, 1, 3).unwrap();
        let zero = DoPoly::zero(3);
        for u in ctx.elements().skip(1) {
            assert!(char_sum(&ctx, &zero, ctx.neg(u)).is_zero());
        }
        assert!(char_sum(&ctx, &zero, ctx.zero()).equals_integer(27));
    }
}
