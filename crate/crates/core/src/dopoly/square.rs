//! Squares of linearized polynomials inside the DO world.
//!
//! `L(x)^2 = Σ c_i^2 x^{2q^i} + Σ_{i>j} 2 c_i c_j x^{q^i+q^j}`, so `f = L^2`
//! can be read off the diagonal coefficients. The quartic probe asks the
//! weaker question whether `L_0(f(x)) = L_1(x)^2` for linearized
//! permutations `L_0` and `L_1 = αx^{q^2} + βx`.

use super::{tri, DoPoly, LinearizedPoly};
use crate::error::{invalid, Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// Finds `L` with `f(x) = L(x)^2`. The first nonzero coefficient of `L` is
/// the lexicographically smaller square root, which fixes the global sign.
pub fn linearized_square_decompose(ctx: &FieldCtx, f: &DoPoly) -> Option<LinearizedPoly> {
    let n = f.n();
    let Some(j0) = (0..n).find(|&i| !f.coeff(i, i).is_zero()) else {
        return f.is_zero().then(|| LinearizedPoly::new(vec![ctx.zero(); n]));
    };
    let lead = ctx.sqrt(f.coeff(j0, j0))?;
    let denom = ctx.inv(ctx.mul(ctx.from_int(2), lead));
    let c: Vec<FieldElem> = (0..n)
        .map(|i| if i == j0 { lead } else { ctx.mul(f.coeff(i, j0), denom) })
        .collect();
    let two = ctx.from_int(2);
    let ok = (0..n).all(|i| {
        ctx.mul(c[i], c[i]) == f.coeff(i, i)
            && (0..i).all(|j| ctx.mul(two, ctx.mul(c[i], c[j])) == f.coeff(i, j))
    });
    ok.then(|| LinearizedPoly::new(c))
}

/// A pair `(L_0, L_1 = αx^{q^2} + βx)` of linearized permutations with
/// `L_0(f(x)) = L_1(x)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareEquivalence {
    pub alpha: FieldElem,
    pub beta: FieldElem,
    pub l0: LinearizedPoly,
}

fn flat(f: &DoPoly) -> Vec<FieldElem> {
    let n = f.n();
    (0..n).flat_map(|i| (0..=i).map(move |j| (i, j))).map(|(i, j)| f.coeff(i, j)).collect()
}

/// Columns `k` = DO coefficients of `x^{q^k} ∘ f`, as rows × columns.
fn left_composition_matrix(ctx: &FieldCtx, f: &DoPoly) -> Vec<Vec<FieldElem>> {
    let n = f.n();
    let cols: Vec<Vec<FieldElem>> = (0..n)
        .map(|k| {
            let mut e = vec![ctx.zero(); n];
            e[k] = ctx.one();
            flat(&f.compose_left(ctx, &LinearizedPoly::new(e)))
        })
        .collect();
    (0..cols[0].len()).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
}

/// Reduced row echelon form over the first `ncols` columns; returns pivot
/// columns in row order.
fn rref(ctx: &FieldCtx, rows: &mut [Vec<FieldElem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = ctx.inv(rows[r][col]);
        for v in rows[r].iter_mut() {
            *v = ctx.mul(*v, inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let fac = rows[i][col];
                for k in 0..rows[i].len() {
                    let t = ctx.mul(fac, rows[r][k]);
                    rows[i][k] = ctx.sub(rows[i][k], t);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn check_quartic_ctx(ctx: &FieldCtx) -> Result<()> {
    if ctx.n() != 4 {
        return invalid(format!("quartic probe needs n = 4, field has n = {}", ctx.n()));
    }
    Ok(())
}

/// Exhaustive search over all `(α, β)` for a pair `L_0(f(x)) = L_1(x)^2`
/// with `L_1 = αx^{q^2} + βx`.
///
/// For each `(α, β)` the coefficient system `L_0 ∘ f = L_1^2` is linear in
/// the coefficients of `L_0`; it is solved through a precomputed left
/// inverse of the composition matrix.
pub fn square_equiv_scan(ctx: &FieldCtx, f: &DoPoly) -> Result<Option<SquareEquivalence>> {
    check_quartic_ctx(ctx)?;
    let n = 4;
    let phi = left_composition_matrix(ctx, f);
    let nrows = phi.len();
    // [Φ | I] reduced on Φ's columns leaves the row operations in the right block.
    let mut aug: Vec<Vec<FieldElem>> = phi
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..nrows).map(|s| if s == r { ctx.one() } else { ctx.zero() }));
            v
        })
        .collect();
    let pivots = rref(ctx, &mut aug, n);
    if pivots.len() < n {
        return Err(Error::Unsupported(
            "composition system is not injective in L_0 (zero x^2 coefficient)".into(),
        ));
    }
    let ops: Vec<Vec<FieldElem>> = aug.iter().map(|row| row[n..].to_vec()).collect();
    let support = [tri(0, 0), tri(2, 0), tri(2, 2)];
    let two = ctx.from_int(2);

    for alpha in ctx.elements() {
        for beta in ctx.elements() {
            if alpha.is_zero() && beta.is_zero() {
                continue;
            }
            let t = [ctx.mul(beta, beta), ctx.mul(two, ctx.mul(alpha, beta)), ctx.mul(alpha, alpha)];
            let solve_row = |r: usize| {
                support
                    .iter()
                    .zip(&t)
                    .fold(ctx.zero(), |acc, (&s, &ts)| ctx.add(acc, ctx.mul(ops[r][s], ts)))
            };
            if (n..nrows).any(|r| !solve_row(r).is_zero()) {
                continue;
            }
            let l0 = LinearizedPoly::new((0..n).map(solve_row).collect());
            let l1 = LinearizedPoly::new(vec![beta, ctx.zero(), alpha, ctx.zero()]);
            if l0.is_permutation(ctx) && l1.is_permutation(ctx) {
                return Ok(Some(SquareEquivalence { alpha, beta, l0 }));
            }
        }
    }
    Ok(None)
}

/// Decides whether `x^{q^3+q} + a x^{q^2+1} + b x^2` admits linearized
/// permutations with `L_0(f(x)) = L_1(x)^2`, `L_1 = αx^{q^2} + βx`.
///
/// Matching the coefficients of the monomials outside `x^2, x^{q^2+1},
/// x^{2q^2}` is a homogeneous linear system in `L_0`. When every solution
/// satisfies `L_0(1) = 0`, no `L_0` is a permutation and the answer is
/// `false` without touching `(α, β)`; otherwise the exhaustive scan decides.
/// Only prime `q` is accepted.
pub fn quartic_square_equiv_probe(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<bool> {
    check_quartic_ctx(ctx)?;
    if a.is_zero() || b.is_zero() {
        return invalid("quartic family needs nonzero a and b");
    }
    if ctx.m() != 1 {
        return Err(Error::Unsupported("square-equivalence probe requires prime q".into()));
    }
    let f = crate::criteria::Family::Quartic.poly(ctx, a, b)?;
    let phi = left_composition_matrix(ctx, &f);
    let support = [tri(0, 0), tri(2, 0), tri(2, 2)];
    let mut off: Vec<Vec<FieldElem>> = phi
        .iter()
        .enumerate()
        .filter(|(r, _)| !support.contains(r))
        .map(|(_, row)| row.clone())
        .collect();
    let pivots = rref(ctx, &mut off, 4);
    let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
    let kernel_basis = free.iter().map(|&fc| {
        let mut v = vec![ctx.zero(); 4];
        v[fc] = ctx.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(off[row][fc]);
        }
        v
    });
    let mut forced = true;
    for v in kernel_basis {
        let at_one = v.iter().fold(ctx.zero(), |acc, &c| ctx.add(acc, c));
        if !at_one.is_zero() {
            forced = false;
        }
    }
    if forced {
        return Ok(false);
    }
    Ok(square_equiv_scan(ctx, &f)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    #[test]
    fn decompose_examples() {
        let ctx = build_field(3, 1, 3).unwrap();
        let sq = DoPoly::monomial(3, 0, 0, ctx.one());
        let l = linearized_square_decompose(&ctx, &sq).unwrap();
        assert_eq!(l.coeffs(), &[ctx.one(), ctx.zero(), ctx.zero()]);

        // x^{q+1} + x^{2q} + x^2 = (2x^q + x)^2 over F_3
        let one = ctx.one();
        let f = DoPoly::from_terms(&ctx, &[(1, 0, one), (1, 1, one), (0, 0, one)]).unwrap();
        let l = linearized_square_decompose(&ctx, &f).unwrap();
        assert_eq!(l.coeffs(), &[ctx.one(), ctx.from_int(2), ctx.zero()]);

        let xq1 = DoPoly::monomial(3, 1, 0, ctx.one());
        assert!(linearized_square_decompose(&ctx, &xq1).is_none());
    }

    #[test]
    fn decompose_matches_exhaustive_l_scan() {
        // Every L over F_27 squared, and every returned decomposition checked.
        let ctx = build_field(3, 1, 3).unwrap();
        let xq1 = DoPoly::monomial(3, 1, 0, ctx.one());
        let els: Vec<FieldElem> = ctx.elements().collect();
        for &c0 in &els {
            for &c1 in &els {
                for &c2 in els.iter().step_by(5) {
                    let l = LinearizedPoly::new(vec![c0, c1, c2]);
                    let sq = DoPoly::monomial(3, 0, 0, ctx.one()).compose_right(&ctx, &l);
                    assert_ne!(sq, xq1);
                    let d = linearized_square_decompose(&ctx, &sq).unwrap();
                    let back = DoPoly::monomial(3, 0, 0, ctx.one()).compose_right(&ctx, &d);
                    assert_eq!(back, sq);
                }
            }
        }
    }

    #[test]
    fn probe_rejects_bad_input() {
        let ctx = build_field(3, 1, 4).unwrap();
        assert!(quartic_square_equiv_probe(&ctx, ctx.zero(), ctx.one()).is_err());
        assert!(quartic_square_equiv_probe(&ctx, ctx.one(), ctx.zero()).is_err());
        let cubic = build_field(3, 1, 3).unwrap();
        assert!(quartic_square_equiv_probe(&cubic, cubic.one(), cubic.one()).is_err());
    }

    #[test]
    fn scan_finds_the_trivial_equivalence() {
        // f = x^2 itself is equivalent to x^2 (L_0 = L_1 = id), so the scan
        // must find something; a sanity check of the solver.
        let ctx = build_field(3, 1, 4).unwrap();
        let sq = DoPoly::monomial(4, 0, 0, ctx.one());
        let found = square_equiv_scan(&ctx, &sq).unwrap().unwrap();
        let lhs = sq.compose_left(&ctx, &found.l0);
        let l1 = LinearizedPoly::new(vec![found.beta, ctx.zero(), found.alpha, ctx.zero()]);
        let rhs = DoPoly::monomial(4, 0, 0, ctx.one()).compose_right(&ctx, &l1);
        assert_eq!(lhs, rhs);
    }
}
