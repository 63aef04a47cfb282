use rand::Rng;

use crate::field::{FieldCtx, FieldElem};

/// `L(x) = Σ_i c_i x^{q^i}`, an `F_q`-linear map of the top field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearizedPoly {
    coeffs: Vec<FieldElem>,
}

impl LinearizedPoly {
    pub fn new(coeffs: Vec<FieldElem>) -> Self {
        LinearizedPoly { coeffs }
    }

    /// `L(x) = x` over a degree-`n` extension.
    pub fn identity(ctx: &FieldCtx) -> Self {
        let mut coeffs = vec![ctx.zero(); ctx.n() as usize];
        coeffs[0] = ctx.one();
        LinearizedPoly { coeffs }
    }

    pub fn random<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R) -> Self {
        let coeffs = (0..ctx.n())
            .map(|_| ctx.from_index(rng.random_range(0..ctx.order() as u32)).unwrap())
            .collect();
        LinearizedPoly { coeffs }
    }

    /// Random linearized permutation (rejection sampling).
    pub fn random_permutation<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R) -> Self {
        loop {
            let l = Self::random(ctx, rng);
            if l.is_permutation(ctx) {
                return l;
            }
        }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(ctx.zero(), |acc, (i, &c)| {
                ctx.add(acc, ctx.mul(c, ctx.frobenius(x, i as i64)))
            })
    }

    /// Rank of `L` as an `F_p`-linear map on `F_p^{mn}`.
    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        let p = ctx.p() as u64;
        let d = ctx.degree() as usize;
        let mut rows: Vec<Vec<u64>> = (0..d as u32)
            .map(|k| {
                ctx.coeffs(self.eval(ctx, ctx.basis_elem(k)))
                    .into_iter()
                    .map(u64::from)
                    .collect()
            })
            .collect();
        rank_mod_p(&mut rows, p)
    }

    /// Trivial kernel, decided by rank.
    pub fn is_permutation(&self, ctx: &FieldCtx) -> bool {
        self.rank(ctx) == ctx.degree() as usize
    }

    /// First nonzero kernel element in packed-index order, by exhaustive scan.
    pub fn kernel_scan(&self, ctx: &FieldCtx) -> Option<FieldElem> {
        ctx.elements().skip(1).find(|&x| self.eval(ctx, x).is_zero())
    }
}

pub(crate) fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col] * inv % p;
                for (x, &y) in row[col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut e) = (1, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    #[test]
    fn identity_and_trace_map() {
        let ctx = build_field(3, 1, 3).unwrap();
        assert!(LinearizedPoly::identity(&ctx).is_permutation(&ctx));
        // x^q - x kills F_q
        let l = LinearizedPoly::new(vec![ctx.from_int(-1), ctx.one(), ctx.zero()]);
        assert!(!l.is_permutation(&ctx));
        assert_eq!(l.rank(&ctx), 2);
        assert_eq!(l.kernel_scan(&ctx), Some(ctx.one()));
    }

    #[test]
    fn norm_minus_one_kills_2ax_q_plus_x() {
        // 2a x^q + x has a kernel iff N(2a) = -1.
        let ctx = build_field(3, 1, 3).unwrap();
        let fq = ctx.base_field();
        let two = ctx.from_int(2);
        let mut seen_bad = 0;
        for a in ctx.elements().skip(1) {
            let ta = ctx.mul(two, a);
            let l = LinearizedPoly::new(vec![ctx.one(), ta, ctx.zero()]);
            let norm_is_minus_one = ctx.rel_norm(ta, fq).unwrap() == ctx.from_int(-1);
            assert_eq!(!l.is_permutation(&ctx), norm_is_minus_one);
            assert_eq!(l.kernel_scan(&ctx).is_some(), norm_is_minus_one);
            seen_bad += norm_is_minus_one as u32;
        }
        assert_eq!(seen_bad, 13);
    }

    #[test]
    fn rank_agrees_with_scan() {
        use rand::SeedableRng;
        let ctx = build_field(3, 2, 2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let l = LinearizedPoly::random(&ctx, &mut rng);
            assert_eq!(l.is_permutation(&ctx), l.kernel_scan(&ctx).is_none());
        }
    }

    #[test]
    fn linear_over_base_field() {
        let ctx = build_field(5, 1, 2).unwrap();
        let l = LinearizedPoly::new(vec![ctx.exp_gen(3), ctx.exp_gen(7)]);
        for lam in ctx.subfield_elements(ctx.base_field()) {
            for x in ctx.elements() {
                assert_eq!(l.eval(&ctx, ctx.mul(lam, x)), ctx.mul(lam, l.eval(&ctx, x)));
            }
        }
    }
}
