//! Dembowski-Ostrom polynomials `f(x) = Σ_{0≤j≤i<n} a_ij x^{q^i+q^j}` over
//! `F_{q^n}` and the machinery used to decide their planarity.

mod charsum;
mod linearized;
mod oracle;
pub mod parse;
mod quadform;
mod square;

use rand::Rng;

use crate::error::{invalid, Result};
use crate::field::{FieldCtx, FieldElem};

pub use charsum::{bent_check, char_sum};
pub use linearized::LinearizedPoly;
pub use oracle::{
    bruteforce_witness_holds, is_planar_bruteforce, is_planar_quadform, quadform_witness_holds,
    PlanarityVerdict,
};
pub(crate) use quadform::QuadPencil;
pub use quadform::{det, gram_matrix, GramMatrix};
pub use square::{linearized_square_decompose, quartic_square_equiv_probe, square_equiv_scan, SquareEquivalence};

#[inline]
fn tri(i: usize, j: usize) -> usize {
    debug_assert!(j <= i);
    i * (i + 1) / 2 + j
}

/// A Dembowski-Ostrom polynomial with coefficients in the top field.
///
/// Coefficients are kept in a packed lower triangle; `coeff(i, j)` and
/// `coeff(j, i)` address the same term `x^{q^i+q^j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoPoly {
    n: usize,
    coeffs: Vec<FieldElem>,
}

impl DoPoly {
    pub fn zero(n: u32) -> Self {
        let n = n as usize;
        DoPoly { n, coeffs: vec![FieldElem::ZERO; n * (n + 1) / 2] }
    }

    /// `coef · x^{q^i + q^j}`.
    pub fn monomial(n: u32, i: usize, j: usize, coef: FieldElem) -> Self {
        let mut f = Self::zero(n);
        f.set_coeff(i, j, coef);
        f
    }

    /// Builds from `(i, j, a_ij)` terms; repeated index pairs are summed.
    pub fn from_terms(ctx: &FieldCtx, terms: &[(usize, usize, FieldElem)]) -> Result<Self> {
        let n = ctx.n() as usize;
        let mut f = Self::zero(ctx.n());
        for &(i, j, c) in terms {
            if i >= n || j >= n {
                return invalid(format!("term x^(q^{i}+q^{j}) needs indices below n = {n}"));
            }
            let cur = f.coeff(i, j);
            f.set_coeff(i, j, ctx.add(cur, c));
        }
        Ok(f)
    }

    /// Uniformly random coefficients.
    pub fn random<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R) -> Self {
        let mut f = Self::zero(ctx.n());
        for c in f.coeffs.iter_mut() {
            *c = ctx.from_index(rng.random_range(0..ctx.order() as u32)).unwrap();
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, i: usize, j: usize) -> FieldElem {
        let (i, j) = if i >= j { (i, j) } else { (j, i) };
        self.coeffs[tri(i, j)]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: FieldElem) {
        let (i, j) = if i >= j { (i, j) } else { (j, i) };
        assert!(i < self.n, "index {i} out of range for n = {}", self.n);
        self.coeffs[tri(i, j)] = c;
    }

    /// Nonzero terms as `(i, j, a_ij)` with `i ≥ j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, FieldElem)> + '_ {
        (0..self.n)
            .flat_map(move |i| (0..=i).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.coeffs[tri(i, j)]))
            .filter(|t| !t.2.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_ctx(&self, ctx: &FieldCtx) {
        assert_eq!(self.n, ctx.n() as usize, "polynomial and field disagree on n");
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        self.check_ctx(ctx);
        let mut buf = [FieldElem::ZERO; 8];
        let heap: Vec<FieldElem>;
        let pows: &[FieldElem] = if self.n <= buf.len() {
            for (i, slot) in buf.iter_mut().enumerate().take(self.n) {
                *slot = ctx.frobenius(x, i as i64);
            }
            &buf[..self.n]
        } else {
            heap = (0..self.n).map(|i| ctx.frobenius(x, i as i64)).collect();
            &heap
        };
        self.terms().fold(ctx.zero(), |acc, (i, j, a)| {
            ctx.add(acc, ctx.mul(a, ctx.mul(pows[i], pows[j])))
        })
    }

    /// `c · f`.
    pub fn scaled(&self, ctx: &FieldCtx, c: FieldElem) -> DoPoly {
        DoPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect(),
        }
    }

    /// Decomposes `f(x + c) - f(x) = Λ_c(x) + f(c)` into its linear part and
    /// constant.
    pub fn diff_map(&self, ctx: &FieldCtx, c: FieldElem) -> Result<(LinearizedPoly, FieldElem)> {
        self.check_ctx(ctx);
        if c.is_zero() {
            return invalid("difference map needs a nonzero direction c");
        }
        let cq: Vec<FieldElem> = (0..self.n).map(|i| ctx.frobenius(c, i as i64)).collect();
        let mut lam = vec![ctx.zero(); self.n];
        for (i, j, a) in self.terms() {
            lam[i] = ctx.add(lam[i], ctx.mul(a, cq[j]));
            lam[j] = ctx.add(lam[j], ctx.mul(a, cq[i]));
        }
        Ok((LinearizedPoly::new(lam), self.eval(ctx, c)))
    }

    /// Coefficients `b_0..b_{n-1}` with `Tr(c f(x)) = Tr(Σ_k b_k x^{q^k+1})`,
    /// obtained by raising each term to the `q^{n-j}` power under the trace.
    pub fn reduce_under_trace(&self, ctx: &FieldCtx, c: FieldElem) -> Vec<FieldElem> {
        self.check_ctx(ctx);
        let n = self.n as i64;
        let mut b = vec![ctx.zero(); self.n];
        for (i, j, a) in self.terms() {
            let t = ctx.frobenius(ctx.mul(c, a), n - j as i64);
            b[i - j] = ctx.add(b[i - j], t);
        }
        b
    }

    /// The DO polynomial `L(f(x))` for a linearized `L`: each `x^{q^k}`
    /// shifts every exponent index by `k`.
    pub fn compose_left(&self, ctx: &FieldCtx, l: &LinearizedPoly) -> DoPoly {
        self.check_ctx(ctx);
        let n = self.n;
        let mut out = DoPoly::zero(n as u32);
        for (k, &lk) in l.coeffs().iter().enumerate() {
            if lk.is_zero() {
                continue;
            }
            for (i, j, a) in self.terms() {
                let c = ctx.mul(lk, ctx.frobenius(a, k as i64));
                let (ii, jj) = ((i + k) % n, (j + k) % n);
                let cur = out.coeff(ii, jj);
                out.set_coeff(ii, jj, ctx.add(cur, c));
            }
        }
        out
    }

    /// The DO polynomial `f(L(x))`.
    pub fn compose_right(&self, ctx: &FieldCtx, l: &LinearizedPoly) -> DoPoly {
        self.check_ctx(ctx);
        let n = self.n;
        let lc = l.coeffs();
        let mut out = DoPoly::zero(n as u32);
        // L(x)^{q^i} = Σ_s lc[s]^{q^i} x^{q^{s+i}}
        let shifted = |i: usize| -> Vec<(usize, FieldElem)> {
            (0..n)
                .map(|s| ((s + i) % n, ctx.frobenius(lc[s], i as i64)))
                .filter(|t| !t.1.is_zero())
                .collect()
        };
        for (i, j, a) in self.terms() {
            let li = shifted(i);
            let lj = shifted(j);
            for &(u, cu) in &li {
                for &(v, cv) in &lj {
                    let c = ctx.mul(a, ctx.mul(cu, cv));
                    let cur = out.coeff(u, v);
                    out.set_coeff(u, v, ctx.add(cur, c));
                }
            }
        }
        out
    }
}
