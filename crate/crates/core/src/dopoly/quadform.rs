//! Gram matrices of the quadratic forms `Q_c(x) = Tr_{q^n/q}(c f(x))`.

use serde::{Deserialize, Serialize};

use super::DoPoly;
use crate::error::{invalid, Result};
use crate::field::{FieldCtx, FieldElem};

/// Symmetric `n × n` matrix with entries in `F_q` (stored as top-field
/// elements), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramMatrix {
    n: usize,
    entries: Vec<FieldElem>,
}

impl GramMatrix {
    pub fn from_rows(n: usize, entries: Vec<FieldElem>) -> Self {
        assert_eq!(entries.len(), n * n);
        GramMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn det(&self, ctx: &FieldCtx) -> FieldElem {
        let mut scratch = self.entries.clone();
        det(ctx, &mut scratch, self.n)
    }

    pub fn is_nondegenerate(&self, ctx: &FieldCtx) -> bool {
        !self.det(ctx).is_zero()
    }
}

/// Determinant by Gaussian elimination; `a` is clobbered.
pub fn det(ctx: &FieldCtx, a: &mut [FieldElem], n: usize) -> FieldElem {
    let mut acc = ctx.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
            return ctx.zero();
        };
        if piv != col {
            for c in col..n {
                a.swap(piv * n + c, col * n + c);
            }
            acc = ctx.neg(acc);
        }
        let pv = a[col * n + col];
        acc = ctx.mul(acc, pv);
        let inv = ctx.inv(pv);
        for r in col + 1..n {
            let lead = a[r * n + col];
            if lead.is_zero() {
                continue;
            }
            let f = ctx.mul(lead, inv);
            for c in col + 1..n {
                let t = ctx.mul(f, a[col * n + c]);
                a[r * n + c] = ctx.sub(a[r * n + c], t);
            }
        }
    }
    acc
}

/// Gram matrix of `Q_c(x) = Tr(c f(x))` in the power basis `1, x, …, x^{n-1}`
/// of `F_{q^n}/F_q`: off-diagonal entries are the polarization
/// `(Q(e_i+e_j) - Q(e_i) - Q(e_j)) / 2`, diagonal entries `Q(e_i)`.
pub fn gram_matrix(ctx: &FieldCtx, f: &DoPoly, c: FieldElem) -> Result<GramMatrix> {
    if c.is_zero() {
        return invalid("Gram matrix of Tr(c f) needs c != 0");
    }
    let n = ctx.n() as usize;
    let fq = ctx.base_field();
    let form = |x: FieldElem| ctx.rel_trace(ctx.mul(c, f.eval(ctx, x)), fq);
    let basis: Vec<FieldElem> = (0..n as u32).map(|k| ctx.basis_elem(k)).collect();
    let diag = basis.iter().map(|&e| form(e)).collect::<Result<Vec<_>>>()?;
    let half = ctx.inv(ctx.from_int(2));
    let mut entries = vec![ctx.zero(); n * n];
    for i in 0..n {
        entries[i * n + i] = diag[i];
        for j in 0..i {
            let s = form(ctx.add(basis[i], basis[j]))?;
            let b = ctx.mul(half, ctx.sub(ctx.sub(s, diag[i]), diag[j]));
            entries[i * n + j] = b;
            entries[j * n + i] = b;
        }
    }
    Ok(GramMatrix { n, entries })
}

/// The family `c ↦ Gram(f, c)`, which is `F_q`-linear in `c`:
/// `Gram(f, c)[i][j] = Tr(c · M_ij)` with `M_ij` the polarization of `f`
/// itself on the basis. Precomputing `M` makes each `c` cost `n(n+1)/2`
/// multiplications and trace lookups.
pub(crate) struct QuadPencil {
    n: usize,
    polar: Vec<FieldElem>,
}

impl QuadPencil {
    pub(crate) fn new(ctx: &FieldCtx, f: &DoPoly) -> Self {
        let n = ctx.n() as usize;
        let basis: Vec<FieldElem> = (0..n as u32).map(|k| ctx.basis_elem(k)).collect();
        let diag: Vec<FieldElem> = basis.iter().map(|&e| f.eval(ctx, e)).collect();
        let half = ctx.inv(ctx.from_int(2));
        let mut polar = vec![ctx.zero(); n * n];
        for i in 0..n {
            polar[i * n + i] = diag[i];
            for j in 0..i {
                let s = f.eval(ctx, ctx.add(basis[i], basis[j]));
                let b = ctx.mul(half, ctx.sub(ctx.sub(s, diag[i]), diag[j]));
                polar[i * n + j] = b;
                polar[j * n + i] = b;
            }
        }
        QuadPencil { n, polar }
    }

    /// `det Gram(f, c)`, using a trace-to-`F_q` table when available.
    pub(crate) fn det_at(&self, ctx: &FieldCtx, trace: Option<&[FieldElem]>, c: FieldElem) -> FieldElem {
        let n = self.n;
        let tr = |x: FieldElem| match trace {
            Some(t) => t[x.index() as usize],
            None => ctx.rel_trace(x, ctx.base_field()).expect("base field"),
        };
        let mut buf = [FieldElem::ZERO; 16];
        let mut heap;
        let a: &mut [FieldElem] = if n * n <= buf.len() {
            &mut buf[..n * n]
        } else {
            heap = vec![FieldElem::ZERO; n * n];
            &mut heap
        };
        for i in 0..n {
            for j in 0..=i {
                let v = tr(ctx.mul(c, self.polar[i * n + j]));
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        det(ctx, a, n)
    }
}
