//! Odd-characteristic field towers `F_p ⊂ F_q ⊂ F_{q^n}`, `q = p^m`.
//!
//! The whole tower lives inside one extension `F_p[x]/(modulus)` of degree
//! `m·n`; every intermediate field is the fixed field of a Frobenius power.
//! Construction is deterministic: the modulus is the lexicographically
//! smallest monic irreducible (coefficients compared from the constant term
//! upward) and the generator is the smallest element of full multiplicative
//! order under the same ordering.
//!
//! Elements are packed into a `u32` as `Σ c_i p^i`, where `c_i` is the
//! coordinate of `x^i` in the power basis. When the field has at most
//! [`TABLE_CAP`] elements, exp/log/Zech tables keyed to the generator back
//! multiplication, inversion, powering and addition.

mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub(crate) use poly::{is_prime, prime_factors};

/// Default cap on the number of elements of the top field.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 24;
/// Fields up to this many elements get discrete-log tables.
pub const TABLE_CAP: u64 = 1 << 20;
/// Environment variable overriding [`DEFAULT_SIZE_CAP`].
pub const SIZE_CAP_ENV: &str = "PLANAR_SIZE_CAP";

const NO_LOG: u32 = u32::MAX;

/// Size cap in effect: `PLANAR_SIZE_CAP` if set and parseable, else the default.
pub fn size_cap() -> u64 {
    std::env::var(SIZE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

/// An element of the top field, packed as `Σ c_i p^i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[repr(transparent)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    /// Packed index of the element.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A subfield `F_{p^degree}` of the top field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subfield {
    degree: u32,
    order: u64,
}

impl Subfield {
    /// Degree over the prime field.
    pub fn degree(self) -> u32 {
        self.degree
    }

    /// Number of elements.
    pub fn order(self) -> u64 {
        self.order
    }
}

struct Tables {
    /// exp[k] = g^k for 0 <= k < 2(Q-1).
    exp: Vec<u32>,
    /// log[x] for x != 0; NO_LOG at 0.
    log: Vec<u32>,
    /// zech[k] = log(1 + g^k), NO_LOG where 1 + g^k = 0.
    zech: Vec<u32>,
}

/// Immutable description of a field tower together with its arithmetic.
pub struct FieldCtx {
    p: u32,
    m: u32,
    n: u32,
    degree: u32,
    order: u64,
    modulus: Vec<u32>,
    generator: FieldElem,
    pow_p: Vec<u64>,
    /// p^j mod (Q-1), j < degree.
    frob_exp: Vec<u64>,
    tables: Option<Tables>,
    trace_tables: Vec<OnceLock<Vec<FieldElem>>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .field("generator", &self.coeffs(self.generator))
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

/// Builds the tower `F_p ⊂ F_{p^m} ⊂ F_{p^{mn}}` using the size cap from
/// [`size_cap`].
pub fn build_field(p: u32, m: u32, n: u32) -> Result<FieldCtx> {
    FieldCtx::with_cap(p, m, n, size_cap())
}

fn check_params(p: u32, m: u32, n: u32, cap: u64) -> Result<u64> {
    if p.is_multiple_of(2) || !is_prime(p as u64) {
        return invalid(format!("p = {p} is not an odd prime"));
    }
    if m == 0 || n == 0 {
        return invalid(format!("degrees must be positive (m = {m}, n = {n})"));
    }
    let order = (p as u128).checked_pow(m.saturating_mul(n)).unwrap_or(u128::MAX);
    if order > cap as u128 || order > u32::MAX as u128 {
        return Err(Error::Size { order, cap });
    }
    Ok(order as u64)
}

/// Coefficient vector of the `rank`-th tuple in lexicographic order with the
/// constant coefficient most significant.
fn lex_tuple(rank: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|k| rank / p.pow((len - 1 - k) as u32) % p)
        .collect()
}

impl FieldCtx {
    pub fn new(p: u32, m: u32, n: u32) -> Result<Self> {
        build_field(p, m, n)
    }

    /// As [`build_field`] with an explicit size cap.
    pub fn with_cap(p: u32, m: u32, n: u32, cap: u64) -> Result<Self> {
        check_params(p, m, n, cap)?;
        let d = (m * n) as usize;
        let pp = p as u64;
        let modulus = (0..pp.pow(d as u32))
            .map(|rank| {
                let mut f = lex_tuple(rank, pp, d);
                f.push(1);
                f
            })
            .find(|f| poly::is_irreducible(f, pp))
            .expect("irreducible polynomials exist in every degree");
        Self::assemble(p, m, n, modulus)
    }

    /// Builds the tower over a caller-chosen monic irreducible modulus of
    /// degree `m·n` (coefficients low degree first, leading 1 included).
    pub fn with_modulus(p: u32, m: u32, n: u32, modulus: &[u32]) -> Result<Self> {
        check_params(p, m, n, size_cap())?;
        let d = (m * n) as usize;
        if modulus.len() != d + 1 || modulus[d] != 1 {
            return invalid(format!("modulus must be monic of degree {d}"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return invalid("modulus coefficients must lie in [0, p)");
        }
        let f: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        if !poly::is_irreducible(&f, p as u64) {
            return invalid(format!("modulus {modulus:?} is reducible over F_{p}"));
        }
        Self::assemble(p, m, n, f)
    }

    fn assemble(p: u32, m: u32, n: u32, modulus: Vec<u64>) -> Result<Self> {
        let degree = m * n;
        let d = degree as usize;
        let pp = p as u64;
        let order = pp.pow(degree);
        let ord = order - 1;
        let pow_p: Vec<u64> = (0..=d).map(|k| pp.pow(k as u32)).collect();
        let frob_exp = (0..d)
            .map(|j| poly::pow_mod(pp, j as u64, ord.max(1)) % ord.max(1))
            .collect();
        let mut ctx = FieldCtx {
            p,
            m,
            n,
            degree,
            order,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
            generator: FieldElem(0),
            pow_p,
            frob_exp,
            tables: None,
            trace_tables: (0..=degree).map(|_| OnceLock::new()).collect(),
        };

        let factors = prime_factors(ord);
        let generator = (1..order)
            .map(|rank| ctx.pack(&lex_tuple(rank, pp, d)))
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| ctx.pow_slow(g, (ord / r) as u128) != ctx.one())
            })
            .expect("the multiplicative group is cyclic");
        ctx.generator = generator;

        if order <= TABLE_CAP {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    fn build_tables(&self) -> Tables {
        let ord = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * ord];
        let mut log = vec![NO_LOG; self.order as usize];
        let mut cur = self.one();
        for (k, slot) in exp[..ord].iter_mut().enumerate() {
            *slot = cur.0;
            log[cur.0 as usize] = k as u32;
            cur = self.mul_slow(cur, self.generator);
        }
        for k in 0..ord {
            exp[ord + k] = exp[k];
        }
        let p = self.p;
        let zech = (0..ord)
            .map(|k| {
                // 1 + g^k: bump the constant coordinate.
                let x = exp[k];
                let c0 = x % p;
                let y = if c0 + 1 < p { x + 1 } else { x + 1 - p };
                log[y as usize]
            })
            .collect();
        Tables { exp, log, zech }
    }

    // ---- parameters -----------------------------------------------------

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Size of the base field `F_q`.
    pub fn q(&self) -> u64 {
        self.pow_p[self.m as usize]
    }

    /// Number of elements of the top field.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree `m·n` of the top field over `F_p`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Monic modulus, coefficients low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed multiplicative generator.
    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    // ---- element construction -------------------------------------------

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> FieldElem {
        FieldElem(k.rem_euclid(self.p as i64) as u32)
    }

    /// Element with the given power-basis coordinates (missing trailing
    /// coordinates are zero).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.degree as usize {
            return invalid(format!(
                "{} coordinates given, field has degree {}",
                coeffs.len(),
                self.degree
            ));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p) {
            return invalid(format!("coordinate {c} is not reduced mod {}", self.p));
        }
        let digits: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
        Ok(self.pack(&digits))
    }

    pub fn from_index(&self, index: u32) -> Result<FieldElem> {
        if index as u64 >= self.order {
            return invalid(format!("index {index} out of range for a field of order {}", self.order));
        }
        Ok(FieldElem(index))
    }

    /// Power-basis coordinates, length `m·n`.
    pub fn coeffs(&self, x: FieldElem) -> Vec<u32> {
        self.digits(x).into_iter().map(|c| c as u32).collect()
    }

    /// `x^k` for the modulus root `x`, i.e. the k-th power-basis vector.
    pub fn basis_elem(&self, k: u32) -> FieldElem {
        assert!(k < self.degree, "basis index out of range");
        FieldElem(self.pow_p[k as usize] as u32)
    }

    /// All elements in packed-index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order as u32).map(FieldElem)
    }

    /// `g^k` for the fixed generator `g`.
    pub fn exp_gen(&self, k: u64) -> FieldElem {
        match &self.tables {
            Some(t) => FieldElem(t.exp[(k % (self.order - 1)) as usize]),
            None => self.pow_slow(self.generator, (k % (self.order - 1)) as u128),
        }
    }

    /// Discrete logarithm to the base of the generator; `None` for zero.
    pub fn dlog(&self, x: FieldElem) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[x.0 as usize] as u64),
            None => {
                let mut cur = self.one();
                for k in 0..self.order - 1 {
                    if cur == x {
                        return Some(k);
                    }
                    cur = self.mul(cur, self.generator);
                }
                unreachable!("generator has full order")
            }
        }
    }

    /// Compares coordinate vectors with the constant coordinate most
    /// significant.
    pub fn lex_cmp(&self, a: FieldElem, b: FieldElem) -> Ordering {
        self.digits(a).cmp(&self.digits(b))
    }

    // ---- arithmetic -----------------------------------------------------

    fn digits(&self, x: FieldElem) -> Vec<u64> {
        let p = self.p as u64;
        let mut v = x.0 as u64;
        (0..self.degree)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    fn pack(&self, digits: &[u64]) -> FieldElem {
        FieldElem(
            digits
                .iter()
                .zip(&self.pow_p)
                .map(|(&c, &w)| c * w)
                .sum::<u64>() as u32,
        )
    }

    fn modulus_u64(&self) -> Vec<u64> {
        self.modulus.iter().map(|&c| c as u64).collect()
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let prod = poly::mul_mod(&self.digits(a), &self.digits(b), &self.modulus_u64(), self.p as u64);
        self.pack(&prod)
    }

    fn pow_slow(&self, a: FieldElem, e: u128) -> FieldElem {
        let r = poly::pow_poly_mod(&self.digits(a), e, &self.modulus_u64(), self.p as u64);
        self.pack(&r)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        match &self.tables {
            Some(t) => {
                let ord = (self.order - 1) as u32;
                let la = t.log[a.0 as usize];
                let lb = t.log[b.0 as usize];
                let d = if lb >= la { lb - la } else { lb + ord - la };
                let z = t.zech[d as usize];
                if z == NO_LOG {
                    FieldElem(0)
                } else {
                    FieldElem(t.exp[(la + z) as usize])
                }
            }
            None => {
                let p = self.p as u64;
                let s: Vec<u64> = self
                    .digits(a)
                    .iter()
                    .zip(self.digits(b))
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                self.pack(&s)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a.0 == 0 {
            return a;
        }
        match &self.tables {
            Some(t) => {
                let half = ((self.order - 1) / 2) as u32;
                FieldElem(t.exp[(t.log[a.0 as usize] + half) as usize])
            }
            None => {
                let p = self.p as u64;
                let s: Vec<u64> = self.digits(a).iter().map(|&x| (p - x) % p).collect();
                self.pack(&s)
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        match &self.tables {
            Some(t) => FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn try_inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        Some(match &self.tables {
            Some(t) => {
                let ord = (self.order - 1) as u32;
                let l = t.log[a.0 as usize];
                FieldElem(t.exp[if l == 0 { 0 } else { (ord - l) as usize }])
            }
            None => self.pow_slow(a, (self.order - 2) as u128),
        })
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        self.try_inv(a).expect("inverse of zero")
    }

    /// `a / b`. Panics when `b` is zero.
    pub fn div(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul(a, self.inv(b))
    }

    /// `a^e` with `0^0 = 1`.
    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return a;
        }
        match &self.tables {
            Some(t) => {
                let ord = self.order - 1;
                let l = t.log[a.0 as usize] as u64;
                FieldElem(t.exp[((l as u128 * (e % ord) as u128) % ord as u128) as usize])
            }
            None => self.pow_slow(a, e as u128),
        }
    }

    /// `a^k` for a signed exponent; negative powers of zero panic.
    pub fn pow_signed(&self, a: FieldElem, k: i64) -> FieldElem {
        if k >= 0 {
            self.pow(a, k as u64)
        } else {
            self.pow(self.inv(a), k.unsigned_abs())
        }
    }

    /// `a^{p^j}`.
    #[inline]
    pub fn frob_p(&self, a: FieldElem, j: u32) -> FieldElem {
        let j = (j % self.degree) as usize;
        if j == 0 || a.0 == 0 {
            return a;
        }
        match &self.tables {
            Some(t) => {
                let ord = self.order - 1;
                let l = t.log[a.0 as usize] as u64;
                FieldElem(t.exp[(l * self.frob_exp[j] % ord) as usize])
            }
            None => self.pow_slow(a, self.pow_p[j] as u128),
        }
    }

    /// `x^{q^i}`, `i` taken modulo `n`.
    #[inline]
    pub fn frobenius(&self, x: FieldElem, i: i64) -> FieldElem {
        let i = i.rem_euclid(self.n as i64) as u32;
        self.frob_p(x, i * self.m)
    }

    // ---- subfields ------------------------------------------------------

    /// The prime field `F_p`.
    pub fn prime_field(&self) -> Subfield {
        Subfield { degree: 1, order: self.p as u64 }
    }

    /// The base field `F_q`.
    pub fn base_field(&self) -> Subfield {
        Subfield { degree: self.m, order: self.q() }
    }

    /// The intermediate field `F_{q^k}`; `k` must divide `n`.
    pub fn subfield(&self, k: u32) -> Result<Subfield> {
        if k == 0 || !self.n.is_multiple_of(k) {
            return invalid(format!("F_(q^{k}) is not a subfield of F_(q^{})", self.n));
        }
        self.subfield_of_degree(k * self.m)
    }

    /// The subfield of degree `d` over `F_p`; `d` must divide `m·n`.
    pub fn subfield_of_degree(&self, d: u32) -> Result<Subfield> {
        if d == 0 || !self.degree.is_multiple_of(d) {
            return invalid(format!("no subfield of degree {d} in a field of degree {}", self.degree));
        }
        Ok(Subfield { degree: d, order: self.pow_p[d as usize] })
    }

    fn check_sub(&self, sub: Subfield) -> Result<()> {
        if sub.degree == 0 || !self.degree.is_multiple_of(sub.degree) || sub.order != self.pow_p[sub.degree as usize] {
            return invalid(format!("{sub:?} is not a subfield of this field"));
        }
        Ok(())
    }

    /// Whether `x` lies in `sub`.
    pub fn contains(&self, sub: Subfield, x: FieldElem) -> bool {
        self.frob_p(x, sub.degree) == x
    }

    /// Elements of `sub`: zero first, then increasing generator exponent.
    pub fn subfield_elements(&self, sub: Subfield) -> Vec<FieldElem> {
        let step = (self.order - 1) / (sub.order - 1);
        std::iter::once(self.zero())
            .chain((0..sub.order - 1).map(|k| self.exp_gen(k * step)))
            .collect()
    }

    fn trace_direct(&self, x: FieldElem, sub: Subfield) -> FieldElem {
        (0..self.degree / sub.degree).fold(self.zero(), |acc, i| {
            self.add(acc, self.frob_p(x, i * sub.degree))
        })
    }

    /// Per-element trace table to `sub`, built lazily (table mode only).
    pub fn trace_table(&self, sub: Subfield) -> Result<Option<&[FieldElem]>> {
        self.check_sub(sub)?;
        if self.tables.is_none() {
            return Ok(None);
        }
        let table = self.trace_tables[sub.degree as usize]
            .get_or_init(|| self.elements().map(|x| self.trace_direct(x, sub)).collect());
        Ok(Some(table))
    }

    /// Relative trace from the top field down to `over`.
    pub fn rel_trace(&self, x: FieldElem, over: Subfield) -> Result<FieldElem> {
        Ok(match self.trace_table(over)? {
            Some(t) => t[x.0 as usize],
            None => self.trace_direct(x, over),
        })
    }

    /// Relative norm from the top field down to `over`.
    pub fn rel_norm(&self, x: FieldElem, over: Subfield) -> Result<FieldElem> {
        self.check_sub(over)?;
        // Π x^{Q^i} = x^{(order-1)/(Q-1)}
        Ok(self.pow(x, (self.order - 1) / (over.order - 1)))
    }

    /// `x ≠ 0` and `x` is a square in `in_sub`; `x` must lie in `in_sub`.
    pub fn is_nonzero_square(&self, x: FieldElem, in_sub: Subfield) -> Result<bool> {
        self.check_sub(in_sub)?;
        if !self.contains(in_sub, x) {
            return Err(Error::Domain(format!(
                "element {:?} is not in the subfield of order {}",
                self.coeffs(x),
                in_sub.order
            )));
        }
        Ok(!x.is_zero() && self.pow(x, (in_sub.order - 1) / 2) == self.one())
    }

    /// A square root of `x` in the top field, choosing the lexicographically
    /// smaller of the two roots. `None` when `x` is a non-square.
    pub fn sqrt(&self, x: FieldElem) -> Option<FieldElem> {
        if x.is_zero() {
            return Some(x);
        }
        let ord = self.order - 1;
        let r = match &self.tables {
            Some(_) => {
                let l = self.dlog(x)?;
                if l % 2 == 1 {
                    return None;
                }
                self.exp_gen(l / 2)
            }
            None => {
                if self.pow(x, ord / 2) != self.one() {
                    return None;
                }
                self.elements().find(|&y| self.mul(y, y) == x)?
            }
        };
        let other = self.neg(r);
        Some(if self.lex_cmp(r, other) == Ordering::Greater { other } else { r })
    }

    /// Generator-exponent encoding used in reports: the exponent for a
    /// nonzero element, `-` for zero.
    pub fn encode_exp(&self, x: FieldElem) -> String {
        match self.dlog(x) {
            Some(k) => k.to_string(),
            None => "-".to_string(),
        }
    }

    /// Human-readable form: `0` or `g^k`.
    pub fn display(&self, x: FieldElem) -> String {
        match self.dlog(x) {
            Some(k) => format!("g^{k}"),
            None => "0".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(build_field(2, 1, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(build_field(9, 1, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(build_field(3, 0, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(FieldCtx::with_cap(3, 2, 4, 1000), Err(Error::Size { .. })));
        assert!(matches!(build_field(3, 4, 10), Err(Error::Size { .. })));
    }

    #[test]
    fn f27_modulus_and_generator() {
        let ctx = build_field(3, 1, 3).unwrap();
        // constant 0 is reducible; x^3 + 1 and x^3 + x^2 + 1 vanish at 2 and 1;
        // x^3 + 2x^2 + 1 has no root in F_3.
        assert_eq!(ctx.modulus(), &[1, 0, 2, 1]);
        let g = ctx.generator();
        assert_eq!(ctx.pow(g, 26), ctx.one());
        assert_ne!(ctx.pow(g, 13), ctx.one());
        assert_ne!(ctx.pow(g, 2), ctx.one());
    }

    #[test]
    fn f25_generator_order_24() {
        let ctx = build_field(5, 1, 2).unwrap();
        let g = ctx.generator();
        let order = (1..=24).find(|&k| ctx.pow(g, k) == ctx.one()).unwrap();
        assert_eq!(order, 24);
    }

    #[test]
    fn from_coeffs_round_trip_and_validation() {
        let ctx = build_field(5, 1, 3).unwrap();
        let x = ctx.from_coeffs(&[1, 4, 2]).unwrap();
        assert_eq!(ctx.coeffs(x), vec![1, 4, 2]);
        assert!(ctx.from_coeffs(&[5]).is_err());
        assert!(ctx.from_coeffs(&[1, 1, 1, 1]).is_err());
        assert_eq!(ctx.coeffs(ctx.one()), vec![1, 0, 0]);
        assert_eq!(ctx.coeffs(ctx.zero()), vec![0, 0, 0]);
    }

    #[test]
    fn table_and_slow_paths_agree() {
        // Same field twice: one with tables, one forced onto the slow path.
        let fast = build_field(3, 1, 4).unwrap();
        let mut slow = build_field(3, 1, 4).unwrap();
        slow.tables = None;
        for a in fast.elements().step_by(7) {
            for b in fast.elements().step_by(5) {
                assert_eq!(fast.add(a, b), slow.add(a, b));
                assert_eq!(fast.mul(a, b), slow.mul(a, b));
                assert_eq!(fast.sub(a, b), slow.sub(a, b));
            }
            assert_eq!(fast.try_inv(a), slow.try_inv(a));
            assert_eq!(fast.frob_p(a, 1), slow.frob_p(a, 1));
            assert_eq!(fast.pow(a, 17), slow.pow(a, 17));
            let sub = fast.subfield_of_degree(2).unwrap();
            assert_eq!(fast.rel_trace(a, sub).unwrap(), slow.rel_trace(a, sub).unwrap());
            assert_eq!(fast.rel_norm(a, sub).unwrap(), slow.rel_norm(a, sub).unwrap());
        }
    }

    #[test]
    fn subfield_selection() {
        let ctx = build_field(3, 2, 3).unwrap();
        assert_eq!(ctx.base_field().order(), 9);
        assert_eq!(ctx.subfield(3).unwrap().order(), 729);
        assert!(ctx.subfield(2).is_err());
        assert!(ctx.subfield_of_degree(4).is_err());
        let bogus = Subfield { degree: 4, order: 81 };
        assert!(ctx.rel_trace(ctx.one(), bogus).is_err());
    }

    #[test]
    fn square_test_small_cases() {
        let f5 = build_field(5, 1, 1).unwrap();
        let fp = f5.prime_field();
        assert!(!f5.is_nonzero_square(f5.from_int(2), fp).unwrap());
        assert!(f5.is_nonzero_square(f5.from_int(4), fp).unwrap());
        assert!(!f5.is_nonzero_square(f5.zero(), fp).unwrap());
        let ctx = build_field(3, 1, 2).unwrap();
        let top = ctx.subfield(2).unwrap();
        assert!(ctx.is_nonzero_square(ctx.one(), top).unwrap());
        assert!(!ctx.is_nonzero_square(ctx.generator(), top).unwrap());
        assert!(matches!(
            ctx.is_nonzero_square(ctx.generator(), ctx.base_field()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sqrt_picks_lex_smaller_root() {
        let ctx = build_field(3, 1, 2).unwrap();
        for x in ctx.elements() {
            match ctx.sqrt(x) {
                Some(r) => {
                    assert_eq!(ctx.mul(r, r), x);
                    assert_ne!(ctx.lex_cmp(r, ctx.neg(r)), Ordering::Greater);
                }
                None => assert!(ctx.dlog(x).unwrap() % 2 == 1),
            }
        }
        assert_eq!(ctx.sqrt(ctx.one()), Some(ctx.one()));
    }

    #[test]
    fn explicit_modulus() {
        let ctx = FieldCtx::with_modulus(3, 1, 3, &[1, 2, 0, 1]).unwrap();
        assert_eq!(ctx.modulus(), &[1, 2, 0, 1]);
        assert!(FieldCtx::with_modulus(3, 1, 3, &[0, 1, 0, 1]).is_err());
        assert!(FieldCtx::with_modulus(3, 1, 3, &[1, 2, 1]).is_err());
    }
}
