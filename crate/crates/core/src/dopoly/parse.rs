//! Text syntax for DO polynomials and field elements.
//!
//! A polynomial is a signed sum of terms `[coef[*]]x^{e}` where the exponent
//! `e` adds up to exactly two powers of `q`: `2`, `q+1`, `2q`, `q^2+1`,
//! `q^{3}+q`. Braces or parentheses group a multi-term exponent; a bare
//! exponent is a single summand (`x^2`, `x^2q`, `x^q^2`).
//!
//! A coefficient is a product of factors separated by optional `*`: an
//! integer (reduced mod p), `g` or `g^k` (powers of the fixed generator,
//! `k` may be negative), a coordinate vector `[c0,c1,...]` over `F_p`, or
//! one of the placeholders `a`, `b` in templates.
//!
//! ```
//! use planar::field::build_field;
//! use planar::dopoly::parse::parse_poly;
//!
//! let ctx = build_field(3, 1, 3).unwrap();
//! let f = parse_poly(&ctx, "x^{q^2+1} + g^4*x^{q+1} - x^2").unwrap();
//! assert_eq!(f.coeff(2, 0), ctx.one());
//! assert_eq!(f.coeff(1, 0), ctx.exp_gen(4));
//! assert_eq!(f.coeff(0, 0), ctx.from_int(-1));
//! ```

use super::DoPoly;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// `scalar · a^a_pow · b^b_pow`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Coef {
    scalar: FieldElem,
    a_pow: u32,
    b_pow: u32,
}

/// A DO polynomial whose coefficients may mention the parameters `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoTemplate {
    n: u32,
    terms: Vec<(usize, usize, Coef)>,
}

impl DoTemplate {
    pub fn uses_params(&self) -> bool {
        self.terms.iter().any(|(_, _, c)| c.a_pow + c.b_pow > 0)
    }

    pub fn instantiate(&self, ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> DoPoly {
        assert_eq!(self.n, ctx.n(), "template and field disagree on n");
        let mut f = DoPoly::zero(self.n);
        for &(i, j, c) in &self.terms {
            let v = ctx.mul(c.scalar, ctx.mul(ctx.pow(a, c.a_pow as u64), ctx.pow(b, c.b_pow as u64)));
            let cur = f.coeff(i, j);
            f.set_coeff(i, j, ctx.add(cur, v));
        }
        f
    }
}

/// Parses a polynomial without placeholders.
pub fn parse_poly(ctx: &FieldCtx, src: &str) -> Result<DoPoly> {
    let t = parse_template(ctx, src)?;
    if t.uses_params() {
        return Err(Error::Parse(format!("{src:?}: placeholders a/b are only allowed in templates")));
    }
    Ok(t.instantiate(ctx, ctx.zero(), ctx.zero()))
}

/// Parses a polynomial that may use the placeholders `a` and `b`.
pub fn parse_template(ctx: &FieldCtx, src: &str) -> Result<DoTemplate> {
    let mut p = Parser::new(ctx, src);
    let mut terms = Vec::new();
    p.skip_ws();
    if p.at_end() {
        return p.fail("empty polynomial");
    }
    let mut first = true;
    while !p.at_end() {
        let negative = match p.peek() {
            Some('+') => {
                p.bump();
                false
            }
            Some('-') => {
                p.bump();
                true
            }
            _ if first => false,
            _ => return p.fail("expected '+' or '-' between terms"),
        };
        first = false;
        p.skip_ws();
        let (i, j, mut c) = p.term()?;
        if negative {
            c.scalar = ctx.neg(c.scalar);
        }
        terms.push((i, j, c));
        p.skip_ws();
    }
    Ok(DoTemplate { n: ctx.n(), terms })
}

/// Parses a single element: a product of integer, `g^k` and `[..]` factors.
/// `-` alone denotes zero, matching the report encoding.
pub fn parse_elem(ctx: &FieldCtx, src: &str) -> Result<FieldElem> {
    if src.trim() == "-" {
        return Ok(ctx.zero());
    }
    let mut p = Parser::new(ctx, src);
    p.skip_ws();
    let negative = p.eat('-');
    let c = p.coef(false)?;
    p.skip_ws();
    if !p.at_end() {
        return p.fail("trailing input");
    }
    Ok(if negative { ctx.neg(c.scalar) } else { c.scalar })
}

struct Parser<'a> {
    ctx: &'a FieldCtx,
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ctx: &'a FieldCtx, src: &'a str) -> Self {
        Parser { ctx, src, chars: src.chars().collect(), pos: 0 }
    }

    fn fail<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at position {} in {:?}", self.pos, self.src)))
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("expected '{c}'"))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().or_else(|_| self.fail("number out of range"))
    }

    fn signed_number(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let v = self.number()? as i64;
        Ok(if neg { -v } else { v })
    }

    /// `k`, `{k}`, `(k)` or `{-k}` after a `^`.
    fn power(&mut self, signed: bool) -> Result<i64> {
        let close = if self.eat('{') {
            Some('}')
        } else if self.eat('(') {
            Some(')')
        } else {
            None
        };
        let v = if signed { self.signed_number()? } else { self.number()? as i64 };
        if let Some(c) = close {
            self.expect(c)?;
        }
        Ok(v)
    }

    fn coef(&mut self, allow_params: bool) -> Result<Coef> {
        let ctx = self.ctx;
        let mut c = Coef { scalar: ctx.one(), a_pow: 0, b_pow: 0 };
        let mut factors = 0;
        loop {
            self.skip_ws();
            if factors > 0 && self.eat('*') {
                self.skip_ws();
            }
            match self.peek() {
                Some(d) if d.is_ascii_digit() => {
                    let v = self.number()?;
                    c.scalar = ctx.mul(c.scalar, ctx.from_int((v % ctx.p() as u64) as i64));
                }
                Some('g') => {
                    self.bump();
                    let k = if self.eat('^') { self.power(true)? } else { 1 };
                    c.scalar = ctx.mul(c.scalar, ctx.pow_signed(ctx.generator(), k));
                }
                Some('[') => {
                    self.bump();
                    let mut coords = Vec::new();
                    loop {
                        coords.push(self.number()? as u32 % ctx.p());
                        if !self.eat(',') {
                            break;
                        }
                    }
                    self.expect(']')?;
                    if coords.len() > ctx.degree() as usize {
                        return self.fail("coordinate vector longer than the field degree");
                    }
                    c.scalar = ctx.mul(c.scalar, ctx.from_coeffs(&coords)?);
                }
                Some(v @ ('a' | 'b')) if allow_params => {
                    self.bump();
                    let k = if self.eat('^') { self.power(false)? as u32 } else { 1 };
                    if v == 'a' {
                        c.a_pow += k;
                    } else {
                        c.b_pow += k;
                    }
                }
                _ if factors == 0 => return self.fail("expected a coefficient"),
                _ => return Ok(c),
            }
            factors += 1;
        }
    }

    fn term(&mut self) -> Result<(usize, usize, Coef)> {
        let c = if self.peek() == Some('x') {
            Coef { scalar: self.ctx.one(), a_pow: 0, b_pow: 0 }
        } else {
            self.coef(true)?
        };
        self.expect('x')?;
        let mut powers = Vec::new();
        if self.eat('^') {
            if self.eat('{') {
                self.exponent_sum(&mut powers)?;
                self.expect('}')?;
            } else if self.eat('(') {
                self.exponent_sum(&mut powers)?;
                self.expect(')')?;
            } else {
                self.exponent_summand(&mut powers)?;
            }
        } else {
            powers.push(0);
        }
        if powers.len() != 2 {
            return self.fail("exponent must be a sum of exactly two powers of q");
        }
        let n = self.ctx.n() as u64;
        let (i, j) = ((powers[0] % n) as usize, (powers[1] % n) as usize);
        Ok((i.max(j), i.min(j), c))
    }

    fn exponent_sum(&mut self, powers: &mut Vec<u64>) -> Result<()> {
        self.exponent_summand(powers)?;
        while self.eat('+') {
            self.exponent_summand(powers)?;
        }
        Ok(())
    }

    /// `k`, `q`, `kq`, `q^e`, `k*q^e`; pushes `e` with multiplicity `k`.
    fn exponent_summand(&mut self, powers: &mut Vec<u64>) -> Result<()> {
        self.skip_ws();
        let mult = if self.peek().is_some_and(|c| c.is_ascii_digit()) { Some(self.number()?) } else { None };
        self.skip_ws();
        let q_follows = matches!(self.peek(), Some('*') | Some('q'));
        let e = if q_follows {
            self.eat('*');
            self.expect('q')?;
            if self.eat('^') {
                self.power(false)? as u64
            } else {
                1
            }
        } else if mult.is_some() {
            0
        } else {
            return self.fail("expected an exponent");
        };
        let mult = mult.unwrap_or(1);
        if mult > 2 || powers.len() as u64 + mult > 2 {
            return self.fail("exponent must be a sum of exactly two powers of q");
        }
        powers.extend(std::iter::repeat_n(e, mult as usize));
        Ok(())
    }
}
