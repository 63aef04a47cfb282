//! Exact cyclotomic integers in `Z[ζ_p]`.
//!
//! Elements are stored in the basis `1, ζ, …, ζ^{p-2}`; the relation
//! `ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})` eliminates the top power.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::field::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<i64>,
}

impl CycInt {
    fn check_p(p: u32) -> Result<()> {
        if !is_prime(p as u64) {
            return invalid(format!("Z[ζ_{p}]: {p} is not prime"));
        }
        Ok(())
    }

    pub fn zero(p: u32) -> Result<Self> {
        Self::check_p(p)?;
        Ok(CycInt { p, coeffs: vec![0; p as usize - 1] })
    }

    pub fn from_integer(p: u32, k: i64) -> Result<Self> {
        let mut c = Self::zero(p)?;
        c.coeffs[0] = k;
        Ok(c)
    }

    /// `ζ^k`.
    pub fn zeta_pow(p: u32, k: i64) -> Result<Self> {
        let mut counts = vec![0; p as usize];
        counts[k.rem_euclid(p as i64) as usize] = 1;
        Self::from_exponent_counts(p, &counts)
    }

    /// `Σ_k counts[k] ζ^k` for a full length-`p` vector of multiplicities.
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> Result<Self> {
        Self::check_p(p)?;
        if counts.len() != p as usize {
            return invalid(format!("expected {p} exponent counts, got {}", counts.len()));
        }
        Ok(Self::reduce(p, counts.to_vec()))
    }

    /// Reduces a length-`p` vector over `1, ζ, …, ζ^{p-1}`.
    fn reduce(p: u32, mut full: Vec<i64>) -> Self {
        let top = full.pop().unwrap();
        for c in full.iter_mut() {
            *c -= top;
        }
        CycInt { p, coeffs: full }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Canonical coordinates w.r.t. `1, ζ, …, ζ^{p-2}`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn same_p(&self, other: &CycInt) -> Result<()> {
        if self.p != other.p {
            return invalid(format!("mixing Z[ζ_{}] with Z[ζ_{}]", self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.same_p(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.same_p(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.same_p(other)?;
        let p = self.p as usize;
        let mut full = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                full[(i + j) % p] += a * b;
            }
        }
        Ok(Self::reduce(self.p, full))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycInt {
        let p = self.p as usize;
        let mut full = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            full[(p - i) % p] += a;
        }
        Self::reduce(self.p, full)
    }

    /// `|self|^2 = self · conj(self)`.
    pub fn norm_sq(&self) -> CycInt {
        self.mul(&self.conj()).expect("same modulus")
    }

    /// True iff the canonical coordinates are `(k, 0, …, 0)`.
    pub fn equals_integer(&self, k: i64) -> bool {
        self.coeffs[0] == k && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.equals_integer(0)
    }
}

/// `3 - 2ζ + ζ^3`; zero prints as `0`.
impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("ζ")?,
                (1, _) => write!(f, "{mag}ζ")?,
                (_, 1) => write!(f, "ζ^{k}")?,
                _ => write!(f, "{mag}ζ^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_cyclotomic_sum_vanishes() {
        for p in [3u32, 5, 7, 11] {
            let s = CycInt::from_exponent_counts(p, &vec![1; p as usize]).unwrap();
            assert!(s.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn gauss_sum_of_squares_mod_3() {
        // S = 1 + 2ζ, |S|^2 = (1 + 2ζ)(1 + 2ζ^2) = 3
        let s = CycInt::from_exponent_counts(3, &[1, 2, 0]).unwrap();
        let t = CycInt::from_exponent_counts(3, &[1, 0, 2]).unwrap();
        assert_eq!(s.conj(), t);
        assert!(s.mul(&t).unwrap().equals_integer(3));
        assert!(s.norm_sq().equals_integer(3));
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let a = CycInt::from_integer(3, 1).unwrap();
        let b = CycInt::from_integer(5, 1).unwrap();
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
        assert!(CycInt::zero(9).is_err());
    }

    #[test]
    fn zeta_power_wraps() {
        let z = CycInt::zeta_pow(5, 1).unwrap();
        let z4 = CycInt::zeta_pow(5, -1).unwrap();
        assert!(z.mul(&z4).unwrap().equals_integer(1));
        assert_eq!(z.conj(), z4);
    }

    fn cyc(p: u32) -> impl Strategy<Value = CycInt> {
        prop::collection::vec(-20i64..20, p as usize - 1)
            .prop_map(move |coeffs| CycInt { p, coeffs })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in cyc(7), b in cyc(7), c in cyc(7)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).unwrap().conj(), a.conj().mul(&b.conj()).unwrap());
        }
    }
}
