//! Dense polynomials over `F_p`, coefficients stored low degree first.
//!
//! Only what the field constructor needs: multiplication modulo a monic
//! polynomial, powering, gcd and the Rabin irreducibility test.

pub(crate) type Poly = Vec<u64>;

fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub(crate) fn rem_monic(a: &[u64], m: &[u64], p: u64) -> Poly {
    let d = m.len() - 1;
    let mut r: Poly = a.to_vec();
    while r.len() > d {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let off = r.len() - d;
            for (k, &mk) in m[..d].iter().enumerate() {
                r[off + k] = (r[off + k] + p - lead * mk % p) % p;
            }
        }
    }
    trim(&mut r);
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    rem_monic(&mul(a, b, p), m, p)
}

pub(crate) fn pow_poly_mod(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem_monic(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let len = a.len().max(b.len());
    let mut out: Poly = (0..len)
        .map(|k| {
            let x = a.get(k).copied().unwrap_or(0);
            let y = b.get(k).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

/// General remainder (divisor need not be monic).
fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let monic: Poly = b.iter().map(|&c| c * lead_inv % p).collect();
    rem_monic(a, &monic, p)
}

/// Monic gcd (empty for `gcd(0, 0)`).
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x: Poly = a.to_vec();
    let mut y: Poly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = inv_mod(lead, p);
        x.iter_mut().for_each(|c| *c = *c * inv % p);
    }
    x
}

/// Rabin's test: `m` (monic, degree d) is irreducible over `F_p` iff
/// `x^{p^d} ≡ x (mod m)` and `gcd(x^{p^{d/r}} - x, m) = 1` for every prime
/// `r | d`.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    // frob[k] = x^{p^k} mod m
    let mut frob = Vec::with_capacity(d + 1);
    let mut h = rem_monic(&x, m, p);
    frob.push(h.clone());
    for _ in 0..d {
        h = pow_poly_mod(&h, p as u128, m, p);
        frob.push(h.clone());
    }
    if sub(&frob[d], &x, p).iter().any(|&c| c != 0) {
        return false;
    }
    for r in prime_factors(d as u64) {
        let g = gcd(&sub(&frob[d / r as usize], &x, p), m, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_has_factor(m: &[u64], p: u64) -> bool {
        // Any monic factor of degree 1..=d/2 divides m.
        let d = m.len() - 1;
        for deg in 1..=d / 2 {
            let count = p.pow(deg as u32);
            for idx in 0..count {
                let mut f: Poly = (0..deg).map(|k| idx / p.pow(k as u32) % p).collect();
                f.push(1);
                if rem_monic(m, &f, p).is_empty() {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn rabin_matches_trial_division() {
        for p in [3u64, 5] {
            for d in 1..=4usize {
                let count = p.pow(d as u32);
                for idx in 0..count {
                    let mut m: Poly = (0..d).map(|k| idx / p.pow(k as u32) % p).collect();
                    m.push(1);
                    assert_eq!(is_irreducible(&m, p), !brute_has_factor(&m, p), "{m:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn gcd_of_coprime_and_shared() {
        // (x+1)(x+2) and (x+1) over F_5
        let a = mul(&[1, 1], &[2, 1], 5);
        assert_eq!(gcd(&a, &[1, 1], 5).len(), 2);
        assert_eq!(gcd(&[1, 1], &[2, 1], 5), vec![1]);
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(728), vec![2, 7, 13]);
        assert_eq!(prime_factors(80), vec![2, 5]);
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }
}
