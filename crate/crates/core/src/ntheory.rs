//! Small number-theoretic helpers over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial-division bound used by [`factorize`].
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Least non-negative residue of `x` modulo `m` (`m > 0`).
pub fn modp(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Inverse of `x` modulo `m`, if it exists.
pub fn mod_inverse(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = modp(x, m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(modp(&e.x, m))
    } else {
        None
    }
}

/// Exponent of `p` in `n` (`n != 0`, `p > 1`).
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut n = n.abs();
    let mut v = 0;
    if n.is_zero() {
        return 0;
    }
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Prime factorization of `|n|` by trial division.
///
/// A cofactor left after dividing out every prime below the bound is accepted as prime when it is
/// below the square of the bound, and reported as [`Error::FactorizationLimit`] otherwise.
pub fn factorize(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    let mut rest = n.abs();
    if rest.is_zero() {
        return Err(Error::FactorizationLimit(n.clone()));
    }
    let mut out = Vec::new();
    let mut d: u64 = 2;
    loop {
        if let Some(small) = rest.to_u64() {
            let (found, left) = trial_u64(small, d);
            out.extend(found.into_iter().map(|(p, e)| (BigInt::from(p), e)));
            return match left {
                None => Ok(out),
                Some(_) => Err(Error::FactorizationLimit(n.clone())),
            };
        }
        if d > TRIAL_DIVISION_BOUND {
            return Err(Error::FactorizationLimit(n.clone()));
        }
        let mut e = 0;
        while (&rest % d).is_zero() {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            out.push((BigInt::from(d), e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
}

/// Trial division of `n` by candidates from `start`; returns the unfactored cofactor if the bound
/// ran out before it was proven prime.
fn trial_u64(mut n: u64, start: u64) -> (Vec<(u64, u32)>, Option<u64>) {
    let mut out = Vec::new();
    let mut d = start;
    while d.saturating_mul(d) <= n {
        if d > TRIAL_DIVISION_BOUND {
            return (out, Some(n));
        }
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    (out, None)
}

pub fn is_prime_small(p: u64) -> bool {
    p >= 2 && trial_u64(p, 2).0 == vec![(p, 1)]
}

pub fn euler_phi(n: &BigInt) -> Result<BigInt> {
    let mut phi = n.abs();
    for (p, _) in factorize(n)? {
        phi = phi / &p * (&p - 1);
    }
    Ok(phi)
}

/// The unique `e` modulo `m1 * m2` with `e ≡ r1 (mod m1)` and `e ≡ r2 (mod m2)`, for coprime moduli.
pub fn crt(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Option<BigInt> {
    let inv = mod_inverse(m1, m2)?;
    let m = m1 * m2;
    let k = modp(&((r2 - r1) * inv), m2);
    Some(modp(&(r1 + m1 * k), &m))
}

pub fn pow_mod(base: &BigInt, exp: u64, m: &BigInt) -> BigInt {
    modp(base, m).modpow(&BigInt::from(exp), m)
}

/// Least `g > 1` whose class generates the units modulo `p^m`, for an odd prime `p`.
pub fn primitive_root(p: u64, m: u32) -> Option<u64> {
    if p == 2 || !is_prime_small(p) {
        return None;
    }
    let pm = p.checked_pow(m)?;
    let phi = pm / p * (p - 1);
    let bpm = BigInt::from(pm);
    let primes: Vec<u64> = trial_u64(phi, 2).0.into_iter().map(|(q, _)| q).collect();
    (2..pm).find(|&g| {
        g % p != 0
            && primes
                .iter()
                .all(|q| !pow_mod(&BigInt::from(g), phi / q, &bpm).is_one())
    })
}

pub fn is_unit(x: &BigInt, m: &BigInt) -> bool {
    x.gcd(m).is_one() || m.is_one()
}
