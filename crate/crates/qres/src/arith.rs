//! Exact modular arithmetic on 64-bit operands.
//!
//! Products are widened to 128 bits, so nothing here overflows for moduli
//! below 2^63. All functions are pure; every value is `Copy`.

use std::fmt;

use crate::{Error, Result};

/// An odd prime modulus, validated at construction.
///
/// The constructor runs a deterministic Miller-Rabin test, so downstream
/// code may rely unconditionally on primality. Moduli are restricted to
/// [3, 2^63) so that signed double-width accumulation never overflows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) || p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotAnOddPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// (p − 1) / 2 — the upper end of the half range 1..=half.
    #[inline]
    pub fn half(self) -> u64 {
        self.0 / 2
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A least nonnegative residue: an integer in [0, p) tagged with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: PrimeModulus,
}

impl Residue {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// The least nonnegative residue of `m` modulo `p`, for any signed `m`.
pub fn least_nonneg_residue(m: i64, p: PrimeModulus) -> Residue {
    Residue {
        value: normalize(m, p.get()),
        modulus: p,
    }
}

/// `m mod p` in [0, p) for signed `m`; evaluated in 128 bits so any i64 is fine.
#[inline]
pub(crate) fn normalize(m: i64, p: u64) -> u64 {
    (m as i128).rem_euclid(p as i128) as u64
}

/// (a + b) mod m, assuming a, b < m.
#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(a < m && b < m);
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

/// (a * b) mod m, exact for any u64 operands.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    // u64 products fit in u128, so the wide path is always exact; the narrow
    // path avoids 128-bit division when both operands are small.
    if (a | b) < 1 << 32 {
        a.wrapping_mul(b) % m // both below 2^32: the product fits u64
    } else {
        ((a as u128 * b as u128) % m as u128) as u64
    }
}

/// base^exp mod m by square-and-multiply, with 0^0 = 1.
pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    base %= m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// base^exponent mod p; the base may be negative, with 0^0 = 1.
pub fn mod_pow(base: i64, exponent: u64, p: PrimeModulus) -> Residue {
    Residue {
        value: pow_mod(normalize(base, p.get()), exponent, p.get()),
        modulus: p,
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Witnesses making Miller-Rabin deterministic for every 64-bit input.
const MR_WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Exact primality for any u64, via deterministic Miller-Rabin.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let t = (n - 1) >> s;
    'witness: for mut a in MR_WITNESSES {
        a %= n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, t, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in [lo, hi], ascending, by a segmented sieve.
///
/// Values below 2 are clamped to 2; an empty range yields an empty vector.
/// A `PrimeModulus` is not returned directly because the range may contain
/// 2, which no odd modulus can represent.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let root = isqrt(hi);
    let base = simple_sieve(root);
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &bp in &base {
        let mut m = (lo.div_ceil(bp) * bp).max(bp * bp);
        while m <= hi {
            composite[(m - lo) as usize] = true;
            match m.checked_add(bp) {
                Some(next) => m = next,
                None => break,
            }
        }
    }
    (0..len)
        .filter(|&i| !composite[i])
        .map(|i| lo + i as u64)
        .collect()
}

fn simple_sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut m = i * i;
            while m <= n {
                composite[m] = true;
                m += i;
            }
        }
    }
    primes
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r > 0 && (r as u128) * (r as u128) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128) * ((r + 1) as u128) <= n as u128 {
        r += 1;
    }
    r
}
