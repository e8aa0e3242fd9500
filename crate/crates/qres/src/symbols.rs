//! Legendre and Jacobi symbols by independent algorithms.
//!
//! Three routes compute the same symbol and exist so each can be checked
//! against the others: Euler's criterion, the counting form of Gauss's
//! lemma (kept deliberately simple — it is the oracle, not the workhorse),
//! and binary reduction with quadratic reciprocity, which also yields the
//! Jacobi symbol for composite odd moduli.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::arith::{add_mod, normalize, pow_mod, PrimeModulus};
use crate::{Error, Result};

/// A symbol value: −1, 0 or +1. Zero iff the modulus divides the argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symbol(i8);

impl Symbol {
    pub const ONE: Symbol = Symbol(1);
    pub const MINUS_ONE: Symbol = Symbol(-1);
    pub const ZERO: Symbol = Symbol(0);

    #[inline]
    pub fn sign(self) -> i64 {
        self.0 as i64
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// (−1)^count.
    #[inline]
    pub fn from_parity(count: u64) -> Symbol {
        if count.is_multiple_of(2) {
            Symbol::ONE
        } else {
            Symbol::MINUS_ONE
        }
    }

    #[inline]
    pub(crate) fn from_i8(v: i8) -> Symbol {
        debug_assert!((-1..=1).contains(&v));
        Symbol(v)
    }
}

impl Mul for Symbol {
    type Output = Symbol;

    fn mul(self, rhs: Symbol) -> Symbol {
        Symbol(self.0 * rhs.0)
    }
}

impl Neg for Symbol {
    type Output = Symbol;

    fn neg(self) -> Symbol {
        Symbol(-self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The Legendre symbol (a/p) by Euler's criterion: a^((p−1)/2) mod p.
pub fn legendre_euler(a: i64, p: PrimeModulus) -> Symbol {
    let pm = p.get();
    let an = normalize(a, pm);
    if an == 0 {
        return Symbol::ZERO;
    }
    let r = pow_mod(an, pm / 2, pm);
    if r == 1 {
        Symbol::ONE
    } else if r == pm - 1 {
        Symbol::MINUS_ONE
    } else {
        // impossible for a prime modulus; reaching this falsifies primality
        panic!("Euler criterion yielded {r} mod {pm}, expected ±1");
    }
}

/// The Legendre symbol by direct counting: (−1)^c where c is the number of
/// k ∈ [1, (p−1)/2] whose least residue {ka}_p exceeds p/2.
///
/// Requires p ∤ a. Intentionally O(p) and unoptimized.
pub fn legendre_gauss_lemma(a: i64, p: PrimeModulus) -> Result<Symbol> {
    let pm = p.get();
    let an = normalize(a, pm);
    if an == 0 {
        return Err(Error::DivisibleByModulus {
            value: a,
            modulus: pm,
        });
    }
    let mut count = 0u64;
    let mut r = 0u64; // {ka}_p, stepped by a
    for _ in 1..=p.half() {
        r = add_mod(r, an, pm);
        if 2 * r > pm {
            count += 1;
        }
    }
    Ok(Symbol::from_parity(count))
}

/// The Jacobi symbol (a/n) for odd n ≥ 1, by binary reduction and quadratic
/// reciprocity. Negative a is reduced mod n first, which realizes the
/// standard extension (−1/n) = (−1)^((n−1)/2); by convention (a/1) = +1.
///
/// For prime n this is the Legendre symbol.
///
/// ```
/// use qres::symbols::{jacobi, Symbol};
/// assert_eq!(jacobi(1001, 9907).unwrap(), Symbol::MINUS_ONE);
/// assert_eq!(jacobi(-4, 9).unwrap(), Symbol::ONE);
/// assert_eq!(jacobi(5, 1).unwrap(), Symbol::ONE);
/// ```
pub fn jacobi(a: i64, n: u64) -> Result<Symbol> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::NotOddModulus(n));
    }
    let mut num = normalize(a, n);
    let mut den = n;
    let mut sign = 1i8;
    while num != 0 {
        while num.is_multiple_of(2) {
            num /= 2;
            if matches!(den % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut num, &mut den);
        if num % 4 == 3 && den % 4 == 3 {
            sign = -sign;
        }
        num %= den;
    }
    if den == 1 {
        Ok(Symbol(sign))
    } else {
        Ok(Symbol::ZERO)
    }
}

/// The full symbol table for p: index r ∈ [0, p) holds (r/p) as an i8.
///
/// Built in O(p) by marking the squares {x²}_p for x ≤ (p−1)/2; this is the
/// definitional route to the symbol and the bulk backend for character sums.
pub fn symbol_table(p: PrimeModulus) -> Vec<i8> {
    let pm = p.get();
    let mut table = vec![-1i8; pm as usize];
    table[0] = 0;
    let mut sq = 0u64;
    for x in 1..=p.half() {
        // x² − (x−1)² = 2x − 1, and 2x − 1 ≤ p − 2 here
        sq = add_mod(sq, 2 * x - 1, pm);
        table[sq as usize] = 1;
    }
    table
}
