//! # qres — exact quadratic-residue statistics
//!
//! Everything in this crate is exact 64-bit integer arithmetic (products
//! widened to 128 bits); there are no floating-point computations and no
//! probabilistic answers. The point of the crate is *cross-verification*:
//! every closed form ships next to an independent brute-force route, and the
//! [`verify`] engine sweeps prime ranges pitting the two against each other.
//!
//! ## Modules
//!
//! - [`arith`] — validated prime moduli, least nonnegative residues, modular
//!   exponentiation, deterministic 64-bit primality, prime-range sieving.
//! - [`symbols`] — the Legendre symbol by three independent algorithms
//!   (Euler's criterion, Gauss's lemma counting, Jacobi binary reduction).
//! - [`class_number`] — h(−p) for p ≡ 3 (mod 4) via the Dirichlet weighted
//!   character sum, cross-checked by enumerating reduced binary quadratic
//!   forms of discriminant −p.
//! - [`counts`] — the central statistic: for 1 < a < p, the number of
//!   x ≤ (p−1)/2 with {x²+b}_p > {ax²+b}_p, its closed form, the derived
//!   sets S and T, and several related shift/inversion parity identities.
//! - [`verify`] — range sweeps with a fixed claim registry, machine-readable
//!   records, and deterministic output; this backs the `qres` binary.
//!
//! ## Quick start
//!
//! ```
//! use qres::counts::{count_brute, count_formula, CountSpec};
//! use qres::PrimeModulus;
//!
//! let p = PrimeModulus::new(7)?;
//! let spec = CountSpec::new(p, 4, 0)?;
//! assert_eq!(count_brute(&spec), 2);
//! assert_eq!(count_formula(&spec), 2);
//! # Ok::<(), qres::Error>(())
//! ```
//!
//! Runnable walkthroughs live in `examples/` (one per capability); the
//! `qres` binary exposes the `verify`, `table` and `classnum` subcommands.

#![forbid(unsafe_code)]

pub mod arith;
pub mod class_number;
pub mod counts;
pub mod symbols;
pub mod verify;

pub use arith::{is_prime, least_nonneg_residue, mod_pow, primes_in_range, PrimeModulus, Residue};
pub use symbols::Symbol;

/// Errors for domain-precondition violations.
///
/// Mathematically impossible conditions (an inexact division that a proof
/// guarantees exact, a tie that cannot occur) are asserted, not returned:
/// hitting one means the implementation is wrong, not the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime in [3, 2^63)")]
    NotAnOddPrime(u64),
    #[error("modulus {0} must be a positive odd integer")]
    NotOddModulus(u64),
    #[error("prime {p} must be congruent to 3 mod 4 and greater than 3")]
    NotThreeMod4 { p: u64 },
    #[error("{value} is divisible by the modulus {modulus}")]
    DivisibleByModulus { value: i64, modulus: u64 },
    #[error("multiplier a={a} must satisfy 1 < a < {p}")]
    MultiplierOutOfRange { a: i64, p: u64 },
    #[error("multiplier a={a} is congruent to 0 or 1 modulo {modulus}")]
    DegenerateMultiplier { a: i64, modulus: u64 },
    #[error("a(1-a) with a={a} shares a factor with the modulus {modulus}")]
    NotCoprime { a: i64, modulus: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
