//! Class numbers h(−p) for primes p ≡ 3 (mod 4), p > 3.
//!
//! Two independent routes: the Dirichlet weighted character sum
//! Σ_{z=1}^{p−1} z·(z/p) = −p·h(−p), and a direct enumeration of reduced
//! primitive binary quadratic forms of discriminant −p. The second exists
//! purely to catch a bug in the first (and vice versa).
//!
//! p = 3 is rejected: the extra units of Q(√−3) break the clean sum form.

use crate::arith::{gcd, PrimeModulus};
use crate::symbols::{symbol_table, Symbol};
use crate::{Error, Result};

/// h(−p) together with the weighted sum it was derived from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassNumberResult {
    pub p: PrimeModulus,
    /// Σ_{z=1}^{p−1} z·(z/p); exactly −p·h, hence negative and divisible by p.
    pub weighted_sum: i128,
    pub h: u64,
}

pub(crate) fn require_three_mod_4(p: PrimeModulus) -> Result<()> {
    if p.get() % 4 != 3 || p.get() == 3 {
        return Err(Error::NotThreeMod4 { p: p.get() });
    }
    Ok(())
}

/// h(−p) from the Dirichlet sum: one pass over z ∈ [1, p−1] accumulating
/// z·(z/p), then h = −sum/p. The division is asserted exact.
pub fn class_number_dirichlet(p: PrimeModulus) -> Result<ClassNumberResult> {
    require_three_mod_4(p)?;
    let pm = p.get();
    let table = symbol_table(p);
    let mut sum: i128 = 0;
    for z in 1..pm {
        sum += z as i128 * table[z as usize] as i128;
    }
    assert!(
        sum < 0 && sum % pm as i128 == 0,
        "weighted character sum {sum} is not a negative multiple of {pm}"
    );
    let h = (-sum / pm as i128) as u64;
    Ok(ClassNumberResult {
        p,
        weighted_sum: sum,
        h,
    })
}

/// h(−p) by counting reduced primitive forms (A, B, C) of discriminant
/// B² − 4AC = −p: |B| ≤ A ≤ C with B odd, and B ≥ 0 on the reduction
/// boundary |B| = A or A = C.
pub fn class_number_forms_oracle(p: PrimeModulus) -> Result<u64> {
    require_three_mod_4(p)?;
    let pm = p.get();
    let mut count = 0u64;
    let mut a = 1u64;
    // |B| ≤ A ≤ C forces p = 4AC − B² ≥ 3A², so A ≤ √(p/3)
    while 3 * (a as u128) * (a as u128) <= pm as u128 {
        let mut b = 1i64;
        while (b as u64) <= a {
            // discriminant −p is odd, so B is odd
            let num = b as u64 * b as u64 + pm;
            if num.is_multiple_of(4 * a) {
                let c = num / (4 * a);
                if c >= a {
                    // boundary convention: count B < 0 only when |B| < A < C
                    let on_boundary = b as u64 == a || a == c;
                    count += 1;
                    if !on_boundary {
                        count += 1; // the distinct form (A, −B, C)
                    }
                    let g = gcd(gcd(a, b as u64), c);
                    assert_eq!(g, 1, "imprimitive form ({a},{b},{c}) for p={pm}");
                }
            }
            b += 2;
        }
        a += 1;
    }
    Ok(count)
}

/// Σ of z ∈ [1, p−1] with (z/p) equal to `sign`, exact. Requires p > 3 and
/// a nonzero sign.
pub fn qr_sum(p: PrimeModulus, sign: Symbol) -> u128 {
    assert!(p.get() > 3, "qr_sum requires p > 3");
    assert!(!sign.is_zero(), "qr_sum takes sign ±1");
    let pm = p.get();
    let table = symbol_table(p);
    let want = sign.sign() as i8;
    let mut sum: u128 = 0;
    for z in 1..pm {
        if table[z as usize] == want {
            sum += z as u128;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_in_range;

    fn p(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    #[test]
    fn dirichlet_small_values() {
        // QRs mod 7 are {1,2,4}: (1+2+4) − (3+5+6) = −7
        let r = class_number_dirichlet(p(7)).unwrap();
        assert_eq!(r.weighted_sum, -7);
        assert_eq!(r.h, 1);
        assert_eq!(class_number_dirichlet(p(11)).unwrap().h, 1);
        let r23 = class_number_dirichlet(p(23)).unwrap();
        assert_eq!(r23.weighted_sum, -69);
        assert_eq!(r23.h, 3);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            class_number_dirichlet(p(13)),
            Err(Error::NotThreeMod4 { p: 13 })
        );
        assert_eq!(
            class_number_dirichlet(p(3)),
            Err(Error::NotThreeMod4 { p: 3 })
        );
        assert_eq!(
            class_number_forms_oracle(p(5)),
            Err(Error::NotThreeMod4 { p: 5 })
        );
    }

    #[test]
    fn forms_oracle_small_values() {
        // p=7: only (1,1,2); p=23: (1,1,6), (2,±1,3)
        assert_eq!(class_number_forms_oracle(p(7)).unwrap(), 1);
        assert_eq!(class_number_forms_oracle(p(23)).unwrap(), 3);
        assert_eq!(class_number_forms_oracle(p(163)).unwrap(), 1);
    }

    #[test]
    fn routes_agree_up_to_2000() {
        for pr in primes_in_range(7, 2000) {
            if pr % 4 != 3 {
                continue;
            }
            let pm = p(pr);
            let d = class_number_dirichlet(pm).unwrap();
            let f = class_number_forms_oracle(pm).unwrap();
            assert_eq!(d.h, f, "route disagreement at p={pr}");
            assert_eq!(d.h % 2, 1, "h(−{pr}) should be odd");
            assert_eq!(d.weighted_sum, -(pr as i128) * d.h as i128);
        }
    }

    #[test]
    fn qr_sum_examples() {
        // QRs mod 5 = {1,4}; mod 7 = {1,2,4}
        assert_eq!(qr_sum(p(5), Symbol::ONE), 5);
        assert_eq!(qr_sum(p(7), Symbol::ONE), 7);
        assert_eq!(qr_sum(p(7), Symbol::MINUS_ONE), 14);
    }

    #[test]
    fn qr_sum_identities() {
        for pr in primes_in_range(5, 5000) {
            let pm = p(pr);
            let plus = qr_sum(pm, Symbol::ONE);
            let minus = qr_sum(pm, Symbol::MINUS_ONE);
            let total = pr as u128 * (pr as u128 - 1) / 2;
            assert_eq!(plus + minus, total, "sum split at p={pr}");
            if pr % 4 == 1 {
                assert_eq!(plus, minus, "balanced sums at p={pr}");
                assert_eq!(plus, pr as u128 * (pr as u128 - 1) / 4);
            } else if pr > 3 {
                let h = class_number_dirichlet(pm).unwrap().h as u128;
                assert_eq!(minus - plus, pr as u128 * h, "sum gap at p={pr}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "sign")]
    fn qr_sum_rejects_zero_sign() {
        qr_sum(p(7), Symbol::ZERO);
    }
}
