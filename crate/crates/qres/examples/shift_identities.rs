//! Two shift identities verified by enumeration.
//!
//! First: for a ≢ 0, 1 (mod p), exactly (p−1)/2 of the x ∈ [0, p−1] satisfy
//! {ax+b}_p > x, whatever b is. Second: for odd n with gcd(a(1−a), n) = 1,
//! the parity of |{k ≤ (n−1)/2 : {ka}_n > k}| equals the Jacobi symbol
//! (2a(1−a)/n).
//!
//! Run with: cargo run --example shift_identities

use qres::counts::{linear_shift_count, shift_parity_check};
use qres::{Error, PrimeModulus};

fn main() -> Result<(), qres::Error> {
    let p = PrimeModulus::new(101)?;
    println!(
        "linear shift counts at p = {p} (always (p-1)/2 = {}):",
        p.half()
    );
    for (a, b) in [(4i64, 0i64), (7, 10), (55, -3), (100, 77)] {
        let n = linear_shift_count(p, a, b)?;
        assert_eq!(n, p.half());
        println!("  a={a:>4} b={b:>4}  count={n}");
    }

    println!("\nshift-count parity vs Jacobi symbol for odd moduli:");
    println!("{:>5} {:>4} {:>8} {:>10}", "n", "a", "counted", "predicted");
    for n in (9u64..=45).step_by(2) {
        for a in 2..n {
            match shift_parity_check(n, a as i64) {
                Ok(c) => {
                    assert!(c.holds());
                    if a == 2 {
                        println!(
                            "{n:>5} {a:>4} {:>8} {:>10}",
                            c.counted.sign(),
                            c.predicted.sign()
                        );
                    }
                }
                // multipliers with gcd(a(1-a), n) > 1 are outside the identity
                Err(Error::NotCoprime { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    println!("parity identity verified for every valid multiplier");
    Ok(())
}
