//! The inversion-parity identity: for p ≡ 3 (mod 4), the parity of the
//! number of inversions in ({1²}_p, {2²}_p, …, {((p−1)/2)²}_p) is +1 when
//! p ≡ 3 (mod 8) and (−1)^((h(−p)+1)/2) when p ≡ 7 (mod 8).
//!
//! Run with: cargo run --example inversion_parity

use qres::counts::inversion_parity_check;
use qres::{primes_in_range, PrimeModulus};

fn main() -> Result<(), qres::Error> {
    println!(
        "{:>6} {:>7} {:>8} {:>10}",
        "p", "p mod 8", "counted", "predicted"
    );
    let mut checked = 0u32;
    for q in primes_in_range(7, 600) {
        if q % 4 != 3 {
            continue;
        }
        let p = PrimeModulus::new(q)?;
        let c = inversion_parity_check(p)?;
        assert!(c.holds(), "identity failed at p={q}");
        if checked < 20 {
            println!(
                "{q:>6} {:>7} {:>8} {:>10}",
                q % 8,
                c.counted.sign(),
                c.predicted.sign()
            );
        }
        checked += 1;
    }
    println!("... identity verified for all {checked} primes ≡ 3 (mod 4) up to 600");
    Ok(())
}
