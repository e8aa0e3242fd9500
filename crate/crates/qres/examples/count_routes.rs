//! The central count two ways: direct enumeration vs the character-sum
//! formula, for every multiplier of one prime.
//!
//! The count is the number of x ∈ [1, (p−1)/2] with {x²+b}_p > {ax²+b}_p.
//! The formula route evaluates it from four character sums, entirely in
//! p-scaled integers; building the sums once makes each multiplier O(1).
//!
//! Run with: cargo run --example count_routes

use qres::counts::{count_brute, CountSpec, FormulaSums};
use qres::PrimeModulus;

fn main() -> Result<(), qres::Error> {
    let p = PrimeModulus::new(31)?;
    let b = 11;
    let sums = FormulaSums::new(p, b);
    println!("counts at p = {p}, b = {b}:");
    println!(
        "{:>4} {:>3} {:>3} {:>6} {:>8}",
        "a", "eps", "del", "brute", "formula"
    );
    for a in 2..p.get() {
        let spec = CountSpec::new(p, a as i64, b)?;
        let brute = count_brute(&spec);
        let formula = sums.count(a);
        assert_eq!(brute, formula);
        println!(
            "{a:>4} {:>3} {:>3} {brute:>6} {formula:>8}",
            spec.epsilon().sign(),
            spec.delta().sign()
        );
    }
    println!("\nall {} multipliers agree", p.get() - 2);
    Ok(())
}
