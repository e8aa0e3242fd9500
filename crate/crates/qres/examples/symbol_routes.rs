//! Compute the Legendre symbol by three independent algorithms and show
//! they agree, then print a small symbol table.
//!
//! Run with: cargo run --example symbol_routes

use qres::symbols::{jacobi, legendre_euler, legendre_gauss_lemma};
use qres::PrimeModulus;

fn main() -> Result<(), qres::Error> {
    let p = PrimeModulus::new(23)?;
    println!("(a/{p}) by Euler's criterion, Gauss's lemma and Jacobi reduction:");
    println!("{:>4} {:>6} {:>6} {:>7}", "a", "euler", "gauss", "jacobi");
    for a in 1..p.get() {
        let e = legendre_euler(a as i64, p);
        let g = legendre_gauss_lemma(a as i64, p)?;
        let j = jacobi(a as i64, p.get())?;
        assert_eq!(e, g);
        assert_eq!(e, j);
        println!("{a:>4} {:>6} {:>6} {:>7}", e.sign(), g.sign(), j.sign());
    }

    // The Jacobi symbol also covers composite odd moduli.
    println!("\nJacobi symbols for a composite modulus:");
    for (a, n) in [(2i64, 45u64), (7, 45), (-4, 9), (1001, 9907)] {
        println!("  ({a}/{n}) = {}", jacobi(a, n)?.sign());
    }
    Ok(())
}
