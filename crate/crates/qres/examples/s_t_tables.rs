//! The sets S and T across shifts b: S (counts over residue multipliers)
//! never moves and matches its closed form; T (over nonresidues) drifts
//! with b but keeps the same size.
//!
//! Run with: cargo run --example s_t_tables

use qres::counts::{cardinality_prediction, closed_form_s, compute_s_t};
use qres::PrimeModulus;

fn set(xs: &[u64]) -> String {
    let body: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("{{{}}}", body.join(","))
}

fn main() -> Result<(), qres::Error> {
    for q in [5u64, 7, 23] {
        let p = PrimeModulus::new(q)?;
        let closed = closed_form_s(p);
        println!(
            "p = {q} (p ≡ {} mod 4): |S| = |T| = {}, closed form of S = {}",
            q % 4,
            cardinality_prediction(p),
            set(&closed)
        );
        println!("{:>4} {:>12} {:>12}", "b", "S", "T");
        for b in 0..q.min(12) {
            let r = compute_s_t(p, b as i64);
            assert_eq!(r.s, closed);
            println!("{b:>4} {:>12} {:>12}", set(&r.s), set(&r.t));
        }
        println!();
    }
    Ok(())
}
