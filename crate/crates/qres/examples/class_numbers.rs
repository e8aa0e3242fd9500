//! Tabulate h(−p) for p ≡ 3 (mod 4) by the Dirichlet character sum and
//! cross-check it against the reduced-forms enumeration.
//!
//! Run with: cargo run --example class_numbers

use qres::class_number::{class_number_dirichlet, class_number_forms_oracle};
use qres::{primes_in_range, PrimeModulus};

fn main() -> Result<(), qres::Error> {
    println!(
        "{:>5} {:>4} {:>13} {:>6}",
        "p", "h", "weighted_sum", "forms"
    );
    for q in primes_in_range(7, 200) {
        if q % 4 != 3 {
            continue;
        }
        let p = PrimeModulus::new(q)?;
        let d = class_number_dirichlet(p)?;
        let forms = class_number_forms_oracle(p)?;
        assert_eq!(d.h, forms, "the two routes must agree");
        println!("{q:>5} {:>4} {:>13} {forms:>6}", d.h, d.weighted_sum);
    }

    // A famous one-class discriminant as a sanity anchor.
    let p163 = PrimeModulus::new(163)?;
    println!(
        "\nh(-163) = {} (weighted sum {})",
        class_number_dirichlet(p163)?.h,
        class_number_dirichlet(p163)?.weighted_sum
    );
    Ok(())
}
