//! Drive a full verification sweep from the library API: every claim on
//! every prime in [5, 200], records as JSON lines on stdout.
//!
//! The same sweep is available from the command line:
//!   qres verify --min-p 5 --max-p 200
//!
//! Run with: cargo run --example verify_sweep

use std::io;

use qres::verify::{run_verify, RunConfig};

fn main() -> io::Result<()> {
    let mut cfg = RunConfig::new(5, 200);
    cfg.quiet = true;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let summary = run_verify(&cfg, &mut out, &mut io::stderr())?;
    eprintln!(
        "{} primes swept, {} claim checks passed, {} failed",
        summary.primes, summary.passed, summary.failed
    );
    assert_eq!(summary.failed, 0, "a claim failed; see the records above");
    Ok(())
}
