//! Thin command-line front end over [`qres::verify`].
//!
//! Exit codes: 0 all checks pass, 1 a mathematical claim failed (the
//! counterexample is in the output), 2 usage or configuration error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qres::verify::{
    run_classnum, run_table, run_verify, BPolicy, ClaimId, OutputFormat, RunConfig, CLAIM_REGISTRY,
    DEFAULT_SEED,
};
use qres::PrimeModulus;

#[derive(Parser)]
#[command(
    name = "qres",
    version,
    about = "Verify quadratic-residue statistics: brute force vs closed forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a prime range, checking every selected claim on every prime
    Verify(VerifyArgs),
    /// Print the S/T table of one prime across shifts b
    Table(TableArgs),
    /// Tabulate class numbers h(-p) by both routes for p ≡ 3 (mod 4)
    Classnum(ClassnumArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Lower end of the prime range (at least 5)
    #[arg(long, default_value_t = 5)]
    min_p: u64,
    /// Upper end of the prime range
    #[arg(long)]
    max_p: u64,
    /// Shift policy: all, auto, sample:K or list:v1,v2,...
    /// (auto = all below 301, sample:8 above; samples always include 0, 1, p-1)
    #[arg(long, default_value = "auto")]
    b: BPolicy,
    /// Base seed for sample policies; the per-prime stream uses seed + p
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Output format: json, csv or tsv
    #[arg(long, default_value = "json")]
    format: OutputFormat,
    /// Comma-separated claim subset (default: every claim)
    #[arg(long, value_delimiter = ',')]
    claims: Vec<ClaimId>,
    /// Suppress progress output on stderr
    #[arg(long)]
    quiet: bool,
    /// Record real per-prime wall times (makes output non-reproducible)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct TableArgs {
    /// The prime p > 3
    p: u64,
    /// Shifts to tabulate: all (default), sample:K or list:v1,v2,...
    #[arg(long, default_value = "all")]
    b: BPolicy,
    /// Base seed for sample policies
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output format: json, csv or tsv
    #[arg(long, default_value = "json")]
    format: OutputFormat,
}

#[derive(Args)]
struct ClassnumArgs {
    /// Lower end of the prime range
    #[arg(long, default_value_t = 5)]
    min_p: u64,
    /// Upper end of the prime range
    #[arg(long)]
    max_p: u64,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Output format: json, csv or tsv
    #[arg(long, default_value = "json")]
    format: OutputFormat,
}

const EXIT_CLAIM_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
        Command::Classnum(args) => cmd_classnum(args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn cmd_verify(args: VerifyArgs) -> io::Result<ExitCode> {
    let claims = if args.claims.is_empty() {
        CLAIM_REGISTRY.to_vec()
    } else {
        args.claims
    };
    let cfg = RunConfig {
        min_p: args.min_p,
        max_p: args.max_p,
        b_policy: args.b,
        seed: args.seed,
        jobs: args.jobs,
        format: args.format,
        claims,
        quiet: args.quiet,
        timings: args.timings,
    };
    if let Err(message) = cfg.validate() {
        return Ok(usage_error(&message));
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let summary = run_verify(&cfg, &mut out, &mut io::stderr())?;
    out.flush()?;
    Ok(if summary.failed > 0 {
        ExitCode::from(EXIT_CLAIM_FAILURE)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_table(args: TableArgs) -> io::Result<ExitCode> {
    let p = match PrimeModulus::new(args.p) {
        Ok(p) if p.get() > 3 => p,
        _ => {
            return Ok(usage_error(&format!(
                "p must be a prime above 3, got {}",
                args.p
            )))
        }
    };
    let bs = args.b.values_for(args.seed, p);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    run_table(p, &bs, args.format, &mut out)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_classnum(args: ClassnumArgs) -> io::Result<ExitCode> {
    if args.min_p < 2 || args.min_p > args.max_p {
        return Ok(usage_error(&format!(
            "bad range [{}, {}]",
            args.min_p, args.max_p
        )));
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let summary = run_classnum(args.min_p, args.max_p, args.format, args.jobs, &mut out)?;
    out.flush()?;
    if summary.mismatches > 0 {
        eprintln!(
            "error: {} of {} rows disagree between the Dirichlet and forms routes",
            summary.mismatches, summary.rows
        );
        return Ok(ExitCode::from(EXIT_CLAIM_FAILURE));
    }
    Ok(ExitCode::SUCCESS)
}
