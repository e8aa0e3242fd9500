//! Range sweeps pitting every closed form against its brute-force route.
//!
//! A sweep walks the primes in [min_p, max_p], evaluates a fixed registry of
//! claims on each (restricted to each claim's domain, e.g. the class-number
//! claims only apply to p ≡ 3 mod 4), and emits one machine-readable record
//! per prime in ascending order, followed by a summary line.
//!
//! Output contract: identical configuration (including the sample seed)
//! yields byte-identical standard output regardless of worker count. Real
//! per-prime wall times are therefore only recorded when
//! [`RunConfig::timings`] is set; otherwise `elapsed_ms` is 0. In failure
//! details, `expected` holds the closed-form/predicted value and `actual`
//! the enumerated one, so a failure reproduces in one library call.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{add_mod, mul_mod, normalize, primes_in_range, PrimeModulus};
use crate::class_number::{class_number_dirichlet, class_number_forms_oracle};
use crate::counts::{
    cardinality_prediction, closed_form_s, compute_s_t, count_with_shifted, inversion_parity_check,
    linear_shift_count, shift_parity_check, squares_table, FormulaSums,
};
use crate::symbols::{jacobi, legendre_euler, legendre_gauss_lemma, symbol_table};

/// Version tag carried by every JSON line.
pub const SCHEMA: &str = "qr-verify/1";

/// Base seed for the b-sampling policy; the per-prime stream is seeded with
/// `seed + p` so records are independent of sweep partitioning.
pub const DEFAULT_SEED: u64 = 20_180_000;

/// Primes per parallel batch; batches are emitted in order as they finish.
const CHUNK: usize = 128;

/// The fixed claim registry, in emission order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimId {
    /// |S| = |T| = (3 − (−1/p))/2 for every swept b.
    Thm11Cardinality,
    /// S equals its closed form for every swept b.
    Thm11SClosedForm,
    /// S is the same set for every swept b.
    Thm11SBInvariance,
    /// Dirichlet class-number route equals the forms enumeration; h odd.
    Lemma21,
    /// Consecutive residue-pattern counts match their exact closed forms.
    Lemma22Counts,
    /// Brute count equals the character-sum formula for all (a, b) swept.
    OracleNEquivalence,
    /// Shift-count parity equals the Jacobi symbol (2a(1−a)/p).
    Sun2020,
    /// Linear shift count equals (p−1)/2 for all (a, b) swept.
    Sun2019Linear,
    /// Squares-sequence inversion parity matches its class-number form.
    Sun2019Inversions,
    /// Euler, Gauss-lemma and Jacobi symbol routes agree for all a.
    SymbolsThreeway,
}

pub const CLAIM_REGISTRY: [ClaimId; 10] = [
    ClaimId::Thm11Cardinality,
    ClaimId::Thm11SClosedForm,
    ClaimId::Thm11SBInvariance,
    ClaimId::Lemma21,
    ClaimId::Lemma22Counts,
    ClaimId::OracleNEquivalence,
    ClaimId::Sun2020,
    ClaimId::Sun2019Linear,
    ClaimId::Sun2019Inversions,
    ClaimId::SymbolsThreeway,
];

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Thm11Cardinality => "thm1.1-cardinality",
            ClaimId::Thm11SClosedForm => "thm1.1-S-closed-form",
            ClaimId::Thm11SBInvariance => "thm1.1-S-b-invariance",
            ClaimId::Lemma21 => "lemma2.1",
            ClaimId::Lemma22Counts => "lemma2.2-counts",
            ClaimId::OracleNEquivalence => "oracle-N-equivalence",
            ClaimId::Sun2020 => "sun2020",
            ClaimId::Sun2019Linear => "sun2019-linear",
            ClaimId::Sun2019Inversions => "sun2019-inversions",
            ClaimId::SymbolsThreeway => "symbols-threeway",
        }
    }

    /// Whether the claim's mathematical domain covers p.
    pub fn applies_to(self, p: u64) -> bool {
        match self {
            ClaimId::Lemma21 | ClaimId::Lemma22Counts | ClaimId::Sun2019Inversions => p % 4 == 3,
            _ => true,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CLAIM_REGISTRY
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = CLAIM_REGISTRY.iter().map(|c| c.as_str()).collect();
                format!("unknown claim '{s}'; known claims: {}", known.join(", "))
            })
    }
}

/// Which shifts b to sweep per prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BPolicy {
    /// Exhaustive for p ≤ 300; above that, 8 seeded samples plus {0, 1, p−1}.
    Auto,
    /// Every b in [0, p).
    All,
    /// k seeded samples plus the pinned edge cases {0, 1, p−1}.
    Sample(u32),
    /// An explicit list, normalized mod p, deduplicated and sorted.
    List(Vec<i64>),
}

impl BPolicy {
    pub fn values_for(&self, seed: u64, p: PrimeModulus) -> Vec<u64> {
        let pm = p.get();
        match self {
            BPolicy::All => (0..pm).collect(),
            BPolicy::Auto if pm <= 300 => (0..pm).collect(),
            BPolicy::Auto => sample_values(8, seed, pm),
            BPolicy::Sample(k) => sample_values(*k, seed, pm),
            BPolicy::List(vs) => {
                let set: BTreeSet<u64> = vs.iter().map(|&v| normalize(v, pm)).collect();
                set.into_iter().collect()
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            BPolicy::Auto => "auto".to_string(),
            BPolicy::All => "all".to_string(),
            BPolicy::Sample(k) => format!("sample:{k}"),
            BPolicy::List(vs) => {
                let body: Vec<String> = vs.iter().map(i64::to_string).collect();
                format!("list:{}", body.join(","))
            }
        }
    }
}

impl FromStr for BPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => return Ok(BPolicy::Auto),
            "all" => return Ok(BPolicy::All),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("sample:") {
            let k: u32 = k
                .parse()
                .map_err(|_| format!("bad sample count in '{s}'"))?;
            if k == 0 {
                return Err("sample count must be positive".to_string());
            }
            return Ok(BPolicy::Sample(k));
        }
        if let Some(body) = s.strip_prefix("list:") {
            let values: Result<Vec<i64>, _> = body.split(',').map(str::parse).collect();
            let values = values.map_err(|_| format!("bad b list in '{s}'"))?;
            if values.is_empty() {
                return Err("b list must be non-empty".to_string());
            }
            return Ok(BPolicy::List(values));
        }
        Err(format!(
            "bad b policy '{s}'; expected all, auto, sample:K or list:v1,v2,..."
        ))
    }
}

fn sample_values(k: u32, seed: u64, pm: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(pm));
    let mut set = BTreeSet::from([0u64, 1, pm - 1]);
    for _ in 0..k {
        set.insert(rng.gen_range(0..pm));
    }
    set.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Tsv,
}

impl OutputFormat {
    fn sep(self) -> char {
        match self {
            OutputFormat::Csv => ',',
            _ => '\t',
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "tsv" => Ok(OutputFormat::Tsv),
            _ => Err(format!("bad format '{s}'; expected json, csv or tsv")),
        }
    }
}

/// Sweep configuration. Validate before running; a rejected configuration is
/// a usage error (exit code 2 at the CLI), never a claim failure.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub min_p: u64,
    pub max_p: u64,
    pub b_policy: BPolicy,
    pub seed: u64,
    /// Worker threads; 0 means the default pool.
    pub jobs: usize,
    pub format: OutputFormat,
    pub claims: Vec<ClaimId>,
    pub quiet: bool,
    /// Record real per-prime wall time. Off by default: measured times vary
    /// run to run, and the default output must be byte-reproducible.
    pub timings: bool,
}

impl RunConfig {
    pub fn new(min_p: u64, max_p: u64) -> Self {
        RunConfig {
            min_p,
            max_p,
            b_policy: BPolicy::Auto,
            seed: DEFAULT_SEED,
            jobs: 0,
            format: OutputFormat::Json,
            claims: CLAIM_REGISTRY.to_vec(),
            quiet: false,
            timings: false,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.min_p < 5 {
            return Err(format!("min_p must be at least 5, got {}", self.min_p));
        }
        if self.min_p > self.max_p {
            return Err(format!(
                "empty range: min_p={} exceeds max_p={}",
                self.min_p, self.max_p
            ));
        }
        if self.claims.is_empty() {
            return Err("at least one claim must be selected".to_string());
        }
        Ok(())
    }
}

/// Counterexample payload: `expected` is the closed-form/predicted value,
/// `actual` the enumerated one; a and b are present when the claim has them.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug)]
pub struct ClaimOutcome {
    pub id: ClaimId,
    pub passed: bool,
    pub detail: Option<Counterexample>,
}

#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub p: u64,
    pub claims: Vec<ClaimOutcome>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub primes: u64,
    pub passed: u64,
    pub failed: u64,
}

/// Evaluate the selected claims on one prime (p > 3), restricted to their
/// domains. Outcomes come back in registry order; inapplicable claims are
/// absent.
pub fn evaluate_prime(p: PrimeModulus, claims: &[ClaimId], bs: &[u64]) -> Vec<ClaimOutcome> {
    let pm = p.get();
    assert!(pm > 3, "claims are stated for p > 3");
    let active: Vec<ClaimId> = CLAIM_REGISTRY
        .iter()
        .copied()
        .filter(|c| claims.contains(c) && c.applies_to(pm))
        .collect();

    let needs_sets = active.iter().any(|c| {
        matches!(
            c,
            ClaimId::Thm11Cardinality
                | ClaimId::Thm11SClosedForm
                | ClaimId::Thm11SBInvariance
                | ClaimId::OracleNEquivalence
        )
    });

    // Brute-force S/T per b. The {x²+b}_p tables depend only on b and the
    // {ax²}_p table only on a, so both are shared across the (a, b) grid;
    // the inner loop reduces a single sum per element.
    let mut sets: Vec<(u64, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut oracle_detail = None;
    if needs_sets {
        let table = symbol_table(p);
        let sq = squares_table(p);
        let sqbs: Vec<Vec<u64>> = bs
            .iter()
            .map(|&b| sq.iter().map(|&s| add_mod(s, b, pm)).collect())
            .collect();
        let mut asq = vec![0u64; sq.len()];
        let check_formula = active.contains(&ClaimId::OracleNEquivalence);
        let sums: Vec<FormulaSums> = if check_formula {
            bs.iter().map(|&b| FormulaSums::new(p, b as i64)).collect()
        } else {
            Vec::new()
        };
        let mut s_sets: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); bs.len()];
        let mut t_sets: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); bs.len()];
        for a in 2..pm {
            for (slot, &s) in asq.iter_mut().zip(&sq) {
                *slot = mul_mod(a, s, pm);
            }
            let is_residue = table[a as usize] == 1;
            for (bi, &b) in bs.iter().enumerate() {
                let n = count_with_shifted(pm, b, &sqbs[bi], &asq);
                if check_formula && oracle_detail.is_none() {
                    let nf = sums[bi].count(a);
                    if nf != n {
                        oracle_detail = Some(Counterexample {
                            a: Some(a),
                            b: Some(b),
                            expected: json!(nf),
                            actual: json!(n),
                        });
                    }
                }
                if is_residue {
                    s_sets[bi].insert(n);
                } else {
                    t_sets[bi].insert(n);
                }
            }
        }
        sets = bs
            .iter()
            .zip(s_sets)
            .zip(t_sets)
            .map(|((&b, s), t)| {
                (
                    b,
                    s.into_iter().collect::<Vec<u64>>(),
                    t.into_iter().collect::<Vec<u64>>(),
                )
            })
            .collect();
    }

    active
        .into_iter()
        .map(|claim| {
            let detail = match claim {
                ClaimId::Thm11Cardinality => check_cardinality(p, &sets),
                ClaimId::Thm11SClosedForm => check_closed_form(p, &sets),
                ClaimId::Thm11SBInvariance => check_b_invariance(&sets),
                ClaimId::Lemma21 => check_class_number(p),
                ClaimId::Lemma22Counts => check_patterns(p),
                ClaimId::OracleNEquivalence => oracle_detail.take(),
                ClaimId::Sun2020 => check_shift_parity(p),
                ClaimId::Sun2019Linear => check_linear_shift(p, bs),
                ClaimId::Sun2019Inversions => check_inversions(p),
                ClaimId::SymbolsThreeway => check_threeway(p),
            };
            ClaimOutcome {
                id: claim,
                passed: detail.is_none(),
                detail,
            }
        })
        .collect()
}

fn check_cardinality(
    p: PrimeModulus,
    sets: &[(u64, Vec<u64>, Vec<u64>)],
) -> Option<Counterexample> {
    let pred = cardinality_prediction(p);
    for (b, s, t) in sets {
        if s.len() as u64 != pred || t.len() as u64 != pred {
            return Some(Counterexample {
                a: None,
                b: Some(*b),
                expected: json!(pred),
                actual: json!([s.len(), t.len()]),
            });
        }
    }
    None
}

fn check_closed_form(
    p: PrimeModulus,
    sets: &[(u64, Vec<u64>, Vec<u64>)],
) -> Option<Counterexample> {
    let cf = closed_form_s(p);
    for (b, s, _) in sets {
        if s != &cf {
            return Some(Counterexample {
                a: None,
                b: Some(*b),
                expected: json!(cf),
                actual: json!(s),
            });
        }
    }
    None
}

fn check_b_invariance(sets: &[(u64, Vec<u64>, Vec<u64>)]) -> Option<Counterexample> {
    let (_, first, _) = sets.first()?;
    for (b, s, _) in &sets[1..] {
        if s != first {
            return Some(Counterexample {
                a: None,
                b: Some(*b),
                expected: json!(first),
                actual: json!(s),
            });
        }
    }
    None
}

fn check_class_number(p: PrimeModulus) -> Option<Counterexample> {
    let d = class_number_dirichlet(p).expect("claim domain is p ≡ 3 mod 4");
    let forms = class_number_forms_oracle(p).expect("claim domain is p ≡ 3 mod 4");
    if d.h != forms || d.h.is_multiple_of(2) {
        return Some(Counterexample {
            a: None,
            b: None,
            expected: json!(d.h),
            actual: json!(forms),
        });
    }
    None
}

fn check_patterns(p: PrimeModulus) -> Option<Counterexample> {
    let pm = p.get();
    let counts = crate::counts::consecutive_pattern_counts(p).expect("claim domain");
    let expected = [(pm - 3) / 4, (pm - 3) / 4, (pm + 1) / 4];
    let actual = [counts.rr, counts.nr, counts.rn];
    if actual != expected || actual.contains(&0) {
        return Some(Counterexample {
            a: None,
            b: None,
            expected: json!(expected),
            actual: json!(actual),
        });
    }
    None
}

fn check_shift_parity(p: PrimeModulus) -> Option<Counterexample> {
    let pm = p.get();
    for a in 2..pm {
        let c = shift_parity_check(pm, a as i64).expect("prime modulus keeps a(1-a) coprime");
        if !c.holds() {
            return Some(Counterexample {
                a: Some(a),
                b: None,
                expected: json!(c.predicted.sign()),
                actual: json!(c.counted.sign()),
            });
        }
    }
    None
}

fn check_linear_shift(p: PrimeModulus, bs: &[u64]) -> Option<Counterexample> {
    let pm = p.get();
    let want = (pm - 1) / 2;
    for a in 2..pm {
        for &b in bs {
            let got = linear_shift_count(p, a as i64, b as i64).expect("a in [2, p-1]");
            if got != want {
                return Some(Counterexample {
                    a: Some(a),
                    b: Some(b),
                    expected: json!(want),
                    actual: json!(got),
                });
            }
        }
    }
    None
}

fn check_inversions(p: PrimeModulus) -> Option<Counterexample> {
    let c = inversion_parity_check(p).expect("claim domain is p ≡ 3 mod 4");
    if c.holds() {
        None
    } else {
        Some(Counterexample {
            a: None,
            b: None,
            expected: json!(c.predicted.sign()),
            actual: json!(c.counted.sign()),
        })
    }
}

fn check_threeway(p: PrimeModulus) -> Option<Counterexample> {
    let pm = p.get();
    for a in 1..pm {
        let e = legendre_euler(a as i64, p);
        let g = legendre_gauss_lemma(a as i64, p).expect("a is nonzero mod p");
        let j = jacobi(a as i64, pm).expect("odd prime modulus");
        if e != g || e != j {
            return Some(Counterexample {
                a: Some(a),
                b: None,
                expected: json!(e.sign()),
                actual: json!([g.sign(), j.sign()]),
            });
        }
    }
    None
}

/// Run a sweep, writing records to `out` and progress to `log`.
///
/// Work is partitioned per prime across the worker pool; results are
/// reordered into ascending prime order before emission, so the record
/// stream does not depend on scheduling.
pub fn run_verify<W: Write, L: Write>(
    cfg: &RunConfig,
    out: &mut W,
    log: &mut L,
) -> io::Result<VerifySummary> {
    debug_assert!(
        cfg.validate().is_ok(),
        "run_verify takes a validated config"
    );
    let started = Instant::now();
    let primes = primes_in_range(cfg.min_p, cfg.max_p);
    emit_verify_header(cfg, out)?;
    if !cfg.quiet {
        writeln!(
            log,
            "verifying {} primes in [{}, {}] ({} claims, b={})",
            primes.len(),
            cfg.min_p,
            cfg.max_p,
            cfg.claims.len(),
            cfg.b_policy.describe()
        )?;
    }
    let pool = build_pool(cfg.jobs);
    let mut summary = VerifySummary::default();
    let mut done = 0usize;
    for chunk in primes.chunks(CHUNK) {
        let compute = || -> Vec<VerificationRecord> {
            chunk
                .par_iter()
                .map(|&pr| {
                    let p = PrimeModulus::new(pr).expect("sieve emits odd primes above 4");
                    let bs = cfg.b_policy.values_for(cfg.seed, p);
                    let t0 = Instant::now();
                    let claims = evaluate_prime(p, &cfg.claims, &bs);
                    let elapsed_ms = if cfg.timings {
                        t0.elapsed().as_millis() as u64
                    } else {
                        0
                    };
                    VerificationRecord {
                        p: pr,
                        claims,
                        elapsed_ms,
                    }
                })
                .collect()
        };
        let records = match &pool {
            Some(pool) => pool.install(compute),
            None => compute(),
        };
        for record in &records {
            summary.primes += 1;
            for claim in &record.claims {
                if claim.passed {
                    summary.passed += 1;
                } else {
                    summary.failed += 1;
                }
            }
            emit_verify_record(cfg.format, record, out)?;
        }
        done += chunk.len();
        if !cfg.quiet && done < primes.len() {
            writeln!(log, "  {done}/{} primes", primes.len())?;
        }
    }
    emit_verify_summary(cfg.format, &summary, out)?;
    if !cfg.quiet {
        writeln!(
            log,
            "done: {} primes, {} claim failures in {:.2}s",
            summary.primes,
            summary.failed,
            started.elapsed().as_secs_f64()
        )?;
    }
    Ok(summary)
}

fn build_pool(jobs: usize) -> Option<rayon::ThreadPool> {
    (jobs > 0).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
    })
}

fn emit_verify_header<W: Write>(cfg: &RunConfig, out: &mut W) -> io::Result<()> {
    let claims: Vec<&str> = cfg.claims.iter().map(|c| c.as_str()).collect();
    match cfg.format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct HeaderBody<'a> {
                min_p: u64,
                max_p: u64,
                b_policy: String,
                seed: u64,
                claims: &'a [&'a str],
            }
            #[derive(Serialize)]
            struct HeaderWire<'a> {
                schema: &'static str,
                header: HeaderBody<'a>,
            }
            let wire = HeaderWire {
                schema: SCHEMA,
                header: HeaderBody {
                    min_p: cfg.min_p,
                    max_p: cfg.max_p,
                    b_policy: cfg.b_policy.describe(),
                    seed: cfg.seed,
                    claims: &claims,
                },
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&wire).expect("header serializes")
            )
        }
        OutputFormat::Csv | OutputFormat::Tsv => {
            writeln!(
                out,
                "# {} min_p={} max_p={} b={} seed={} claims={}",
                SCHEMA,
                cfg.min_p,
                cfg.max_p,
                cfg.b_policy.describe(),
                cfg.seed,
                claims.join(",")
            )?;
            let sep = cfg.format.sep();
            writeln!(out, "p{sep}claim{sep}status{sep}detail")
        }
    }
}

#[derive(Serialize)]
struct ClaimWire<'a> {
    id: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: &'a Option<Counterexample>,
}

#[derive(Serialize)]
struct RecordWire<'a> {
    schema: &'static str,
    p: u64,
    claims: Vec<ClaimWire<'a>>,
    elapsed_ms: u64,
}

fn emit_verify_record<W: Write>(
    format: OutputFormat,
    record: &VerificationRecord,
    out: &mut W,
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            let wire = RecordWire {
                schema: SCHEMA,
                p: record.p,
                claims: record
                    .claims
                    .iter()
                    .map(|c| ClaimWire {
                        id: c.id.as_str(),
                        status: if c.passed { "pass" } else { "fail" },
                        detail: &c.detail,
                    })
                    .collect(),
                elapsed_ms: record.elapsed_ms,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&wire).expect("record serializes")
            )
        }
        OutputFormat::Csv | OutputFormat::Tsv => {
            let sep = format.sep();
            for c in &record.claims {
                writeln!(
                    out,
                    "{}{sep}{}{sep}{}{sep}{}",
                    record.p,
                    c.id.as_str(),
                    if c.passed { "pass" } else { "fail" },
                    detail_text(&c.detail)
                )?;
            }
            Ok(())
        }
    }
}

fn emit_verify_summary<W: Write>(
    format: OutputFormat,
    summary: &VerifySummary,
    out: &mut W,
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct SummaryWire<'a> {
                schema: &'static str,
                summary: &'a VerifySummary,
            }
            let wire = SummaryWire {
                schema: SCHEMA,
                summary,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&wire).expect("summary serializes")
            )
        }
        OutputFormat::Csv | OutputFormat::Tsv => writeln!(
            out,
            "# summary primes={} passed={} failed={}",
            summary.primes, summary.passed, summary.failed
        ),
    }
}

fn detail_text(detail: &Option<Counterexample>) -> String {
    let Some(c) = detail else {
        return String::new();
    };
    let mut parts = Vec::new();
    if let Some(a) = c.a {
        parts.push(format!("a={a}"));
    }
    if let Some(b) = c.b {
        parts.push(format!("b={b}"));
    }
    parts.push(format!("expected={}", value_text(&c.expected)));
    parts.push(format!("actual={}", value_text(&c.actual)));
    parts.join(" ")
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Array(xs) => {
            let body: Vec<String> = xs.iter().map(value_text).collect();
            body.join(";")
        }
        other => other.to_string(),
    }
}

/// Emit the S/T table of one prime over the given (normalized) shifts.
pub fn run_table<W: Write>(
    p: PrimeModulus,
    bs: &[u64],
    format: OutputFormat,
    out: &mut W,
) -> io::Result<()> {
    assert!(p.get() > 3, "tables require p > 3");
    let reports: Vec<_> = bs.par_iter().map(|&b| compute_s_t(p, b as i64)).collect();
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct RowWire<'a> {
                b: u64,
                #[serde(rename = "S")]
                s: &'a [u64],
                #[serde(rename = "T")]
                t: &'a [u64],
            }
            #[derive(Serialize)]
            struct TableWire<'a> {
                p: u64,
                rows: Vec<RowWire<'a>>,
            }
            let wire = TableWire {
                p: p.get(),
                rows: reports
                    .iter()
                    .map(|r| RowWire {
                        b: r.b,
                        s: &r.s,
                        t: &r.t,
                    })
                    .collect(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&wire).expect("table serializes")
            )
        }
        OutputFormat::Csv | OutputFormat::Tsv => {
            let sep = format.sep();
            writeln!(out, "b{sep}S{sep}T")?;
            for r in &reports {
                writeln!(out, "{}{sep}{}{sep}{}", r.b, join_set(&r.s), join_set(&r.t))?;
            }
            Ok(())
        }
    }
}

fn join_set(xs: &[u64]) -> String {
    let body: Vec<String> = xs.iter().map(u64::to_string).collect();
    body.join(";")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassnumSummary {
    pub rows: u64,
    pub mismatches: u64,
}

/// Tabulate (p, h, weighted_sum, forms_count) for every p ≡ 3 (mod 4) in
/// range, computing h by both routes. A route disagreement counts as a
/// mismatch in the summary (exit code 1 at the CLI).
pub fn run_classnum<W: Write>(
    min_p: u64,
    max_p: u64,
    format: OutputFormat,
    jobs: usize,
    out: &mut W,
) -> io::Result<ClassnumSummary> {
    let primes: Vec<u64> = primes_in_range(min_p, max_p)
        .into_iter()
        .filter(|&q| q % 4 == 3 && q > 3)
        .collect();
    let pool = build_pool(jobs);
    let compute = || -> Vec<(u64, u64, i128, u64)> {
        primes
            .par_iter()
            .map(|&q| {
                let p = PrimeModulus::new(q).expect("sieve emits primes");
                let d = class_number_dirichlet(p).expect("filtered to p ≡ 3 mod 4");
                let forms = class_number_forms_oracle(p).expect("filtered to p ≡ 3 mod 4");
                (q, d.h, d.weighted_sum, forms)
            })
            .collect()
    };
    let rows = match &pool {
        Some(pool) => pool.install(compute),
        None => compute(),
    };
    let sep = format.sep();
    if matches!(format, OutputFormat::Csv | OutputFormat::Tsv) {
        writeln!(out, "p{sep}h{sep}weighted_sum{sep}forms_count")?;
    }
    #[derive(Serialize)]
    struct ClassnumWire {
        p: u64,
        h: u64,
        weighted_sum: i64,
        forms_count: u64,
    }
    let mut summary = ClassnumSummary::default();
    for &(q, h, weighted_sum, forms) in &rows {
        summary.rows += 1;
        if h != forms {
            summary.mismatches += 1;
        }
        let ws = i64::try_from(weighted_sum).expect("weighted sum fits i64 at CLI scales");
        match format {
            OutputFormat::Json => {
                let wire = ClassnumWire {
                    p: q,
                    h,
                    weighted_sum: ws,
                    forms_count: forms,
                };
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&wire).expect("row serializes")
                )?;
            }
            OutputFormat::Csv | OutputFormat::Tsv => {
                writeln!(out, "{q}{sep}{h}{sep}{ws}{sep}{forms}")?;
            }
        }
    }
    Ok(summary)
}
