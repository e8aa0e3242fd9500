//! Residue-comparison counts and their closed forms.
//!
//! The central statistic: for an odd prime p, a multiplier 1 < a < p and a
//! shift b, count the x ∈ [1, (p−1)/2] with {x²+b}_p > {ax²+b}_p. Collecting
//! the distinct counts over residue multipliers gives the set S, over
//! nonresidue multipliers the set T. S is independent of b and has an exact
//! closed form: {(p−1)/4} when p ≡ 1 (mod 4), and {(p−1±2h(−p))/4} when
//! p ≡ 3 (mod 4), where h is the class number from [`crate::class_number`].
//!
//! Every closed form here is paired with a brute-force route; nothing is
//! computed in floating point and every division is asserted exact.

use std::collections::BTreeSet;

use crate::arith::{add_mod, gcd, mul_mod, normalize, PrimeModulus};
use crate::class_number::{class_number_dirichlet, require_three_mod_4};
use crate::symbols::{jacobi, legendre_euler, symbol_table, Symbol};
use crate::{Error, Result};

/// A validated (p, a, b) triple: 1 < a < p, with b normalized to [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountSpec {
    p: PrimeModulus,
    a: u64,
    b: u64,
}

impl CountSpec {
    pub fn new(p: PrimeModulus, a: i64, b: i64) -> Result<Self> {
        let pm = p.get();
        if a < 2 || a as u64 >= pm {
            return Err(Error::MultiplierOutOfRange { a, p: pm });
        }
        Ok(CountSpec {
            p,
            a: a as u64,
            b: normalize(b, pm),
        })
    }

    #[inline]
    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn a(&self) -> u64 {
        self.a
    }

    /// The shift, normalized to [0, p).
    #[inline]
    pub fn b(&self) -> u64 {
        self.b
    }

    /// ε = (a/p). Nonzero since 1 < a < p.
    pub fn epsilon(&self) -> Symbol {
        legendre_euler(self.a as i64, self.p)
    }

    /// δ = (a(1−a)/p). Nonzero since a ≢ 0, 1 (mod p).
    pub fn delta(&self) -> Symbol {
        let pm = self.p.get();
        let one_minus_a = pm + 1 - self.a; // (1−a) mod p, in [2, p−1]
        legendre_euler(mul_mod(self.a, one_minus_a, pm) as i64, self.p)
    }
}

/// {x²}_p for x = 0..=(p−1)/2; index x holds the square.
pub(crate) fn squares_table(p: PrimeModulus) -> Vec<u64> {
    let pm = p.get();
    let mut sq = vec![0u64; p.half() as usize + 1];
    let mut acc = 0u64;
    for (x, slot) in sq.iter_mut().enumerate().skip(1) {
        acc = add_mod(acc, 2 * x as u64 - 1, pm);
        *slot = acc;
    }
    sq
}

/// Core brute count given a precomputed square table.
pub(crate) fn count_with_squares(pm: u64, a: u64, b: u64, sq: &[u64]) -> u64 {
    let mut n = 0u64;
    for &s in &sq[1..] {
        let lhs = add_mod(s, b, pm);
        let rhs = add_mod(mul_mod(a, s, pm), b, pm);
        // (a−1)x² ≢ 0, so a tie is mathematically impossible
        assert_ne!(lhs, rhs, "tie at p={pm}, a={a}, b={b}");
        if lhs > rhs {
            n += 1;
        }
    }
    n
}

/// Same count with both tables prepared by the caller: `sqb` holds the
/// shifted squares {x²+b}_p and `asq` the multiplied squares {ax²}_p. Used
/// by sweeps that fix a and vary b; only the {ax²}_p + b side remains to
/// reduce per element.
pub(crate) fn count_with_shifted(pm: u64, b: u64, sqb: &[u64], asq: &[u64]) -> u64 {
    let mut n = 0u64;
    let mut ties = 0u64;
    // branchless body so the loop vectorizes; the tie check is asserted
    // after the pass (a tie is mathematically impossible, see count_brute)
    for (&lhs, &t) in sqb[1..].iter().zip(&asq[1..]) {
        let sum = t.wrapping_add(b); // t, b < p < 2^63: never wraps
        let rhs = if sum >= pm { sum.wrapping_sub(pm) } else { sum };
        ties += u64::from(lhs == rhs);
        n += u64::from(lhs > rhs);
    }
    assert_eq!(ties, 0, "tie at p={pm}, b={b}");
    n
}

/// The count of x ∈ [1, (p−1)/2] with {x²+b}_p > {ax²+b}_p, by direct
/// enumeration. This is the oracle route; see [`count_formula`] for the
/// closed route derived from character sums.
pub fn count_brute(spec: &CountSpec) -> u64 {
    count_with_squares(spec.p.get(), spec.a, spec.b, &squares_table(spec.p))
}

/// The four character sums that evaluate the count formula for a fixed
/// (p, b): building one is O(p), after which [`FormulaSums::count`] is O(1)
/// per multiplier.
///
/// The p-scaled identity evaluated here is
/// p·N = p(p−1)/2 + Σ_{(x/p)=1}{x+b}_p − Σ_{(y/p)=ε}{y+b}_p − Σ_{(z/p)=δε} z,
/// which for ε = +1 collapses to p·N = p(p−1)/2 − Σ_{(z/p)=δ} z (and is then
/// independent of b).
pub struct FormulaSums {
    p: PrimeModulus,
    b: u64,
    table: Vec<i8>,
    /// Σ {z+b}_p over z with (z/p) = +1 / −1.
    shifted: [u128; 2],
    /// Σ z over z with (z/p) = +1 / −1.
    zsum: [u128; 2],
}

impl FormulaSums {
    pub fn new(p: PrimeModulus, b: i64) -> Self {
        assert!(p.get() > 3, "the count formula requires p > 3");
        let pm = p.get();
        let bn = normalize(b, pm);
        let table = symbol_table(p);
        let mut shifted = [0u128; 2];
        let mut zsum = [0u128; 2];
        for z in 1..pm {
            let idx = if table[z as usize] == 1 { 0 } else { 1 };
            shifted[idx] += add_mod(z, bn, pm) as u128;
            zsum[idx] += z as u128;
        }
        FormulaSums {
            p,
            b: bn,
            table,
            shifted,
            zsum,
        }
    }

    #[inline]
    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn b(&self) -> u64 {
        self.b
    }

    /// Evaluate the formula for one multiplier a ∈ [2, p−1]. The division by
    /// p is asserted exact — an inexact division would falsify the identity.
    pub fn count(&self, a: u64) -> u64 {
        let pm = self.p.get();
        assert!(a >= 2 && a < pm, "multiplier {a} out of range for p={pm}");
        let one_minus_a = pm + 1 - a; // (1−a) mod p, never 0 or 1
        let eps = self.table[a as usize];
        let delta_eps = self.table[one_minus_a as usize]; // ((1−a)/p) = δε
        let zidx = if delta_eps == 1 { 0 } else { 1 };
        let base = pm as i128 * (pm as i128 - 1) / 2;
        let scaled = if eps == 1 {
            base - self.zsum[zidx] as i128
        } else {
            base + self.shifted[0] as i128 - self.shifted[1] as i128 - self.zsum[zidx] as i128
        };
        assert!(
            scaled >= 0 && scaled % pm as i128 == 0,
            "p-scaled count not divisible: p={pm}, a={a}, b={}, scaled={scaled}",
            self.b
        );
        (scaled / pm as i128) as u64
    }
}

/// The count via the character-sum formula; must agree with [`count_brute`].
pub fn count_formula(spec: &CountSpec) -> u64 {
    FormulaSums::new(spec.p, spec.b as i64).count(spec.a)
}

/// Per-multiplier detail row of a [`CountReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerACount {
    pub a: u64,
    pub epsilon: Symbol,
    pub delta: Symbol,
    pub n: u64,
}

/// The sets S and T for a fixed (p, b): the distinct counts over residue
/// multipliers (S) and nonresidue multipliers (T), sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub p: u64,
    /// The shift, normalized to [0, p).
    pub b: u64,
    pub s: Vec<u64>,
    pub t: Vec<u64>,
    pub per_a: Option<Vec<PerACount>>,
}

/// S and T for (p, b) by brute-force enumeration over all a ∈ [2, p−1].
pub fn compute_s_t(p: PrimeModulus, b: i64) -> CountReport {
    compute_report(p, b, false)
}

/// As [`compute_s_t`], additionally tabulating (a, ε, δ, N) per multiplier.
pub fn compute_s_t_detailed(p: PrimeModulus, b: i64) -> CountReport {
    compute_report(p, b, true)
}

fn compute_report(p: PrimeModulus, b: i64, detailed: bool) -> CountReport {
    let pm = p.get();
    assert!(pm > 3, "S and T require p > 3");
    let bn = normalize(b, pm);
    let table = symbol_table(p);
    let sq = squares_table(p);
    let mut s = BTreeSet::new();
    let mut t = BTreeSet::new();
    let mut per_a = detailed.then(|| Vec::with_capacity(pm as usize - 2));
    for a in 2..pm {
        let n = count_with_squares(pm, a, bn, &sq);
        match table[a as usize] {
            1 => s.insert(n),
            _ => t.insert(n),
        };
        if let Some(rows) = per_a.as_mut() {
            let one_minus_a = pm + 1 - a;
            rows.push(PerACount {
                a,
                epsilon: Symbol::from_i8(table[a as usize]),
                delta: Symbol::from_i8(table[mul_mod(a, one_minus_a, pm) as usize]),
                n,
            });
        }
    }
    CountReport {
        p: pm,
        b: bn,
        s: s.into_iter().collect(),
        t: t.into_iter().collect(),
        per_a,
    }
}

/// The closed form of S: {(p−1)/4} for p ≡ 1 (mod 4), otherwise
/// {(p−1−2h)/4, (p−1+2h)/4} with h = h(−p). All divisions are asserted
/// exact and the values asserted inside [0, (p−1)/2].
pub fn closed_form_s(p: PrimeModulus) -> Vec<u64> {
    let pm = p.get();
    assert!(pm > 3, "closed form requires p > 3");
    if pm % 4 == 1 {
        debug_assert_eq!((pm - 1) % 4, 0);
        return vec![(pm - 1) / 4];
    }
    let h = class_number_dirichlet(p)
        .expect("p ≡ 3 (mod 4) and p > 3 here")
        .h as i128;
    let lo = pm as i128 - 1 - 2 * h;
    let hi = pm as i128 - 1 + 2 * h;
    assert!(
        lo >= 0 && lo % 4 == 0 && hi % 4 == 0,
        "closed form of S not divisible by 4 at p={pm}, h={h}"
    );
    let (lo, hi) = ((lo / 4) as u64, (hi / 4) as u64);
    assert!(hi <= p.half(), "closed form exceeds (p−1)/2 at p={pm}");
    vec![lo, hi]
}

/// |S| = |T| as predicted: (3 − (−1/p))/2, i.e. 1 for p ≡ 1 (mod 4) and 2
/// for p ≡ 3 (mod 4).
pub fn cardinality_prediction(p: PrimeModulus) -> u64 {
    assert!(p.get() > 3, "cardinality prediction requires p > 3");
    ((3 - legendre_euler(-1, p).sign()) / 2) as u64
}

/// Counts of consecutive symbol patterns over x ∈ [1, p−2].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternCounts {
    /// (x/p) = (x+1/p) = +1
    pub rr: u64,
    /// (x/p) = −1, (x+1/p) = +1
    pub nr: u64,
    /// (x/p) = +1, (x+1/p) = −1
    pub rn: u64,
}

/// Enumerates consecutive residue/nonresidue patterns for p ≡ 3 (mod 4),
/// p > 3. The exact values are rr = nr = (p−3)/4 and rn = (p+1)/4, all
/// positive.
pub fn consecutive_pattern_counts(p: PrimeModulus) -> Result<PatternCounts> {
    require_three_mod_4(p)?;
    let pm = p.get();
    let table = symbol_table(p);
    let mut counts = PatternCounts {
        rr: 0,
        nr: 0,
        rn: 0,
    };
    for x in 1..=pm - 2 {
        match (table[x as usize], table[x as usize + 1]) {
            (1, 1) => counts.rr += 1,
            (-1, 1) => counts.nr += 1,
            (1, -1) => counts.rn += 1,
            _ => {}
        }
    }
    Ok(counts)
}

/// |{x ∈ [0, p−1] : {ax+b}_p > x}|, which equals (p−1)/2 whenever
/// a ≢ 0, 1 (mod p).
pub fn linear_shift_count(p: PrimeModulus, a: i64, b: i64) -> Result<u64> {
    let pm = p.get();
    let an = normalize(a, pm);
    if an == 0 || an == 1 {
        return Err(Error::DegenerateMultiplier { a, modulus: pm });
    }
    let mut r = normalize(b, pm); // {ax+b}_p, stepped by a
    let mut count = 0u64;
    for x in 0..pm {
        if r > x {
            count += 1;
        }
        r = add_mod(r, an, pm);
    }
    Ok(count)
}

/// A parity identity verdict: the enumerated parity and the closed-form
/// prediction it must equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityCheck {
    pub counted: Symbol,
    pub predicted: Symbol,
}

impl ParityCheck {
    #[inline]
    pub fn holds(self) -> bool {
        self.counted == self.predicted
    }
}

/// For odd n and gcd(a(1−a), n) = 1, the parity of
/// |{1 ≤ k ≤ (n−1)/2 : {ka}_n > k}| equals the Jacobi symbol (2a(1−a)/n).
///
/// Returns both sides; `counted` is the enumeration, `predicted` the symbol.
pub fn shift_parity_check(n: u64, a: i64) -> Result<ParityCheck> {
    if n == 0 || n.is_multiple_of(2) || n >= 1 << 63 {
        return Err(Error::NotOddModulus(n));
    }
    let an = (a as i128).rem_euclid(n as i128) as u64;
    let one_minus_a = (1 - a as i128).rem_euclid(n as i128) as u64;
    if gcd(an, n) != 1 || gcd(one_minus_a, n) != 1 {
        return Err(Error::NotCoprime { a, modulus: n });
    }
    let mut r = 0u64; // {ka}_n, stepped by a
    let mut count = 0u64;
    for k in 1..=(n - 1) / 2 {
        r = add_mod(r, an, n);
        if r > k {
            count += 1;
        }
    }
    let arg = mul_mod(mul_mod(2 % n, an, n), one_minus_a, n);
    let predicted = jacobi(arg as i64, n).expect("n validated odd");
    Ok(ParityCheck {
        counted: Symbol::from_parity(count),
        predicted,
    })
}

/// For p ≡ 3 (mod 4), p > 3: the parity of the number of inversions in the
/// sequence {1²}_p, {2²}_p, …, {((p−1)/2)²}_p equals +1 when p ≡ 3 (mod 8)
/// and (−1)^((h(−p)+1)/2) when p ≡ 7 (mod 8).
pub fn inversion_parity_check(p: PrimeModulus) -> Result<ParityCheck> {
    require_three_mod_4(p)?;
    let sq = squares_table(p);
    let inversions = count_inversions(&sq[1..]);
    let predicted = match p.get() % 8 {
        3 => Symbol::ONE,
        _ => {
            let h = class_number_dirichlet(p)?.h;
            Symbol::from_parity(h.div_ceil(2))
        }
    };
    Ok(ParityCheck {
        counted: Symbol::from_parity(inversions),
        predicted,
    })
}

/// The scaled three-term identity behind the count formula: for p ∤ x and
/// a ≢ 0, 1 (mod p), the integer {ax²+b}_p + {(1−a)x²}_p − {x²+b}_p is
/// exactly 0 or p (asserted). Returns 0 when {x²+b}_p > {ax²+b}_p, else 1.
pub fn fractional_identity_check(p: PrimeModulus, a: i64, b: i64, x: i64) -> Result<u64> {
    let pm = p.get();
    let an = normalize(a, pm);
    if an == 0 || an == 1 {
        return Err(Error::DegenerateMultiplier { a, modulus: pm });
    }
    let xn = normalize(x, pm);
    if xn == 0 {
        return Err(Error::DivisibleByModulus {
            value: x,
            modulus: pm,
        });
    }
    let bn = normalize(b, pm);
    let xx = mul_mod(xn, xn, pm);
    let ax2b = add_mod(mul_mod(an, xx, pm), bn, pm);
    let one_minus_a_x2 = mul_mod(pm + 1 - an, xx, pm);
    let x2b = add_mod(xx, bn, pm);
    let value = ax2b as i128 + one_minus_a_x2 as i128 - x2b as i128;
    assert!(
        value == 0 || value == pm as i128,
        "three-term identity violated at p={pm}, a={a}, b={b}, x={x}: {value}"
    );
    Ok(if x2b > ax2b { 0 } else { 1 })
}

/// Number of pairs i < j with values[i] > values[j], by merge counting.
fn count_inversions(values: &[u64]) -> u64 {
    fn sort_count(v: &mut [u64], buf: &mut [u64]) -> u64 {
        let n = v.len();
        if n <= 1 {
            return 0;
        }
        let mid = n / 2;
        let mut inversions = sort_count(&mut v[..mid], buf) + sort_count(&mut v[mid..], buf);
        let (mut i, mut j, mut k) = (0, mid, 0);
        while i < mid && j < n {
            if v[i] <= v[j] {
                buf[k] = v[i];
                i += 1;
            } else {
                buf[k] = v[j];
                j += 1;
                inversions += (mid - i) as u64;
            }
            k += 1;
        }
        buf[k..n].copy_from_slice(if i < mid { &v[i..mid] } else { &v[j..n] });
        v.copy_from_slice(&buf[..n]);
        inversions
    }
    let mut work = values.to_vec();
    let mut buf = vec![0u64; values.len()];
    sort_count(&mut work, &mut buf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_in_range;
    use proptest::prelude::*;

    fn p(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    fn spec(pv: u64, a: i64, b: i64) -> CountSpec {
        CountSpec::new(p(pv), a, b).unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_brute(&spec(7, 4, 0)), 2);
        assert_eq!(count_brute(&spec(5, 2, 1)), 0);
        // 13 ≡ 1 (mod 4), so the b=0 count is (13−1)/4 for every a
        assert_eq!(count_brute(&spec(13, 5, 0)), 3);
    }

    #[test]
    fn spec_validation() {
        assert!(CountSpec::new(p(7), 1, 0).is_err());
        assert!(CountSpec::new(p(7), 7, 0).is_err());
        assert!(CountSpec::new(p(7), -2, 0).is_err());
        // b may be anything; it normalizes
        assert_eq!(spec(7, 4, -3).b(), 4);
        assert_eq!(spec(7, 4, 16).b(), 2);
    }

    #[test]
    fn epsilon_delta() {
        let s = spec(7, 4, 0);
        assert_eq!(s.epsilon(), Symbol::ONE);
        // a(1−a) = 4·(−3) ≡ 2 (mod 7), a residue
        assert_eq!(s.delta(), Symbol::ONE);
        let s = spec(7, 3, 0);
        assert_eq!(s.epsilon(), Symbol::MINUS_ONE);
    }

    #[test]
    fn formula_matches_brute_examples() {
        assert_eq!(count_formula(&spec(7, 4, 0)), 2);
        assert_eq!(count_formula(&spec(7, 2, 0)), count_brute(&spec(7, 2, 0)));
        assert_eq!(count_formula(&spec(11, 3, 5)), count_brute(&spec(11, 3, 5)));
    }

    #[test]
    fn formula_matches_brute_exhaustive_small() {
        for pr in primes_in_range(5, 61) {
            let pm = p(pr);
            for b in 0..pr {
                let sums = FormulaSums::new(pm, b as i64);
                for a in 2..pr {
                    let s = CountSpec::new(pm, a as i64, b as i64).unwrap();
                    assert_eq!(
                        count_brute(&s),
                        sums.count(a),
                        "mismatch at p={pr}, a={a}, b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn shifted_kernel_matches_plain() {
        for pr in primes_in_range(5, 61) {
            let pm = p(pr);
            let sq = squares_table(pm);
            let mut asq = vec![0u64; sq.len()];
            for a in 2..pr {
                for (slot, &s) in asq.iter_mut().zip(&sq) {
                    *slot = mul_mod(a, s, pr);
                }
                for b in [0, 1, pr - 1, pr / 2] {
                    let sqb: Vec<u64> = sq.iter().map(|&s| add_mod(s, b, pr)).collect();
                    assert_eq!(
                        count_with_shifted(pr, b, &sqb, &asq),
                        count_with_squares(pr, a, b, &sq)
                    );
                }
            }
        }
    }

    #[test]
    fn s_t_paper_rows() {
        let r = compute_s_t(p(5), 3);
        assert_eq!(r.s, vec![1]);
        assert_eq!(r.t, vec![2]);
        let r = compute_s_t(p(7), 2);
        assert_eq!(r.s, vec![1, 2]);
        assert_eq!(r.t, vec![2, 3]);
        let r = compute_s_t(p(7), 6);
        assert_eq!(r.s, vec![1, 2]);
        assert_eq!(r.t, vec![0, 1]);
    }

    #[test]
    fn detailed_report_rows() {
        let r = compute_s_t_detailed(p(7), 0);
        let rows = r.per_a.expect("detailed");
        assert_eq!(rows.len(), 5);
        let row_a4 = rows.iter().find(|row| row.a == 4).unwrap();
        assert_eq!(row_a4.n, 2);
        assert_eq!(row_a4.epsilon, Symbol::ONE);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_s(p(5)), vec![1]);
        assert_eq!(closed_form_s(p(7)), vec![1, 2]);
        // h(−23) = 3: (22−6)/4 = 4 and (22+6)/4 = 7
        assert_eq!(closed_form_s(p(23)), vec![4, 7]);
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for pr in primes_in_range(5, 300) {
            let pm = p(pr);
            let cf = closed_form_s(pm);
            for b in [0i64, 1, pr as i64 - 1, 17] {
                let r = compute_s_t(pm, b);
                assert_eq!(r.s, cf, "S mismatch at p={pr}, b={b}");
                assert_eq!(
                    r.t.len() as u64,
                    cardinality_prediction(pm),
                    "|T| mismatch at p={pr}, b={b}"
                );
            }
        }
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(cardinality_prediction(p(5)), 1);
        assert_eq!(cardinality_prediction(p(7)), 2);
        assert_eq!(cardinality_prediction(p(13)), 1);
    }

    #[test]
    fn quarter_count_at_zero_shift_for_one_mod_four() {
        // b = 0, p ≡ 1 (mod 4): every multiplier yields exactly (p−1)/4
        for pr in primes_in_range(5, 2000) {
            if pr % 4 != 1 {
                continue;
            }
            let r = compute_s_t(p(pr), 0);
            let quarter = (pr - 1) / 4;
            assert_eq!(r.s, vec![quarter], "S at p={pr}, b=0");
            assert_eq!(r.t, vec![quarter], "T at p={pr}, b=0");
        }
    }

    #[test]
    fn pattern_count_examples() {
        assert_eq!(
            consecutive_pattern_counts(p(7)).unwrap(),
            PatternCounts {
                rr: 1,
                nr: 1,
                rn: 2
            }
        );
        assert_eq!(
            consecutive_pattern_counts(p(11)).unwrap(),
            PatternCounts {
                rr: 2,
                nr: 2,
                rn: 3
            }
        );
        assert_eq!(
            consecutive_pattern_counts(p(19)).unwrap(),
            PatternCounts {
                rr: 4,
                nr: 4,
                rn: 5
            }
        );
        assert_eq!(
            consecutive_pattern_counts(p(13)),
            Err(Error::NotThreeMod4 { p: 13 })
        );
        assert_eq!(
            consecutive_pattern_counts(p(3)),
            Err(Error::NotThreeMod4 { p: 3 })
        );
    }

    #[test]
    fn linear_shift_examples() {
        assert_eq!(linear_shift_count(p(7), 4, 0).unwrap(), 3);
        assert_eq!(linear_shift_count(p(5), 3, 2).unwrap(), 2);
        assert_eq!(linear_shift_count(p(11), 7, 10).unwrap(), 5);
        assert_eq!(
            linear_shift_count(p(7), 8, 1),
            Err(Error::DegenerateMultiplier { a: 8, modulus: 7 })
        );
        assert_eq!(
            linear_shift_count(p(7), 0, 1),
            Err(Error::DegenerateMultiplier { a: 0, modulus: 7 })
        );
    }

    #[test]
    fn linear_shift_is_half_small() {
        for pr in primes_in_range(3, 60) {
            let pm = p(pr);
            for a in 2..pr {
                for b in 0..pr {
                    assert_eq!(
                        linear_shift_count(pm, a as i64, b as i64).unwrap(),
                        (pr - 1) / 2,
                        "at p={pr}, a={a}, b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn shift_parity_examples() {
        // n=9, a=2: {2k}_9 = 2,4,6,8 all exceed k, so the parity is +1,
        // and (2·2·(−1)/9) = (−4/9) = +1
        let c = shift_parity_check(9, 2).unwrap();
        assert_eq!(c.counted, Symbol::ONE);
        assert!(c.holds());
        // n=1: empty count vs the (·/1) = +1 convention
        let c = shift_parity_check(1, 2).unwrap();
        assert_eq!((c.counted, c.predicted), (Symbol::ONE, Symbol::ONE));
        // n=15, a=2: count is 7, so −1 on both sides
        let c = shift_parity_check(15, 2).unwrap();
        assert_eq!(c.counted, Symbol::MINUS_ONE);
        assert!(c.holds());
        // a=7 violates gcd(a(1−a), 15) = 1 (the factor 3 divides 42)
        assert_eq!(
            shift_parity_check(15, 7),
            Err(Error::NotCoprime { a: 7, modulus: 15 })
        );
        assert_eq!(shift_parity_check(8, 3), Err(Error::NotOddModulus(8)));
    }

    #[test]
    fn shift_parity_sweep_small() {
        for n in (1..400u64).step_by(2) {
            for a in 2..n.max(3) {
                match shift_parity_check(n, a as i64) {
                    Ok(c) => assert!(c.holds(), "parity identity failed at n={n}, a={a}"),
                    Err(Error::NotCoprime { .. }) => {}
                    Err(e) => panic!("unexpected error at n={n}, a={a}: {e}"),
                }
            }
        }
    }

    #[test]
    fn inversion_parity_examples() {
        // p=7: squares sequence (1,4,2) has exactly one inversion
        let c = inversion_parity_check(p(7)).unwrap();
        assert_eq!(c.counted, Symbol::MINUS_ONE);
        assert_eq!(c.predicted, Symbol::MINUS_ONE);
        // p=11 ≡ 3 (mod 8): parity must be even
        let c = inversion_parity_check(p(11)).unwrap();
        assert_eq!((c.counted, c.predicted), (Symbol::ONE, Symbol::ONE));
        // p=23 ≡ 7 (mod 8), h=3: prediction (−1)^2 = +1
        let c = inversion_parity_check(p(23)).unwrap();
        assert_eq!((c.counted, c.predicted), (Symbol::ONE, Symbol::ONE));
        assert_eq!(
            inversion_parity_check(p(13)),
            Err(Error::NotThreeMod4 { p: 13 })
        );
    }

    #[test]
    fn fractional_identity_examples() {
        assert_eq!(fractional_identity_check(p(7), 4, 0, 2).unwrap(), 0);
        assert_eq!(fractional_identity_check(p(7), 4, 0, 1).unwrap(), 1);
        // must match the direct comparison
        let direct = {
            let x2b = (4 * 4 + 3) % 11;
            let ax2b = (6 * 4 * 4 + 3) % 11;
            u64::from(x2b <= ax2b)
        };
        assert_eq!(fractional_identity_check(p(11), 6, 3, 4).unwrap(), direct);
        assert!(fractional_identity_check(p(7), 1, 0, 2).is_err());
        assert_eq!(
            fractional_identity_check(p(7), 4, 0, 14),
            Err(Error::DivisibleByModulus {
                value: 14,
                modulus: 7
            })
        );
    }

    fn count_inversions_naive(values: &[u64]) -> u64 {
        let mut inv = 0;
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                if values[i] > values[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    #[test]
    fn merge_count_matches_naive_oracle() {
        assert_eq!(count_inversions(&[]), 0);
        assert_eq!(count_inversions(&[5]), 0);
        assert_eq!(count_inversions(&[2, 1, 3, 0]), 4);
        assert_eq!(count_inversions(&[3, 2, 1, 0]), 6);
        for pr in primes_in_range(3, 200) {
            let sq = squares_table(p(pr));
            assert_eq!(
                count_inversions(&sq[1..]),
                count_inversions_naive(&sq[1..]),
                "inversion count mismatch at p={pr}"
            );
        }
    }

    proptest! {
        #[test]
        fn count_in_range(pidx in 0usize..5, a in 2i64..100, braw in -10_000i64..10_000) {
            let pm = p([101u64, 103, 107, 109, 113][pidx]);
            let s = CountSpec::new(pm, a, braw).unwrap();
            let n = count_brute(&s);
            prop_assert!(n <= pm.half());
        }

        #[test]
        fn count_periodic_in_b(pidx in 0usize..4, a in 2i64..60, braw in -100_000i64..100_000) {
            let pm = p([61u64, 67, 71, 73][pidx]);
            let reduced = braw.rem_euclid(pm.get() as i64);
            let s1 = CountSpec::new(pm, a, braw).unwrap();
            let s2 = CountSpec::new(pm, a, reduced).unwrap();
            prop_assert_eq!(count_brute(&s1), count_brute(&s2));
        }

        #[test]
        fn formula_equals_brute_random(pidx in 0usize..4, a in 2i64..100, braw in -10_000i64..10_000) {
            let pm = p([101u64, 103, 107, 127][pidx]);
            let s = CountSpec::new(pm, a, braw).unwrap();
            prop_assert_eq!(count_brute(&s), count_formula(&s));
        }
    }
}
