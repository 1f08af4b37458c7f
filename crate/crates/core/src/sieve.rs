//! Segmented sieving of the von Mangoldt function and the prime-counting
//! functions built on it: ψ, θ, π and their restrictions to residue classes.
//!
//! All classification is done in integer arithmetic. Logarithms enter only as
//! the weight `ln p` attached to each prime power, and every running sum is
//! compensated.
//!
//! Segments are independent, so windows are sieved in parallel and merged in
//! segment order; results do not depend on the thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{checked_pow, factorize, gcd, iroot};
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

/// Default number of integers covered by one sieve segment.
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Maximum number of integers in one segment (and in one
    /// [`LambdaTable`] window).
    pub segment_size: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            segment_size: DEFAULT_SEGMENT_SIZE,
        }
    }
}

/// One row of a [`LambdaTable`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaEntry {
    pub n: u64,
    /// Λ(n) in natural-log units.
    pub lambda: f64,
    pub is_prime: bool,
}

/// Λ(n) and primality for every integer of a window `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaTable {
    lo: u64,
    hi: u64,
    entries: Vec<LambdaEntry>,
}

impl LambdaTable {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn entries(&self) -> &[LambdaEntry] {
        &self.entries
    }

    pub fn get(&self, n: u64) -> Option<&LambdaEntry> {
        if n < self.lo || n > self.hi {
            return None;
        }
        self.entries.get((n - self.lo) as usize)
    }
}

/// A prime power `n = p^k` with its von Mangoldt weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimePower {
    pub n: u64,
    pub p: u64,
    pub lambda: f64,
    pub is_prime: bool,
}

/// Builds the Λ table for `[lo, hi]` with the default segment budget.
pub fn build_lambda_table(lo: u64, hi: u64) -> Result<LambdaTable> {
    build_lambda_table_with(lo, hi, &SieveConfig::default())
}

pub fn build_lambda_table_with(lo: u64, hi: u64, config: &SieveConfig) -> Result<LambdaTable> {
    if lo == 0 || lo > hi {
        return Err(Error::Window { lo, hi });
    }
    let len = hi - lo + 1;
    if len > config.segment_size {
        return Err(Error::SegmentTooLarge {
            len,
            budget: config.segment_size,
        });
    }
    let base = base_primes(iroot(hi, 2));
    let hits = sieve_window(lo, hi, &base);
    let mut entries: Vec<LambdaEntry> = (lo..=hi)
        .map(|n| LambdaEntry {
            n,
            lambda: 0.0,
            is_prime: false,
        })
        .collect();
    for h in hits {
        let e = &mut entries[(h.n - lo) as usize];
        e.lambda = h.lambda;
        e.is_prime = h.is_prime;
    }
    Ok(LambdaTable { lo, hi, entries })
}

/// Primes up to `limit` by a plain sieve of Eratosthenes.
pub(crate) fn base_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

/// All prime powers in `[lo, hi]`, sorted by `n`. `base` must contain every
/// prime up to `isqrt(hi)`.
pub(crate) fn sieve_window(lo: u64, hi: u64, base: &[u64]) -> Vec<PrimePower> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        let Some(sq) = p.checked_mul(p) else { break };
        if sq > hi {
            break;
        }
        let first = sq.max(lo.div_ceil(p) * p);
        let mut m = (first - lo) as usize;
        while m < len {
            composite[m] = true;
            m += p as usize;
        }
    }

    let mut out: Vec<PrimePower> = composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| {
            let n = lo + i as u64;
            PrimePower {
                n,
                p: n,
                lambda: (n as f64).ln(),
                is_prime: true,
            }
        })
        .collect();

    // Higher powers p^k, k >= 2, can only come from primes up to sqrt(hi).
    let mut powers = Vec::new();
    for &p in base {
        let Some(mut pk) = p.checked_mul(p) else { break };
        if pk > hi {
            break;
        }
        let lambda = (p as f64).ln();
        loop {
            if pk >= lo {
                powers.push(PrimePower {
                    n: pk,
                    p,
                    lambda,
                    is_prime: false,
                });
            }
            match pk.checked_mul(p) {
                Some(next) if next <= hi => pk = next,
                _ => break,
            }
        }
    }
    if !powers.is_empty() {
        out.extend(powers);
        out.sort_unstable_by_key(|pp| pp.n);
    }
    out
}

/// Splits `[1, limit]` into segments and sieves them concurrently. The
/// returned vector is in increasing order of `n` regardless of scheduling.
fn sieve_prime_powers(limit: u64, config: &SieveConfig) -> Vec<PrimePower> {
    if limit < 2 {
        return Vec::new();
    }
    let base = base_primes(iroot(limit, 2));
    let seg = config.segment_size.max(1);
    let n_segments = limit.div_ceil(seg);
    let parts: Vec<Vec<PrimePower>> = (0..n_segments)
        .into_par_iter()
        .map(|s| {
            let lo = 1 + s * seg;
            let hi = (lo + seg - 1).min(limit);
            sieve_window(lo, hi, &base)
        })
        .collect();
    parts.concat()
}

/// Visits the prime powers in `[1, limit]` in increasing order of `n`, one
/// batch at a time. The segments of a batch are sieved concurrently; the
/// callback sees batches in order, so its results do not depend on the
/// thread count.
pub fn for_each_prime_power_batch<F: FnMut(&[PrimePower])>(limit: u64, config: &SieveConfig, mut f: F) {
    if limit < 2 {
        return;
    }
    let base = base_primes(iroot(limit, 2));
    let seg = config.segment_size.max(1);
    let n_segments = limit.div_ceil(seg);
    let per_batch = ((1u64 << 25) / seg).max(1);
    let mut first = 0;
    while first < n_segments {
        let last = (first + per_batch).min(n_segments);
        let parts: Vec<Vec<PrimePower>> = (first..last)
            .into_par_iter()
            .map(|s| {
                let lo = 1 + s * seg;
                let hi = (lo + seg - 1).min(limit);
                sieve_window(lo, hi, &base)
            })
            .collect();
        for part in &parts {
            f(part);
        }
        first = last;
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Partial {
    psi: NeumaierSum,
    theta: NeumaierSum,
    pi: u64,
}

/// Streams ψ, θ and π up to `floor(x)` without retaining the prime powers.
fn stream_counts(x: f64, config: &SieveConfig) -> Partial {
    if !(x >= 2.0) {
        return Partial::default();
    }
    let limit = x.floor() as u64;
    let base = base_primes(iroot(limit, 2));
    let seg = config.segment_size.max(1);
    let n_segments = limit.div_ceil(seg);
    let parts: Vec<Partial> = (0..n_segments)
        .into_par_iter()
        .map(|s| {
            let lo = 1 + s * seg;
            let hi = (lo + seg - 1).min(limit);
            let mut part = Partial::default();
            for pp in sieve_window(lo, hi, &base) {
                part.psi.add(pp.lambda);
                if pp.is_prime {
                    part.theta.add(pp.lambda);
                    part.pi += 1;
                }
            }
            part
        })
        .collect();
    parts.iter().fold(Partial::default(), |mut acc, p| {
        acc.psi.merge(&p.psi);
        acc.theta.merge(&p.theta);
        acc.pi += p.pi;
        acc
    })
}

/// Chebyshev's ψ(x) = Σ_{n ≤ x} Λ(n).
pub fn psi(x: f64) -> f64 {
    stream_counts(x, &SieveConfig::default()).psi.value()
}

/// Chebyshev's θ(x) = Σ_{p ≤ x} ln p.
pub fn theta(x: f64) -> f64 {
    stream_counts(x, &SieveConfig::default()).theta.value()
}

/// π(x), the number of primes up to `x`.
pub fn pi_count(x: f64) -> u64 {
    stream_counts(x, &SieveConfig::default()).pi
}

/// `(π(x), θ(x), ψ(x))` in one pass.
pub fn counts_with(x: f64, config: &SieveConfig) -> (u64, f64, f64) {
    let p = stream_counts(x, config);
    (p.pi, p.theta.value(), p.psi.value())
}

/// Σ_{n ≤ x, gcd(n, q) > 1} Λ(n), i.e. the prime powers of the primes
/// dividing `q`, enumerated directly.
pub fn lambda_gcd_sum(x: f64, q: u64) -> f64 {
    if !(x >= 2.0) {
        return 0.0;
    }
    let limit = x.floor() as u64;
    let mut acc = NeumaierSum::new();
    for (p, _) in factorize(q) {
        let lp = (p as f64).ln();
        let mut k = 1u32;
        while checked_pow(p, k).is_some_and(|v| v <= limit) {
            acc.add(lp);
            k += 1;
        }
    }
    acc.value()
}

/// A query for counts restricted to `n ≡ a (mod q)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct APQuery {
    pub x: f64,
    pub q: u64,
    pub a: u64,
}

impl APQuery {
    pub fn new(x: f64, q: u64, a: u64) -> Result<Self> {
        if !(x >= 0.0) || !x.is_finite() {
            return Err(Error::domain(format!("x must be finite and >= 0, got {x}")));
        }
        if q == 0 {
            return Err(Error::domain("q must be >= 1"));
        }
        if a >= q {
            return Err(Error::domain(format!("residue a = {a} must satisfy 0 <= a < q = {q}")));
        }
        Ok(Self { x, q, a })
    }

    pub fn is_coprime(&self) -> bool {
        gcd(self.a, self.q) == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountsResult {
    pub pi: u64,
    pub theta: f64,
    pub psi: f64,
    /// ψ with the midpoint convention at jumps: equals `psi` unless `x` is
    /// itself an integer prime power in the progression.
    pub psi0: f64,
}

/// Prime powers up to a fixed limit with prefix sums, for repeated queries.
///
/// Queries above the construction limit panic.
#[derive(Debug, Clone)]
pub struct ChebyshevTable {
    limit: u64,
    powers: Vec<PrimePower>,
    psi_prefix: Vec<f64>,
    theta_prefix: Vec<f64>,
    pi_prefix: Vec<u64>,
}

impl ChebyshevTable {
    pub fn new(limit: u64) -> Self {
        Self::with_config(limit, &SieveConfig::default())
    }

    pub fn with_config(limit: u64, config: &SieveConfig) -> Self {
        let powers = sieve_prime_powers(limit, config);
        let mut psi_prefix = Vec::with_capacity(powers.len() + 1);
        let mut theta_prefix = Vec::with_capacity(powers.len() + 1);
        let mut pi_prefix = Vec::with_capacity(powers.len() + 1);
        let (mut psi, mut theta, mut pi) = (NeumaierSum::new(), NeumaierSum::new(), 0u64);
        psi_prefix.push(0.0);
        theta_prefix.push(0.0);
        pi_prefix.push(0);
        for pp in &powers {
            psi.add(pp.lambda);
            if pp.is_prime {
                theta.add(pp.lambda);
                pi += 1;
            }
            psi_prefix.push(psi.value());
            theta_prefix.push(theta.value());
            pi_prefix.push(pi);
        }
        Self {
            limit,
            powers,
            psi_prefix,
            theta_prefix,
            pi_prefix,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn index(&self, x: f64) -> usize {
        if !(x >= 1.0) {
            return 0;
        }
        assert!(
            x < (self.limit + 1) as f64,
            "query x = {x} exceeds table limit {}",
            self.limit
        );
        let n = x.floor() as u64;
        self.powers.partition_point(|pp| pp.n <= n)
    }

    /// All prime powers `n <= x`, in increasing order.
    pub fn prime_powers_upto(&self, x: f64) -> &[PrimePower] {
        &self.powers[..self.index(x)]
    }

    /// Λ(n) for `n <= limit`.
    pub fn lambda(&self, n: u64) -> f64 {
        match self.powers.binary_search_by_key(&n, |pp| pp.n) {
            Ok(i) => self.powers[i].lambda,
            Err(_) => 0.0,
        }
    }

    pub fn psi(&self, x: f64) -> f64 {
        self.psi_prefix[self.index(x)]
    }

    pub fn theta(&self, x: f64) -> f64 {
        self.theta_prefix[self.index(x)]
    }

    pub fn pi_count(&self, x: f64) -> u64 {
        self.pi_prefix[self.index(x)]
    }

    /// ψ₀(x): ψ(x) minus half the jump when `x` is an integer prime power.
    pub fn psi0(&self, x: f64) -> f64 {
        self.psi(x) - 0.5 * self.jump_at(x)
    }

    /// Λ(x) if `x` is an exact integer, else 0.
    pub fn jump_at(&self, x: f64) -> f64 {
        if x.fract() == 0.0 && x >= 2.0 {
            self.lambda(x as u64)
        } else {
            0.0
        }
    }

    /// Counts restricted to a residue class, by a direct scan.
    pub fn counts_ap(&self, query: &APQuery) -> CountsResult {
        let (q, a) = (query.q, query.a);
        let mut psi = NeumaierSum::new();
        let mut theta = NeumaierSum::new();
        let mut pi = 0u64;
        for pp in self.prime_powers_upto(query.x) {
            if pp.n % q == a {
                psi.add(pp.lambda);
                if pp.is_prime {
                    theta.add(pp.lambda);
                    pi += 1;
                }
            }
        }
        let jump = if query.x.fract() == 0.0 && (query.x as u64) % q == a {
            self.jump_at(query.x)
        } else {
            0.0
        };
        let psi = psi.value();
        CountsResult {
            pi,
            theta: theta.value(),
            psi,
            psi0: psi - 0.5 * jump,
        }
    }

    /// Σ_{n ≤ x, gcd(n, q) > 1} Λ(n) by filtering the table.
    pub fn lambda_gcd_sum(&self, x: f64, q: u64) -> f64 {
        self.prime_powers_upto(x)
            .iter()
            .filter(|pp| q.is_multiple_of(pp.p))
            .map(|pp| pp.lambda)
            .sum::<NeumaierSum>()
            .value()
    }

    /// Per-residue prefix sums modulo `q`, for many queries at one modulus.
    pub fn residue_classes(&self, q: u64) -> ResidueTable {
        assert!(q >= 1);
        let mut classes: Vec<ClassPrefix> = (0..q).map(|_| ClassPrefix::default()).collect();
        for pp in &self.powers {
            classes[(pp.n % q) as usize].push(pp);
        }
        ResidueTable {
            q,
            limit: self.limit,
            classes,
        }
    }
}

#[derive(Debug, Clone, Default)]
struct ClassPrefix {
    n: Vec<u64>,
    lambda: Vec<f64>,
    psi: Vec<f64>,
    theta: Vec<f64>,
    pi: Vec<u64>,
    acc_psi: NeumaierSum,
    acc_theta: NeumaierSum,
}

impl ClassPrefix {
    fn push(&mut self, pp: &PrimePower) {
        self.acc_psi.add(pp.lambda);
        if pp.is_prime {
            self.acc_theta.add(pp.lambda);
        }
        let prev_pi = self.pi.last().copied().unwrap_or(0);
        self.n.push(pp.n);
        self.lambda.push(pp.lambda);
        self.psi.push(self.acc_psi.value());
        self.theta.push(self.acc_theta.value());
        self.pi.push(prev_pi + u64::from(pp.is_prime));
    }
}

/// ψ, θ, π restricted to each residue class modulo a fixed `q`.
#[derive(Debug, Clone)]
pub struct ResidueTable {
    q: u64,
    limit: u64,
    classes: Vec<ClassPrefix>,
}

impl ResidueTable {
    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn counts(&self, x: f64, a: u64) -> CountsResult {
        assert!(a < self.q);
        let class = &self.classes[a as usize];
        if !(x >= 1.0) {
            return CountsResult {
                pi: 0,
                theta: 0.0,
                psi: 0.0,
                psi0: 0.0,
            };
        }
        assert!(x < (self.limit + 1) as f64, "query x = {x} exceeds table limit {}", self.limit);
        let n = x.floor() as u64;
        let k = class.n.partition_point(|&m| m <= n);
        if k == 0 {
            return CountsResult {
                pi: 0,
                theta: 0.0,
                psi: 0.0,
                psi0: 0.0,
            };
        }
        let psi = class.psi[k - 1];
        let jump = if x.fract() == 0.0 && class.n[k - 1] == n {
            class.lambda[k - 1]
        } else {
            0.0
        };
        CountsResult {
            pi: class.pi[k - 1],
            theta: class.theta[k - 1],
            psi,
            psi0: psi - 0.5 * jump,
        }
    }
}

/// Counts in a residue class, sieving `[1, floor(x)]` from scratch.
pub fn counts_ap(query: &APQuery) -> CountsResult {
    counts_ap_with(query, &SieveConfig::default())
}

/// As [`counts_ap`], streaming the segments so memory stays bounded by the
/// segment size.
pub fn counts_ap_with(query: &APQuery, config: &SieveConfig) -> CountsResult {
    if !(query.x >= 2.0) {
        return CountsResult {
            pi: 0,
            theta: 0.0,
            psi: 0.0,
            psi0: 0.0,
        };
    }
    let limit = query.x.floor() as u64;
    let base = base_primes(iroot(limit, 2));
    let seg = config.segment_size.max(1);
    let n_segments = limit.div_ceil(seg);
    let (q, a) = (query.q, query.a);
    let parts: Vec<(Partial, f64)> = (0..n_segments)
        .into_par_iter()
        .map(|s| {
            let lo = 1 + s * seg;
            let hi = (lo + seg - 1).min(limit);
            let mut part = Partial::default();
            let mut jump = 0.0;
            for pp in sieve_window(lo, hi, &base) {
                if pp.n % q != a {
                    continue;
                }
                part.psi.add(pp.lambda);
                if pp.is_prime {
                    part.theta.add(pp.lambda);
                    part.pi += 1;
                }
                if pp.n as f64 == query.x {
                    jump = pp.lambda;
                }
            }
            (part, jump)
        })
        .collect();
    let mut acc = Partial::default();
    let mut jump = 0.0;
    for (p, j) in &parts {
        acc.psi.merge(&p.psi);
        acc.theta.merge(&p.theta);
        acc.pi += p.pi;
        jump += j;
    }
    let psi = acc.psi.value();
    CountsResult {
        pi: acc.pi,
        theta: acc.theta.value(),
        psi,
        psi0: psi - 0.5 * jump,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::prime_power;

    fn ln(v: f64) -> f64 {
        v.ln()
    }

    #[test]
    fn lambda_table_two_to_ten() {
        let t = build_lambda_table(2, 10).unwrap();
        let expected = [
            (2, ln(2.0), true),
            (3, ln(3.0), true),
            (4, ln(2.0), false),
            (5, ln(5.0), true),
            (6, 0.0, false),
            (7, ln(7.0), true),
            (8, ln(2.0), false),
            (9, ln(3.0), false),
            (10, 0.0, false),
        ];
        for (n, lam, prime) in expected {
            let e = t.get(n).unwrap();
            assert_eq!(e.lambda, lam, "Λ({n})");
            assert_eq!(e.is_prime, prime, "prime({n})");
        }
    }

    #[test]
    fn lambda_of_one_is_zero() {
        let t = build_lambda_table(1, 1).unwrap();
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.entries()[0].lambda, 0.0);
        assert!(!t.entries()[0].is_prime);
    }

    #[test]
    fn window_errors() {
        assert!(matches!(build_lambda_table(10, 2), Err(Error::Window { .. })));
        assert!(matches!(build_lambda_table(0, 2), Err(Error::Window { .. })));
        let cfg = SieveConfig { segment_size: 100 };
        assert!(matches!(
            build_lambda_table_with(1, 1000, &cfg),
            Err(Error::SegmentTooLarge { len: 1000, budget: 100 })
        ));
    }

    #[test]
    fn window_near_million_matches_factor_oracle() {
        let t = build_lambda_table(1_000_000, 1_001_000).unwrap();
        for e in t.entries() {
            let expected = prime_power(e.n);
            match expected {
                Some((p, k)) => {
                    assert_eq!(e.lambda, (p as f64).ln(), "n={}", e.n);
                    assert_eq!(e.is_prime, k == 1);
                }
                None => {
                    assert_eq!(e.lambda, 0.0, "n={}", e.n);
                    assert!(!e.is_prime);
                }
            }
        }
    }

    #[test]
    fn psi_at_ten() {
        let expected = 3.0 * ln(2.0) + 2.0 * ln(3.0) + ln(5.0) + ln(7.0);
        assert!((psi(10.0) - expected).abs() < 1e-12);
        assert!((expected - 7.832_01).abs() < 1e-5);
    }

    #[test]
    fn tiny_arguments() {
        assert_eq!(pi_count(1.5), 0);
        assert_eq!(psi(1.999), 0.0);
        assert_eq!(theta(0.0), 0.0);
        assert_eq!(pi_count(2.0), 1);
    }

    #[test]
    fn streamed_counts_match_table() {
        let t = ChebyshevTable::new(20_000);
        let cfg = SieveConfig { segment_size: 777 };
        for &(x, q, a) in &[(20_000.0, 7, 3), (9973.0, 10, 3), (1024.0, 4, 0), (2.0, 3, 2), (1.5, 3, 1)] {
            let query = APQuery::new(x, q, a).unwrap();
            let want = t.counts_ap(&query);
            let got = counts_ap_with(&query, &cfg);
            assert_eq!(got.pi, want.pi);
            assert!((got.psi - want.psi).abs() < 1e-9);
            assert!((got.theta - want.theta).abs() < 1e-9);
            assert!((got.psi0 - want.psi0).abs() < 1e-9);
        }
    }

    #[test]
    fn counts_ap_examples() {
        let r = counts_ap(&APQuery::new(10.0, 3, 1).unwrap());
        assert!((r.psi - (ln(2.0) + ln(7.0))).abs() < 1e-12);

        let r = counts_ap(&APQuery::new(50.0, 4, 1).unwrap());
        assert_eq!(r.pi, 6);

        let r = counts_ap(&APQuery::new(2.0, 3, 2).unwrap());
        assert_eq!(r.pi, 1);
        assert_eq!(r.theta, ln(2.0));
        assert_eq!(r.psi, ln(2.0));
        // 2 is a prime in the class and x = 2 exactly.
        assert_eq!(r.psi0, 0.5 * ln(2.0));
    }

    #[test]
    fn psi0_only_at_integer_prime_powers() {
        let t = ChebyshevTable::new(100);
        assert_eq!(t.psi0(8.5), t.psi(8.5));
        assert_eq!(t.psi0(6.0), t.psi(6.0));
        assert!((t.psi(8.0) - t.psi0(8.0) - 0.5 * ln(2.0)).abs() < 1e-15);
    }

    #[test]
    fn lambda_gcd_sum_examples() {
        let v = lambda_gcd_sum(10.0, 6);
        assert!((v - (3.0 * ln(2.0) + 2.0 * ln(3.0))).abs() < 1e-12);
        assert!((v - 4.2767).abs() < 1e-4);
        assert!(v <= 2.0 * ln(10.0));

        let v = lambda_gcd_sum(10.0, 5);
        assert!((v - ln(5.0)).abs() < 1e-15);
        assert!(v <= ln(5.0) * ln(10.0));

        assert_eq!(lambda_gcd_sum(1.0, 3), 0.0);
    }

    #[test]
    fn table_gcd_sum_matches_direct_enumeration() {
        let t = ChebyshevTable::new(5000);
        for q in 3..60u64 {
            for &x in &[2.0, 17.5, 100.0, 4999.0] {
                let a = t.lambda_gcd_sum(x, q);
                let b = lambda_gcd_sum(x, q);
                assert!((a - b).abs() < 1e-12, "q={q} x={x}");
            }
        }
    }

    #[test]
    fn residue_table_matches_scan() {
        let t = ChebyshevTable::new(20_000);
        for q in [1u64, 3, 4, 7, 12, 30] {
            let rt = t.residue_classes(q);
            for a in 0..q {
                for &x in &[1.0, 2.0, 9.0, 1000.0, 4096.0, 19_999.5] {
                    let direct = t.counts_ap(&APQuery::new(x, q, a).unwrap());
                    let fast = rt.counts(x, a);
                    assert_eq!(direct.pi, fast.pi);
                    assert!((direct.psi - fast.psi).abs() < 1e-9);
                    assert!((direct.theta - fast.theta).abs() < 1e-9);
                    assert!((direct.psi0 - fast.psi0).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn segmentation_does_not_change_results() {
        let small = ChebyshevTable::with_config(100_000, &SieveConfig { segment_size: 977 });
        let big = ChebyshevTable::new(100_000);
        assert_eq!(small.pi_count(100_000.0), big.pi_count(100_000.0));
        assert_eq!(small.pi_count(100_000.0), 9592);
        assert!((small.psi(1e5) - big.psi(1e5)).abs() < 1e-9);
        let (pi, th, ps) = counts_with(1e5, &SieveConfig { segment_size: 1234 });
        assert_eq!(pi, 9592);
        assert!((th - big.theta(1e5)).abs() < 1e-9);
        assert!((ps - big.psi(1e5)).abs() < 1e-9);
    }

    #[test]
    fn batch_visitor_sees_every_prime_power_in_order() {
        let table = ChebyshevTable::new(50_000);
        let mut seen = Vec::new();
        for_each_prime_power_batch(50_000, &SieveConfig { segment_size: 1000 }, |b| {
            seen.extend(b.iter().map(|pp| pp.n));
        });
        let want: Vec<u64> = table.prime_powers_upto(50_000.0).iter().map(|pp| pp.n).collect();
        assert_eq!(seen, want);
    }

    #[test]
    fn apquery_validation() {
        assert!(APQuery::new(10.0, 0, 0).is_err());
        assert!(APQuery::new(10.0, 3, 3).is_err());
        assert!(APQuery::new(-1.0, 3, 1).is_err());
        assert!(!APQuery::new(10.0, 4, 2).unwrap().is_coprime());
    }
}
