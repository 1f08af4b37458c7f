//! Integer helpers: gcd, factorization, totient, exact roots, modular powers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order. `factorize(1)` is empty.
///
/// Intended for moduli up to about 10^12.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3] {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        for d in [p, p + 2] {
            if n.is_multiple_of(d) {
                let mut e = 0;
                while n.is_multiple_of(d) {
                    n /= d;
                    e += 1;
                }
                out.push((d, e));
            }
        }
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n`, sorted.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Floor of the k-th root of `n`, computed exactly in integer arithmetic.
pub fn iroot(n: u64, k: u32) -> u64 {
    assert!(k >= 1);
    if k == 1 || n < 2 {
        return n;
    }
    if k >= 64 {
        return 1;
    }
    // Float estimate, then correct in exact arithmetic.
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    while r > 0 && checked_pow(r, k).is_none_or(|v| v > n) {
        r -= 1;
    }
    while checked_pow(r + 1, k).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Deterministic primality by trial division (small inputs only).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
///
/// Uses integer k-th roots with an exactness check, trying the largest
/// exponent first so the returned base is prime.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let max_k = 63 - n.leading_zeros();
    for k in (2..=max_k).rev() {
        let r = iroot(n, k);
        if checked_pow(r, k) == Some(n) && is_prime(r) {
            return Some((r, k));
        }
    }
    is_prime(n).then_some((n, 1))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse of `a` modulo `m` when `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Smallest primitive root modulo `p^k` for an odd prime `p`.
pub fn primitive_root_odd_prime_power(p: u64, k: u32) -> u64 {
    debug_assert!(p % 2 == 1 && is_prime(p));
    let pm1_factors = factorize(p - 1);
    let is_root_mod_p = |g: u64| pm1_factors.iter().all(|&(r, _)| pow_mod(g, (p - 1) / r, p) != 1);
    let mut g = 2u64;
    loop {
        if is_root_mod_p(g) {
            // A primitive root mod p lifts to p^k unless g^(p-1) = 1 mod p^2.
            if k == 1 || pow_mod(g, p - 1, p * p) != 1 {
                return g;
            }
        }
        g += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_small_values() {
        let expected = [0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (n, &phi) in expected.iter().enumerate() {
            assert_eq!(totient(n as u64), phi, "phi({n})");
        }
        assert_eq!(totient(1_000_000), 400_000);
    }

    #[test]
    fn totient_matches_gcd_count() {
        for n in 1..300u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(totient(n), brute);
        }
    }

    #[test]
    fn iroot_is_exact_near_powers() {
        for k in 2..6u32 {
            for r in 1..200u64 {
                let v = r.pow(k);
                assert_eq!(iroot(v, k), r);
                assert_eq!(iroot(v - 1, k), r - 1);
                assert_eq!(iroot(v + 1, k), r);
            }
        }
        assert_eq!(iroot(u64::MAX, 2), 4_294_967_295);
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(36), None);
        assert_eq!(prime_power(1 << 40), Some((2, 40)));
        assert_eq!(prime_power(999_983u64.pow(2)), Some((999_983, 2)));
    }

    #[test]
    fn divisors_of_twelve() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn primitive_roots_generate() {
        for &(p, k) in &[(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 3), (11, 1), (29, 1)] {
            let m = p.pow(k);
            let g = primitive_root_odd_prime_power(p, k);
            let order = totient(m);
            let mut seen = std::collections::HashSet::new();
            let mut v = 1;
            for _ in 0..order {
                v = mul_mod(v, g, m);
                seen.insert(v);
            }
            assert_eq!(seen.len() as u64, order, "g={g} mod {m}");
        }
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
    }
}
