//! Dirichlet characters modulo q.
//!
//! The unit group (ℤ/qℤ)^× is split by the Chinese remainder theorem into
//! cyclic factors: one per odd prime power `p^k` (generated by a primitive
//! root), and for the 2-part either `{−1}` (q ≡ 0 mod 4) or `{−1, 5}`
//! (q ≡ 0 mod 8). A character is a vector of exponents, one per factor, and
//! its values are exact angles `num / L` of a full turn, where `L` is the
//! exponent of the group. Floats appear only in [`CharacterValue`].

use std::f64::consts::TAU;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{factorize, gcd, inv_mod, mul_mod, primitive_root_odd_prime_power, totient};
use crate::error::{Error, Result};
use crate::sieve::ChebyshevTable;
use crate::sum::NeumaierSum;

/// A complex character value (or a sum of them).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct CharacterValue {
    pub re: f64,
    pub im: f64,
}

impl CharacterValue {
    pub const ZERO: CharacterValue = CharacterValue { re: 0.0, im: 0.0 };
    pub const ONE: CharacterValue = CharacterValue { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// `exp(2πi · num / den)`, exact on the eight multiples of π/4 that
    /// matter most (0, ±1, ±i).
    pub fn from_angle(num: u64, den: u64) -> Self {
        let num = num % den;
        if num == 0 {
            return Self::ONE;
        }
        if 2 * num == den {
            return Self::new(-1.0, 0.0);
        }
        if 4 * num == den {
            return Self::new(0.0, 1.0);
        }
        if 4 * num == 3 * den {
            return Self::new(0.0, -1.0);
        }
        let t = TAU * num as f64 / den as f64;
        Self::new(t.cos(), t.sin())
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.re * s, self.im * s)
    }

    pub fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Compensated accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub fn add(&mut self, v: CharacterValue) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    pub fn value(&self) -> CharacterValue {
        CharacterValue::new(self.re.value(), self.im.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FactorKind {
    /// Cyclic group mod an odd prime power.
    Odd { p: u64, k: u32 },
    /// The `{±1}` factor of the 2-part (2^k with k ≥ 2).
    TwoSign { k: u32 },
    /// The `⟨5⟩` factor of the 2-part (2^k with k ≥ 3).
    TwoFive { k: u32 },
}

#[derive(Debug, Clone)]
struct CyclicFactor {
    kind: FactorKind,
    /// The prime-power part of q this factor lives in.
    prime_power: u64,
    generator: u64,
    order: u64,
    /// Discrete logarithms indexed by residue mod `prime_power`; unused for
    /// the sign factor. `u32::MAX` marks non-units.
    dlog: Vec<u32>,
}

impl CyclicFactor {
    fn odd(p: u64, k: u32) -> Self {
        let m = p.pow(k);
        let g = primitive_root_odd_prime_power(p, k);
        let order = m / p * (p - 1);
        let mut dlog = vec![u32::MAX; m as usize];
        let mut v = 1u64;
        for i in 0..order {
            dlog[v as usize] = i as u32;
            v = mul_mod(v, g, m);
        }
        Self {
            kind: FactorKind::Odd { p, k },
            prime_power: m,
            generator: g,
            order,
            dlog,
        }
    }

    fn two_sign(k: u32) -> Self {
        Self {
            kind: FactorKind::TwoSign { k },
            prime_power: 1 << k,
            generator: (1 << k) - 1,
            order: 2,
            dlog: Vec::new(),
        }
    }

    fn two_five(k: u32) -> Self {
        let m = 1u64 << k;
        let order = m >> 2;
        let mut dlog = vec![u32::MAX; m as usize];
        let mut v = 1u64;
        for i in 0..order {
            dlog[v as usize] = i as u32;
            v = v * 5 % m;
        }
        Self {
            kind: FactorKind::TwoFive { k },
            prime_power: m,
            generator: 5,
            order,
            dlog,
        }
    }

    /// Discrete log of a unit `n` in this factor.
    fn log(&self, n: u64) -> u64 {
        let r = n % self.prime_power;
        match self.kind {
            FactorKind::Odd { .. } => u64::from(self.dlog[r as usize]),
            FactorKind::TwoSign { .. } => u64::from(r % 4 == 3),
            FactorKind::TwoFive { .. } => {
                let r = if r % 4 == 1 { r } else { self.prime_power - r };
                u64::from(self.dlog[r as usize])
            }
        }
    }

    /// Smallest modulus through which the character `e` on this factor
    /// factors, found by testing each level `p^j` in increasing order.
    fn conductor(&self, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        match self.kind {
            FactorKind::Odd { p, k } => {
                // Reduction mod p^j has kernel generated by g^{φ(p^j)}.
                for j in 1..=k {
                    let phi_pj = p.pow(j - 1) * (p - 1);
                    if (e as u128 * phi_pj as u128).is_multiple_of(self.order as u128) {
                        return p.pow(j);
                    }
                }
                self.prime_power
            }
            FactorKind::TwoSign { .. } => 4,
            FactorKind::TwoFive { k } => {
                // Reduction mod 2^j (j ≥ 2) has kernel generated by 5^{2^{j-2}}.
                for j in 2..=k {
                    if (e << (j - 2)).is_multiple_of(self.order) {
                        return 1 << j;
                    }
                }
                self.prime_power
            }
        }
    }
}

/// The unit group mod q with its CRT factorization.
#[derive(Debug, Clone)]
pub struct CharacterGroup {
    modulus: u64,
    factors: Vec<CyclicFactor>,
    /// Least common multiple of factor orders; character angles are
    /// integers modulo this.
    exponent: u64,
}

impl CharacterGroup {
    pub fn new(q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::domain("modulus q must be >= 1"));
        }
        let mut factors = Vec::new();
        for (p, k) in factorize(q) {
            if p == 2 {
                if k >= 2 {
                    factors.push(CyclicFactor::two_sign(k));
                }
                if k >= 3 {
                    factors.push(CyclicFactor::two_five(k));
                }
            } else {
                factors.push(CyclicFactor::odd(p, k));
            }
        }
        let exponent = factors
            .iter()
            .fold(1u64, |l, f| l / gcd(l, f.order) * f.order);
        Ok(Self {
            modulus: q,
            factors,
            exponent,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order).product()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Orders of the cyclic factors, in the order exponents are stored.
    pub fn factor_orders(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.order).collect()
    }

    /// Generators of the cyclic factors as residues modulo their own
    /// prime-power part.
    pub fn generators(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.generator).collect()
    }

    /// The unit of ℤ/qℤ congruent to `r` modulo the prime-power part of
    /// factor `i` and to 1 modulo every other prime-power part.
    fn crt_lift(&self, i: usize, r: u64) -> u64 {
        let q = self.modulus;
        let target = self.factors[i].prime_power;
        let mut n: u128 = 0;
        let mut parts: Vec<u64> = self.factors.iter().map(|f| f.prime_power).collect();
        parts.dedup();
        if q.is_multiple_of(2) && !parts.contains(&(q & q.wrapping_neg())) {
            // q ≡ 2 mod 4: the factor 2 has no cyclic factor but still
            // takes part in the CRT.
            parts.push(2);
        }
        for m in parts {
            let big_m = q / m;
            let inv = inv_mod(big_m % m, m).unwrap_or(0);
            let residue = if m == target { r % m } else { 1 % m };
            n += residue as u128 * big_m as u128 * inv as u128;
        }
        (n % q as u128) as u64
    }
}

/// A Dirichlet character modulo q.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    group: Arc<CharacterGroup>,
    exponents: Vec<u64>,
    parity_a: u8,
    conductor: u64,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.group.modulus == other.group.modulus && self.exponents == other.exponents
    }
}

impl DirichletCharacter {
    fn from_exponents(group: Arc<CharacterGroup>, exponents: Vec<u64>) -> Self {
        let conductor = group
            .factors
            .iter()
            .zip(&exponents)
            .map(|(f, &e)| f.conductor(e))
            .fold(1u64, |acc, c| acc / gcd(acc, c) * c);
        let mut chi = Self {
            group,
            exponents,
            parity_a: 0,
            conductor,
        };
        let minus_one = chi.group.modulus.saturating_sub(1).max(1);
        chi.parity_a = match chi.angle(minus_one) {
            Some(a) if a != 0 => 1,
            _ => 0,
        };
        chi
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    /// Exponents on the generators of the cyclic factors.
    pub fn exponent_vector(&self) -> &[u64] {
        &self.exponents
    }

    pub fn group(&self) -> &CharacterGroup {
        &self.group
    }

    /// 𝔞 = 1 for odd characters (χ(−1) = −1), 0 for even ones.
    pub fn parity_a(&self) -> u8 {
        self.parity_a
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.group.modulus
    }

    /// Whether every value is real (χ² principal).
    pub fn is_real(&self) -> bool {
        self.group
            .factors
            .iter()
            .zip(&self.exponents)
            .all(|(f, &e)| (2 * e) % f.order == 0)
    }

    /// χ(n) as an angle `num / exponent()` of a full turn, or `None` when
    /// `gcd(n, q) > 1`.
    pub fn angle(&self, n: u64) -> Option<u64> {
        let g = &self.group;
        if gcd(n, g.modulus) != 1 {
            return None;
        }
        let l = g.exponent;
        let mut num: u128 = 0;
        for (f, &e) in g.factors.iter().zip(&self.exponents) {
            if e != 0 {
                num += (e as u128 * f.log(n) as u128 % f.order as u128) * (l / f.order) as u128;
            }
        }
        Some((num % l as u128) as u64)
    }

    pub fn evaluate(&self, n: u64) -> CharacterValue {
        match self.angle(n) {
            Some(a) => CharacterValue::from_angle(a, self.group.exponent),
            None => CharacterValue::ZERO,
        }
    }

    /// The character χ̄.
    pub fn conj(&self) -> Self {
        let exps = self
            .group
            .factors
            .iter()
            .zip(&self.exponents)
            .map(|(f, &e)| (f.order - e) % f.order)
            .collect();
        Self::from_exponents(self.group.clone(), exps)
    }
}

/// All φ(q) characters mod q, principal first, then in lexicographic order
/// of exponent vectors.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    let group = Arc::new(CharacterGroup::new(q)?);
    let orders = group.factor_orders();
    let total: u64 = orders.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    let mut exps = vec![0u64; orders.len()];
    for _ in 0..total {
        out.push(DirichletCharacter::from_exponents(group.clone(), exps.clone()));
        for i in (0..exps.len()).rev() {
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
        }
    }
    debug_assert_eq!(out.len() as u64, totient(q));
    Ok(out)
}

/// Looks up the character with the given exponent vector.
pub fn character_from_exponents(q: u64, exponents: &[u64]) -> Result<DirichletCharacter> {
    let group = Arc::new(CharacterGroup::new(q)?);
    let orders = group.factor_orders();
    if exponents.len() != orders.len() || exponents.iter().zip(&orders).any(|(e, o)| e >= o) {
        return Err(Error::domain(format!(
            "exponent vector {exponents:?} does not fit factor orders {orders:?}"
        )));
    }
    Ok(DirichletCharacter::from_exponents(group, exponents.to_vec()))
}

/// The conductor f of χ and the primitive character χ* mod f inducing it.
///
/// χ* is built by evaluating χ on CRT lifts of the generators of
/// (ℤ/fℤ)^×, which determines its exponent vector.
pub fn conductor_and_primitive(chi: &DirichletCharacter) -> (u64, DirichletCharacter) {
    let f = chi.conductor;
    if f == chi.modulus() {
        return (f, chi.clone());
    }
    let group_f = Arc::new(CharacterGroup::new(f).expect("conductor is >= 1"));
    let big = &chi.group;
    let l = big.exponent;
    let mut exps = Vec::with_capacity(group_f.factors.len());
    for fac in &group_f.factors {
        // The same prime's factor in the mod-q group, of matching kind.
        let idx = big
            .factors
            .iter()
            .position(|b| {
                matches!(
                    (b.kind, fac.kind),
                    (FactorKind::Odd { p: a, .. }, FactorKind::Odd { p: b2, .. }) if a == b2
                ) || matches!((b.kind, fac.kind), (FactorKind::TwoSign { .. }, FactorKind::TwoSign { .. }))
                    || matches!((b.kind, fac.kind), (FactorKind::TwoFive { .. }, FactorKind::TwoFive { .. }))
            })
            .expect("conductor divides modulus");
        let n = big.crt_lift(idx, fac.generator);
        let a = chi.angle(n).expect("CRT lift is a unit");
        let scaled = a as u128 * fac.order as u128;
        debug_assert_eq!(scaled % l as u128, 0);
        exps.push((scaled / l as u128) as u64);
    }
    (f, DirichletCharacter::from_exponents(group_f, exps))
}

/// ψ(x, χ) = Σ_{n ≤ x} χ(n) Λ(n), using a prebuilt table.
pub fn psi_chi_with(table: &ChebyshevTable, x: f64, chi: &DirichletCharacter) -> CharacterValue {
    let mut acc = ComplexSum::default();
    for pp in table.prime_powers_upto(x) {
        if let Some(a) = chi.angle(pp.n) {
            acc.add(CharacterValue::from_angle(a, chi.group.exponent).scale(pp.lambda));
        }
    }
    acc.value()
}

/// ψ₀(x, χ): ψ(x, χ) with half weight on a jump at an integer `x`.
pub fn psi0_chi_with(table: &ChebyshevTable, x: f64, chi: &DirichletCharacter) -> CharacterValue {
    let s = psi_chi_with(table, x, chi);
    let jump = table.jump_at(x);
    if jump == 0.0 {
        return s;
    }
    s.sub(chi.evaluate(x as u64).scale(0.5 * jump))
}

/// ψ(x, χ), sieving `[1, floor(x)]` from scratch.
pub fn psi_chi(x: f64, chi: &DirichletCharacter) -> CharacterValue {
    let limit = if x >= 1.0 { x.floor() as u64 } else { 0 };
    psi_chi_with(&ChebyshevTable::new(limit), x, chi)
}
