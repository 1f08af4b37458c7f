//! Auxiliary estimates: zero counts, logarithmic derivatives of L-functions,
//! the trivial-zero series and the Perron-integral pieces.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use super::Catalogue;
use crate::error::{Error, Result};
use crate::specialfn::EULER_GAMMA;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(msg()))
    }
}

fn require_q(q: f64, min: f64) -> Result<()> {
    require(q >= min && q.is_finite(), || format!("q = {q} violates q >= {min}"))
}

/// Zeros of L(s,χ) with T < |γ| ≤ T + 1: the main term of the count and
/// two forms of the error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroWindow {
    /// (T/π)·log(qT/(2πe))
    pub main: f64,
    /// 0.247·log(qT/2π) + 6.894
    pub err: f64,
    /// 0.22737·ℓ + 2·log(1 + ℓ) − 0.5 with ℓ = log(q(T+2)/2π).
    pub sharp_err: f64,
    /// True when ℓ ≤ 1.567, in which case the window holds no zeros.
    pub vanishes: bool,
}

pub fn n_zeros_window(t: f64, q: f64) -> Result<ZeroWindow> {
    let cat = Catalogue::builtin();
    require(t >= cat.get("nzeros.t_min") && t.is_finite(), || {
        format!("T = {t} violates T >= 5/7")
    })?;
    require_q(q, 2.0)?;
    let main = t / PI * (q * t / (2.0 * PI * std::f64::consts::E)).ln();
    let err = cat.get("nzeros2.a") * (q * t / (2.0 * PI)).ln() + cat.get("nzeros2.b");
    let ell = (q * (t + 2.0) / (2.0 * PI)).ln();
    let sharp_err =
        cat.get("nzeros.sharp.a") * ell + cat.get("nzeros.sharp.b") * (1.0 + ell).ln()
            + cat.get("nzeros.sharp.c");
    Ok(ZeroWindow {
        main,
        err,
        sharp_err,
        vanishes: ell <= cat.get("nzeros.vanish"),
    })
}

/// 1.092·log(qT) + 4·log log(qT) − 0.25; its reciprocal bounds the gap that
/// can be found between consecutive ordinates near T.
pub fn zero_gap_denominator(t: f64, q: f64) -> Result<f64> {
    require(t >= 10.0 && t.is_finite(), || format!("T = {t} violates T >= 10"))?;
    require_q(q, 3.0)?;
    let cat = Catalogue::builtin();
    let l = (q * t).ln();
    Ok(cat.get("zerogap.a") * l + cat.get("zerogap.b") * l.ln() + cat.get("zerogap.c"))
}

/// Bound on |b(χ)| for an even primitive character.
pub fn bchi_bound(q: f64) -> Result<f64> {
    require_q(q, 3.0)?;
    let cat = Catalogue::builtin();
    Ok(cat.get("bchi.a") * q.ln() + cat.get("bchi.b"))
}

/// Which estimate of |L′/L(0,χ)| (or its even-character analogue) to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum L0Variant {
    /// The sharp form with q^0.5216 and q^0.0216 factors; breakpoints 4·10⁵
    /// and 10¹⁰.
    Sharp,
    /// The rounded form for a primitive character of modulus q; breakpoints
    /// 4·10⁵ and 10¹⁰.
    ExactQ,
    /// The rounded form used for the modulus of the inducing character;
    /// breakpoints 4·10⁵ and 10²⁹, with log(qπ) in the small range.
    Induced,
}

pub fn l0_logderiv_bound(q: f64, variant: L0Variant) -> Result<f64> {
    require_q(q, 3.0)?;
    let cat = Catalogue::builtin();
    let k = |label: &str| cat.get(label);
    let lq = q.ln();
    let llq = lq.ln();
    let tail = EULER_GAMMA + LN_2;
    let small = q < k("l0.break_mid");
    let large = match variant {
        L0Variant::Induced => q >= k("l0.induced.break_large"),
        _ => q >= k("l0.break_large"),
    };
    let rounded_large = || (k("l0.cor.large.a") * llq + k("l0.cor.large.b")) * lq * lq;
    let rounded_small = || {
        let s = q.sqrt();
        k("l0.cor.small.a") * s * lq + k("l0.cor.small.b") * s + k("l0.cor.small.c")
    };
    let v = match variant {
        L0Variant::Sharp => {
            let qs = q.powf(k("l0.sharp.exp_small"));
            if small {
                let qb = q.powf(k("l0.sharp.small.exp_sqrt"));
                k("l0.sharp.small.a") * qb * lq
                    + k("l0.sharp.small.b") * qb
                    + k("l0.sharp.small.c") * qs
                    + (q / PI).ln().abs()
            } else if !large {
                k("l0.sharp.mid.a") * qs * lq * lq + (q / PI).ln()
            } else {
                let c = k("l0.sharp.large.a") * EULER_GAMMA.exp() / (PI * PI);
                c * (llq - LN_2 + 0.5 + 1.0 / llq + k("l0.sharp.large.b") * llq / lq) * lq * lq
                    + (q / PI).ln()
            }
        }
        L0Variant::ExactQ => {
            if small {
                rounded_small() + (q / PI).ln().abs()
            } else if !large {
                k("l0.cor.mid.a") * lq * lq + (q / PI).ln()
            } else {
                rounded_large() + (q / PI).ln()
            }
        }
        L0Variant::Induced => {
            if small {
                rounded_small() + (q * PI).ln()
            } else if !large {
                k("l0.cor.mid.a") * lq * lq + (q / PI).ln()
            } else {
                rounded_large() + (q / PI).ln()
            }
        }
    };
    Ok(v + tail)
}

/// log y + γ + 0.478/log y, which bounds |L′/L(s,χ)| on the line
/// Re s = 1 + 1/log y.
pub fn l2t_bound(y: f64) -> Result<f64> {
    require(y > 1.0 && y.is_finite(), || format!("y = {y} violates y > 1"))?;
    let l = y.ln();
    Ok(l + EULER_GAMMA + Catalogue::builtin().get("l2t.a") / l)
}

/// Closed forms of the trivial-zero series: for 𝔞 = 1,
/// Σ x^(1−2m)/(2m−1) = ½·log(1 + 2/(x−1)); for 𝔞 = 0,
/// Σ x^(−2m)/(2m) = −½·log(1 − 1/x²).
pub fn trivial_zero_sums(x: f64, a: u8) -> Result<f64> {
    require(x >= 2.0 && x.is_finite(), || format!("x = {x} violates x >= 2"))?;
    match a {
        1 => Ok(0.5 * (2.0 / (x - 1.0)).ln_1p()),
        0 => Ok(-0.5 * (-1.0 / (x * x)).ln_1p()),
        _ => Err(Error::domain(format!("parity a = {a} must be 0 or 1"))),
    }
}

/// y^c·min(1, 1/(T·|log y|)) for y ≠ 1 and c/T at y = 1.
pub fn iest_bound(y: f64, c: f64, t: f64) -> Result<f64> {
    require(y > 0.0 && c > 0.0 && t > 0.0, || {
        format!("iest bound needs y, c, T > 0, got y = {y}, c = {c}, T = {t}")
    })?;
    if y == 1.0 {
        return Ok(c / t);
    }
    Ok(y.powf(c) * (1.0 / (t * y.ln().abs())).min(1.0))
}

fn require_q_t(q: f64, t: f64) -> Result<()> {
    require_q(q, 3.0)?;
    require(t >= 10.0 && t.is_finite(), || format!("T = {t} violates T >= 10"))
}

/// Bound for the sum over zeros close to s = σ + iT of 1/(s − ρ) − 1/(s₀ − ρ).
pub fn sum_small_diff_bound(q: f64, t: f64) -> Result<f64> {
    require_q_t(q, t)?;
    let cat = Catalogue::builtin();
    let k = |label: &str| cat.get(label);
    let big = (q * (t + 1.0)).ln();
    let ll = big.ln();
    Ok(k("smalldiff.log2") * big * big
        + k("smalldiff.logloglog") * big * ll
        + k("smalldiff.log") * big
        + k("smalldiff.loglog2") * ll * ll
        + k("smalldiff.loglog") * ll
        + k("smalldiff.const"))
}

/// Bound for the corresponding sum over distant zeros.
pub fn sum_large_diff_bound(q: f64, t: f64) -> Result<f64> {
    require_q_t(q, t)?;
    let cat = Catalogue::builtin();
    Ok(cat.get("largediff.t") * (t * t / 4.0 + t / 2.0 + 2.5).ln()
        + cat.get("largediff.logq") * q.ln()
        + cat.get("largediff.const"))
}

/// Bound for |L′/L(s,χ)| on the horizontal segment Im s = ±T,
/// −1 ≤ Re s ≤ c.
pub fn est1c_bound(q: f64, t: f64) -> Result<f64> {
    require_q_t(q, t)?;
    let cat = Catalogue::builtin();
    let k = |label: &str| cat.get(label);
    let big = (q * (t + 1.0)).ln();
    let ll = big.ln();
    Ok(k("smalldiff.log2") * big * big
        + k("smalldiff.logloglog") * big * ll
        + k("smalldiff.log") * (t + 1.0).ln()
        + k("largediff.t") * (t * t / 4.0 + t / 2.0 + 2.5).ln()
        + k("smalldiff.loglog2") * ll * ll
        + k("smalldiff.loglog") * ll
        + k("est1c.logq") * q.ln()
        + k("est1c.const")
        + 3.0 * PI / (4.0 * (t - 1.0))
        + 3.0 / ((t - 1.0) * (t - 1.0)))
}

/// Bound for |L′/L(s,χ)| at s = σ ± iT with σ < −1 and T > 2, for a
/// primitive character of parity 𝔞.
pub fn ln1_bound(q: f64, sigma: f64, t: f64, a: u8) -> Result<f64> {
    require_q(q, 3.0)?;
    require(sigma < -1.0, || format!("Re s = {sigma} violates Re s < -1"))?;
    require(t > 2.0 && t.is_finite(), || format!("T = {t} violates T > 2"))?;
    require(a <= 1, || format!("parity a = {a} must be 0 or 1"))?;
    let cat = Catalogue::builtin();
    let a = a as f64;
    let m1 = (1.0 - sigma + a).hypot(t);
    let m2 = (sigma + a).hypot(t);
    Ok((q / PI).ln().abs()
        + 1.5 * (m1 / 2.0).ln()
        + 1.5 * (m2 / 2.0).ln()
        + cat.get("ln1.const")
        + EULER_GAMMA
        + cat.get("ln1.divt") / t)
}
