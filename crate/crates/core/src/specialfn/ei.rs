//! Exponential integral Ei and the logarithmic integrals li(x) = Ei(ln x)
//! and Li(x) = li(x) − li(2).

use crate::error::{Error, Result};

use super::EULER_GAMMA;

/// li(2), the offset between li and Li.
pub const LI2: f64 = 1.045_163_780_117_493;

/// Beyond this |t| the power series is replaced by the asymptotic expansion
/// (t > 0) or the continued fraction for E₁ (t < 0).
const SERIES_LIMIT_POS: f64 = 40.0;
const SERIES_LIMIT_NEG: f64 = 1.0;

/// The exponential integral Ei(t) = PV ∫_{−∞}^t e^u/u du for real t ≠ 0.
pub fn ei(t: f64) -> Result<f64> {
    if t == 0.0 {
        return Err(Error::Pole);
    }
    if !t.is_finite() {
        return Err(Error::domain(format!("Ei argument must be finite, got {t}")));
    }
    Ok(if t > SERIES_LIMIT_POS {
        ei_asymptotic(t)
    } else if t > -SERIES_LIMIT_NEG {
        ei_series(t)
    } else {
        -e1_continued_fraction(-t)
    })
}

/// γ + ln|t| + Σ t^k / (k · k!).
fn ei_series(t: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..500 {
        let kf = k as f64;
        term *= t / kf;
        let add = term / kf;
        sum += add;
        if add.abs() <= f64::EPSILON * sum.abs() {
            break;
        }
    }
    EULER_GAMMA + t.abs().ln() + sum
}

/// (e^t / t) Σ k! / t^k, truncated at the smallest term.
fn ei_asymptotic(t: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let next = term * k as f64 / t;
        if next >= term {
            break;
        }
        term = next;
        sum += term;
        if term <= f64::EPSILON * sum {
            break;
        }
    }
    t.exp() / t * sum
}

/// E₁(s) for s ≥ 1 by the modified Lentz evaluation of its continued
/// fraction.
fn e1_continued_fraction(s: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = s + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() <= f64::EPSILON {
            break;
        }
    }
    h * (-s).exp()
}

/// The logarithmic integral li(x) = PV ∫_0^x dt / ln t.
///
/// Defined for x > 0, x ≠ 1; for 0 < x < 1 this is the ordinary integral.
pub fn li(x: f64) -> Result<f64> {
    if x == 1.0 {
        return Err(Error::Pole);
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("li requires finite x > 0, got {x}")));
    }
    if x == 2.0 {
        return Ok(LI2);
    }
    ei(x.ln())
}

/// The offset logarithmic integral Li(x) = ∫_2^x dt / ln t, for x ≥ 2.
pub fn li_offset(x: f64) -> Result<f64> {
    if !(x >= 2.0) {
        return Err(Error::domain(format!("Li requires x >= 2, got {x}")));
    }
    Ok(li(x)? - LI2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialfn::{integrate, QuadratureSpec};

    /// Principal-value oracle: folding (0, 2) about t = 1 cancels the pole,
    /// leaving the smooth integrand 1/ln(1+s) + 1/ln(1−s) on (0, 1).
    fn li_oracle(x: f64) -> f64 {
        let spec = QuadratureSpec {
            abs_tol: 1e-13,
            max_refinements: 40,
        };
        let folded = |s: f64| {
            if s < 1e-4 {
                1.0 + s * s / 12.0
            } else if s >= 1.0 {
                1.0 / 2f64.ln()
            } else {
                1.0 / s.ln_1p() + 1.0 / (-s).ln_1p()
            }
        };
        let head = integrate(folded, 0.0, 1.0, &spec);
        head + integrate(|t: f64| 1.0 / t.ln(), 2.0, x, &spec)
    }

    #[test]
    fn li2_matches_quadrature_oracle() {
        assert!((li_oracle(2.0) - 1.045_163_780_1).abs() < 1e-10);
        assert!((ei(2f64.ln()).unwrap() - li_oracle(2.0)).abs() < 1e-12);
    }

    #[test]
    fn li_minus_li_offset_is_li2() {
        for x in [10.0, 100.0, 1e6] {
            let d = li(x).unwrap() - li_offset(x).unwrap();
            assert!((d - 1.045_163_780_1).abs() < 1e-9);
            assert!((li(x).unwrap() - li_oracle(x)).abs() < 1e-9 * li(x).unwrap());
        }
        assert_eq!(li_offset(2.0).unwrap(), 0.0);
    }

    #[test]
    fn known_values() {
        // li(10) and li(10^6) to the printed digits of standard tables.
        assert!((li(10.0).unwrap() - 6.165_599_504_787_297).abs() < 1e-12);
        assert!((li(1e6).unwrap() - 78_627.549_159_462_18).abs() < 1e-7);
        // li(x) < 0 below the Soldner constant, > 0 above.
        assert!(li(1.451).unwrap() < 0.0 && li(1.452).unwrap() > 0.0);
    }

    #[test]
    fn li_below_one() {
        // li(1/2) = Ei(−ln 2) = −0.378671...
        assert!((li(0.5).unwrap() + 0.378_671_043_061_088_4).abs() < 1e-13);
        // Crosses the series/continued-fraction switch at t = −1.
        let a = li((-1.0f64 - 1e-9).exp()).unwrap();
        let b = li((-1.0f64 + 1e-9).exp()).unwrap();
        assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn series_and_asymptotic_agree_at_switch() {
        let a = ei_series(40.0);
        let b = ei_asymptotic(40.0);
        assert!((a - b).abs() < 1e-12 * a);
    }

    #[test]
    fn derivative_is_one_over_log() {
        for x in [3.0, 10.0, 1e4] {
            let h = 1e-5 * x;
            let d = (li(x + h).unwrap() - li(x - h).unwrap()) / (2.0 * h);
            let expected = 1.0 / f64::ln(x);
            assert!(((d - expected) / expected).abs() < 1e-6);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(li(1.0), Err(Error::Pole));
        assert!(matches!(li(0.0), Err(Error::Domain(_))));
        assert!(matches!(li(-3.0), Err(Error::Domain(_))));
        assert!(matches!(li_offset(1.9), Err(Error::Domain(_))));
    }

    #[test]
    fn monotone_and_bounded() {
        let mut prev = li(1.0001).unwrap();
        let mut x = 1.0001;
        while x < 1e9 {
            x *= 1.07;
            let v = li(x).unwrap();
            assert!(v > prev);
            prev = v;
            if x >= 2.0 {
                assert!(li_offset(x).unwrap() < x / 2f64.ln());
            }
        }
        let ratio = li_offset(1e6).unwrap() / (1e6 / f64::ln(1e6));
        assert!(ratio > 1.0 && ratio < 1.1);
    }
}
