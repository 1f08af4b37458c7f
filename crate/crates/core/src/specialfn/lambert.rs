//! Principal branch W₀ of the Lambert W function.

use std::f64::consts::E;

use crate::error::{Error, Result};

/// W₀(x): the solution w ≥ −1 of w·e^w = x, for x ≥ −1/e.
///
/// The starting point is the branch-point expansion
/// w ≈ −1 + p − p²/3 + 11p³/72 with p = √(2(ex + 1)) for x < −0.25,
/// ln(1 + x) for −0.25 ≤ x ≤ e, and ln x − ln ln x + ln ln x / ln x beyond.
/// Halley's iteration then converges in a handful of steps.
pub fn lambert_w0(x: f64) -> Result<f64> {
    let branch = -1.0 / E;
    if !x.is_finite() || x < branch {
        return Err(Error::domain(format!("Lambert W0 requires x >= -1/e, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == branch {
        return Ok(-1.0);
    }
    let mut w = if x < -0.25 {
        let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x <= E {
        x.ln_1p()
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert!((lambert_w0(E).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(lambert_w0(-1.0 / E).unwrap(), -1.0);
        // Omega constant: W(1).
        assert!((lambert_w0(1.0).unwrap() - 0.567_143_290_409_783_8).abs() < 1e-15);
    }

    #[test]
    fn residual_on_grid() {
        let mut xs: Vec<f64> = (0..=300).map(|i| -0.3 + 0.3 * i as f64 / 300.0).collect();
        xs.extend((0..=600).map(|i| 10f64.powf(-6.0 + 12.0 * i as f64 / 600.0)));
        for x in xs {
            let w = lambert_w0(x).unwrap();
            let r = w * w.exp();
            let tol = 1e-12 * x.abs().max(f64::MIN_POSITIVE);
            assert!((r - x).abs() <= tol.max(1e-300), "x={x} w={w} r={r}");
        }
    }

    #[test]
    fn near_branch_point() {
        let x = -1.0 / E + 1e-10;
        let w = lambert_w0(x).unwrap();
        assert!(w > -1.0 && w < -0.999);
        assert!((w * w.exp() - x).abs() < 1e-15);
    }

    #[test]
    fn rejects_below_branch_point() {
        assert!(lambert_w0(-0.5).is_err());
        assert!(lambert_w0(f64::NAN).is_err());
    }

    #[test]
    fn values_used_in_proofs() {
        let v = 4.0 * lambert_w0(208.0 / 125.0).unwrap();
        assert!(v > 3.080 && v < 3.082, "{v}");
        let v = lambert_w0(4.0).unwrap().exp().exp();
        assert!(v > 27.863 && v < 27.864, "{v}");
    }
}
