//! ζ(σ), ζ′(σ) and −ζ′/ζ(σ) for real σ > 1 by Euler–Maclaurin summation.

use crate::error::{Error, Result};

/// Terms summed directly before switching to the Euler–Maclaurin tail.
const HEAD: u32 = 10;

/// B_{2k} / (2k)! for k = 1..=10.
const BERNOULLI_SCALED: [f64; 10] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43_867.0 / 798.0 / 6_402_373_705_728_000.0,
    -174_611.0 / 330.0 / 2_432_902_008_176_640_000.0,
];

/// `(ζ(σ), ζ′(σ))` for real σ > 1.
pub fn zeta_and_derivative(sigma: f64) -> Result<(f64, f64)> {
    if !(sigma > 1.0) || !sigma.is_finite() {
        return Err(Error::domain(format!("zeta requires finite sigma > 1, got {sigma}")));
    }
    let s = sigma;
    let mut z = 0.0;
    let mut dz = 0.0;
    for n in 1..HEAD {
        let nf = f64::from(n);
        let t = nf.powf(-s);
        z += t;
        dz -= nf.ln() * t;
    }
    let n = f64::from(HEAD);
    let ln_n = n.ln();
    let n_1s = n.powf(1.0 - s);
    let n_s = n.powf(-s);
    z += n_1s / (s - 1.0) + 0.5 * n_s;
    dz += -ln_n * n_1s / (s - 1.0) - n_1s / ((s - 1.0) * (s - 1.0)) - 0.5 * ln_n * n_s;

    // Correction k: c_k · s(s+1)···(s+2k−2) · N^{−s−2k+1}.
    let mut poly = s;
    let mut dlog_poly = 1.0 / s;
    let mut power = n_s / n;
    for (k, c) in BERNOULLI_SCALED.iter().enumerate() {
        if k > 0 {
            let j = (2 * k) as f64;
            poly *= (s + j - 1.0) * (s + j);
            dlog_poly += 1.0 / (s + j - 1.0) + 1.0 / (s + j);
            power /= n * n;
        }
        let term = c * poly * power;
        z += term;
        dz += term * (dlog_poly - ln_n);
    }
    Ok((z, dz))
}

/// |ζ′(σ)/ζ(σ)| = Σ Λ(n) n^{−σ} for σ > 1.
pub fn zeta_logderiv(sigma: f64) -> Result<f64> {
    let (z, dz) = zeta_and_derivative(sigma)?;
    Ok(-dz / z)
}
