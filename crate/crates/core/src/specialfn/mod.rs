//! Special functions: the logarithmic integrals li and Li, the principal
//! branch of Lambert W, ζ′/ζ on the real axis, Euler's constant, and an
//! adaptive quadrature rule.

mod ei;
mod lambert;
mod quad;
mod zeta;

pub use ei::{ei, li, li_offset, LI2};
pub use lambert::lambert_w0;
pub use quad::{integrate, integrate_with_error, QuadratureSpec};
pub use zeta::{zeta_and_derivative, zeta_logderiv};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_constant() {
        let g = euler_gamma();
        assert!(g > 0.577215 && g < 0.577216);
        assert!((g.exp() - 1.781_072_4).abs() < 1e-7);
        // The coefficient 2eγ/π of the x/(T − 1) term in the O(x^0.423) estimate.
        let c = 2.0 * std::f64::consts::E * g / std::f64::consts::PI;
        assert!((c - 0.998_879).abs() < 1e-6);
    }
}
