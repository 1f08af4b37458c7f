//! The headline bounds for ψ(x;q,a) and π(x;q,a) and the two zero-sum
//! estimates they are built from.

use std::f64::consts::PI;

use serde::Serialize;

use super::{BoundBreakdown, BoundInput, Catalogue, QValue};
use crate::error::{Error, Result};

/// Which of the three formulas for R₁(q) applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum R1Branch {
    /// 3 ≤ q < 4·10⁵
    Small,
    /// 4·10⁵ ≤ q < 10²⁹
    Mid,
    /// q ≥ 10²⁹
    Large,
}

pub fn r1_branch(q: QValue) -> R1Branch {
    r1_branch_in(Catalogue::builtin(), q.value())
}

fn r1_branch_in(cat: &Catalogue, q: f64) -> R1Branch {
    if q < cat.get("r1.break_mid") {
        R1Branch::Small
    } else if q < cat.get("r1.break_large") {
        R1Branch::Mid
    } else {
        R1Branch::Large
    }
}

/// R₁(q), the contribution of the principal character and the
/// q-dependent constants in the bound for ψ(x;q,a).
pub fn r1(q: QValue) -> f64 {
    r1_in(Catalogue::builtin(), q.value())
}

pub(crate) fn r1_in(cat: &Catalogue, q: f64) -> f64 {
    let lq = q.ln();
    match r1_branch_in(cat, q) {
        R1Branch::Small => {
            let s = q.sqrt();
            cat.get("r1.small.a") * s * lq
                + cat.get("r1.small.b") * s
                + cat.get("r1.small.c") * lq
                + cat.get("r1.small.d")
        }
        R1Branch::Mid => {
            cat.get("r1.mid.a") * lq * lq + cat.get("r1.mid.b") * lq + cat.get("r1.mid.c")
        }
        R1Branch::Large => {
            (cat.get("r1.large.a") * lq.ln() + cat.get("r1.large.b")) * lq * lq
                + cat.get("r1.large.c") * lq
                + cat.get("r1.large.d")
        }
    }
}

fn leading(phi: f64) -> f64 {
    1.0 / (8.0 * PI * phi) + 1.0 / (6.0 * PI)
}

/// Upper bound for |ψ(x;q,a) − x/φ(q)| under GRH(q), for x ≥ 2, q ≥ 3.
pub fn bound_psi(input: &BoundInput) -> BoundBreakdown {
    psi_in(Catalogue::builtin(), input.x, input.q.value(), input.phi_q)
}

pub(crate) fn psi_in(cat: &Catalogue, x: f64, q: f64, phi: f64) -> BoundBreakdown {
    let lq = q.ln();
    let l = x.ln();
    let s = x.sqrt();
    let k = |label: &str| cat.get(label);
    BoundBreakdown::from_parts(&[
        ("sqrt(x) log^2 x", leading(phi), s * l * l),
        (
            "sqrt(x) log x",
            k("psi.sqrtlog.a") * lq + k("psi.sqrtlog.b"),
            s * l,
        ),
        ("sqrt(x)", k("psi.sqrt.a") * lq + k("psi.sqrt.b"), s),
        (
            "sqrt(x)/log x",
            k("psi.sqrtdivlog.a") * lq * lq + k("psi.sqrtdivlog.b") * lq + k("psi.sqrtdivlog.c"),
            s / l,
        ),
        ("log x", k("psi.log.a") * lq + k("psi.log.b"), l),
        ("R1(q)", r1_in(cat, q), 1.0),
    ])
}

/// Upper bound for |π(x;q,a) − li(x)/φ(q)| under GRH(q), for x ≥ q ≥ 3 and
/// gcd(a, q) = 1.
pub fn bound_pi_full(input: &BoundInput) -> Result<BoundBreakdown> {
    input.require_x_at_least_q()?;
    Ok(pi_full_in(
        Catalogue::builtin(),
        input.x,
        input.q.value(),
        input.phi_q,
    ))
}

pub(crate) fn pi_full_in(cat: &Catalogue, x: f64, q: f64, phi: f64) -> BoundBreakdown {
    let lq = q.ln();
    let l = x.ln();
    let s = x.sqrt();
    let r = x.sqrt().sqrt();
    let k = |label: &str| cat.get(label);
    let quad = |p: &str| k(&format!("{p}.a")) * lq * lq + k(&format!("{p}.b")) * lq + k(&format!("{p}.c"));
    BoundBreakdown::from_parts(&[
        ("sqrt(x) log x", leading(phi), s * l),
        ("sqrt(x)", k("pi.sqrt.a") * lq + k("pi.sqrt.b"), s),
        (
            "sqrt(x)/log x",
            k("pi.sqrtdivlog.a") * lq + k("pi.sqrtdivlog.b"),
            s / l,
        ),
        ("sqrt(x)/log^2 x", quad("pi.sqrtdivlog2"), s / (l * l)),
        (
            "x^(1/4) loglog x",
            k("pi.quartloglog.a") * lq + k("pi.quartloglog.b"),
            r * l.ln(),
        ),
        ("x^(1/4)", quad("pi.quart"), r),
        ("sqrt(x)/log^3 x", quad("pi.sqrtdivlog3"), s / (l * l * l)),
        ("constant", k("pi.const"), 1.0),
    ])
}

/// The simplified form of the π bound, valid for x ≥ q ≥ 3 and dominating
/// [`bound_pi_full`] there.
pub fn bound_pi_simple(input: &BoundInput) -> Result<BoundBreakdown> {
    input.require_x_at_least_q()?;
    let cat = Catalogue::builtin();
    let (x, lq) = (input.x, input.q.ln());
    let s = x.sqrt();
    Ok(BoundBreakdown::from_parts(&[
        ("sqrt(x) log x", leading(input.phi_q), s * x.ln()),
        (
            "sqrt(x)",
            cat.get("pisimple.sqrt.a") * lq + cat.get("pisimple.sqrt.b"),
            s,
        ),
        ("constant", cat.get("pisimple.const"), 1.0),
    ]))
}

/// Bound for the sum over zeros with |γ| > 1/2 (and the truncation error) in
/// the explicit formula for a primitive character, with T = x^0.577 + 8.509.
pub fn bound_large_rho(input: &BoundInput) -> BoundBreakdown {
    let cat = Catalogue::builtin();
    let k = |label: &str| cat.get(label);
    let (x, lq) = (input.x, input.q.ln());
    let l = x.ln();
    let e = k("input.t_exponent");
    let xa = x.powf(1.0 - e);
    let xb = x.powf(-(e - 0.5));
    let ll = (lq + l).ln();
    BoundBreakdown::from_parts(&[
        ("x^0.423 log^2 x", k("largerho.x423log2"), xa * l * l),
        ("sqrt(x) log x", k("largerho.sqrtlog"), x.sqrt() * l),
        ("x^0.423 log x", k("largerho.x423log"), xa * l),
        ("x^0.423 loglog(qx)", k("largerho.x423loglog"), xa * ll),
        ("x^0.423", k("largerho.x423.a") * lq + k("largerho.x423.b"), xa),
        (
            "x^0.423 loglog^2(qx)/log x",
            k("largerho.divlog.loglog2"),
            xa * ll * ll / l,
        ),
        (
            "x^0.423 loglog(qx)/log x",
            k("largerho.divlog.loglog.a") * lq + k("largerho.divlog.loglog.b"),
            xa * ll / l,
        ),
        (
            "x^0.423/log x",
            k("largerho.divlog.a") * lq * lq + k("largerho.divlog.b") * lq + k("largerho.divlog.c"),
            xa / l,
        ),
        ("log x/x^0.077", k("largerho.tail.log"), l * xb),
        ("loglog(qx)/x^0.077", k("largerho.tail.loglog"), ll * xb),
        (
            "x^-0.077",
            k("largerho.tail.a") * lq + k("largerho.tail.b"),
            xb,
        ),
    ])
}

/// Bound for the sum over zeros with |γ| ≤ 1/2, for x ≥ 2.
pub fn bound_small_rho(input: &BoundInput) -> BoundBreakdown {
    let cat = Catalogue::builtin();
    let k = |label: &str| cat.get(label);
    let (x, lq) = (input.x, input.q.ln());
    let l = x.ln();
    let s = x.sqrt();
    BoundBreakdown::from_parts(&[
        ("sqrt(x) log^2 x", 1.0 / (6.0 * PI), s * l * l),
        (
            "sqrt(x) log x",
            k("smallrho.sqrtlog.a") * lq + k("smallrho.sqrtlog.b"),
            s * l,
        ),
        ("sqrt(x)", k("smallrho.sqrt.a") * lq + k("smallrho.sqrt.b"), s),
    ])
}

/// Bound for |ψ₀(x,χ) − J(x,T,χ)|, the truncation error of the Perron
/// integral at height T with abscissa c = 1 + 1/log x.
pub fn jest_bound(x: f64, t: f64) -> Result<BoundBreakdown> {
    if !(x >= 2.0) || !(t > 0.0) || !x.is_finite() || !t.is_finite() {
        return Err(Error::domain(format!(
            "jest bound needs x >= 2 and T > 0, got x = {x}, T = {t}"
        )));
    }
    let cat = Catalogue::builtin();
    let k = |label: &str| cat.get(label);
    let l = x.ln();
    let s = x.sqrt();
    Ok(BoundBreakdown::from_parts(&[
        ("x log^2 x/T", k("jest.xlog2"), x * l * l / t),
        ("sqrt(x) log x", k("jest.sqrtlog"), s * l),
        ("x log x/T", k("jest.xlog"), x * l / t),
        ("x/T", k("jest.x"), x / t),
        ("x/(T log x)", k("jest.xdivlog"), x / (t * l)),
        ("sqrt(x) log x/T", k("jest.sqrtlogdivt"), s * l / t),
        ("sqrt(x)/T", k("jest.sqrtdivt"), s / t),
        ("log x/T", k("jest.logdivt"), l / t),
        ("1/T", k("jest.divt"), 1.0 / t),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> QValue {
        QValue::exact(v).unwrap()
    }

    #[test]
    fn r1_branches_and_values() {
        let expected = 0.014 * 3f64.sqrt() * 3f64.ln()
            + 0.034 * 3f64.sqrt()
            + 3.679 * 3f64.ln()
            + 263.886;
        assert!((r1(q(3)) - expected).abs() < 1e-12);
        assert!((r1(q(3)) - 268.01).abs() < 0.005);
        assert_eq!(r1_branch(q(399_999)), R1Branch::Small);
        assert_eq!(r1_branch(q(400_000)), R1Branch::Mid);
        let l = 4e5f64.ln();
        assert!((r1(q(400_000)) - (1.858 * l * l + 3.679 * l + 104.626)).abs() < 1e-9);
        let big = QValue::real(1e30).unwrap();
        assert_eq!(r1_branch(big), R1Branch::Large);
        let l = 1e30f64.ln();
        let want = (0.297 * l.ln() + 0.603) * l * l + 3.679 * l + 104.626;
        assert!((r1(big) - want).abs() < 1e-9 * want);
        assert_eq!(r1_branch(QValue::real(1e29).unwrap()), R1Branch::Large);
    }

    #[test]
    fn psi_bound_has_six_labelled_terms() {
        let b = bound_psi(&BoundInput::new(100.0, 7).unwrap());
        assert_eq!(b.terms.len(), 6);
        let b3 = bound_psi(&BoundInput::new(100.0, 3).unwrap());
        let lead = b3.terms[0].coefficient;
        assert!((lead - 0.072946).abs() < 1e-6);
        assert!((b3.term("R1(q)").unwrap().value - r1(q(3))).abs() < 1e-12);
    }

    #[test]
    fn pi_full_values() {
        let b = bound_pi_full(&BoundInput::new(1e6, 3).unwrap()).unwrap();
        assert_eq!(b.terms.len(), 8);
        assert!((b.terms[0].value - 1007.8).abs() < 0.1);
        assert_eq!(b.term("constant").unwrap().value, -237.934);
        assert!(bound_pi_full(&BoundInput::new(2.0, 3).unwrap()).is_err());
    }

    #[test]
    fn pi_simple_value() {
        let b = bound_pi_simple(&BoundInput::new(100.0, 3).unwrap()).unwrap();
        let want = (1.0 / (16.0 * PI) + 1.0 / (6.0 * PI)) * 10.0 * 100f64.ln()
            + (0.184 * 3f64.ln() + 12969.946) * 10.0
            - 237.934;
        assert!((b.total - want).abs() < 1e-9);
        assert!((b.total - 129466.9).abs() < 0.1);
        assert!((b.terms[1].coefficient - (0.184 * 3f64.ln() + 12969.946)).abs() < 1e-12);
    }

    #[test]
    fn large_rho_terms() {
        let b = bound_large_rho(&BoundInput::new(2.0, 3).unwrap());
        assert_eq!(b.terms.len(), 11);
        assert!(b.total > 0.0);
        assert!(b.terms.iter().all(|t| t.value.is_finite()));
        let c = b.term("x^0.423 loglog(qx)/log x").unwrap().coefficient;
        assert!((c - (32.449 * 3f64.ln() - 1.720)).abs() < 1e-12);
    }

    #[test]
    fn small_rho_terms() {
        let b = bound_small_rho(&BoundInput::new(2.0, 3).unwrap());
        assert_eq!(b.terms.len(), 3);
        assert!(b.total > 0.0);
        assert!((b.terms[2].coefficient - (1.693 * 3f64.ln() + 11.946)).abs() < 1e-12);
        let mut prev = 0.0;
        for i in 0..200 {
            let x = 2.0 * 1.1f64.powi(i);
            let t = bound_small_rho(&BoundInput::new(x, 3).unwrap()).total;
            assert!(t > prev);
            prev = t;
        }
    }

    #[test]
    fn jest_value_and_shape() {
        let b = jest_bound(4.0, 10.0).unwrap();
        assert_eq!(b.terms.len(), 9);
        let l = 4f64.ln();
        let want = 1.363 * 4.0 * l * l / 10.0
            + 2.074 * 2.0 * l
            + 12.294 * 4.0 * l / 10.0
            + 7.032 * 0.4
            + 5.823 * 4.0 / (10.0 * l)
            + 12.624 * 2.0 * l / 10.0
            + 0.893 * 0.2
            + l / 10.0
            + 0.1;
        assert!((b.total - want).abs() < 1e-12);
        let later = jest_bound(4.0, 20.0).unwrap();
        for (a, z) in b.terms.iter().zip(&later.terms) {
            if a.label == "sqrt(x) log x" {
                assert_eq!(a.value, z.value);
            } else {
                assert!(z.value < a.value);
            }
        }
        assert!(jest_bound(1.0, 10.0).is_err());
        assert!(jest_bound(4.0, 0.0).is_err());
    }
}
