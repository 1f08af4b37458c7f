//! Evaluators for the explicit GRH-conditional error bounds and for the
//! auxiliary estimates they are assembled from.
//!
//! Every constant comes from the [`Catalogue`]. Composite bounds are returned
//! as a [`BoundBreakdown`] whose terms appear in the order they are written in
//! the statement, each as `coefficient × factor`.

mod catalogue;
mod ingredients;
mod main_bounds;

use serde::Serialize;

pub use catalogue::{Catalogue, CatalogueEntry};
pub use ingredients::{
    bchi_bound, est1c_bound, iest_bound, l0_logderiv_bound, l2t_bound, ln1_bound,
    n_zeros_window, sum_large_diff_bound, sum_small_diff_bound, trivial_zero_sums,
    zero_gap_denominator, L0Variant, ZeroWindow,
};
pub use main_bounds::{
    bound_large_rho, bound_pi_full, bound_pi_simple, bound_psi, bound_small_rho, jest_bound, r1,
    r1_branch, R1Branch,
};
#[allow(unused_imports)]
pub(crate) use main_bounds::{pi_full_in, psi_in, r1_in};

use crate::arith::totient;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

/// A modulus. Moduli below 2⁶³ keep their exact integer value; larger ones
/// (which only enter the formulas through `log q`) are carried as reals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QValue {
    value: f64,
    exact: Option<u64>,
}

impl QValue {
    pub fn exact(q: u64) -> Result<Self> {
        if q < 3 {
            return Err(Error::domain(format!("q = {q} violates q >= 3")));
        }
        Ok(Self {
            value: q as f64,
            exact: Some(q),
        })
    }

    pub fn real(q: f64) -> Result<Self> {
        if !(q >= 3.0) || !q.is_finite() {
            return Err(Error::domain(format!("q = {q} violates q >= 3")));
        }
        let exact = (q < 9.2e18 && q.fract() == 0.0).then_some(q as u64);
        Ok(Self { value: q, exact })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn ln(&self) -> f64 {
        self.value.ln()
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.exact
    }
}

/// The point `(x, q)` at which a bound is evaluated, together with the
/// derived quantities φ(q), `c = 1 + 1/log x` and `T = x^0.577 + 8.509`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundInput {
    x: f64,
    q: QValue,
    phi_q: f64,
    c: f64,
    t: f64,
}

impl BoundInput {
    /// Input for an integer modulus; φ(q) is computed by factorization.
    pub fn new(x: f64, q: u64) -> Result<Self> {
        let qv = QValue::exact(q)?;
        Self::with_phi(x, qv, totient(q) as f64)
    }

    /// Input with a caller-supplied φ(q), for moduli too large to factor.
    pub fn with_phi(x: f64, q: QValue, phi_q: f64) -> Result<Self> {
        if !(x >= 2.0) || !x.is_finite() {
            return Err(Error::domain(format!("x = {x} violates x >= 2")));
        }
        if !(phi_q >= 1.0) || phi_q >= q.value() {
            return Err(Error::domain(format!(
                "phi(q) = {phi_q} is not a totient value below q = {}",
                q.value()
            )));
        }
        let cat = Catalogue::builtin();
        let t = x.powf(cat.get("input.t_exponent")) + cat.get("input.t_shift");
        Ok(Self {
            x,
            q,
            phi_q,
            c: 1.0 + 1.0 / x.ln(),
            t,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn q(&self) -> QValue {
        self.q
    }

    pub fn phi_q(&self) -> f64 {
        self.phi_q
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Fails unless `x >= q`.
    pub fn require_x_at_least_q(&self) -> Result<()> {
        if self.x < self.q.value() {
            return Err(Error::domain(format!(
                "x < q: x = {} is below q = {}",
                self.x,
                self.q.value()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundTerm {
    pub label: &'static str,
    /// The multiplier of the x-dependent factor; for constant terms the
    /// term itself.
    pub coefficient: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundBreakdown {
    pub terms: Vec<BoundTerm>,
    pub total: f64,
}

impl BoundBreakdown {
    /// Builds a breakdown from `(label, coefficient, factor)` triples.
    pub(crate) fn from_parts(parts: &[(&'static str, f64, f64)]) -> Self {
        let terms: Vec<BoundTerm> = parts
            .iter()
            .map(|&(label, coefficient, factor)| BoundTerm {
                label,
                coefficient,
                value: coefficient * factor,
            })
            .collect();
        let total = terms.iter().map(|t| t.value).sum::<NeumaierSum>().value();
        Self { terms, total }
    }

    pub fn term(&self, label: &str) -> Option<&BoundTerm> {
        self.terms.iter().find(|t| t.label == label)
    }
}
