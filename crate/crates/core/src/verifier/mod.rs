//! Numerical checks of the elementary inequalities behind the bounds, of the
//! bounds themselves against exact counts, and of the constants computed in
//! their proofs.
//!
//! The margin search is heuristic: a passing report means no counterexample
//! was found on the scanned grid and in the refined neighbourhoods of its
//! worst points. It is not a certificate.

mod empirical;
mod registry;
mod search;

use serde::Serialize;

use crate::bounds::Catalogue;
use crate::error::{Error, Result};

pub use empirical::{
    reproduce_paper_constants, verify_character_identities, verify_empirical_bounds,
    verify_psi_theta, verify_small_x_psi, ConstantRecord,
};
pub use registry::{lemma_ids, LemmaInfo};

/// Default number of worst coarse points that are refined.
pub const DEFAULT_K_WORST: usize = 8;
pub const DEFAULT_COARSE_POINTS: usize = 512;
pub const DEFAULT_REFINE_ITERS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dim {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub scale: Scale,
}

impl Dim {
    pub fn linear(name: &str, lo: f64, hi: f64) -> Self {
        Self {
            name: name.to_string(),
            lo,
            hi,
            scale: Scale::Linear,
        }
    }

    pub fn log(name: &str, lo: f64, hi: f64) -> Self {
        Self {
            name: name.to_string(),
            lo,
            hi,
            scale: Scale::Log,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchDomain {
    pub dims: Vec<Dim>,
    pub coarse_points_per_dim: usize,
    pub refine_iters: usize,
}

impl SearchDomain {
    pub fn new(dims: Vec<Dim>, coarse_points_per_dim: usize, refine_iters: usize) -> Result<Self> {
        let d = Self {
            dims,
            coarse_points_per_dim,
            refine_iters,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dims.is_empty() {
            return Err(Error::domain("search domain has no dimensions"));
        }
        if self.coarse_points_per_dim < 16 {
            return Err(Error::domain(format!(
                "coarse_points_per_dim = {} is below 16",
                self.coarse_points_per_dim
            )));
        }
        for d in &self.dims {
            if !(d.lo < d.hi) || !d.lo.is_finite() || !d.hi.is_finite() {
                return Err(Error::domain(format!(
                    "dimension {}: need lo < hi, got [{}, {}]",
                    d.name, d.lo, d.hi
                )));
            }
            if d.scale == Scale::Log && d.lo <= 0.0 {
                return Err(Error::domain(format!(
                    "dimension {}: log scale needs lo > 0",
                    d.name
                )));
            }
        }
        Ok(())
    }

    /// The same domain with a different grid resolution.
    pub fn with_resolution(mut self, coarse_points_per_dim: usize, refine_iters: usize) -> Result<Self> {
        self.coarse_points_per_dim = coarse_points_per_dim;
        self.refine_iters = refine_iters;
        self.validate()?;
        Ok(self)
    }

    pub fn contains(&self, point: &[f64]) -> bool {
        point.len() == self.dims.len()
            && point
                .iter()
                .zip(&self.dims)
                .all(|(&v, d)| v >= d.lo && v <= d.hi)
    }
}

/// A partial result inside a report that checks several things at once.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportPart {
    pub label: String,
    pub min_margin: f64,
    pub argmin: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub lemma_id: String,
    pub domain: SearchDomain,
    /// Smallest RHS − LHS found.
    pub min_margin: f64,
    pub argmin: Vec<f64>,
    pub evaluations: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<ReportPart>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl VerificationReport {
    pub(crate) fn new(
        lemma_id: impl Into<String>,
        domain: SearchDomain,
        min_margin: f64,
        argmin: Vec<f64>,
        evaluations: u64,
    ) -> Self {
        Self {
            lemma_id: lemma_id.into(),
            domain,
            min_margin,
            argmin,
            evaluations,
            pass: min_margin > 0.0,
            parts: Vec::new(),
            note: String::new(),
        }
    }

    /// Builds a report whose margin is the minimum over its parts.
    pub(crate) fn from_parts(
        lemma_id: impl Into<String>,
        domain: SearchDomain,
        parts: Vec<ReportPart>,
        evaluations: u64,
    ) -> Self {
        let worst = parts
            .iter()
            .min_by(|a, b| a.min_margin.total_cmp(&b.min_margin))
            .cloned();
        let (m, arg) = worst.map_or((f64::NEG_INFINITY, Vec::new()), |w| (w.min_margin, w.argmin));
        let mut r = Self::new(lemma_id, domain, m, arg, evaluations);
        r.parts = parts;
        r
    }
}

/// Search settings that are not part of the domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub k_worst: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            k_worst: DEFAULT_K_WORST,
        }
    }
}

/// Checks one registered inequality on `domain` (or on the lemma's default
/// domain when `None`).
pub fn verify_inequality(lemma_id: &str, domain: Option<&SearchDomain>) -> Result<VerificationReport> {
    verify_inequality_with(lemma_id, domain, Catalogue::builtin(), &SearchConfig::default())
}

/// As [`verify_inequality`], with an explicit constants catalogue and
/// search configuration.
pub fn verify_inequality_with(
    lemma_id: &str,
    domain: Option<&SearchDomain>,
    catalogue: &Catalogue,
    config: &SearchConfig,
) -> Result<VerificationReport> {
    let lemma = registry::lookup(lemma_id)?;
    let domain = match domain {
        Some(d) => d.clone(),
        None => lemma.default_domain(),
    };
    domain.validate()?;
    lemma.check_hypotheses(&domain)?;
    let margin = lemma.margin(catalogue);
    let r = search::minimize(&domain, config.k_worst, |p| lemma.clip(p), |p| margin(p));
    let mut report = VerificationReport::new(lemma.id, domain, r.min, r.argmin, r.evaluations);
    report.note = lemma.note.to_string();
    Ok(report)
}

/// Runs every registered lemma whose id starts with `prefix` (all lemmas
/// when `prefix` is empty) on its default domain.
pub fn verify_lemmas(prefix: &str) -> Result<Vec<VerificationReport>> {
    let ids: Vec<&str> = lemma_ids().into_iter().filter(|id| id.starts_with(prefix)).collect();
    if ids.is_empty() {
        return Err(Error::UnknownLemma(prefix.to_string()));
    }
    ids.into_iter().map(|id| verify_inequality(id, None)).collect()
}

/// Hypotheses and default domain of a registered lemma.
pub fn lemma_info(lemma_id: &str) -> Result<LemmaInfo> {
    Ok(registry::lookup(lemma_id)?.info())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_validation() {
        assert!(SearchDomain::new(vec![Dim::log("x", 2.0, 10.0)], 16, 10).is_ok());
        assert!(SearchDomain::new(vec![Dim::log("x", 2.0, 10.0)], 15, 10).is_err());
        assert!(SearchDomain::new(vec![Dim::log("x", 10.0, 2.0)], 16, 10).is_err());
        assert!(SearchDomain::new(vec![Dim::log("x", 0.0, 2.0)], 16, 10).is_err());
        assert!(SearchDomain::new(vec![Dim::linear("x", -1.0, 2.0)], 16, 10).is_ok());
        assert!(SearchDomain::new(vec![], 16, 10).is_err());
    }

    #[test]
    fn unknown_lemma_is_rejected() {
        assert!(matches!(
            verify_inequality("noSuchLemma", None),
            Err(Error::UnknownLemma(_))
        ));
        assert!(verify_lemmas("noSuch").is_err());
    }

    #[test]
    fn report_pass_iff_positive_margin() {
        let d = SearchDomain::new(vec![Dim::log("x", 2.0, 10.0)], 16, 1).unwrap();
        assert!(!VerificationReport::new("a", d.clone(), 0.0, vec![2.0], 1).pass);
        assert!(VerificationReport::new("a", d, 1e-300, vec![2.0], 1).pass);
    }
}
