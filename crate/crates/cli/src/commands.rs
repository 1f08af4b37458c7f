use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use apbounds::arith::{gcd, totient};
use apbounds::bounds::{
    bound_large_rho, bound_pi_full, bound_pi_simple, bound_psi, bound_small_rho, jest_bound, r1,
    r1_branch, BoundInput, Catalogue, QValue,
};
use apbounds::sieve::{counts_ap_with, APQuery};
use apbounds::specialfn::{integrate, li, LI2};
use apbounds::verifier::{
    reproduce_paper_constants, verify_character_identities, verify_empirical_bounds, verify_lemmas,
    verify_small_x_psi, VerificationReport,
};
use clap::ValueEnum;
use serde_json::json;

use crate::output::{human_number, Record};
use crate::{BoundKind, CliConfig, Suite};

/// Records to print, whether every check passed, and an optional summary
/// for standard error.
pub struct Outcome {
    pub records: Vec<Record>,
    pub pass: bool,
    pub summary: Option<String>,
}

impl Outcome {
    fn single(record: Record) -> Self {
        Self {
            records: vec![record],
            pass: true,
            summary: None,
        }
    }
}

pub fn count(x: f64, q: u64, a: u64, with_bound: bool, config: &CliConfig) -> Result<Outcome> {
    let query = APQuery::new(x, q, a)?;
    if with_bound {
        if q < 3 {
            bail!("bound comparison needs q >= 3, got q = {q} (use --no-bound)");
        }
        if !query.is_coprime() {
            bail!(
                "bound comparison needs gcd(a, q) = 1, got gcd({a}, {q}) = {} (use --no-bound)",
                gcd(a, q)
            );
        }
    }
    let counts = counts_ap_with(&query, &config.sieve);
    let phi = totient(q) as f64;
    let li_phi = li(x).ok().map(|v| v / phi);
    let mut outputs = json!({
        "pi": counts.pi,
        "theta": counts.theta,
        "psi": counts.psi,
        "psi0": counts.psi0,
        "li_over_phi": li_phi,
        "pi_error": li_phi.map(|l| counts.pi as f64 - l),
        "psi_error": counts.psi - x / phi,
    });
    if with_bound {
        let bounds = match BoundInput::new(x, q) {
            Ok(input) => json!({
                "psi": bound_psi(&input).total,
                "pi_full": bound_pi_full(&input).ok().map(|b| b.total),
            }),
            // Below x = 2 none of the bounds is defined.
            Err(_) => json!({ "psi": null, "pi_full": null }),
        };
        outputs["bounds"] = bounds;
    }
    let inputs = json!({ "x": x, "q": q, "a": a });
    Ok(Outcome::single(Record::new("count", inputs, outputs)?))
}

/// The command-line spelling of a value-enum variant.
fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().map_or_else(String::new, |p| p.get_name().to_string())
}

fn require(v: Option<f64>, flag: &str, which: BoundKind) -> Result<f64> {
    v.ok_or_else(|| anyhow!("--{flag} is required for --which {}", value_name(which)))
}

fn bound_input(x: f64, q: f64, phi: Option<f64>) -> Result<BoundInput> {
    let exact = q.fract() == 0.0 && (0.0..9.007_199_254_740_992e15).contains(&q);
    match (phi, exact) {
        (Some(phi), true) => Ok(BoundInput::with_phi(x, QValue::exact(q as u64)?, phi)?),
        (Some(phi), false) => Ok(BoundInput::with_phi(x, QValue::real(q)?, phi)?),
        (None, true) => Ok(BoundInput::new(x, q as u64)?),
        (None, false) => bail!("q = {q} is not an exact integer; pass --phi"),
    }
}

pub fn bound(
    which: BoundKind,
    x: Option<f64>,
    q: Option<f64>,
    phi: Option<f64>,
    t: Option<f64>,
    config: &CliConfig,
) -> Result<Outcome> {
    let mut inputs = json!({ "which": value_name(which) });
    for (k, v) in [("x", x), ("q", q), ("phi", phi), ("t", t)] {
        if let Some(v) = v {
            inputs[k] = json!(v);
        }
    }
    let outputs = match which {
        BoundKind::R1 => {
            let q = require(q, "q", which)?;
            let qv = QValue::real(q)?;
            json!({ "value": r1(qv), "branch": r1_branch(qv) })
        }
        BoundKind::Jest => serde_json::to_value(jest_bound(require(x, "x", which)?, require(t, "t", which)?)?)?,
        BoundKind::Li => {
            let x = require(x, "x", which)?;
            if x < 2.0 {
                bail!("li comparison needs x >= 2, got {x}");
            }
            let series = li(x)?;
            let quad = LI2 + integrate(|u| 1.0 / u.ln(), 2.0, x, &config.quadrature);
            json!({ "series": series, "quadrature": quad, "abs_diff": (series - quad).abs() })
        }
        _ => {
            let input = bound_input(require(x, "x", which)?, require(q, "q", which)?, phi)?;
            let b = match which {
                BoundKind::PiFull => bound_pi_full(&input)?,
                BoundKind::PiSimple => bound_pi_simple(&input)?,
                BoundKind::Psi => bound_psi(&input),
                BoundKind::LargeRho => bound_large_rho(&input),
                BoundKind::SmallRho => bound_small_rho(&input),
                BoundKind::R1 | BoundKind::Jest | BoundKind::Li => unreachable!(),
            };
            serde_json::to_value(b)?
        }
    };
    Ok(Outcome::single(Record::new("bound", inputs, outputs)?))
}

fn summarize(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "{}  {:32} min margin {:>12}  at ({})",
            if r.pass { "PASS" } else { "FAIL" },
            r.lemma_id,
            human_number(r.min_margin),
            r.argmin.iter().map(|&v| human_number(v)).collect::<Vec<_>>().join(", ")
        );
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    let _ = writeln!(s, "{passed} of {} passed", reports.len());
    s
}

pub fn verify(
    suite: Suite,
    only: Option<&str>,
    qmax: Option<u64>,
    xmax: Option<f64>,
    samples: usize,
    config: &CliConfig,
) -> Result<Outcome> {
    if only.is_some() && suite != Suite::Lemmas {
        bail!("--only applies to the lemmas suite");
    }
    let suite_name = value_name(suite);
    if suite == Suite::Constants {
        let recs = reproduce_paper_constants();
        let pass = recs.iter().all(|r| r.pass);
        let mut summary = String::new();
        for r in &recs {
            let _ = writeln!(
                summary,
                "{}  {} = {} ({})",
                if r.pass { "PASS" } else { "FAIL" },
                r.label,
                human_number(r.computed),
                r.claim
            );
        }
        let records = recs
            .iter()
            .map(|r| Record::new("verify", json!({ "suite": suite_name }), r))
            .collect::<Result<_>>()?;
        return Ok(Outcome {
            records,
            pass,
            summary: Some(summary),
        });
    }
    let mut inputs = json!({ "suite": suite_name });
    let reports = match suite {
        Suite::Lemmas => {
            inputs["only"] = json!(only);
            verify_lemmas(only.unwrap_or(""))?
        }
        Suite::Empirical => {
            let (q, x) = (qmax.unwrap_or(30), xmax.unwrap_or(1e7));
            inputs["qmax"] = json!(q);
            inputs["xmax"] = json!(x);
            inputs["samples"] = json!(samples);
            verify_empirical_bounds(q, x, samples, &config.sieve)?
        }
        Suite::Characters => {
            let (q, x) = (qmax.unwrap_or(50), xmax.unwrap_or(1e4));
            inputs["qmax"] = json!(q);
            inputs["xmax"] = json!(x);
            vec![verify_character_identities(q, x)?]
        }
        Suite::SmallX => vec![verify_small_x_psi()],
        Suite::Constants => unreachable!(),
    };
    let pass = reports.iter().all(|r| r.pass);
    let records = reports
        .iter()
        .map(|r| Record::new("verify", inputs.clone(), r))
        .collect::<Result<_>>()
        .context("serialising reports")?;
    Ok(Outcome {
        records,
        pass,
        summary: Some(summarize(&reports)),
    })
}

pub fn constants_dump() -> Result<Outcome> {
    let records = Catalogue::builtin()
        .entries()
        .iter()
        .map(|e| Record::new("constants-dump", json!({}), e))
        .collect::<Result<_>>()?;
    Ok(Outcome {
        records,
        pass: true,
        summary: None,
    })
}
