//! The registered inequalities. Each entry knows its hypotheses, a default
//! search domain and how to turn a catalogue into a margin function
//! `point ↦ RHS − LHS`.
//!
//! Points are ordered `[x, q]` for two-variable lemmas.

use std::f64::consts::{E, LN_2, PI};

use serde::Serialize;

use super::{Dim, Scale, SearchDomain, DEFAULT_COARSE_POINTS, DEFAULT_REFINE_ITERS};
use crate::bounds::{r1_in, Catalogue};
use crate::characters::{conductor_and_primitive, enumerate_characters, psi0_chi_with, DirichletCharacter};
use crate::error::{Error, Result};
use crate::sieve::{lambda_gcd_sum, ChebyshevTable};
use crate::specialfn::{zeta_logderiv, EULER_GAMMA};

type Margin<'a> = Box<dyn Fn(&[f64]) -> f64 + Sync + 'a>;

#[derive(Debug, Clone, Copy)]
struct DimSpec {
    name: &'static str,
    lo: f64,
    hi: f64,
    scale: Scale,
    /// Smallest admissible lower end (the lemma's hypothesis).
    min: f64,
    /// Largest admissible upper end.
    max: f64,
}

const fn dim(name: &'static str, lo: f64, hi: f64, min: f64, max: f64) -> DimSpec {
    DimSpec {
        name,
        lo,
        hi,
        scale: Scale::Log,
        min,
        max,
    }
}

const X: DimSpec = dim("x", 2.0, 1e12, 2.0, f64::INFINITY);
const Q: DimSpec = dim("q", 3.0, 1e6, 3.0, f64::INFINITY);
const X3: DimSpec = dim("x", 3.0, 1e12, 3.0, f64::INFINITY);
const X_WIDE: DimSpec = dim("x", 3.0, 1e40, 3.0, f64::INFINITY);
const Q_WIDE: DimSpec = dim("q", 3.0, 1e40, 3.0, f64::INFINITY);
const X_HUGE: DimSpec = dim("x", 1e29, 1e40, 1e29, f64::INFINITY);
const Q_HUGE: DimSpec = dim("q", 1e29, 1e40, 1e29, f64::INFINITY);
const Q_SMALL_BRANCH: DimSpec = dim("q", 3.0, 399_999.0, 3.0, 399_999.0);
const Q_MID_BRANCH: DimSpec = dim("q", 4e5, 9.999_999_999e28, 4e5, 9.999_999_999e28);
const X_SUMX: DimSpec = dim("x", 2.0, 1e6, 2.0, f64::INFINITY);

pub(crate) struct Lemma {
    pub id: &'static str,
    pub statement: &'static str,
    pub note: &'static str,
    dims: &'static [DimSpec],
    clip_x_ge_q: bool,
    coarse: usize,
    build: for<'a> fn(&'a Catalogue) -> Margin<'a>,
}

/// Public description of a registered lemma.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaInfo {
    pub id: String,
    pub statement: String,
    pub note: String,
    pub default_domain: SearchDomain,
}

impl Lemma {
    pub fn default_domain(&self) -> SearchDomain {
        SearchDomain {
            dims: self
                .dims
                .iter()
                .map(|d| Dim {
                    name: d.name.to_string(),
                    lo: d.lo,
                    hi: d.hi,
                    scale: d.scale,
                })
                .collect(),
            coarse_points_per_dim: self.coarse,
            refine_iters: DEFAULT_REFINE_ITERS,
        }
    }

    pub fn check_hypotheses(&self, domain: &SearchDomain) -> Result<()> {
        let names: Vec<&str> = self.dims.iter().map(|d| d.name).collect();
        let given: Vec<&str> = domain.dims.iter().map(|d| d.name.as_str()).collect();
        if names != given {
            return Err(Error::domain(format!(
                "{} expects dimensions {names:?}, got {given:?}",
                self.id
            )));
        }
        for (spec, d) in self.dims.iter().zip(&domain.dims) {
            if d.lo < spec.min {
                return Err(Error::domain(format!(
                    "{}: {} >= {} is required, domain starts at {}",
                    self.id, spec.name, spec.min, d.lo
                )));
            }
            if d.hi > spec.max {
                return Err(Error::domain(format!(
                    "{}: {} <= {} is required, domain ends at {}",
                    self.id, spec.name, spec.max, d.hi
                )));
            }
        }
        if self.clip_x_ge_q && domain.dims[0].hi < domain.dims[1].hi {
            return Err(Error::domain(format!(
                "{}: x >= q is required but the x range ends below the q range",
                self.id
            )));
        }
        Ok(())
    }

    pub fn clip(&self, p: &mut [f64]) {
        if self.clip_x_ge_q {
            p[0] = p[0].max(p[1]);
        }
    }

    pub fn margin<'a>(&self, cat: &'a Catalogue) -> Margin<'a> {
        (self.build)(cat)
    }

    pub fn info(&self) -> LemmaInfo {
        LemmaInfo {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            note: self.note.to_string(),
            default_domain: self.default_domain(),
        }
    }
}

/// T = x^0.577 + 8.509 and the exponents derived from 0.577.
#[derive(Clone, Copy)]
struct Height {
    e: f64,
    shift: f64,
}

impl Height {
    fn new(cat: &Catalogue) -> Self {
        Self {
            e: cat.get("input.t_exponent"),
            shift: cat.get("input.t_shift"),
        }
    }

    fn t(&self, x: f64) -> f64 {
        x.powf(self.e) + self.shift
    }

    /// x^0.423
    fn main_power(&self, x: f64) -> f64 {
        x.powf(1.0 - self.e)
    }

    /// x^-0.077
    fn decay(&self, x: f64) -> f64 {
        x.powf(0.5 - self.e)
    }
}

fn lemma423log(cat: &Catalogue) -> Margin<'_> {
    let h = Height::new(cat);
    let (a, b, r) = (
        cat.get("lemma423log.lhs.a"),
        cat.get("lemma423log.lhs.b"),
        cat.get("lemma423log.rhs"),
    );
    Box::new(move |p| {
        let x = p[0];
        let (l, t) = (x.ln(), h.t(x));
        let lt = (t + 1.0).ln();
        let lhs = a * x * l / (t + 1.0)
            + 2.0 * x * E * l / (PI * (t - 1.0))
            + b * x * E * lt * lt / (PI * (t - 1.0) * l);
        r * h.main_power(x) * l - lhs
    })
}

fn lemma0423loglog(cat: &Catalogue) -> Margin<'_> {
    let h = Height::new(cat);
    let (a, r) = (cat.get("lemma0423loglog.lhs"), cat.get("lemma0423loglog.rhs"));
    Box::new(move |p| {
        let (x, q) = (p[0], p[1]);
        let (l, t) = (x.ln(), h.t(x));
        let lhs = a * x * E / (PI * (t - 1.0) * l) * (t + 1.0).ln() * (q * (t + 1.0)).ln().ln();
        r * h.main_power(x) * (q * x).ln().ln() - lhs
    })
}

fn lemma0423(cat: &Catalogue) -> Margin<'_> {
    let h = Height::new(cat);
    let k = |s: &str| cat.get(&format!("lemma0423.{s}"));
    let (a, b, c, d) = (k("lhs.a"), k("lhs.b"), k("lhs.c"), k("lhs.d"));
    let (ra, rb, rc) = (k("rhs.a"), k("rhs.b"), k("rhs.c"));
    Box::new(move |p| {
        let (x, q) = (p[0], p[1]);
        let (l, lq, t) = (x.ln(), q.ln(), h.t(x));
        let lt = (t + 1.0).ln();
        let lhs = (a / (t + 1.0) + 2.0 * E * EULER_GAMMA / (PI * (t - 1.0))) * x
            + x * E / (PI * (t - 1.0) * l)
                * (b * lq * lt + c * lt + d * (t * t / 4.0 + t / 2.0 + 2.5).ln());
        let xm = h.main_power(x);
        (ra * lq + rb) * xm + rc * E * xm / (PI * l) - lhs
    })
}

fn lemma0432(cat: &Catalogue) -> Margin<'_> {
    let h = Height::new(cat);
    let k = |s: &str| cat.get(&format!("lemma0432.{s}"));
    let (a, b, c) = (k("lhs.a"), k("lhs.b"), k("lhs.c"));
    let (ra, rb, rc) = (k("rhs.a"), k("rhs.b"), k("rhs.c"));
    Box::new(move |p| {
        let (x, q) = (p[0], p[1]);
        let (l, lq, t) = (x.ln(), q.ln(), h.t(x));
        let ll = (q * (t + 1.0)).ln().ln();
        let lhs = x * E / (PI * (t - 1.0) * l) * (a * ll * ll + (b * lq + c) * ll);
        let llqx = (q * x).ln().ln();
        let xm = h.main_power(x);
        ra * xm * llqx * llqx / l + (rb * lq + rc) * xm * llqx / l - lhs
    })
}

fn lemmaasympt0(cat: &Catalogue) -> Margin<'_> {
    let h = Height::new(cat);
    let k = |s: &str| cat.get(&format!("asympt0.{s}"));
    let (a, b, c, d, e_, f, g) = (
        k("lhs.a"),
        k("lhs.b"),
        k("lhs.c"),
        k("lhs.d"),
        k("lhs.e"),
        k("lhs.f"),
        k("lhs.g"),
    );
    let (ra, rb, rc, rd) = (k("rhs.a"), k("rhs.b"), k("rhs.c"), k("rhs.d"));
    Box::new(move |p| {
        let (x, q) = (p[0], p[1]);
        let (l, lq, t) = (x.ln(), q.ln(), h.t(x));
        let s = x.sqrt();
        let (tp, tm) = (t + 1.0, t - 1.0);
        let lhs = a * s * l / tp
            + b * s * t.ln() / tm
            + c * s * (q * t).ln().ln() / tm
            + l / tp
            + b * s * lq / tm
            + d * s / tp
            + e_ * s / tm
            + 1.0 / tp
            + x * E / (PI * tm * l) * (3.0 * PI / (4.0 * tm) + 3.0 / (tm * tm))
            + (3.0 * (tp / 2.0).ln() + (q * PI).ln() + f + EULER_GAMMA + g / tm) / (PI * tm * x * l);
        let dcy = h.decay(x);
        ra * l * dcy + rb * (q * x).ln().ln() * dcy + (rc * lq + rd) * dcy - lhs
    })
}

struct PsiIneq {
    a: f64,
    ex: f64,
    b: f64,
}

impl PsiIneq {
    fn new(cat: &Catalogue) -> Self {
        Self {
            a: cat.get("psiineq.a"),
            ex: cat.get("psiineq.exp"),
            b: cat.get("psiineq.b"),
        }
    }
}

fn psi_ineq1(cat: &Catalogue) -> Margin<'_> {
    let c = PsiIneq::new(cat);
    Box::new(move |p| c.a * p[0].powf(c.ex) - p[0].ln())
}

fn psi_ineq2(cat: &Catalogue) -> Margin<'_> {
    let c = PsiIneq::new(cat);
    Box::new(move |p| {
        let (x, q) = (p[0], p[1]);
        let xm = x.powf(0.5 - c.ex);
        c.a * c.ex * x.sqrt() + (c.ex * q.ln() + c.a.ln()) * xm - xm * (q * x).ln().ln()
    })
}

fn psi_ineq3(cat: &Catalogue) -> Margin<'_> {
    let c = PsiIneq::new(cat);
    Box::new(move |p| {
        let (x, q) = (p[0], p[1]);
        let (lq, la) = (q.ln(), c.a.ln());
        let half = x.powf(c.ex / 2.0);
        let rhs = (c.ex * c.b).powi(2) * x.powf(c.ex)
            + (c.ex * lq).powi(2)
            + la * la
            + 2.0 * (c.ex * c.ex * c.b * half * lq + c.ex * c.b * half * la + c.ex * la * lq);
        let ll = (q * x).ln().ln();
        rhs - ll * ll
    })
}

fn est_neg1(cat: &Catalogue) -> Margin<'_> {
    let a = cat.get("estneg.a");
    Box::new(move |p| {
        let l = p[0].ln();
        p[0].powf(0.25) / l - a * l.ln()
    })
}

fn est_neg2(cat: &Catalogue) -> Margin<'_> {
    let b = cat.get("estneg.b");
    Box::new(move |p| b * p[0].sqrt() - p[0].powf(0.25) * p[0].ln().ln())
}

fn est_neg3(cat: &Catalogue) -> Margin<'_> {
    let c = cat.get("estneg.c");
    Box::new(move |p| {
        let l = p[0].ln();
        p[0].powf(0.25) / (l * l) - c * l.ln()
    })
}

/// The three negative x^{1/4} terms of the π bound, as a function of x and
/// log q.
#[derive(Clone, Copy)]
struct PiSub {
    a: [f64; 2],
    b: [f64; 3],
    c: [f64; 3],
}

impl PiSub {
    fn new(cat: &Catalogue) -> Self {
        let k = |s: &str| cat.get(&format!("pisub.lhs.{s}"));
        Self {
            a: [k("a1"), k("a0")],
            b: [k("b2"), k("b1"), k("b0")],
            c: [k("c2"), k("c1"), k("c0")],
        }
    }

    fn eval(&self, x: f64, lq: f64) -> f64 {
        let l = x.ln();
        let r = x.powf(0.25);
        (self.a[0] * lq + self.a[1]) * r / l
            + (self.b[0] * lq * lq + self.b[1] * lq + self.b[2]) * r / (l * l)
            + (self.c[0] * lq * lq + self.c[1] * lq + self.c[2]) * r / (l * l * l)
    }
}

/// The lower bounds for [`PiSub`]: one valid for all q, one for q ≥ 10²⁹.
#[derive(Clone, Copy)]
struct PiSubLower {
    small: [f64; 5],
    large: [f64; 4],
}

impl PiSubLower {
    fn new(cat: &Catalogue) -> Self {
        let k = |s: &str| cat.get(&format!("pisub.{s}"));
        Self {
            small: [k("small.a1"), k("small.a0"), k("small.b2"), k("small.b1"), k("small.b0")],
            large: [k("large.a2"), k("large.b2"), k("large.b1"), k("large.b0")],
        }
    }

    fn small(&self, loglog_x: f64, lq: f64) -> f64 {
        let s = &self.small;
        (s[0] * lq + s[1]) * loglog_x + s[2] * lq * lq + s[3] * lq + s[4]
    }

    fn large(&self, loglog_x: f64, lq: f64) -> f64 {
        let (s, g) = (&self.small, &self.large);
        (g[0] / LN_2 * lq * lq + s[0] * lq + s[1]) * loglog_x + g[1] * lq * lq + g[2] * lq + g[3]
    }
}

fn pi_lower_sub_small(cat: &Catalogue) -> Margin<'_> {
    let (sub, low) = (PiSub::new(cat), PiSubLower::new(cat));
    Box::new(move |p| {
        let (x, lq) = (p[0], p[1].ln());
        sub.eval(x, lq) - low.small(x.ln().ln(), lq)
    })
}

fn pi_lower_sub_large(cat: &Catalogue) -> Margin<'_> {
    let (sub, low) = (PiSub::new(cat), PiSubLower::new(cat));
    Box::new(move |p| {
        let (x, lq) = (p[0], p[1].ln());
        sub.eval(x, lq) - low.large(x.ln().ln(), lq)
    })
}

struct PiWhole {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    rhs: f64,
}

impl PiWhole {
    fn new(cat: &Catalogue) -> Self {
        let k = |s: &str| cat.get(&format!("piwhole.{s}"));
        Self {
            a: k("loglog.a"),
            b: k("loglog.b"),
            c: k("logq"),
            d: k("const"),
            rhs: k("rhs"),
        }
    }

    /// Everything on the left except the three negative x^{1/4} terms.
    fn rest(&self, cat: &Catalogue, loglog_x: f64, q: f64) -> f64 {
        let lq = q.ln();
        (self.a * lq + self.b) * loglog_x + self.c * lq + self.d + r1_in(cat, q) / LN_2
    }
}

fn pi_lower_whole_direct(cat: &Catalogue) -> Margin<'_> {
    let (sub, w) = (PiSub::new(cat), PiWhole::new(cat));
    Box::new(move |p| {
        let (x, q) = (p[0], p[1]);
        let lhs = -sub.eval(x, q.ln()) + w.rest(cat, x.ln().ln(), q);
        w.rhs - lhs
    })
}

/// q ≥ 10²⁹: the negative terms are replaced by their lower bound for large
/// q, after which the only x-dependence is a non-positive multiple of
/// log log x; with x ≥ q it is largest at log log x = log log q.
fn pi_lower_whole_large(cat: &Catalogue) -> Margin<'_> {
    let (low, w) = (PiSubLower::new(cat), PiWhole::new(cat));
    Box::new(move |p| {
        let q = p[0];
        let llq = q.ln().ln();
        let lhs = -low.large(llq, q.ln()) + w.rest(cat, llq, q);
        w.rhs - lhs
    })
}

const SUMX_TERMS: i32 = 200;
const SUMX_TOL: f64 = 1e-10;

fn sumx_partial(x: f64) -> (f64, f64) {
    let (mut odd, mut even) = (0.0, 0.0);
    for m in (1..=SUMX_TERMS).rev() {
        let m = m as f64;
        odd += x.powf(1.0 - 2.0 * m) / (2.0 * m - 1.0);
        even += x.powf(-2.0 * m) / (2.0 * m);
    }
    (odd, even)
}

fn sumx_closed(x: f64) -> (f64, f64) {
    (0.5 * (2.0 / (x - 1.0)).ln_1p(), -0.5 * (-1.0 / (x * x)).ln_1p())
}

fn sumx_identity(_: &Catalogue) -> Margin<'_> {
    Box::new(|p| {
        let (a, b) = sumx_closed(p[0]);
        let (c, d) = sumx_partial(p[0]);
        SUMX_TOL - (a - c).abs().max((b - d).abs())
    })
}

fn sumx_caps(cat: &Catalogue) -> Margin<'_> {
    let (co, ce) = (cat.get("sumx.cap_odd"), cat.get("sumx.cap_even"));
    Box::new(move |p| {
        let (a, b) = sumx_closed(p[0]);
        (co - a).min(ce - b)
    })
}

fn prime_divisor_bound(q: u64, l: f64, q6: f64) -> f64 {
    if q == 6 {
        q6 * l
    } else {
        (q as f64).ln() * l
    }
}

fn lambda_syt(cat: &Catalogue) -> Margin<'_> {
    let q6 = cat.get("lambdasyt.q6");
    Box::new(move |p| {
        let (x, q) = (p[0], p[1].round() as u64);
        prime_divisor_bound(q, x.ln(), q6) - lambda_gcd_sum(x, q)
    })
}

const NONPRIM_Q_MAX: u64 = 50;
const NONPRIM_X_MAX: f64 = 1e4;

fn psi_non_primitive(cat: &Catalogue) -> Margin<'_> {
    let q6 = cat.get("lambdasyt.q6");
    let table = ChebyshevTable::new(NONPRIM_X_MAX as u64);
    let pairs: Vec<Vec<(DirichletCharacter, DirichletCharacter)>> = (0..=NONPRIM_Q_MAX)
        .map(|q| {
            if q < 3 {
                return Vec::new();
            }
            enumerate_characters(q)
                .expect("q >= 3")
                .into_iter()
                .filter(|c| !c.is_primitive())
                .map(|c| {
                    let (_, star) = conductor_and_primitive(&c);
                    (c, star)
                })
                .collect()
        })
        .collect();
    Box::new(move |p| {
        let (x, q) = (p[0], p[1].round() as u64);
        let worst = pairs[q as usize]
            .iter()
            .map(|(c, s)| {
                psi0_chi_with(&table, x, c)
                    .sub(psi0_chi_with(&table, x, s))
                    .abs()
            })
            .fold(0.0, f64::max);
        prime_divisor_bound(q, x.ln(), q6) - worst
    })
}

fn l2t_est(cat: &Catalogue) -> Margin<'_> {
    let a = cat.get("l2t.a");
    Box::new(move |p| {
        let l = p[0].ln();
        let bound = l + EULER_GAMMA + a / l;
        bound - zeta_logderiv(1.0 + 1.0 / l).unwrap_or(f64::NAN)
    })
}

fn l2t_sigma2(cat: &Catalogue) -> Margin<'_> {
    let c = cat.get("l2t.sigma2");
    Box::new(move |p| c - zeta_logderiv(p[0]).unwrap_or(f64::NAN))
}

const fn lemma(
    id: &'static str,
    statement: &'static str,
    dims: &'static [DimSpec],
    clip_x_ge_q: bool,
    build: for<'a> fn(&'a Catalogue) -> Margin<'a>,
) -> Lemma {
    Lemma {
        id,
        statement,
        note: "",
        dims,
        clip_x_ge_q,
        coarse: DEFAULT_COARSE_POINTS,
        build,
    }
}

static REGISTRY: &[Lemma] = &[
    lemma(
        "lemma423log",
        "12.294 xL/(T+1) + 2xeL/(pi(T-1)) + 2.385 xe log^2(T+1)/(pi(T-1)L) <= 14.712 x^0.423 L",
        &[X],
        false,
        lemma423log,
    ),
    Lemma {
        note: "the proof splits [2, inf) into eight x-intervals with endpoint substitution; \
               the sweep covers the same range numerically instead",
        ..lemma(
            "lemma0423loglog",
            "17.472 xe log(T+1) loglog(q(T+1))/(pi(T-1)L) < 18.610 x^0.423 loglog(qx)",
            &[X, Q],
            false,
            lemma0423loglog,
        )
    },
    lemma(
        "lemma0423",
        "(7.032/(T+1) + 2e gamma/(pi(T-1)))x + xe/(pi(T-1)L)(4.77 log q log(T+1) - 3.276 log(T+1) \
         + 13/8 log(T^2/4+T/2+5/2)) < (2.382 log q + 8.018)x^0.423 + 4.35825 e x^0.423/(pi L)",
        &[X, Q],
        false,
        lemma0423,
    ),
    lemma(
        "lemma0432loglogDivlog",
        "xe/(pi(T-1)L)(32 ll^2 + (17.472 log q - 12) ll), ll = loglog(q(T+1)) \
         < 127.562 x^0.423 loglog^2(qx)/L + (32.449 log q - 1.720) x^0.423 loglog(qx)/L",
        &[X, Q],
        false,
        lemma0432,
    ),
    lemma(
        "lemmaasympt0",
        "sum of the decaying truncation terms < 13.962 L/x^0.077 + 8.4 loglog(qx)/x^0.077 \
         + (1.255 log q + 8.510)/x^0.077",
        &[X, Q],
        false,
        lemmaasympt0,
    ),
    lemma("psiInequalities.1", "log x < 4.778 x^0.077", &[X], false, psi_ineq1),
    lemma(
        "psiInequalities.2",
        "x^0.423 loglog(qx) < 4.778*0.077 sqrt(x) + (0.077 log q + log 4.778) x^0.423",
        &[X, Q],
        false,
        psi_ineq2,
    ),
    lemma(
        "psiInequalities.3",
        "loglog^2(qx) < (9.556*0.077 x^0.0385 + 0.077 log q + log 4.778)^2 expanded",
        &[X, Q],
        false,
        psi_ineq3,
    ),
    lemma("estForNegative.1", "x^(1/4)/log x > 0.416 loglog x", &[X3], false, est_neg1),
    lemma("estForNegative.2", "x^(1/4) loglog x < 0.524 sqrt(x)", &[X3], false, est_neg2),
    lemma(
        "estForNegative.3",
        "x^(1/4)/log^2 x > 949.261 loglog x for x >= q >= 1e29",
        &[X_HUGE, Q_HUGE],
        true,
        est_neg3,
    ),
    lemma(
        "lemmaPiLowerSub.1",
        "negative x^(1/4) terms > (2.015 log q + 0.5) loglog x + 2.104 log^2 q + 55.018 log q + 611.027",
        &[X_WIDE, Q_WIDE],
        true,
        pi_lower_sub_small,
    ),
    lemma(
        "lemmaPiLowerSub.2",
        "negative x^(1/4) terms > (0.297/log 2 log^2 q + 2.015 log q + 0.5) loglog x \
         + 45086.567 log^2 q + 2.8e6 log q + 8.5e7 for q >= 1e29",
        &[X_HUGE, Q_HUGE],
        true,
        pi_lower_sub_large,
    ),
    lemma(
        "lemmaPiLowerWhole.small",
        "combined lower-order terms of the pi bound < -237.934, 3 <= q < 4e5",
        &[X_WIDE, Q_SMALL_BRANCH],
        true,
        pi_lower_whole_direct,
    ),
    lemma(
        "lemmaPiLowerWhole.mid",
        "combined lower-order terms of the pi bound < -237.934, 4e5 <= q < 1e29",
        &[X_WIDE, Q_MID_BRANCH],
        true,
        pi_lower_whole_direct,
    ),
    Lemma {
        note: "x is eliminated rather than swept: the large-q lower bound for the negative terms \
               leaves a non-positive multiple of loglog x, maximal at x = q",
        ..lemma(
            "lemmaPiLowerWhole.large",
            "combined lower-order terms of the pi bound < -237.934, q >= 1e29",
            &[Q_HUGE],
            false,
            pi_lower_whole_large,
        )
    },
    lemma(
        "sumx.identity",
        "closed forms of sum x^(1-2m)/(2m-1) and sum x^(-2m)/(2m) agree with 200-term partial sums to 1e-10",
        &[X_SUMX],
        false,
        sumx_identity,
    ),
    lemma(
        "sumx.caps",
        "1/2 log(1+2/(x-1)) <= 1 and -1/2 log(1-1/x^2) <= 1/6",
        &[X_SUMX],
        false,
        sumx_caps,
    ),
    Lemma {
        note: "q is rounded to the nearest integer",
        ..lemma(
            "lemmaLambdaSyt",
            "sum over n <= x, (n,q) > 1 of Lambda(n) <= log q log x (2 log x when q = 6)",
            &[X, Q],
            false,
            lambda_syt,
        )
    },
    Lemma {
        note: "q is rounded to the nearest integer; every imprimitive character mod q is compared with its primitive inducer",
        coarse: 64,
        ..lemma(
            "psiNonPrimitive",
            "|psi0(x,chi) - psi0(x,chi*)| <= log q log x (2 log x when q = 6)",
            &[
                dim("x", 2.0, NONPRIM_X_MAX, 2.0, NONPRIM_X_MAX),
                dim("q", 3.0, NONPRIM_Q_MAX as f64, 3.0, NONPRIM_Q_MAX as f64),
            ],
            false,
            psi_non_primitive,
        )
    },
    lemma(
        "L2tEst",
        "-zeta'/zeta(1 + 1/log y) < log y + gamma + 0.478/log y",
        &[dim("y", 1.001, 1e12, 1.000_000_1, f64::INFINITY)],
        false,
        l2t_est,
    ),
    lemma(
        "L2tEst.sigma2",
        "-zeta'/zeta(sigma) < 0.570 for sigma >= 2",
        &[dim("sigma", 2.0, 1e3, 2.0, f64::INFINITY)],
        false,
        l2t_sigma2,
    ),
];

pub(crate) fn lookup(id: &str) -> Result<&'static Lemma> {
    REGISTRY
        .iter()
        .find(|l| l.id == id)
        .ok_or_else(|| Error::UnknownLemma(id.to_string()))
}

/// Ids of all registered lemmas, in registry order.
pub fn lemma_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|l| l.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids = lemma_ids();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn every_margin_is_finite_at_domain_corners() {
        let cat = Catalogue::builtin();
        for l in REGISTRY {
            let m = l.margin(cat);
            let d = l.default_domain();
            let corners: Vec<Vec<f64>> = match d.dims.len() {
                1 => vec![vec![d.dims[0].lo], vec![d.dims[0].hi]],
                _ => vec![
                    vec![d.dims[0].lo, d.dims[1].lo],
                    vec![d.dims[0].hi, d.dims[1].lo],
                    vec![d.dims[0].hi, d.dims[1].hi],
                ],
            };
            for mut c in corners {
                l.clip(&mut c);
                assert!(m(&c).is_finite(), "{} at {c:?}", l.id);
            }
        }
    }

    #[test]
    fn hypotheses_are_enforced() {
        let l = lookup("lemma0423").unwrap();
        let mut d = l.default_domain();
        d.dims[1].lo = 2.0;
        assert!(l.check_hypotheses(&d).is_err());
        let l = lookup("estForNegative.3").unwrap();
        let mut d = l.default_domain();
        d.dims[1].lo = 1e20;
        assert!(l.check_hypotheses(&d).is_err());
        let l = lookup("lemmaPiLowerWhole.small").unwrap();
        let mut d = l.default_domain();
        d.dims[1].hi = 5e5;
        assert!(l.check_hypotheses(&d).is_err());
        let mut d = lookup("lemma423log").unwrap().default_domain();
        d.dims[0].name = "y".into();
        assert!(lookup("lemma423log").unwrap().check_hypotheses(&d).is_err());
    }

    #[test]
    fn known_tight_spots() {
        let cat = Catalogue::builtin();
        // log x − 4.778 x^0.077 peaks just below −0.0009.
        let x0 = (1.0f64 / (4.778 * 0.077)).powf(1.0 / 0.077);
        let m = lookup("psiInequalities.1").unwrap().margin(cat)(&[x0]);
        assert!(m > 0.0009 && m < 0.001, "{m}");
        // f(y) = e^{y/4}/y − 0.416 log y near its minimum y ∈ [6.191, 6.192].
        let m = lookup("estForNegative.1").unwrap().margin(cat)(&[6.1915f64.exp()]);
        assert!(m > 0.0 && m < 0.002, "{m}");
    }
}
