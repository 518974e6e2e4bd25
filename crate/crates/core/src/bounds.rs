//! Upper bounds on the order `s` of a transitive subtournament.
//!
//! * **Interlacing.** The Seidel spectrum of a transitive tournament of order
//!   `s` is `cot((2i-1)π/(2s))`, `i = 1..s`, and it interlaces the spectrum
//!   `θ_1 ≥ … ≥ θ_v` of any digraph containing it. So `s` is feasible only if
//!   `cot((2i-1)π/(2s)) ≤ θ_i` for `i ≤ ⌊s/2⌋`. The `i = 1` condition alone
//!   is `s ≤ π / (2 arccot θ_1)`.
//! * **Hoffman type.** With `α` the largest main eigenvalue and `γ` the
//!   largest non-main one, `α ≤ γ` forces
//!   `v s² - 3(α² - γ²) s - v(3γ² + 1) ≤ 0`. For regular digraphs `α = 0`
//!   and `γ = θ_max`, and for doubly regular tournaments `θ_max = √v`, which
//!   gives `s ≤ (-3 + √(13 + 12v))/2`.
//! * **Parity.** In a regular tournament the Hoffman-type bound can only be
//!   attained by an even `s`, so an exact odd bound drops by one.
//! * **Block intersection polynomials** for doubly regular tournaments; see
//!   [`crate::bip`].
//!
//! Floating-point bounds are floored as `⌊x + 1e-9⌋`. Whether a bound is
//! attained exactly (the parity refinement's precondition) is always decided
//! in integer arithmetic.
//!
//! The vertex-deleted doubly regular tournament on `v - 1` vertices has main
//! eigenvalues `±1` and non-main `±√v`; the general Hoffman-type bound then
//! gives `(-3 + √(13 + 12v))/2` in terms of the parent order `v`, the same
//! value as for the parent itself.

use std::f64::consts::PI;
use std::fmt;

use num_integer::Roots;
use serde::Serialize;
use thiserror::Error;

use crate::bip::{bip_scan, thm54_bound};
use crate::digraph::{classify, Digraph};
use crate::spectral::{spectrum, SeidelSpectrum, SpectralError};

/// Slack used when flooring floating-point bounds and comparing cotangents.
pub const FLOOR_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("v = {0} is not the order of a doubly regular tournament (need v ≡ 3 mod 4)")]
    NotDoublyRegularOrder(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Interlacing,
    HoffmanGeneral,
    HoffmanRegular,
    DrtExact,
    Bip,
    Thm54,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Interlacing => "interlacing",
            Method::HoffmanGeneral => "hoffman_general",
            Method::HoffmanRegular => "hoffman_regular",
            Method::DrtExact => "drt_exact",
            Method::Bip => "bip",
            Method::Thm54 => "thm54",
        }
    }

    pub fn family(self) -> MethodFamily {
        match self {
            Method::Interlacing => MethodFamily::Interlacing,
            Method::HoffmanGeneral | Method::HoffmanRegular => MethodFamily::Hoffman,
            Method::DrtExact => MethodFamily::Drt,
            Method::Bip => MethodFamily::Bip,
            Method::Thm54 => MethodFamily::Thm54,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Groups of methods selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodFamily {
    Interlacing,
    Hoffman,
    Drt,
    Bip,
    Thm54,
}

impl MethodFamily {
    pub const ALL: [MethodFamily; 5] = [
        MethodFamily::Interlacing,
        MethodFamily::Hoffman,
        MethodFamily::Drt,
        MethodFamily::Bip,
        MethodFamily::Thm54,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub method: Method,
    /// The bound before flooring; `None` when not applicable.
    pub raw_value: Option<f64>,
    pub integer_bound: Option<u64>,
    pub applicable: bool,
    /// Whether the raw bound is known to equal `integer_bound` exactly.
    pub exact: bool,
    pub notes: String,
}

impl BoundReport {
    fn inapplicable(method: Method, notes: impl Into<String>) -> Self {
        Self {
            method,
            raw_value: None,
            integer_bound: None,
            applicable: false,
            exact: false,
            notes: notes.into(),
        }
    }

    fn floored(method: Method, raw: f64) -> Self {
        Self {
            method,
            raw_value: Some(raw),
            integer_bound: Some(floor_guarded(raw)),
            applicable: true,
            exact: false,
            notes: String::new(),
        }
    }

    fn note(&mut self, text: &str) {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text);
    }
}

fn floor_guarded(x: f64) -> u64 {
    (x + FLOOR_GUARD).floor().max(0.0) as u64
}

/// `arccot` with range `(0, π)`.
fn arccot(x: f64) -> f64 {
    PI / 2.0 - x.atan()
}

/// Largest `s ≤ v` with `cot((2i-1)π/(2s)) ≤ θ_i + 1e-9` for all
/// `i ≤ ⌊s/2⌋`. The raw value is the `i = 1` bound `π / (2 arccot θ_1)`.
pub fn interlacing_bound(spec: &SeidelSpectrum) -> BoundReport {
    let theta = spec.expanded();
    let v = theta.len();
    let feasible = |s: usize| {
        (1..=s / 2).all(|i| {
            let angle = (2 * i - 1) as f64 * PI / (2 * s) as f64;
            1.0 / angle.tan() <= theta[i - 1] + FLOOR_GUARD
        })
    };
    let s = (1..=v).rev().find(|&s| feasible(s)).unwrap_or(1);
    BoundReport {
        method: Method::Interlacing,
        raw_value: Some(PI / (2.0 * arccot(theta[0]))),
        integer_bound: Some(s as u64),
        applicable: true,
        exact: false,
        notes: String::new(),
    }
}

/// `(3α² - 3γ² + √(4v²(1+3γ²) + 9(γ²-α²)²)) / (2v)`, the positive root of
/// `v s² - 3(α² - γ²) s - v(3γ² + 1)`.
pub fn hoffman_general_value(alpha: f64, gamma: f64, v: usize) -> f64 {
    let v = v as f64;
    let (a2, g2) = (alpha * alpha, gamma * gamma);
    (3.0 * a2 - 3.0 * g2 + (4.0 * v * v * (1.0 + 3.0 * g2) + 9.0 * (g2 - a2).powi(2)).sqrt()) / (2.0 * v)
}

/// Hoffman-type bound from the largest main and non-main eigenvalues.
/// Applicable only when some eigenvalue is non-main and `α ≤ γ`.
pub fn hoffman_general(spec: &SeidelSpectrum, v: usize) -> BoundReport {
    let alpha = spec.alpha();
    let Some(gamma) = spec.gamma() else {
        return BoundReport::inapplicable(Method::HoffmanGeneral, "every eigenvalue is main; γ undefined");
    };
    if alpha > gamma {
        return BoundReport::inapplicable(Method::HoffmanGeneral, format!("α = {alpha:.6} exceeds γ = {gamma:.6}"));
    }
    let mut r = BoundReport::floored(Method::HoffmanGeneral, hoffman_general_value(alpha, gamma, v));
    r.note(&format!("α = {alpha:.6}, γ = {gamma:.6}"));
    r
}

/// `(-3θ² + √(9θ⁴ + 4v² + 12θ²v²)) / (2v)`.
pub fn hoffman_regular_value(theta_max: f64, v: usize) -> f64 {
    let v = v as f64;
    let t2 = theta_max * theta_max;
    (-3.0 * t2 + (9.0 * t2 * t2 + 4.0 * v * v + 12.0 * t2 * v * v).sqrt()) / (2.0 * v)
}

/// Hoffman-type bound for a regular digraph with largest Seidel eigenvalue
/// `theta_max`.
///
/// When `θ_max²` is an integer `T` (to within `1e-9` relative), the integer
/// bound and its exactness come from the integer quadratic
/// `v s² + 3T s - v(3T + 1) ≤ 0`.
pub fn hoffman_regular(theta_max: f64, v: usize) -> BoundReport {
    let raw = hoffman_regular_value(theta_max, v);
    let mut r = BoundReport::floored(Method::HoffmanRegular, raw);
    let t2 = theta_max * theta_max;
    let t = t2.round();
    if (t2 - t).abs() <= 1e-9 * t2.max(1.0) {
        let (vi, ti) = (v as i128, t as i128);
        let q = |s: i128| vi * s * s + 3 * ti * s - vi * (3 * ti + 1);
        let mut s = raw.floor().max(0.0) as i128;
        while q(s + 1) <= 0 {
            s += 1;
        }
        while s > 0 && q(s) > 0 {
            s -= 1;
        }
        r.integer_bound = Some(s as u64);
        r.exact = q(s) == 0;
        r.note(&format!("θ_max² = {ti}"));
    }
    r
}

/// `s ≤ (-3 + √(13 + 12v))/2` for doubly regular tournaments, in integer
/// arithmetic: the largest `s` with `(2s + 3)² ≤ 13 + 12v`.
pub fn drt_bound_exact(v: u64) -> Result<BoundReport, BoundsError> {
    if v % 4 != 3 {
        return Err(BoundsError::NotDoublyRegularOrder(v));
    }
    let n = 13 + 12 * v as u128;
    let (mut lo, mut hi) = (0u128, n.sqrt() + 1);
    // invariant: (2lo+3)² ≤ n < (2hi+3)²
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if (2 * mid + 3) * (2 * mid + 3) <= n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let exact = (2 * lo + 3) * (2 * lo + 3) == n;
    let root = n.sqrt();
    let mut notes = format!("13 + 12v = {n}");
    if exact {
        notes.push_str(&format!(" = {root}²"));
    }
    Ok(BoundReport {
        method: Method::DrtExact,
        raw_value: Some((-3.0 + (n as f64).sqrt()) / 2.0),
        integer_bound: Some(lo as u64),
        applicable: true,
        exact,
        notes,
    })
}

/// Drops an exactly attained odd Hoffman-type bound by one for regular
/// tournaments on `v` vertices. Equality would force every vertex outside
/// the set to be balanced, so a bound of `v` itself is left alone.
pub fn parity_refine(report: BoundReport, is_regular_tournament: bool, v: usize) -> BoundReport {
    let mut r = report;
    let eligible = matches!(r.method, Method::HoffmanRegular | Method::DrtExact);
    if let Some(b) = r.integer_bound {
        if eligible && is_regular_tournament && r.exact && b % 2 == 1 && (b as usize) < v {
            r.integer_bound = Some(b - 1);
            r.note("parity refinement applied");
        }
    }
    r
}

pub fn bip_report(m: u64) -> BoundReport {
    let scan = bip_scan(m);
    let mut r = BoundReport {
        method: Method::Bip,
        raw_value: Some(scan.bound as f64),
        integer_bound: Some(scan.bound),
        applicable: true,
        exact: true,
        notes: String::new(),
    };
    if !scan.non_monotone.is_empty() {
        r.note(&format!(
            "feasibility not monotone; feasible again at {:?}",
            scan.non_monotone
        ));
    }
    r
}

pub fn thm54_report(m: u64) -> BoundReport {
    let t = thm54_bound(m);
    let cases: Vec<String> = t.cases.iter().map(|c| format!("({}) {}", c.case, c.bound)).collect();
    BoundReport {
        method: Method::Thm54,
        raw_value: Some(t.bound as f64),
        integer_bound: Some(t.bound),
        applicable: true,
        exact: true,
        notes: format!("⌊√(1+12m)⌋ = {}; cases {}", t.floor_sqrt, cases.join(", ")),
    }
}

/// All reports plus the smallest applicable integer bound, clamped to `v`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundSummary {
    pub v: usize,
    pub reports: Vec<BoundReport>,
    pub best: u64,
}

impl BoundSummary {
    fn new(v: usize, reports: Vec<BoundReport>) -> Self {
        let best = reports
            .iter()
            .filter(|r| r.applicable)
            .filter_map(|r| r.integer_bound)
            .chain(std::iter::once(v as u64))
            .min()
            .expect("v is always a candidate");
        Self { v, reports, best }
    }

    pub fn report(&self, method: Method) -> Option<&BoundReport> {
        self.reports.iter().find(|r| r.method == method)
    }
}

/// Bounds that hold for every doubly regular tournament of order `v`,
/// computed from `v` alone.
pub fn doubly_regular_bounds(v: u64, families: &[MethodFamily]) -> Result<BoundSummary, BoundsError> {
    let drt = drt_bound_exact(v)?;
    let m = (v + 1) / 4;
    let spec = SeidelSpectrum::doubly_regular(v as usize);
    let mut reports = Vec::new();
    if families.contains(&MethodFamily::Interlacing) {
        reports.push(interlacing_bound(&spec));
    }
    if families.contains(&MethodFamily::Hoffman) {
        reports.push(hoffman_general(&spec, v as usize));
        reports.push(parity_refine(
            hoffman_regular((v as f64).sqrt(), v as usize),
            true,
            v as usize,
        ));
    }
    if families.contains(&MethodFamily::Drt) {
        reports.push(parity_refine(drt, true, v as usize));
    }
    if families.contains(&MethodFamily::Bip) {
        reports.push(bip_report(m));
    }
    if families.contains(&MethodFamily::Thm54) {
        reports.push(thm54_report(m));
    }
    Ok(BoundSummary::new(v as usize, reports))
}

pub fn best_bound(g: &Digraph) -> Result<BoundSummary, SpectralError> {
    best_bound_with(g, &MethodFamily::ALL)
}

/// Runs every applicable method in `families` on `g`.
pub fn best_bound_with(g: &Digraph, families: &[MethodFamily]) -> Result<BoundSummary, SpectralError> {
    let v = g.v();
    let class = classify(g);
    let spec = spectrum(g)?;
    let regular_tournament = class.is_regular && class.is_tournament;
    let mut reports = Vec::new();

    if families.contains(&MethodFamily::Interlacing) {
        reports.push(interlacing_bound(&spec));
    }
    if families.contains(&MethodFamily::Hoffman) {
        reports.push(hoffman_general(&spec, v));
        if class.is_regular {
            reports.push(parity_refine(
                hoffman_regular(spec.theta_max(), v),
                regular_tournament,
                v,
            ));
        } else {
            reports.push(BoundReport::inapplicable(
                Method::HoffmanRegular,
                "digraph is not regular",
            ));
        }
    }
    let drt_families = [MethodFamily::Drt, MethodFamily::Bip, MethodFamily::Thm54];
    for family in drt_families.iter().filter(|f| families.contains(f)) {
        let method = match family {
            MethodFamily::Drt => Method::DrtExact,
            MethodFamily::Bip => Method::Bip,
            _ => Method::Thm54,
        };
        let Some(m) = class.m else {
            reports.push(BoundReport::inapplicable(method, "not a doubly regular tournament"));
            continue;
        };
        reports.push(match family {
            MethodFamily::Drt => parity_refine(drt_bound_exact(v as u64).expect("doubly regular order"), true, v),
            MethodFamily::Bip => bip_report(m as u64),
            _ => thm54_report(m as u64),
        });
    }
    Ok(BoundSummary::new(v, reports))
}
