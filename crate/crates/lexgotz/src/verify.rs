//! Exhaustive verification suites. Every closed-form rule in the crate is
//! replayed against brute-force enumeration on a bounded domain; a suite
//! reports its case count and the first counterexample, and streams progress
//! through a callback so long sweeps stay observable.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::classify::{
    classify, gotzmann_completely_criterion, gotzmann_run_criterion, resolution_triple,
    search_linear_quotients, taylor_minimal_on, taylor_shape_criterion, GotzmannRoute,
};
use crate::error::{Error, Result};
use crate::ideal::{is_gotzmann_oracle, is_gotzmann_shadow_oracle, MonomialIdeal};
use crate::macaulay::{
    derivative, derivatives_collide, derivative_vanishes, macaulay_expand, upper_shift,
};
use crate::monomial::{enumerate_md, md_size, rank_after, shadow, LexSegment};

/// How often the per-case progress callback fires, in cases.
const PROGRESS_STRIDE: u64 = 65_536;

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub cases: u64,
    pub mismatches: u64,
    pub first_counterexample: Option<String>,
}

impl SuiteOutcome {
    fn new(suite: &'static str) -> SuiteOutcome {
        SuiteOutcome {
            suite,
            cases: 0,
            mismatches: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, detail: impl FnOnce() -> String) {
        self.mismatches += 1;
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(detail());
        }
    }

    fn tick(&self, progress: &mut dyn FnMut(u64)) {
        if self.cases % PROGRESS_STRIDE == 0 {
            progress(self.cases);
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "cases": self.cases,
            "mismatches": self.mismatches,
            "passed": self.passed(),
            "first_counterexample": self.first_counterexample,
        })
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: {} cases, pass", self.suite, self.cases)
        } else {
            write!(
                f,
                "{}: {} cases, {} mismatches, FAIL (first: {})",
                self.suite,
                self.cases,
                self.mismatches,
                self.first_counterexample.as_deref().unwrap_or("?")
            )
        }
    }
}

/// Checks the derivative-collision rule: for 0 < b < c the d-th derivatives
/// agree exactly when the lowest expansion bottom j of b satisfies j >= 2 and
/// c - b <= j - 1. Ground truth is direct expansion of both sides; the public
/// predicate is spot-checked on a stride so the shipped entry point is tied to
/// the same table.
pub fn derivative_collision_suite(
    max: u64,
    d_max: u32,
    progress: &mut dyn FnMut(u64),
) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("derivative-collision");
    for d in 1..=d_max {
        let mut derivs = Vec::with_capacity(max as usize + 1);
        let mut lowest = Vec::with_capacity(max as usize + 1);
        for x in 0..=max {
            let e = macaulay_expand(x, d);
            derivs.push(e.derivative_value());
            lowest.push(e.lowest_bottom().unwrap_or(0));
        }
        for b in 1..max {
            let j = lowest[b as usize];
            for c in (b + 1)..=max {
                out.cases += 1;
                let predicted = j >= 2 && c - b <= u64::from(j - 1);
                let actual = derivs[b as usize] == derivs[c as usize];
                if predicted != actual {
                    out.record(|| {
                        format!(
                            "b={} c={} d={}: rule says {}, derivatives say {}",
                            b, c, d, predicted, actual
                        )
                    });
                }
                if out.cases % 9973 == 0 {
                    let op = derivatives_collide(b, c, d).expect("0 < b < c by construction");
                    if op != predicted {
                        out.record(|| {
                            format!("b={} c={} d={}: predicate disagrees with table", b, c, d)
                        });
                    }
                }
                out.tick(progress);
            }
        }
    }
    out
}

/// Checks the derivative-vanishing rule: the d-th derivative of c is zero
/// exactly when c <= d. Ground truth is direct expansion.
pub fn derivative_vanishing_suite(
    c_max: u64,
    d_max: u32,
    progress: &mut dyn FnMut(u64),
) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("derivative-vanishing");
    for d in 1..=d_max {
        for c in 1..=c_max {
            out.cases += 1;
            let predicted = derivative_vanishes(c, d);
            let actual = derivative(c, d).is_zero();
            if predicted != actual {
                out.record(|| {
                    format!(
                        "c={} d={}: rule says {}, derivative is {}",
                        c,
                        d,
                        predicted,
                        derivative(c, d)
                    )
                });
            }
            out.tick(progress);
        }
    }
    out
}

/// Checks the shadow-complement law: for every initial segment L^i(v) in n
/// variables and degree d, the number of degree-(d+1) monomials missing from
/// its shadow equals the upper shift of r = |M_d| - i, and r agrees with the
/// closed-form rank of v. Shadows are computed by brute products.
pub fn shadow_law_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("shadow-law");
    for n in 1..=n_max {
        for d in 1..=d_max {
            let all = enumerate_md(n, d, cap)?;
            let above = md_size(n, d + 1);
            for (idx, v) in all.iter().enumerate() {
                out.cases += 1;
                let shad = shadow(&all[..=idx]);
                let complement = &above - BigUint::from(shad.len());
                let r = rank_after(v);
                let by_position = all.len() - (idx + 1);
                if r != BigUint::from(by_position) {
                    out.record(|| {
                        format!("n={} d={} v={}: rank {} but position gives {}", n, d, v, r, by_position)
                    });
                }
                let expected = upper_shift(r.clone(), d);
                if complement != expected {
                    out.record(|| {
                        format!(
                            "n={} d={} v={}: shadow complement {} but shift of {} is {}",
                            n, d, v, complement, r, expected
                        )
                    });
                }
                out.tick(progress);
            }
        }
    }
    Ok(out)
}

/// Walks every lexsegment with the given ambient and degree bounds, normalizes
/// it, and hands it to `visit`. Segments are deduplicated only by the raw
/// (u, v) pair, so a normalized segment reachable from several ambients is
/// visited once per ambient; criteria must hold each time.
fn for_each_normalized_segment(
    n_max: usize,
    d_max: u32,
    cap: u64,
    mut visit: impl FnMut(&LexSegment) -> Result<()>,
) -> Result<()> {
    for n in 1..=n_max {
        for d in 1..=d_max {
            let all = enumerate_md(n, d, cap)?;
            for (i, u) in all.iter().enumerate() {
                for v in &all[i..] {
                    let seg = LexSegment::new(u.clone(), v.clone())?;
                    let (norm, _) = seg.normalized();
                    visit(&norm)?;
                }
            }
        }
    }
    Ok(())
}

/// Cross-checks the rank-bound criterion for completely lexsegment ideals
/// against both persistence oracles on every normalized, non-initial,
/// completely lexsegment with n <= n_max and d <= d_max.
pub fn completely_gotzmann_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("completely-gotzmann");
    for_each_normalized_segment(n_max, d_max, cap, |norm| {
        if norm.is_initial() || !norm.is_completely_lexsegment(cap)? {
            return Ok(());
        }
        out.cases += 1;
        let predicted = gotzmann_completely_criterion(norm, cap)?;
        let ideal = MonomialIdeal::from_segment(norm, cap)?;
        let actual = is_gotzmann_oracle(&ideal, cap)?;
        let second = is_gotzmann_shadow_oracle(&ideal, cap)?;
        if predicted != actual || actual != second {
            out.record(|| {
                format!(
                    "{} in {} vars: rank bound says {}, oracles say {}/{}",
                    norm,
                    norm.ambient(),
                    predicted,
                    actual,
                    second
                )
            });
        }
        out.tick(progress);
        Ok(())
    })?;
    Ok(out)
}

/// Cross-checks the consecutive-run criterion on every normalized lexsegment
/// that is neither principal nor completely lexsegment, against both
/// persistence oracles.
pub fn run_gotzmann_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("run-gotzmann");
    for_each_normalized_segment(n_max, d_max, cap, |norm| {
        if norm.is_principal() || norm.is_completely_lexsegment(cap)? {
            return Ok(());
        }
        out.cases += 1;
        let predicted = gotzmann_run_criterion(norm, cap)?;
        let ideal = MonomialIdeal::from_segment(norm, cap)?;
        let actual = is_gotzmann_oracle(&ideal, cap)?;
        let second = is_gotzmann_shadow_oracle(&ideal, cap)?;
        if predicted != actual || actual != second {
            out.record(|| {
                format!(
                    "{} in {} vars: run shape says {}, oracles say {}/{}",
                    norm,
                    norm.ambient(),
                    predicted,
                    actual,
                    second
                )
            });
        }
        out.tick(progress);
        Ok(())
    })?;
    Ok(out)
}

/// True when the segment matches the normal form that non-completely
/// lexsegments with linear quotients take whenever x1 does not divide v:
/// u = x1 times a monomial in variables past some x_l, and v = x_l * xn^(d-1).
fn linear_quotient_normal_form(seg: &LexSegment) -> bool {
    let n = seg.ambient();
    let d = seg.degree();
    let u = seg.u();
    let v = seg.v();
    if u.exponent_of(1) != 1 {
        return false;
    }
    if d == 0 || v.exponent_of(n) != d - 1 {
        return false;
    }
    let l = match (1..n).find(|&i| v.exponent_of(i) == 1) {
        Some(l) => l,
        None => return false,
    };
    if (1..n).any(|i| i != l && v.exponent_of(i) != 0) {
        return false;
    }
    u.support().iter().all(|&i| i == 1 || i > l)
}

/// Checks two shape facts about normalized non-completely lexsegments.
/// First, the x1 exponents of u and v can differ by at most one when both are
/// positive; a wider gap forces the segment to be completely lexsegment.
/// Second, on the slice where x1 does not divide v, an ideal with linear
/// quotients matches the normal form u = x1 * (monomial in x_{l+1}..xn),
/// v = x_l * xn^(d-1). Segments with x1 | v factor as a monomial times a
/// smaller lexsegment ideal, so no shape is claimed for them.
pub fn run_form_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    exhaustive_cap: usize,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("run-form");
    for_each_normalized_segment(n_max, d_max, cap, |norm| {
        if norm.is_principal() || norm.is_completely_lexsegment(cap)? {
            return Ok(());
        }
        let a1 = norm.u().exponent_of(1);
        let b1 = norm.v().exponent_of(1);
        if b1 > 0 && b1 < a1 {
            out.cases += 1;
            if b1 != a1 - 1 {
                out.record(|| {
                    format!(
                        "{} in {} vars: x1 exponents {} and {} in a non-completely segment",
                        norm,
                        norm.ambient(),
                        a1,
                        b1
                    )
                });
            }
        }
        if b1 == 0 {
            let ideal = MonomialIdeal::from_segment(norm, cap)?;
            if search_linear_quotients(&ideal, exhaustive_cap).found() {
                out.cases += 1;
                if !linear_quotient_normal_form(norm) {
                    out.record(|| {
                        format!(
                            "{} in {} vars has linear quotients but not the normal form",
                            norm,
                            norm.ambient()
                        )
                    });
                }
            }
        }
        out.tick(progress);
        Ok(())
    })?;
    Ok(out)
}

/// Checks that the three resolution-side properties agree on every normalized
/// lexsegment ideal with linear quotients: Taylor minimality, the colon span
/// filling the generator count, and boundedness (Gotzmann with at most n
/// generators).
pub fn resolution_triple_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    exhaustive_cap: usize,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("resolution-triple");
    for_each_normalized_segment(n_max, d_max, cap, |norm| {
        let ideal = MonomialIdeal::from_segment(norm, cap)?;
        let triple = match resolution_triple(&ideal, cap, exhaustive_cap) {
            Ok(t) => t,
            Err(Error::NoLinearQuotients) => return Ok(()),
            Err(e) => return Err(e),
        };
        out.cases += 1;
        if !triple.all_equal() {
            out.record(|| {
                format!(
                    "{} in {} vars: taylor_minimal={} colon_span_full={} gotzmann_bounded={}",
                    norm,
                    norm.ambient(),
                    triple.taylor_minimal,
                    triple.colon_span_full,
                    triple.gotzmann_bounded
                )
            });
        }
        out.tick(progress);
        Ok(())
    })?;
    Ok(out)
}

/// Checks the Taylor shape rule on ideals with linear quotients: the Taylor
/// complex is minimal exactly when the ideal is a monomial times distinct
/// variables. Ground truth is the direct divisibility test on the generators.
pub fn taylor_shape_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    exhaustive_cap: usize,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("taylor-shape");
    for_each_normalized_segment(n_max, d_max, cap, |norm| {
        let ideal = MonomialIdeal::from_segment(norm, cap)?;
        if !search_linear_quotients(&ideal, exhaustive_cap).found() {
            return Ok(());
        }
        out.cases += 1;
        let direct = taylor_minimal_on(ideal.generators());
        let by_shape = taylor_shape_criterion(&ideal);
        if direct != by_shape {
            out.record(|| {
                format!(
                    "{} in {} vars: direct test says {}, shape rule says {}",
                    norm,
                    norm.ambient(),
                    direct,
                    by_shape
                )
            });
        }
        out.tick(progress);
        Ok(())
    })?;
    Ok(out)
}

/// Replays the full classifier against the persistence oracle on every
/// lexsegment pair, and checks the route taken is sound for the segment's
/// flags plus the counting identity c + a + 1 = |M_d| + b.
pub fn classify_agreement_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    exhaustive_cap: usize,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("classify-agreement");
    for n in 1..=n_max {
        for d in 1..=d_max {
            let all = enumerate_md(n, d, cap)?;
            for (i, u) in all.iter().enumerate() {
                for v in &all[i..] {
                    let seg = LexSegment::new(u.clone(), v.clone())?;
                    let report = classify(&seg, cap, exhaustive_cap)?;
                    out.cases += 1;
                    let ideal = MonomialIdeal::from_segment(&report.segment, cap)?;
                    let actual = is_gotzmann_oracle(&ideal, cap)?;
                    if report.gotzmann != actual {
                        out.record(|| {
                            format!(
                                "{} normalized to {} vars: classifier says {}, oracle says {}",
                                seg,
                                report.segment.ambient(),
                                report.gotzmann,
                                actual
                            )
                        });
                    }
                    let route_ok = match report.route {
                        GotzmannRoute::InitialShortcut => report.initial,
                        GotzmannRoute::PrincipalShortcut => {
                            !report.initial && report.segment.is_principal()
                        }
                        GotzmannRoute::CompletelyRankBound => {
                            report.completely
                                && !report.initial
                                && !report.segment.is_principal()
                        }
                        GotzmannRoute::ConsecutiveRun => !report.completely,
                    };
                    if !route_ok {
                        out.record(|| {
                            format!("{}: route {} unsound for its flags", seg, report.route.as_str())
                        });
                    }
                    let m = md_size(report.segment.ambient(), report.segment.degree());
                    let lhs = report.numbers.c.clone() + &report.numbers.a + 1u32;
                    let rhs = m + &report.numbers.b;
                    if lhs != rhs {
                        out.record(|| {
                            format!(
                                "{}: counting identity fails (a={} b={} c={})",
                                seg, report.numbers.a, report.numbers.b, report.numbers.c
                            )
                        });
                    }
                    out.tick(progress);
                }
            }
        }
    }
    Ok(out)
}

/// Checks that every initial lexsegment ideal passes the persistence oracle,
/// which the classifier shortcuts without computing.
pub fn initial_gotzmann_suite(
    n_max: usize,
    d_max: u32,
    cap: u64,
    progress: &mut dyn FnMut(u64),
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("initial-gotzmann");
    for n in 1..=n_max {
        for d in 1..=d_max {
            let all = enumerate_md(n, d, cap)?;
            for v in &all {
                out.cases += 1;
                let seg = LexSegment::new(all[0].clone(), v.clone())?;
                let ideal = MonomialIdeal::from_segment(&seg, cap)?;
                if !is_gotzmann_oracle(&ideal, cap)? {
                    out.record(|| format!("initial segment {} fails the oracle", seg));
                }
                out.tick(progress);
            }
        }
    }
    Ok(out)
}
