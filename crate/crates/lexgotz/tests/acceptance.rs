//! Acceptance gate: one test per criterion, each printing a single pass/fail
//! line (visible with --nocapture). Every criterion replays a closed-form
//! rule against an independent brute-force computation at full sweep scale.

use num_bigint::BigUint;
use num_traits::Zero;

use lexgotz::classify::classify;
use lexgotz::ideal::{is_componentwise_lexsegment, MonomialIdeal};
use lexgotz::macaulay::{binomial, macaulay_expand};
use lexgotz::monomial::{LexSegment, Monomial};
use lexgotz::verify::{
    classify_agreement_suite, completely_gotzmann_suite, derivative_collision_suite,
    derivative_vanishing_suite, initial_gotzmann_suite, resolution_triple_suite,
    run_gotzmann_suite, shadow_law_suite, taylor_shape_suite, SuiteOutcome,
};

const CAP: u64 = 1 << 20;

fn report(number: u32, description: &str, out: &SuiteOutcome) {
    if out.passed() {
        println!(
            "criterion {}: pass: {} ({} cases)",
            number, description, out.cases
        );
    } else {
        println!("criterion {}: FAIL: {}: {}", number, description, out);
        panic!("criterion {} failed: {}", number, out);
    }
}

/// Every valid expansion of `a` at degree `d`: strictly decreasing tops with
/// bottoms d, d-1, ... down to some j >= 1 and each top >= its bottom.
/// Independent of the library's greedy construction.
fn count_expansions(a: u64, d: u32, top_cap: u64) -> u64 {
    fn go(rest: u64, bottom: u32, top_limit: u64) -> u64 {
        if rest == 0 {
            return 1;
        }
        if bottom == 0 {
            return 0;
        }
        let mut total = 0;
        for top in u64::from(bottom)..=top_limit {
            let term = binomial(top, u64::from(bottom));
            let term = match u64::try_from(&term) {
                Ok(t) => t,
                Err(_) => break,
            };
            if term > rest {
                break;
            }
            total += go(rest - term, bottom - 1, top - 1);
        }
        total
    }
    go(a, d, top_cap)
}

#[test]
fn criterion_01_macaulay_calculus() {
    let mut cases = 0u64;
    for d in 1..=10u32 {
        for a in 0..=10_000u64 {
            cases += 1;
            let e = macaulay_expand(a, d);
            // Greedy certificate: each term is the largest binomial that
            // fits the remaining value, which pins the expansion uniquely.
            let mut remaining = BigUint::from(a);
            let mut expected_bottom = d;
            for (top, bottom) in e.terms() {
                assert_eq!(*bottom, expected_bottom, "a={a} d={d}");
                let here = binomial(top.clone(), u64::from(*bottom));
                let next = binomial(top + 1u32, u64::from(*bottom));
                assert!(here <= remaining, "a={a} d={d}: term too large");
                assert!(next > remaining, "a={a} d={d}: term not maximal");
                remaining -= here;
                expected_bottom = bottom - 1;
            }
            assert!(remaining.is_zero(), "a={a} d={d}: reconstruction");
            assert_eq!(e.value(), BigUint::from(a), "a={a} d={d}: value");
            // Identity between the two shift operators.
            assert_eq!(
                e.upper_shift_value(),
                BigUint::from(a) + e.derivative_value(),
                "a={a} d={d}: shift identity"
            );
        }
    }
    // Uniqueness against full enumeration of valid expansions on a slice.
    for d in 1..=4u32 {
        for a in 0..=200u64 {
            assert_eq!(count_expansions(a, d, 256), 1, "a={a} d={d}: uniqueness");
        }
    }
    println!(
        "criterion 1: pass: expansion reconstruction, uniqueness, and the shift identity ({cases} cases)"
    );
}

#[test]
fn criterion_02_derivative_collision() {
    let out = derivative_collision_suite(2000, 8, &mut |_| {});
    report(
        2,
        "derivative collision rule matches expanded derivatives for 0 < b < c <= 2000, d <= 8",
        &out,
    );
}

#[test]
fn criterion_03_derivative_vanishing() {
    let out = derivative_vanishing_suite(2000, 12, &mut |_| {});
    report(
        3,
        "derivative vanishes exactly on c <= d for c <= 2000, d <= 12",
        &out,
    );
}

#[test]
fn criterion_04_shadow_complement_law() {
    let out = shadow_law_suite(5, 5, CAP, &mut |_| {}).unwrap();
    report(
        4,
        "initial-segment shadow complements equal the upper shift for n <= 5, d <= 5",
        &out,
    );
}

#[test]
fn criterion_05_completely_rank_bound() {
    let out = completely_gotzmann_suite(4, 4, CAP, &mut |_| {}).unwrap();
    report(
        5,
        "rank-bound criterion agrees with the persistence oracle on completely segments, n <= 4, d <= 4",
        &out,
    );
}

#[test]
fn criterion_06_consecutive_run() {
    let out = run_gotzmann_suite(4, 4, CAP, &mut |_| {}).unwrap();
    report(
        6,
        "consecutive-run criterion agrees with the persistence oracle on non-completely segments, n <= 4, d <= 4",
        &out,
    );
}

#[test]
fn criterion_07_resolution_triple() {
    let out = resolution_triple_suite(4, 4, CAP, 9, &mut |_| {}).unwrap();
    report(
        7,
        "Taylor minimality, colon span, and bounded Gotzmann agree on linear-quotients ideals, n <= 4, d <= 4",
        &out,
    );
}

#[test]
fn criterion_08_taylor_shape() {
    let out = taylor_shape_suite(4, 4, CAP, 9, &mut |_| {}).unwrap();
    report(
        8,
        "direct Taylor minimality equals the shape rule on linear-quotients ideals, n <= 4, d <= 4",
        &out,
    );
}

#[test]
fn criterion_09_componentwise_golden() {
    let gens: Vec<_> = ["x1*x3^2", "x2^3", "x1*x2^2*x3"]
        .iter()
        .map(|s| Monomial::parse(s, 3).unwrap())
        .collect();
    let ideal = MonomialIdeal::new(3, gens).unwrap();
    let cw = is_componentwise_lexsegment(&ideal, CAP).unwrap();
    assert!(cw.holds, "componentwise flag");
    let witness = cw.witness.expect("witness segment");
    assert_eq!(witness.to_string(), "L(x1*x3^2, x2^3)");
    let component = ideal.graded_component(4, CAP).unwrap();
    let segment = LexSegment::new(Monomial::parse("x1^2*x3^2", 3).unwrap(), Monomial::parse("x2^3*x3", 3).unwrap())
        .unwrap()
        .monomials(CAP)
        .unwrap();
    assert_eq!(component, segment, "degree-4 component");
    // The classifier agrees on the witness segment.
    let seg = LexSegment::new(Monomial::parse("x1*x3^2", 3).unwrap(), Monomial::parse("x2^3", 3).unwrap()).unwrap();
    let rep = classify(&seg, CAP, 9).unwrap();
    assert!(!rep.completely && !rep.gotzmann);
    println!(
        "criterion 9: pass: three-generator ideal is componentwise lexsegment with witness L(x1*x3^2, x2^3) and the expected degree-4 component"
    );
}

#[test]
fn criterion_10_initial_segments_gotzmann() {
    let out = initial_gotzmann_suite(4, 4, CAP, &mut |_| {}).unwrap();
    report(
        10,
        "every initial lexsegment ideal passes the persistence oracle, n <= 4, d <= 4",
        &out,
    );
}

#[test]
fn classifier_oracle_agreement_full_sweep() {
    // The central property behind the acceptance list: the classifier's
    // Gotzmann verdict matches the oracle on every pair, the route taken is
    // sound, and the counting identity c + a + 1 = |M_d| + b holds.
    let out = classify_agreement_suite(4, 4, CAP, 9, &mut |_| {}).unwrap();
    report(
        0,
        "classifier verdict, route soundness, and counting identity on every pair, n <= 4, d <= 4",
        &out,
    );
}
