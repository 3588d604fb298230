//! Binomial calculus behind Hilbert function growth bounds.
//!
//! Every integer a >= 0 has a unique d-binomial expansion
//! a = C(a_d,d) + C(a_{d-1},d-1) + ... + C(a_j,j) with a_d > ... > a_j >= j >= 1,
//! found greedily. Two operators act on it: the upper shift a^<d> replaces each
//! C(a_i,i) by C(a_i+1,i+1), the derivative a^(d) replaces it by C(a_i,i+1).
//! They satisfy a^<d> = a + a^(d).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// C(n, k), exactly. Zero when k > n.
pub fn binomial(n: impl Into<BigUint>, k: impl Into<BigUint>) -> BigUint {
    let n = n.into();
    let k = k.into();
    if k > n {
        return BigUint::zero();
    }
    let steps = (&n - &k)
        .min(k)
        .to_u64()
        .expect("binomial loop count exceeds u64");
    binomial_steps(&n, steps)
}

/// C(top, k) for small k and possibly huge top.
fn binomial_top(top: &BigUint, k: u32) -> BigUint {
    let kb = BigUint::from(k);
    if kb > *top {
        return BigUint::zero();
    }
    let steps = (top - &kb).min(kb).to_u64().unwrap_or(k as u64);
    binomial_steps(top, steps)
}

/// Stepwise product C(top, steps); prefix products are themselves binomials,
/// so the running division is exact.
fn binomial_steps(top: &BigUint, steps: u64) -> BigUint {
    if let Some(t) = top.to_u64() {
        if let Some(v) = binomial_u128(t, steps) {
            return BigUint::from(v);
        }
    }
    let mut acc = BigUint::one();
    for t in 0..steps {
        acc = acc * (top - BigUint::from(t)) / BigUint::from(t + 1);
    }
    acc
}

fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    let steps = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..steps {
        acc = acc.checked_mul((n - t) as u128)? / (t as u128 + 1);
    }
    Some(acc)
}

/// Is C(k, i) <= r? Symmetrized so prefix binomials increase; an intermediate
/// overflow therefore certifies the value exceeds any u64 bound.
fn binom_leq_u64(k: u64, i: u32, r: u64) -> bool {
    let i = i as u64;
    if i > k {
        return true;
    }
    let steps = i.min(k - i);
    let r = r as u128;
    let mut acc: u128 = 1;
    for t in 0..steps {
        acc = match acc.checked_mul((k - t) as u128) {
            Some(x) => x / (t as u128 + 1),
            None => return false,
        };
    }
    acc <= r
}

fn binom_leq_big(k: &BigUint, i: u32, r: &BigUint) -> bool {
    let mut acc = BigUint::one();
    for t in 0..i as u64 {
        acc = acc * (k - BigUint::from(t)) / BigUint::from(t + 1);
    }
    acc <= *r
}

/// Largest k >= bottom with C(k, bottom) <= rem. Requires rem >= 1.
fn max_top(bottom: u32, rem: &BigUint) -> BigUint {
    if bottom == 1 {
        return rem.clone();
    }
    if let Some(r) = rem.to_u64() {
        let b = bottom as u64;
        let mut lo = b;
        let mut hi = b + 1;
        while binom_leq_u64(hi, bottom, r) {
            lo = hi;
            hi = hi.saturating_mul(2);
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if binom_leq_u64(mid, bottom, r) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        BigUint::from(lo)
    } else {
        let mut lo = BigUint::from(bottom);
        let mut hi = &lo + 1u32;
        while binom_leq_big(&hi, bottom, rem) {
            lo = hi.clone();
            hi = &hi * 2u32;
        }
        loop {
            let gap = &hi - &lo;
            if gap <= BigUint::one() {
                break;
            }
            let mid = &lo + (gap >> 1);
            if binom_leq_big(&mid, bottom, rem) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

/// A d-binomial expansion: (top, bottom) terms with strictly decreasing tops
/// and bottoms running d, d-1, ... down to some j >= 1. Empty iff the value is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayExpansion {
    d: u32,
    terms: Vec<(BigUint, u32)>,
}

impl MacaulayExpansion {
    pub(crate) fn from_terms(d: u32, terms: Vec<(BigUint, u32)>) -> MacaulayExpansion {
        debug_assert!(terms.first().map_or(true, |(_, b)| *b == d));
        debug_assert!(terms
            .windows(2)
            .all(|w| w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1));
        debug_assert!(terms
            .iter()
            .all(|(top, b)| *b >= 1 && *top >= BigUint::from(*b)));
        MacaulayExpansion { d, terms }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &[(BigUint, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The lowest bottom index j; None for the empty expansion.
    pub fn lowest_bottom(&self) -> Option<u32> {
        self.terms.last().map(|(_, b)| *b)
    }

    /// Sums the terms back up.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(top, b)| binomial_top(top, *b))
            .sum()
    }

    /// a^<d>.
    pub fn upper_shift_value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(top, b)| binomial_top(&(top + 1u32), *b + 1))
            .sum()
    }

    /// a^(d).
    pub fn derivative_value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(top, b)| binomial_top(top, *b + 1))
            .sum()
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(top, b)| format!("C({top},{b})"))
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// The unique d-binomial expansion of a, built greedily. The greedy choice
/// automatically yields strictly decreasing tops.
pub fn macaulay_expand(a: impl Into<BigUint>, d: u32) -> MacaulayExpansion {
    assert!(d >= 1, "expansion degree must be at least 1");
    let mut rem = a.into();
    let mut terms = Vec::new();
    let mut bottom = d;
    while !rem.is_zero() {
        debug_assert!(bottom >= 1);
        let top = max_top(bottom, &rem);
        rem -= binomial_top(&top, bottom);
        terms.push((top, bottom));
        bottom -= 1;
    }
    MacaulayExpansion::from_terms(d, terms)
}

/// a^<d>, with 0^<d> = 0.
pub fn upper_shift(a: impl Into<BigUint>, d: u32) -> BigUint {
    macaulay_expand(a, d).upper_shift_value()
}

/// a^(d), with 0^(d) = 0.
pub fn derivative(a: impl Into<BigUint>, d: u32) -> BigUint {
    macaulay_expand(a, d).derivative_value()
}

/// Closed form for derivative collisions. For 0 < b < c, with j the lowest
/// bottom index of the d-expansion of b: b^(d) = c^(d) iff j >= 2 and c - b <= j - 1.
pub fn derivatives_collide(b: impl Into<BigUint>, c: impl Into<BigUint>, d: u32) -> Result<bool> {
    let b = b.into();
    let c = c.into();
    if b.is_zero() || c <= b {
        return Err(Error::OrderedPairRequired);
    }
    let j = macaulay_expand(b.clone(), d)
        .lowest_bottom()
        .expect("positive value has a nonempty expansion");
    Ok(j >= 2 && c - b <= BigUint::from(j - 1))
}

/// c^(d) = 0 iff c <= d.
pub fn derivative_vanishes(c: impl Into<BigUint>, d: u32) -> bool {
    c.into() <= BigUint::from(d)
}
