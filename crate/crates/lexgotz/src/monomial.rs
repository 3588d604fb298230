//! Monomials as exponent vectors, the lex order with x1 > x2 > ... > xn,
//! graded slices M_d, and lexsegments L(u, v) with their shadows.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::macaulay::{binomial, MacaulayExpansion};

/// A monomial in n variables, stored as its exponent vector. Variables are
/// 1-indexed in text form: x1^2*x3 in a 3-variable ring is [2, 0, 1].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        assert!(!exps.is_empty(), "monomial needs at least one variable");
        Monomial { exps }
    }

    /// The unit monomial 1.
    pub fn one(n: usize) -> Monomial {
        Monomial::new(vec![0; n])
    }

    /// x_i, 1-indexed.
    pub fn variable(n: usize, i: usize) -> Monomial {
        assert!(i >= 1 && i <= n, "variable x{i} outside ring of {n} variables");
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Exponent of x_i, 1-indexed.
    pub fn exponent_of(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    /// Largest index of a variable dividing self; None for 1.
    pub fn max_support(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|p| p + 1)
    }

    /// 1-indexed indices of the variables dividing self, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(p, _)| p + 1)
            .collect()
    }

    /// Some(i) when self is exactly the variable x_i.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree() == 1 {
            self.max_support()
        } else {
            None
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// self / other when other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Accepts either an exponent array like [2,0,1] or a product like
    /// x1^2*x3; "1" is the unit monomial. n fixes the ambient ring.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if let Some(stripped) = s.strip_prefix('[') {
            let inner = stripped
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unclosed exponent array '{s}'")))?;
            let exps = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent '{}'", p.trim())))
                    })
                    .collect::<Result<Vec<u32>>>()?
            };
            if exps.len() != n {
                return Err(Error::AmbientMismatch(exps.len(), n));
            }
            return Ok(Monomial::new(exps));
        }
        if s == "1" {
            return Ok(Monomial::one(n));
        }
        let mut exps = vec![0u32; n];
        for factor in s.split('*') {
            let f = factor.trim();
            let rest = f
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected a variable factor, got '{f}'")))?;
            let (idx_str, exp) = match rest.split_once('^') {
                Some((i, e)) => (
                    i,
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{f}'")))?,
                ),
                None => (rest, 1),
            };
            let idx: usize = idx_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in '{f}'")))?;
            if idx == 0 || idx > n {
                return Err(Error::Parse(format!(
                    "variable x{idx} outside ring of {n} variables"
                )));
            }
            exps[idx - 1] += exp;
        }
        Ok(Monomial::new(exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", p + 1)?;
            } else {
                write!(f, "x{}^{}", p + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Plain exponent-wise lex comparison; meaningful for equal degrees.
pub(crate) fn lex_cmp_raw(a: &Monomial, b: &Monomial) -> Ordering {
    for (ea, eb) in a.exps.iter().zip(&b.exps) {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Lex order with x1 > x2 > ... > xn, for two monomials of the same degree
/// in the same ring.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.ambient() != b.ambient() {
        return Err(Error::AmbientMismatch(a.ambient(), b.ambient()));
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(lex_cmp_raw(a, b))
}

/// |M_d| = C(n + d - 1, d) in n variables.
pub fn md_size(n: usize, d: u32) -> BigUint {
    assert!(n >= 1);
    binomial(n as u64 + d as u64 - 1, d as u64)
}

/// Enumeration guard used by the CLI: LEXGOTZ_ENUM_CAP, default one million.
pub fn default_enum_cap() -> u64 {
    std::env::var("LEXGOTZ_ENUM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000)
}

/// The next degree-d monomial below w in lex order; None at xn^d.
fn lex_successor_below(w: &Monomial) -> Option<Monomial> {
    let n = w.ambient();
    let e = &w.exps;
    let p = (0..n.saturating_sub(1)).rev().find(|&p| e[p] > 0)?;
    let moved: u32 = 1 + e[p + 1..].iter().sum::<u32>();
    let mut next = e[..p].to_vec();
    next.push(e[p] - 1);
    next.push(moved);
    next.resize(n, 0);
    Some(Monomial::new(next))
}

/// All of M_d in decreasing lex order; errors past `cap` elements.
pub fn enumerate_md(n: usize, d: u32, cap: u64) -> Result<Vec<Monomial>> {
    assert!(n >= 1);
    let mut top = vec![0u32; n];
    top[0] = d;
    let mut bot = vec![0u32; n];
    bot[n - 1] = d;
    LexSegment {
        u: Monomial::new(top),
        v: Monomial::new(bot),
    }
    .monomials(cap)
}

/// Number of degree-d monomials strictly below v in lex order. Factoring
/// v = x_{l_1} ... x_{l_d} with l_1 <= ... <= l_d, each non-xn factor l_k
/// contributes C(n - l_k + d - k, d - k + 1); the terms form a valid
/// d-expansion, exposed by rank_after_expansion.
pub fn rank_after(v: &Monomial) -> BigUint {
    rank_after_expansion(v).value()
}

/// The count of rank_after as an already-valid d-expansion.
pub fn rank_after_expansion(v: &Monomial) -> MacaulayExpansion {
    let n = v.ambient();
    let d = v.degree();
    let mut terms = Vec::new();
    let mut k = 0u32;
    for (p, &e) in v.exps.iter().enumerate() {
        let var = p + 1;
        if var == n {
            break;
        }
        for _ in 0..e {
            k += 1;
            let top = (n - var) as u64 + (d - k) as u64;
            terms.push((BigUint::from(top), d - k + 1));
        }
    }
    MacaulayExpansion::from_terms(d, terms)
}

/// The lexsegment L(u, v): every degree-d monomial w with u >= w >= v in lex
/// order. Construction checks equal degrees, equal rings, and u >= v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexSegment {
    u: Monomial,
    v: Monomial,
}

impl LexSegment {
    pub fn new(u: Monomial, v: Monomial) -> Result<LexSegment> {
        match lex_compare(&u, &v)? {
            Ordering::Less => Err(Error::SegmentOrder {
                u: u.to_string(),
                v: v.to_string(),
            }),
            _ => Ok(LexSegment { u, v }),
        }
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn v(&self) -> &Monomial {
        &self.v
    }

    pub fn ambient(&self) -> usize {
        self.u.ambient()
    }

    pub fn degree(&self) -> u32 {
        self.u.degree()
    }

    /// |L(u, v)| = rank_after(u) - rank_after(v) + 1, closed form.
    pub fn size(&self) -> BigUint {
        rank_after(&self.u) - rank_after(&self.v) + 1u32
    }

    /// u = x1^d, the segment that starts at the top of M_d.
    pub fn is_initial(&self) -> bool {
        self.u.exps[0] == self.u.degree()
    }

    pub fn is_principal(&self) -> bool {
        self.u == self.v
    }

    /// The members in decreasing lex order; errors past `cap` elements.
    pub fn monomials(&self, cap: u64) -> Result<Vec<Monomial>> {
        let size = self.size();
        if size > BigUint::from(cap) {
            return Err(Error::EnumerationCap {
                required: size,
                cap,
            });
        }
        let count = size.to_u64().expect("size bounded by cap");
        let mut out = Vec::with_capacity(count as usize);
        let mut cur = self.u.clone();
        for _ in 1..count {
            out.push(cur.clone());
            cur = lex_successor_below(&cur)
                .ok_or_else(|| Error::Internal("segment walk ran past xn^d".into()))?;
        }
        out.push(cur);
        debug_assert_eq!(out.last(), Some(&self.v));
        Ok(out)
    }

    /// L(x1 u, xn v), the candidate the shadow is compared against.
    pub fn shadow_segment(&self) -> LexSegment {
        LexSegment {
            u: self.u.mul_var(1),
            v: self.v.mul_var(self.ambient()),
        }
    }

    /// Reindexes away leading variables no member uses: when u omits x1 so
    /// does every w <= u, and the whole segment lives in the smaller ring.
    /// Returns the reindexed segment and how many variables were dropped.
    pub fn normalized(&self) -> (LexSegment, usize) {
        let mut dropped = 0;
        while dropped < self.u.ambient() - 1 && self.u.exps[dropped] == 0 {
            dropped += 1;
        }
        if dropped == 0 {
            return (self.clone(), 0);
        }
        debug_assert!(self.v.exps[..dropped].iter().all(|&e| e == 0));
        (
            LexSegment {
                u: Monomial::new(self.u.exps[dropped..].to_vec()),
                v: Monomial::new(self.v.exps[dropped..].to_vec()),
            },
            dropped,
        )
    }

    /// Does the shadow of the segment equal the lexsegment L(x1 u, xn v)?
    /// Decided by materializing both sides and comparing. Once this single
    /// level passes, every deeper shadow is again of the same form.
    pub fn is_completely_lexsegment(&self, cap: u64) -> Result<bool> {
        let members = self.monomials(cap)?;
        let shad = shadow(&members);
        let expected = self.shadow_segment();
        if BigUint::from(shad.len() as u64) != expected.size() {
            return Ok(false);
        }
        let candidate = expected.monomials(shad.len() as u64)?;
        Ok(shad == candidate)
    }
}

impl fmt::Display for LexSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {})", self.u, self.v)
    }
}

/// Every x_i * w for w in the given set: the next-degree shadow, returned in
/// decreasing lex order without repeats.
pub fn shadow(monomials: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = monomials
        .iter()
        .flat_map(|w| (1..=w.ambient()).map(|i| w.mul_var(i)))
        .collect();
    out.sort_by(|a, b| lex_cmp_raw(b, a));
    out.dedup();
    out
}
