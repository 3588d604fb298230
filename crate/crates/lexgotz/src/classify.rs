//! Classification of lexsegment ideals: the Gotzmann decision through a
//! rank bound (completely lexsegment case) and a generator-shape test
//! (non-completely case), linear quotient orders, Taylor resolution
//! minimality, and the three-way resolution consistency triple.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ideal::{is_componentwise_lexsegment, is_gotzmann_oracle, MonomialIdeal};
use crate::monomial::{md_size, rank_after, LexSegment, Monomial};

/// Gotzmann test for a completely lexsegment, non-initial segment whose top
/// monomial involves x1: with a = rank_after(u) and j the exponent of xn in
/// v, the ideal is Gotzmann iff a + j + 1 >= |M_d|. Each violated
/// precondition is rejected with its own error.
pub fn gotzmann_completely_criterion(seg: &LexSegment, cap: u64) -> Result<bool> {
    if seg.u().exponent_of(1) == 0 {
        return Err(Error::NotNormalized);
    }
    if seg.is_initial() {
        return Err(Error::InitialSegment);
    }
    if !seg.is_completely_lexsegment(cap)? {
        return Err(Error::NotCompletely);
    }
    Ok(completely_rank_bound(seg))
}

/// The bare inequality a + (j + 1) >= C(n + d - 1, d), stated without
/// subtraction so nothing can underflow.
fn completely_rank_bound(seg: &LexSegment) -> bool {
    let a = rank_after(seg.u());
    let j = seg.v().exponent_of(seg.ambient());
    a + BigUint::from(j) + 1u32 >= md_size(seg.ambient(), seg.degree())
}

/// Gotzmann test for a non-completely lexsegment with at least two members:
/// the ideal is Gotzmann iff its generators factor as m * (x_l, ..., x_{l+p})
/// for a monomial m and a run of at least two consecutive variables.
pub fn gotzmann_run_criterion(seg: &LexSegment, cap: u64) -> Result<bool> {
    if seg.is_principal() {
        return Err(Error::SingletonSegment);
    }
    if seg.is_completely_lexsegment(cap)? {
        return Err(Error::Completely);
    }
    Ok(consecutive_run_shape(&seg.monomials(cap)?))
}

/// Do the monomials factor as a common m times consecutive single variables?
pub(crate) fn consecutive_run_shape(gens: &[Monomial]) -> bool {
    debug_assert!(gens.len() >= 2);
    let m = gens
        .iter()
        .skip(1)
        .fold(gens[0].clone(), |acc, g| acc.gcd(g));
    let mut indices = Vec::with_capacity(gens.len());
    for g in gens {
        match g.div(&m).and_then(|q| q.as_variable()) {
            Some(i) => indices.push(i),
            None => return false,
        }
    }
    indices.sort_unstable();
    indices.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Search strategy for an admissible generator order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderStrategy {
    /// The stored order: degree ascending, lex descending.
    DescendingLex,
    /// The stored order reversed.
    AscendingLex,
    /// Depth-first search over all orders, pruning inadmissible prefixes.
    Exhaustive,
}

/// Result of the linear quotients search. Linear quotients is existential
/// over orders, so a miss by the fixed orders alone is inconclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearQuotientsOutcome {
    /// An admissible order of the minimal generators.
    Order(Vec<Monomial>),
    /// No admissible order exists; settled by exhaustive search.
    NoneExhaustive,
    /// The tried orders fail and the ideal is too large to search fully.
    NoneHeuristic,
}

impl LinearQuotientsOutcome {
    pub fn found(&self) -> bool {
        matches!(self, LinearQuotientsOutcome::Order(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            LinearQuotientsOutcome::Order(order) => json!({
                "found": true,
                "order": order.iter().map(|g| g.to_string()).collect::<Vec<String>>(),
            }),
            LinearQuotientsOutcome::NoneExhaustive => {
                json!({ "found": false, "exhausted": true })
            }
            LinearQuotientsOutcome::NoneHeuristic => {
                json!({ "found": false, "exhausted": false })
            }
        }
    }
}

/// The variables generating (u_1,...,u_{i-1}) : u_i, or None when that colon
/// is not generated by variables. The colon is generated by the quotients
/// u_k / gcd(u_k, u_i); it is variable-generated exactly when every quotient
/// is divisible by a quotient that is itself a variable.
fn colon_variables(prefix: &[Monomial], next: &Monomial) -> Option<Vec<usize>> {
    let quotients: Vec<Monomial> = prefix
        .iter()
        .map(|u| u.div(&u.gcd(next)).expect("gcd divides its argument"))
        .collect();
    let mut vars: Vec<usize> = quotients.iter().filter_map(|q| q.as_variable()).collect();
    vars.sort_unstable();
    vars.dedup();
    let covered = quotients
        .iter()
        .all(|q| vars.iter().any(|&t| q.exponent_of(t) >= 1));
    if covered {
        Some(vars)
    } else {
        None
    }
}

fn order_admissible(order: &[Monomial]) -> bool {
    (1..order.len()).all(|i| colon_variables(&order[..i], &order[i]).is_some())
}

fn dfs_order(gens: &[Monomial]) -> Option<Vec<Monomial>> {
    fn go(gens: &[Monomial], used: &mut [bool], chosen: &mut Vec<Monomial>) -> bool {
        if chosen.len() == gens.len() {
            return true;
        }
        for i in 0..gens.len() {
            if used[i] || colon_variables(chosen, &gens[i]).is_none() {
                continue;
            }
            used[i] = true;
            chosen.push(gens[i].clone());
            if go(gens, used, chosen) {
                return true;
            }
            chosen.pop();
            used[i] = false;
        }
        false
    }
    let mut used = vec![false; gens.len()];
    let mut chosen = Vec::with_capacity(gens.len());
    if go(gens, &mut used, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Does the ideal admit an order of its generators whose successive colon
/// ideals are all generated by variables? `exhaustive_cap` bounds the
/// generator count for the full search; a larger ideal under the Exhaustive
/// strategy degrades to the inconclusive outcome.
pub fn has_linear_quotients(
    ideal: &MonomialIdeal,
    strategy: OrderStrategy,
    exhaustive_cap: usize,
) -> LinearQuotientsOutcome {
    let gens = ideal.generators();
    match strategy {
        OrderStrategy::DescendingLex => {
            if order_admissible(gens) {
                LinearQuotientsOutcome::Order(gens.to_vec())
            } else {
                LinearQuotientsOutcome::NoneHeuristic
            }
        }
        OrderStrategy::AscendingLex => {
            let rev: Vec<Monomial> = gens.iter().rev().cloned().collect();
            if order_admissible(&rev) {
                LinearQuotientsOutcome::Order(rev)
            } else {
                LinearQuotientsOutcome::NoneHeuristic
            }
        }
        OrderStrategy::Exhaustive => {
            if gens.len() > exhaustive_cap {
                return LinearQuotientsOutcome::NoneHeuristic;
            }
            match dfs_order(gens) {
                Some(order) => LinearQuotientsOutcome::Order(order),
                None => LinearQuotientsOutcome::NoneExhaustive,
            }
        }
    }
}

/// Tries descending lex first (the natural order for lexsegments), then
/// ascending, then the pruned exhaustive search under the cap.
pub fn search_linear_quotients(
    ideal: &MonomialIdeal,
    exhaustive_cap: usize,
) -> LinearQuotientsOutcome {
    for strategy in [OrderStrategy::DescendingLex, OrderStrategy::AscendingLex] {
        if let found @ LinearQuotientsOutcome::Order(_) =
            has_linear_quotients(ideal, strategy, exhaustive_cap)
        {
            return found;
        }
    }
    has_linear_quotients(ideal, OrderStrategy::Exhaustive, exhaustive_cap)
}

/// Is the Taylor complex on the minimal generators a minimal free
/// resolution? A unit coefficient in some differential means
/// lcm(A) = lcm(A minus u_s) for a subset A containing u_s, and since
/// enlarging A preserves that collapse, minimality reduces to: no generator
/// divides the lcm of all the others.
pub fn taylor_is_minimal(ideal: &MonomialIdeal, generator_cap: usize) -> Result<bool> {
    let gens = ideal.generators();
    if gens.len() > generator_cap {
        return Err(Error::GeneratorCap {
            what: "taylor minimality",
            cap: generator_cap,
            got: gens.len(),
        });
    }
    Ok(taylor_minimal_on(gens))
}

pub(crate) fn taylor_minimal_on(gens: &[Monomial]) -> bool {
    let r = gens.len();
    if r <= 2 {
        return true;
    }
    let one = Monomial::one(gens[0].ambient());
    let mut prefix = vec![one.clone(); r + 1];
    for i in 0..r {
        prefix[i + 1] = prefix[i].lcm(&gens[i]);
    }
    let mut suffix = vec![one; r + 1];
    for i in (0..r).rev() {
        suffix[i] = suffix[i + 1].lcm(&gens[i]);
    }
    (0..r).all(|s| !gens[s].divides(&prefix[s].lcm(&suffix[s + 1])))
}

/// Does the ideal factor as m * (x_{i_1}, ..., x_{i_l}) with distinct
/// variables, not necessarily consecutive? For ideals with linear
/// resolution this shape is equivalent to Taylor minimality.
pub fn taylor_shape_criterion(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.generators();
    if gens.len() == 1 {
        return true;
    }
    let m = gens
        .iter()
        .skip(1)
        .fold(gens[0].clone(), |acc, g| acc.gcd(g));
    gens.iter()
        .all(|g| g.div(&m).and_then(|q| q.as_variable()).is_some())
}

/// Three conditions that coincide for componentwise linear monomial ideals,
/// each computed by an independent route:
/// - the Taylor resolution is minimal (lcm test);
/// - the resolution length attains the Taylor bound: along an admissible
///   order, the widest colon ideal is generated by |G| - 1 distinct
///   variables (for stable ideals this count reduces to the classical
///   largest-variable-index formula);
/// - the ideal is Gotzmann (by the enumeration oracle) with at most n
///   generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolutionTriple {
    pub taylor_minimal: bool,
    pub colon_span_full: bool,
    pub gotzmann_bounded: bool,
}

impl ResolutionTriple {
    pub fn all_equal(&self) -> bool {
        self.taylor_minimal == self.colon_span_full
            && self.colon_span_full == self.gotzmann_bounded
    }
}

/// Computes the triple. Requires an admissible order to exist; the widest
/// colon count is order-invariant across admissible orders.
pub fn resolution_triple(
    ideal: &MonomialIdeal,
    cap: u64,
    exhaustive_cap: usize,
) -> Result<ResolutionTriple> {
    let order = match search_linear_quotients(ideal, exhaustive_cap) {
        LinearQuotientsOutcome::Order(order) => order,
        _ => return Err(Error::NoLinearQuotients),
    };
    let r = order.len();
    let span = (1..r)
        .map(|i| {
            colon_variables(&order[..i], &order[i])
                .expect("order verified admissible")
                .len()
        })
        .max()
        .unwrap_or(0);
    Ok(ResolutionTriple {
        taylor_minimal: taylor_minimal_on(ideal.generators()),
        colon_span_full: span + 1 == r,
        gotzmann_bounded: is_gotzmann_oracle(ideal, cap)? && r <= ideal.ambient(),
    })
}

/// Which rule decided the Gotzmann flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GotzmannRoute {
    /// Initial segments are always Gotzmann.
    InitialShortcut,
    /// One-generator ideals are always Gotzmann.
    PrincipalShortcut,
    /// Completely lexsegment: the rank inequality a + j + 1 >= |M_d|.
    CompletelyRankBound,
    /// Non-completely: the consecutive-run factorization test.
    ConsecutiveRun,
}

impl GotzmannRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            GotzmannRoute::InitialShortcut => "initial-shortcut",
            GotzmannRoute::PrincipalShortcut => "principal-shortcut",
            GotzmannRoute::CompletelyRankBound => "completely-rank-bound",
            GotzmannRoute::ConsecutiveRun => "consecutive-run",
        }
    }
}

/// The counts the rank bound runs on: a and b are the monomials lex-below u
/// and v, c is the complement of the segment in M_d, j the exponent of xn
/// in v. They satisfy c = |M_d| - (a + 1) + b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentNumbers {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub j: u32,
}

/// Everything classify() decides about one segment. All verdicts describe
/// the ideal generated by the normalized segment inside its own ring; the
/// Gotzmann property is sensitive to the ambient variable count, so the
/// normalized coordinates in the report are the authoritative ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub original_ambient: usize,
    pub dropped_variables: usize,
    pub segment: LexSegment,
    pub initial: bool,
    pub completely: bool,
    pub gotzmann: bool,
    pub route: GotzmannRoute,
    pub linear_quotients: LinearQuotientsOutcome,
    pub componentwise_lexsegment: bool,
    pub taylor_minimal: bool,
    pub numbers: SegmentNumbers,
}

fn big_number(v: &BigUint) -> Value {
    Value::Number(
        v.to_string()
            .parse()
            .expect("decimal integer literal is a valid JSON number"),
    )
}

impl ClassificationReport {
    /// Stable key order:
    /// n, d, u, v, initial, completely, gotzmann, route, linear_quotients,
    /// componentwise_lexsegment, taylor_minimal, a, b, c, j.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("n".into(), Value::from(self.segment.ambient() as u64));
        map.insert("d".into(), Value::from(self.segment.degree()));
        map.insert("u".into(), Value::from(self.segment.u().to_string()));
        map.insert("v".into(), Value::from(self.segment.v().to_string()));
        map.insert("initial".into(), Value::from(self.initial));
        map.insert("completely".into(), Value::from(self.completely));
        map.insert("gotzmann".into(), Value::from(self.gotzmann));
        map.insert("route".into(), Value::from(self.route.as_str()));
        map.insert("linear_quotients".into(), self.linear_quotients.to_json());
        map.insert(
            "componentwise_lexsegment".into(),
            Value::from(self.componentwise_lexsegment),
        );
        map.insert("taylor_minimal".into(), Value::from(self.taylor_minimal));
        map.insert("a".into(), big_number(&self.numbers.a));
        map.insert("b".into(), big_number(&self.numbers.b));
        map.insert("c".into(), big_number(&self.numbers.c));
        map.insert("j".into(), Value::from(self.numbers.j));
        Value::Object(map)
    }
}

/// Classifies a lexsegment. Leading variables no member uses are reindexed
/// away first; the report keeps both the original ambient count and how many
/// variables were dropped. Routing: initial and principal segments are
/// Gotzmann outright; completely lexsegments go through the rank bound;
/// everything else through the consecutive-run shape.
pub fn classify(seg: &LexSegment, cap: u64, exhaustive_cap: usize) -> Result<ClassificationReport> {
    let (norm, dropped) = seg.normalized();
    let initial = norm.is_initial();
    let principal = norm.is_principal();
    let completely = norm.is_completely_lexsegment(cap)?;
    let (route, gotzmann) = if initial {
        (GotzmannRoute::InitialShortcut, true)
    } else if principal {
        (GotzmannRoute::PrincipalShortcut, true)
    } else if completely {
        (GotzmannRoute::CompletelyRankBound, completely_rank_bound(&norm))
    } else {
        (
            GotzmannRoute::ConsecutiveRun,
            consecutive_run_shape(&norm.monomials(cap)?),
        )
    };
    let ideal = MonomialIdeal::from_segment(&norm, cap)?;
    let linear_quotients = search_linear_quotients(&ideal, exhaustive_cap);
    let componentwise_lexsegment = is_componentwise_lexsegment(&ideal, cap)?.holds;
    let taylor_minimal = taylor_minimal_on(ideal.generators());
    let numbers = SegmentNumbers {
        a: rank_after(norm.u()),
        b: rank_after(norm.v()),
        c: md_size(norm.ambient(), norm.degree()) - norm.size(),
        j: norm.v().exponent_of(norm.ambient()),
    };
    Ok(ClassificationReport {
        original_ambient: seg.ambient(),
        dropped_variables: dropped,
        segment: norm,
        initial,
        completely,
        gotzmann,
        route,
        linear_quotients,
        componentwise_lexsegment,
        taylor_minimal,
        numbers,
    })
}

/// Default generator bound for the exhaustive linear quotients search.
pub const EXHAUSTIVE_ORDER_CAP: usize = 9;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::enumerate_md;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn seg(u: &str, v: &str, n: usize) -> LexSegment {
        LexSegment::new(m(u, n), m(v, n)).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|s| m(s, n)).collect()).unwrap()
    }

    #[test]
    fn completely_criterion_examples() {
        assert_eq!(
            gotzmann_completely_criterion(&seg("x1*x2", "x2*x3", 3), 1000),
            Ok(true)
        );
        assert_eq!(
            gotzmann_completely_criterion(&seg("x1*x2", "x2^2", 3), 1000),
            Ok(false)
        );
        // final segment determined by u, with v = xn^d
        assert_eq!(
            gotzmann_completely_criterion(&seg("x1*x2", "x3^2", 3), 1000),
            Ok(true)
        );
    }

    #[test]
    fn completely_criterion_preconditions() {
        assert_eq!(
            gotzmann_completely_criterion(&seg("x1^2", "x2*x3", 3), 1000),
            Err(Error::InitialSegment)
        );
        assert_eq!(
            gotzmann_completely_criterion(&seg("x2^2", "x2*x3", 3), 1000),
            Err(Error::NotNormalized)
        );
        assert_eq!(
            gotzmann_completely_criterion(&seg("x1*x3^2", "x2^3", 3), 1000),
            Err(Error::NotCompletely)
        );
    }

    #[test]
    fn run_criterion_examples() {
        // x2x3 * (x2, x3): consecutive run, Gotzmann
        assert_eq!(
            gotzmann_run_criterion(&seg("x2^2*x3", "x2*x3^2", 3), 1000),
            Ok(true)
        );
        // generators x1x3^2 and x2^3 share no factor shape
        assert_eq!(
            gotzmann_run_criterion(&seg("x1*x3^2", "x2^3", 3), 1000),
            Ok(false)
        );
    }

    #[test]
    fn run_criterion_preconditions() {
        assert_eq!(
            gotzmann_run_criterion(&seg("x2*x3", "x2*x3", 3), 1000),
            Err(Error::SingletonSegment)
        );
        assert_eq!(
            gotzmann_run_criterion(&seg("x1*x2", "x2*x3", 3), 1000),
            Err(Error::Completely)
        );
    }

    #[test]
    fn run_shape_details() {
        // x1 * (x2, x3) is a consecutive run
        assert!(consecutive_run_shape(&[m("x1*x2", 3), m("x1*x3", 3)]));
        // x2 and x3 with no common factor still form the run (x2, x3)
        assert!(consecutive_run_shape(&[m("x2", 3), m("x3", 3)]));
        // the run must be consecutive
        assert!(!consecutive_run_shape(&[m("x1", 3), m("x3", 3)]));
        // quotients must be single variables
        assert!(!consecutive_run_shape(&[m("x1*x3^2", 3), m("x2^3", 3)]));
    }

    #[test]
    fn linear_quotients_strategies() {
        let i = ideal(&["x1*x2", "x1*x3"], 3);
        match has_linear_quotients(&i, OrderStrategy::DescendingLex, 9) {
            LinearQuotientsOutcome::Order(o) => {
                assert_eq!(o[0], m("x1*x2", 3));
                assert_eq!(o[1], m("x1*x3", 3));
            }
            other => panic!("expected an order, got {other:?}"),
        }
        let none = ideal(&["x1*x2", "x3*x4"], 4);
        assert_eq!(
            has_linear_quotients(&none, OrderStrategy::Exhaustive, 9),
            LinearQuotientsOutcome::NoneExhaustive
        );
        assert_eq!(
            has_linear_quotients(&none, OrderStrategy::Exhaustive, 1),
            LinearQuotientsOutcome::NoneHeuristic
        );
        assert_eq!(
            search_linear_quotients(&none, 9),
            LinearQuotientsOutcome::NoneExhaustive
        );
    }

    #[test]
    fn linear_quotients_needs_the_search_sometimes() {
        // every full M_d has linear quotients in descending lex
        let full = MonomialIdeal::new(3, enumerate_md(3, 2, 100).unwrap()).unwrap();
        assert!(search_linear_quotients(&full, 9).found());
    }

    /// Brute-force Taylor minimality: scan every subset of size >= 2 for a
    /// member whose removal keeps the lcm. The implementation's single-pass
    /// rule must agree.
    fn taylor_minimal_brute(gens: &[Monomial]) -> bool {
        let r = gens.len();
        assert!(r <= 20, "subset enumeration explodes");
        for mask in 0u32..(1 << r) {
            if mask.count_ones() < 2 {
                continue;
            }
            let members: Vec<&Monomial> = (0..r)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| &gens[i])
                .collect();
            let full = members
                .iter()
                .skip(1)
                .fold((*members[0]).clone(), |acc, g| acc.lcm(g));
            for skip in 0..members.len() {
                let rest: Vec<&&Monomial> = members
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, g)| g)
                    .collect();
                let partial = rest
                    .iter()
                    .skip(1)
                    .fold((**rest[0]).clone(), |acc, g| acc.lcm(g));
                if full == partial {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(taylor_is_minimal(&ideal(&["x1*x2", "x1*x3"], 3), 16), Ok(true));
        assert_eq!(taylor_is_minimal(&ideal(&["x1*x2", "x3*x4"], 4), 16), Ok(true));
        assert_eq!(
            taylor_is_minimal(&ideal(&["x1*x2", "x1*x3", "x2*x3"], 3), 16),
            Ok(false)
        );
        assert_eq!(
            taylor_is_minimal(&ideal(&["x1", "x2", "x3"], 3), 2),
            Err(Error::GeneratorCap {
                what: "taylor minimality",
                cap: 2,
                got: 3
            })
        );
    }

    #[test]
    fn taylor_matches_subset_enumeration() {
        for d in 1..=3u32 {
            let all = enumerate_md(3, d, 1000).unwrap();
            for (i, u) in all.iter().enumerate() {
                for v in &all[i..] {
                    let s = LexSegment::new(u.clone(), v.clone()).unwrap();
                    let gens = s.monomials(100).unwrap();
                    if gens.len() > 12 {
                        continue;
                    }
                    assert_eq!(
                        taylor_minimal_on(&gens),
                        taylor_minimal_brute(&gens),
                        "{s}"
                    );
                }
            }
        }
    }

    #[test]
    fn taylor_shape_examples() {
        assert!(taylor_shape_criterion(&ideal(&["x1*x2", "x1*x3"], 3)));
        assert!(taylor_shape_criterion(&ideal(&["x1*x2", "x1*x4"], 4)));
        assert!(!taylor_shape_criterion(&ideal(&["x1*x2", "x3*x4"], 4)));
        assert!(taylor_shape_criterion(&ideal(&["x2*x3"], 3)));
    }

    #[test]
    fn resolution_triple_examples() {
        let t = resolution_triple(&ideal(&["x2^2*x3", "x2*x3^2"], 3), 1000, 9).unwrap();
        assert_eq!(
            t,
            ResolutionTriple {
                taylor_minimal: true,
                colon_span_full: true,
                gotzmann_bounded: true
            }
        );
        assert!(t.all_equal());
        // x1 * (x2, x3): max variable index exceeds |G|, yet the triple
        // still agrees because the colon span is what counts
        let t2 = resolution_triple(&ideal(&["x1*x2", "x1*x3"], 3), 1000, 9).unwrap();
        assert!(t2.all_equal() && t2.taylor_minimal);
        assert_eq!(
            resolution_triple(&ideal(&["x1*x2", "x3*x4"], 4), 1000, 9),
            Err(Error::NoLinearQuotients)
        );
    }

    #[test]
    fn classify_initial_segment() {
        let r = classify(&seg("x1^2", "x2*x3", 3), 1000, 9).unwrap();
        assert!(r.initial && r.gotzmann && r.completely);
        assert_eq!(r.route, GotzmannRoute::InitialShortcut);
        assert_eq!(r.dropped_variables, 0);
        assert!(r.linear_quotients.found());
        assert!(r.componentwise_lexsegment);
    }

    #[test]
    fn classify_non_completely_example() {
        let r = classify(&seg("x1*x3^2", "x2^3", 3), 1000, 9).unwrap();
        assert!(!r.completely && !r.gotzmann && !r.initial);
        assert_eq!(r.route, GotzmannRoute::ConsecutiveRun);
        assert_eq!(r.numbers.j, 0);
    }

    #[test]
    fn classify_rank_bound_example() {
        let r = classify(&seg("x1*x2", "x2*x3", 3), 1000, 9).unwrap();
        assert!(r.completely && r.gotzmann);
        assert_eq!(r.route, GotzmannRoute::CompletelyRankBound);
        assert_eq!(r.numbers.a, BigUint::from(4u32));
        assert_eq!(r.numbers.b, BigUint::from(1u32));
        assert_eq!(r.numbers.c, BigUint::from(2u32));
        assert_eq!(r.numbers.j, 1);
    }

    #[test]
    fn classify_normalizes_and_routes_accordingly() {
        // in 3 variables this segment is non-completely, but x1 is idle;
        // reindexed to 2 variables it becomes completely and Gotzmann
        let r = classify(&seg("x2^2*x3", "x2*x3^2", 3), 1000, 9).unwrap();
        assert_eq!(r.dropped_variables, 1);
        assert_eq!(r.original_ambient, 3);
        assert_eq!(r.segment.ambient(), 2);
        assert_eq!(r.segment.u().to_string(), "x1^2*x2");
        assert!(r.completely && r.gotzmann);
        assert_eq!(r.route, GotzmannRoute::CompletelyRankBound);
    }

    #[test]
    fn classify_principal_segment() {
        let r = classify(&seg("x2*x3", "x2*x3", 3), 1000, 9).unwrap();
        assert!(r.gotzmann);
        assert_eq!(r.route, GotzmannRoute::PrincipalShortcut);
        // normalization strips x1, leaving x1*x2 in two variables
        assert_eq!(r.segment.ambient(), 2);
        assert!(r.taylor_minimal);
    }

    #[test]
    fn report_json_key_order() {
        let r = classify(&seg("x1*x2", "x2*x3", 3), 1000, 9).unwrap();
        let json = serde_json::to_string(&r.to_json()).unwrap();
        let expected = concat!(
            r#"{"n":3,"d":2,"u":"x1*x2","v":"x2*x3","initial":false,"#,
            r#""completely":true,"gotzmann":true,"route":"completely-rank-bound","#,
            r#""linear_quotients":{"found":true,"order":["x1*x2","x1*x3","x2^2","x2*x3"]},"#,
            r#""componentwise_lexsegment":true,"taylor_minimal":false,"#,
            r#""a":4,"b":1,"c":2,"j":1}"#
        );
        assert_eq!(json, expected);
    }

    #[test]
    fn classify_formula_invariant_small_sweep() {
        for d in 1..=3u32 {
            let all = enumerate_md(3, d, 1000).unwrap();
            for (i, u) in all.iter().enumerate() {
                for v in &all[i..] {
                    let s = LexSegment::new(u.clone(), v.clone()).unwrap();
                    let r = classify(&s, 10_000, 9).unwrap();
                    let n = r.segment.ambient();
                    let dd = r.segment.degree();
                    assert_eq!(
                        r.numbers.c.clone() + &r.numbers.a + 1u32,
                        md_size(n, dd) + &r.numbers.b,
                        "{s}"
                    );
                }
            }
        }
    }
}
