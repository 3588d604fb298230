//! Monomial ideals: graded components, Hilbert functions, the lex ideal with
//! the same Hilbert function, Gotzmann growth checks by enumeration, and the
//! componentwise lexsegment test.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::macaulay::upper_shift;
use crate::monomial::{enumerate_md, lex_compare, md_size, shadow, LexSegment, Monomial};

/// An ideal generated by monomials, kept as its unique minimal generating
/// set, sorted by degree and then decreasing lex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| crate::monomial::lex_cmp_raw(b, a))
    });
    gens.dedup();
    let mut min: Vec<Monomial> = Vec::new();
    for g in gens {
        if !min.iter().any(|m| m.divides(&g)) {
            min.push(g);
        }
    }
    min
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if g.ambient() != n {
                return Err(Error::AmbientMismatch(g.ambient(), n));
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    /// The ideal generated by the members of a lexsegment.
    pub fn from_segment(seg: &LexSegment, cap: u64) -> Result<MonomialIdeal> {
        MonomialIdeal::new(seg.ambient(), seg.monomials(cap)?)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn min_gen_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).min().unwrap_or(0)
    }

    /// Some(d) when every minimal generator has degree d.
    pub fn is_equigenerated(&self) -> Option<u32> {
        let d = self.max_gen_degree();
        if d == self.min_gen_degree() {
            Some(d)
        } else {
            None
        }
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// Degree-d monomials in the ideal, decreasing lex.
    pub fn graded_component(&self, d: u32, cap: u64) -> Result<Vec<Monomial>> {
        Ok(enumerate_md(self.n, d, cap)?
            .into_iter()
            .filter(|w| self.contains(w))
            .collect())
    }

    /// H(I, d), counted by enumeration.
    pub fn hilbert(&self, d: u32, cap: u64) -> Result<BigUint> {
        Ok(BigUint::from(self.graded_component(d, cap)?.len() as u64))
    }

    /// H(S/I, d) = |M_d| - H(I, d).
    pub fn hilbert_quotient(&self, d: u32, cap: u64) -> Result<BigUint> {
        Ok(md_size(self.n, d) - self.hilbert(d, cap)?)
    }

    pub fn hilbert_table(&self, up_to: u32, cap: u64, quotient: bool) -> Result<HilbertTable> {
        let mut values = Vec::with_capacity(up_to as usize + 1);
        for d in 0..=up_to {
            let v = if quotient {
                self.hilbert_quotient(d, cap)?
            } else {
                self.hilbert(d, cap)?
            };
            values.push((d, v));
        }
        Ok(HilbertTable { quotient, values })
    }

    /// The lex ideal with the same Hilbert function, built degree by degree
    /// as initial segments; generators are reported up to degree `up_to`,
    /// which must reach the top generator degree of the input. Degrees above
    /// `up_to` are not inspected, so a generator of the lex ideal living
    /// beyond the horizon is not reported.
    pub fn lexify(&self, up_to: u32, cap: u64) -> Result<MonomialIdeal> {
        let max_deg = self.max_gen_degree();
        if up_to < max_deg {
            return Err(Error::LexifyHorizon { up_to, max_deg });
        }
        let mut lex_gens: Vec<Monomial> = Vec::new();
        let mut prev_component: Vec<Monomial> = Vec::new();
        for d in 0..=up_to {
            let target = self
                .hilbert(d, cap)?
                .to_u64()
                .expect("component size bounded by the enumeration cap")
                as usize;
            let mut component = shadow(&prev_component);
            if component.len() < target {
                let all = enumerate_md(self.n, d, cap)?;
                debug_assert!(component[..] == all[..component.len()]);
                for w in &all[component.len()..target] {
                    lex_gens.push(w.clone());
                    component.push(w.clone());
                }
            }
            debug_assert_eq!(component.len(), target);
            prev_component = component;
        }
        if lex_gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        MonomialIdeal::new(self.n, lex_gens)
    }

    pub fn from_json(s: &str) -> Result<MonomialIdeal> {
        #[derive(Deserialize)]
        struct IdealJson {
            n: usize,
            generators: Vec<GenEntry>,
        }
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum GenEntry {
            Exps(Vec<u32>),
            Text(String),
        }
        let parsed: IdealJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad ideal JSON: {e}")))?;
        if parsed.n == 0 {
            return Err(Error::Parse("ambient variable count must be positive".into()));
        }
        let gens = parsed
            .generators
            .into_iter()
            .map(|entry| match entry {
                GenEntry::Exps(exps) => {
                    if exps.len() != parsed.n {
                        Err(Error::AmbientMismatch(exps.len(), parsed.n))
                    } else {
                        Ok(Monomial::new(exps))
                    }
                }
                GenEntry::Text(t) => Monomial::parse(&t, parsed.n),
            })
            .collect::<Result<Vec<Monomial>>>()?;
        MonomialIdeal::new(parsed.n, gens)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "generators": self
                .gens
                .iter()
                .map(|g| Value::Array(g.exps().iter().map(|&e| Value::from(e)).collect()))
                .collect::<Vec<Value>>(),
        })
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Hilbert function values over a degree range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub quotient: bool,
    pub values: Vec<(u32, BigUint)>,
}

impl HilbertTable {
    /// Ascending degree keys mapping to exact integer values.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (d, v) in &self.values {
            let num: serde_json::Number = v
                .to_string()
                .parse()
                .expect("decimal integer literal is a valid JSON number");
            map.insert(d.to_string(), Value::Number(num));
        }
        Value::Object(map)
    }
}

/// Gotzmann persistence by counting: with d the top generator degree and
/// c = H(S/I, d), the ideal is Gotzmann iff H(S/I, d+1) = c^<d>, the
/// smallest growth Macaulay's bound allows.
pub fn is_gotzmann_oracle(ideal: &MonomialIdeal, cap: u64) -> Result<bool> {
    let d = ideal.max_gen_degree();
    if d == 0 {
        return Ok(true);
    }
    let c = ideal.hilbert_quotient(d, cap)?;
    let next = ideal.hilbert_quotient(d + 1, cap)?;
    Ok(next == upper_shift(c, d))
}

/// The same question through generator counts: I is Gotzmann iff the shadow
/// of I_d is exactly as small as the shadow of the initial segment with
/// |I_d| elements.
pub fn is_gotzmann_shadow_oracle(ideal: &MonomialIdeal, cap: u64) -> Result<bool> {
    let d = ideal.max_gen_degree();
    if d == 0 {
        return Ok(true);
    }
    let component = ideal.graded_component(d, cap)?;
    let all = enumerate_md(ideal.ambient(), d, cap)?;
    let lex_component = &all[..component.len()];
    Ok(shadow(&component).len() == shadow(lex_component).len())
}

/// Outcome of the componentwise lexsegment test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentwiseReport {
    pub holds: bool,
    /// The segment spanning the least nonzero component, when it is one.
    pub witness: Option<LexSegment>,
    /// First degree whose component is not a lexsegment.
    pub failed_degree: Option<u32>,
}

/// Is every graded component I_j a lexsegment? Components are inspected from
/// the least generator degree through maxdeg + 1; from there on components
/// are plain shadows, so the maxdeg + 1 component being completely
/// lexsegment settles every higher degree at once.
pub fn is_componentwise_lexsegment(
    ideal: &MonomialIdeal,
    cap: u64,
) -> Result<ComponentwiseReport> {
    let lo = ideal.min_gen_degree();
    let hi = ideal.max_gen_degree() + 1;
    let mut witness = None;
    for j in lo..=hi {
        let component = ideal.graded_component(j, cap)?;
        debug_assert!(!component.is_empty());
        let seg = LexSegment::new(
            component.first().expect("nonempty component").clone(),
            component.last().expect("nonempty component").clone(),
        )?;
        if BigUint::from(component.len() as u64) != seg.size() {
            return Ok(ComponentwiseReport {
                holds: false,
                witness: None,
                failed_degree: Some(j),
            });
        }
        if j == lo {
            witness = Some(seg.clone());
        }
        if j == hi && !seg.is_completely_lexsegment(cap)? {
            return Ok(ComponentwiseReport {
                holds: false,
                witness: None,
                failed_degree: Some(j + 1),
            });
        }
    }
    Ok(ComponentwiseReport {
        holds: true,
        witness,
        failed_degree: None,
    })
}

/// Contiguity check used by tests and the classifier: a component listed in
/// decreasing lex is a lexsegment iff its count matches the span size.
pub fn component_as_segment(component: &[Monomial]) -> Result<Option<LexSegment>> {
    if component.is_empty() {
        return Ok(None);
    }
    let seg = LexSegment::new(
        component.first().unwrap().clone(),
        component.last().unwrap().clone(),
    )?;
    debug_assert!(component
        .windows(2)
        .all(|w| lex_compare(&w[0], &w[1]).map_or(false, |o| o.is_gt())));
    if BigUint::from(component.len() as u64) == seg.size() {
        Ok(Some(seg))
    } else {
        Ok(None)
    }
}
