//! Group-graded algebras given by generators and adjacent-pair rewriting
//! rules, checked degree by degree against the length function of the
//! grading group.
//!
//! A [`CoactionModel`] has generators `v_1 < ... < v_k` (each of degree 1,
//! each with a group degree) and one rule per out-of-order pair. The normal
//! form basis is the ordered monomials `v_1^{e_1} ... v_k^{e_k}`, so graded
//! dimensions come from counting exponent tuples.

pub mod d8;
pub mod rewrite;
pub mod verify;

use std::collections::BTreeMap;

use num::{One, Zero};
use thiserror::Error;

use crate::frobenius::FrobeniusError;
use crate::group::FiniteGroup;
use crate::hasse::{GradedAlgebraTable, HasseError};
use crate::length::{GeneratingSet, LengthError, LengthTable};
use crate::scalar::{format_rational, int, Rational};
use crate::series::{series_div, IntSeries};

pub use d8::{d8_model, d8_model_unchecked, X, Y, Z};
pub use rewrite::{Rule, RuleSet, Strategy};
pub use verify::{
    check_fm_normal, check_product_decomposition, verify_d8, verify_model, Check, FmNormalReport,
    ProductDecomposition, VerificationReport,
};

/// Exponent tuple of a normal-form monomial, one entry per generator.
pub type Exponents = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoactionError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("no rewriting rule for the out-of-order pair ({0}, {1})")]
    MissingRule(usize, usize),
    #[error("rule for ({0}, {1}) has an out-of-order right-hand side")]
    RuleNotOrdered(usize, usize),
    #[error("rule for ({0}, {1}) does not preserve the group degree")]
    RuleNotHomogeneous(usize, usize),
    #[error("rule for ({0}, {1}) has a zero scalar")]
    ZeroRuleScalar(usize, usize),
    #[error("rewriting did not terminate within {0} steps")]
    RewriteLimit(usize),
    #[error("cannot add elements of different degrees")]
    MixedDegree,
    #[error("component of group degree {0} is empty up to degree {1}")]
    ComponentEmptyUpToN(String, usize),
    #[error("lowest component of group degree {g} (degree {degree}) has dimension {dim}, expected 1")]
    LowestComponentNotOneDimensional { g: String, degree: usize, dim: usize },
    #[error("f_m is not normal within degree {degree}: {detail}")]
    NotNormalWithinN { degree: usize, detail: String },
    #[error("product decomposition of f_m failed: {0}")]
    DecompositionFailed(String),
    #[error("covariant series differs from the Poincaré polynomial at t^{degree}: expected {expected}, got {got}")]
    MismatchWithPoincare { degree: usize, expected: String, got: String },
    #[error("projected witness products are not a skew Hasse algebra: {0}")]
    NotSkewHasse(String),
    #[error("conjugation by f_m disagrees with the Nakayama automorphism at {g}: {detail}")]
    PhiMismatch { g: String, detail: String },
    #[error("no unique element of maximal length")]
    NoUniqueTop,
    #[error(transparent)]
    Length(#[from] LengthError),
    #[error(transparent)]
    Hasse(#[from] HasseError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub g_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionModel {
    group: FiniteGroup,
    generators: Vec<Generator>,
    rules: RuleSet,
    params: BTreeMap<String, Rational>,
}

/// A homogeneous element: a combination of normal-form monomials sharing
/// one degree and one group degree. The zero element has no terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    terms: BTreeMap<Exponents, Rational>,
    degree: usize,
    g_degree: usize,
}

impl GradedElement {
    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn g_degree(&self) -> usize {
        self.g_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&Exponents, &Rational)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some(t), None) => Some(t),
            _ => None,
        }
    }

    pub fn add(&self, other: &GradedElement) -> Result<GradedElement, CoactionError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree || self.g_degree != other.g_degree {
            return Err(CoactionError::MixedDegree);
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Ok(GradedElement { terms, ..*self })
    }

    pub fn scale(&self, s: &Rational) -> GradedElement {
        if s.is_zero() {
            return GradedElement { terms: BTreeMap::new(), ..*self };
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect();
        GradedElement { terms, ..*self }
    }
}

/// Lowest-degree part of one group-degree component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestGenerator {
    pub degree: usize,
    /// Lexicographically smallest exponent tuple in that degree.
    pub witness: Exponents,
}

impl CoactionModel {
    /// Validates that every out-of-order pair has exactly one rule whose
    /// right-hand side is in order, has a nonzero scalar, and has the same
    /// group degree as the left-hand side.
    pub fn new(
        group: FiniteGroup,
        generators: Vec<Generator>,
        rules: BTreeMap<(usize, usize), Rule>,
        params: BTreeMap<String, Rational>,
    ) -> Result<Self, CoactionError> {
        let k = generators.len();
        if let Some(g) = generators.iter().find(|g| g.g_degree >= group.order()) {
            return Err(CoactionError::BadParameter(format!(
                "generator {} has unknown group degree {}",
                g.label, g.g_degree
            )));
        }
        for b in 0..k {
            for a in 0..b {
                let rule = rules.get(&(b, a)).ok_or(CoactionError::MissingRule(b, a))?;
                let (c, d) = rule.pair;
                if c > d || d >= k {
                    return Err(CoactionError::RuleNotOrdered(b, a));
                }
                if rule.scalar.is_zero() {
                    return Err(CoactionError::ZeroRuleScalar(b, a));
                }
                let deg = |x: usize| generators[x].g_degree;
                if group.mul(deg(b), deg(a)) != group.mul(deg(c), deg(d)) {
                    return Err(CoactionError::RuleNotHomogeneous(b, a));
                }
            }
        }
        if let Some(&(b, a)) = rules.keys().find(|&&(b, a)| b <= a || b >= k) {
            return Err(CoactionError::BadParameter(format!("rule ({b}, {a}) is not an out-of-order pair")));
        }
        Ok(CoactionModel { group, generators, rules: RuleSet::new(rules), params })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn params(&self) -> &BTreeMap<String, Rational> {
        &self.params
    }

    pub fn letters(&self) -> usize {
        self.generators.len()
    }

    /// Normal form of a word in the generators.
    pub fn reduce(&self, word: &[usize], strategy: Strategy) -> Result<(Rational, Exponents), CoactionError> {
        let (c, sorted) = self.rules.reduce(word.to_vec(), strategy)?;
        Ok((c, rewrite::exponents_of(&sorted, self.letters())))
    }

    /// Product of two normal-form monomials, as `(scalar, exponents)`.
    pub fn mul_monomials(&self, a: &[u32], b: &[u32]) -> Result<(Rational, Exponents), CoactionError> {
        let mut word = rewrite::word_of(a);
        word.extend(rewrite::word_of(b));
        self.reduce(&word, Strategy::Leftmost)
    }

    pub fn monomial(&self, exponents: &[u32]) -> GradedElement {
        let mut terms = BTreeMap::new();
        terms.insert(exponents.to_vec(), Rational::one());
        GradedElement {
            terms,
            degree: exponents.iter().map(|&e| e as usize).sum(),
            g_degree: self.g_degree(exponents),
        }
    }

    pub fn mul(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement, CoactionError> {
        let mut out = GradedElement {
            terms: BTreeMap::new(),
            degree: a.degree + b.degree,
            g_degree: self.group.mul(a.g_degree, b.g_degree),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let (c, e) = self.mul_monomials(ea, eb)?;
                let term = GradedElement {
                    terms: BTreeMap::from([(e, c * ca * cb)]),
                    degree: out.degree,
                    g_degree: out.g_degree,
                };
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// Ordered product of the letters' group degrees.
    pub fn g_degree(&self, exponents: &[u32]) -> usize {
        exponents.iter().zip(&self.generators).fold(self.group.identity(), |acc, (&e, g)| {
            self.group.mul(acc, self.group.pow(g.g_degree, e as usize))
        })
    }

    pub fn g_degree_of_word(&self, word: &[usize]) -> usize {
        let degrees: Vec<usize> = word.iter().map(|&l| self.generators[l].g_degree).collect();
        self.group.word_product(&degrees)
    }

    /// All exponent tuples of total degree `n`, in lexicographic order.
    pub fn monomials_of_degree(&self, n: usize) -> Vec<Exponents> {
        fn fill(rest: usize, slots: usize, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
            if slots == 1 {
                prefix.push(rest as u32);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for e in 0..=rest {
                prefix.push(e as u32);
                fill(rest - e, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        match self.letters() {
            0 if n == 0 => out.push(Vec::new()),
            0 => {}
            k => fill(n, k, &mut Vec::new(), &mut out),
        }
        out
    }

    /// Coefficient of `t^n` counts the normal-form monomials of degree `n`
    /// and group degree `g`, for `n ≤ order`.
    pub fn component_series(&self, g: usize, order: usize) -> IntSeries {
        let counts = (0..=order)
            .map(|n| {
                let c = self.monomials_of_degree(n).iter().filter(|e| self.g_degree(e) == g).count();
                int(c as i64)
            })
            .collect();
        IntSeries::truncated(counts, order)
    }

    pub fn hilbert_series(&self, order: usize) -> IntSeries {
        let counts = (0..=order).map(|n| int(self.monomials_of_degree(n).len() as i64)).collect();
        IntSeries::truncated(counts, order)
    }

    /// For each group element, the lowest degree of its component and a
    /// witness monomial. Each lowest component must be one-dimensional.
    pub fn lowest_generators(&self, order: usize) -> Result<Vec<LowestGenerator>, CoactionError> {
        let mut found: Vec<Option<LowestGenerator>> = vec![None; self.group.order()];
        for n in 0..=order {
            let mut by_degree: BTreeMap<usize, Vec<Exponents>> = BTreeMap::new();
            for e in self.monomials_of_degree(n) {
                let g = self.g_degree(&e);
                if found[g].is_none() {
                    by_degree.entry(g).or_default().push(e);
                }
            }
            for (g, monomials) in by_degree {
                if monomials.len() != 1 {
                    return Err(CoactionError::LowestComponentNotOneDimensional {
                        g: self.group.label(g).to_string(),
                        degree: n,
                        dim: monomials.len(),
                    });
                }
                let witness = monomials.into_iter().next().expect("one monomial");
                found[g] = Some(LowestGenerator { degree: n, witness });
            }
            if found.iter().all(Option::is_some) {
                break;
            }
        }
        found
            .into_iter()
            .enumerate()
            .map(|(g, f)| {
                f.ok_or_else(|| CoactionError::ComponentEmptyUpToN(self.group.label(g).to_string(), order))
            })
            .collect()
    }

    /// Non-identity group degrees that occur in degree one.
    pub fn degree_one_support(&self) -> Result<GeneratingSet, CoactionError> {
        let members: Vec<usize> = self
            .monomials_of_degree(1)
            .iter()
            .map(|e| self.g_degree(e))
            .filter(|&g| g != self.group.identity())
            .collect();
        Ok(GeneratingSet::new(&self.group, members)?)
    }

    pub fn length_table(&self) -> Result<LengthTable, CoactionError> {
        Ok(LengthTable::new(&self.group, &self.degree_one_support()?)?)
    }

    /// `H_A(t) / H_{A_e}(t)` through `t^order`, checked against the
    /// Poincaré polynomial of the degree-one support.
    pub fn covariant_series(&self, order: usize) -> Result<IntSeries, CoactionError> {
        let p = self.length_table()?.poincare_polynomial();
        if p.degree().is_some_and(|d| d > order) {
            return Err(CoactionError::BadParameter(format!(
                "truncation {order} is below the Poincaré degree {}",
                p.degree().unwrap_or(0)
            )));
        }
        let quotient = series_div(
            &self.hilbert_series(order),
            &self.component_series(self.group.identity(), order),
            order,
        )
        .expect("component of the identity has constant term 1");
        if let Some(k) = (0..=order).find(|&k| quotient.coeff(k) != p.coeff(k)) {
            return Err(CoactionError::MismatchWithPoincare {
                degree: k,
                expected: format_rational(&p.coeff(k)),
                got: format_rational(&quotient.coeff(k)),
            });
        }
        Ok(quotient)
    }

    /// A monomial is killed in the covariant quotient when it is divisible
    /// (exponentwise) by a positive-degree monomial of trivial group degree.
    /// This matches the quotient by `(A_e)_{≥1}` when that ideal is spanned
    /// by monomials, as it is for the builtin model.
    pub fn is_killed(&self, exponents: &[u32]) -> bool {
        let total: u32 = exponents.iter().sum();
        (1..=total as usize).any(|n| {
            self.monomials_of_degree(n).iter().any(|d| {
                self.g_degree(d) == self.group.identity()
                    && d.iter().zip(exponents).all(|(a, b)| a <= b)
            })
        })
    }

    /// The covariant algebra on the lowest witnesses `f_g`: products are
    /// rewritten, then projected by [`CoactionModel::is_killed`]. Every
    /// surviving product must be a scalar multiple of the witness for `gh`.
    pub fn covariant_algebra(&self, order: usize) -> Result<GradedAlgebraTable, CoactionError> {
        let lows = self.lowest_generators(order)?;
        let gens = self.degree_one_support()?;
        let mut entries = Vec::new();
        for g in self.group.elements() {
            for h in self.group.elements() {
                let (c, e) = self.mul_monomials(&lows[g].witness, &lows[h].witness)?;
                if c.is_zero() || self.is_killed(&e) {
                    continue;
                }
                let gh = self.group.mul(g, h);
                if e != lows[gh].witness {
                    return Err(CoactionError::NotSkewHasse(format!(
                        "f_{} f_{} survives as {e:?}, not the witness of {}",
                        self.group.label(g),
                        self.group.label(h),
                        self.group.label(gh)
                    )));
                }
                entries.push((g, h, c));
            }
        }
        Ok(GradedAlgebraTable::from_entries(&self.group, &gens, entries)?)
    }

    /// Human-readable monomial such as `x^2 z y`.
    pub fn format_monomial(&self, exponents: &[u32]) -> String {
        let parts: Vec<String> = exponents
            .iter()
            .zip(&self.generators)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, g)| if e == 1 { g.label.clone() } else { format!("{}^{e}", g.label) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}
