//! Monomial rewriting by adjacent-pair rules.
//!
//! Letters are indexed by their position in the normal order. A word is in
//! normal form when its letters are nondecreasing. Each rule replaces an
//! out-of-order adjacent pair `(b, a)`, `b > a`, by a scalar times another
//! pair, so a monomial always rewrites to a single scalar multiple of a
//! monomial.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::scalar::Rational;

use super::CoactionError;

/// Which out-of-order pair to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Right-hand side of a rule: `scalar · (c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub scalar: Rational,
    pub pair: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    rules: BTreeMap<(usize, usize), Rule>,
    step_limit: usize,
}

impl RuleSet {
    pub const DEFAULT_STEP_LIMIT: usize = 100_000;

    pub fn new(rules: BTreeMap<(usize, usize), Rule>) -> Self {
        RuleSet { rules, step_limit: Self::DEFAULT_STEP_LIMIT }
    }

    pub fn rules(&self) -> &BTreeMap<(usize, usize), Rule> {
        &self.rules
    }

    pub fn get(&self, b: usize, a: usize) -> Option<&Rule> {
        self.rules.get(&(b, a))
    }

    /// Rewrites `word` to normal form, returning the accumulated scalar
    /// and the sorted word. The scalar is zero only if a rule scalar is.
    pub fn reduce(
        &self,
        mut word: Vec<usize>,
        strategy: Strategy,
    ) -> Result<(Rational, Vec<usize>), CoactionError> {
        let mut scalar = Rational::one();
        let mut steps = 0;
        loop {
            let mut out_of_order = (0..word.len().saturating_sub(1)).filter(|&i| word[i] > word[i + 1]);
            let pos = match strategy {
                Strategy::Leftmost => out_of_order.next(),
                Strategy::Rightmost => out_of_order.next_back(),
            };
            let Some(i) = pos else {
                return Ok((scalar, word));
            };
            let rule = self
                .get(word[i], word[i + 1])
                .ok_or(CoactionError::MissingRule(word[i], word[i + 1]))?;
            scalar *= &rule.scalar;
            if scalar.is_zero() {
                return Ok((scalar, Vec::new()));
            }
            (word[i], word[i + 1]) = rule.pair;
            steps += 1;
            if steps > self.step_limit {
                return Err(CoactionError::RewriteLimit(self.step_limit));
            }
        }
    }
}

/// Letters of the normal-form monomial with these exponents.
pub fn word_of(exponents: &[u32]) -> Vec<usize> {
    exponents
        .iter()
        .enumerate()
        .flat_map(|(letter, &e)| std::iter::repeat_n(letter, e as usize))
        .collect()
}

/// Exponents of a nondecreasing word.
pub fn exponents_of(word: &[usize], letters: usize) -> Vec<u32> {
    let mut e = vec![0; letters];
    for &l in word {
        e[l] += 1;
    }
    e
}
