//! Reduced word length with respect to a generating set, and the Poincaré
//! polynomial `Σ_g t^{ℓ(g)}`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::scalar::int;
use crate::series::IntSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LengthError {
    #[error("the generating set is empty")]
    EmptyGeneratingSet,
    #[error("the identity cannot be a generator")]
    ContainsIdentity,
    #[error("element index {0} is not in the group")]
    UnknownElement(usize),
    #[error("the set does not generate the group; unreachable elements: {0:?}")]
    DoesNotGenerate(Vec<usize>),
}

/// A subset of `G \ {e}`, kept sorted. Inverses are not added.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingSet {
    members: Vec<usize>,
}

impl GeneratingSet {
    pub fn new(
        group: &FiniteGroup,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, LengthError> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        // The empty set generates only the trivial group.
        if members.is_empty() && group.order() > 1 {
            return Err(LengthError::EmptyGeneratingSet);
        }
        if let Some(&g) = members.iter().find(|&&g| g >= group.order()) {
            return Err(LengthError::UnknownElement(g));
        }
        if members.contains(&group.identity()) {
            return Err(LengthError::ContainsIdentity);
        }
        Ok(GeneratingSet { members: members.into_iter().collect() })
    }

    /// Resolves labels (or `#k` indices) against the group.
    pub fn from_labels(group: &FiniteGroup, labels: &[&str]) -> Result<Self, String> {
        let members = labels
            .iter()
            .map(|l| group.find(l).ok_or_else(|| format!("unknown element label {l:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(group, members).map_err(|e| e.to_string())
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        GeneratingSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn labels<'a>(&self, group: &'a FiniteGroup) -> Vec<&'a str> {
        self.members.iter().map(|&g| group.label(g)).collect()
    }
}

/// Lengths of all elements plus one reduced word per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthTable {
    lengths: Vec<usize>,
    /// `(previous element, generator)` with `previous * generator = g`;
    /// `None` for the identity.
    witness: Vec<Option<(usize, usize)>>,
    generating_set: GeneratingSet,
}

impl LengthTable {
    /// Breadth-first search from `e` under right multiplication. Within a
    /// level, generators are tried in increasing index order, so every
    /// witness word ends in the smallest possible generator.
    pub fn new(group: &FiniteGroup, gens: &GeneratingSet) -> Result<Self, LengthError> {
        let n = group.order();
        let mut lengths = vec![usize::MAX; n];
        let mut witness = vec![None; n];
        lengths[0] = 0;
        let mut level = vec![0];
        let mut depth = 0;
        while !level.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for &v in gens.members() {
                for &u in &level {
                    let w = group.mul(u, v);
                    if lengths[w] == usize::MAX {
                        lengths[w] = depth;
                        witness[w] = Some((u, v));
                        next.push(w);
                    }
                }
            }
            next.sort_unstable();
            level = next;
        }
        let missing: Vec<usize> = (0..n).filter(|&g| lengths[g] == usize::MAX).collect();
        if !missing.is_empty() {
            return Err(LengthError::DoesNotGenerate(missing));
        }
        Ok(LengthTable { lengths, witness, generating_set: gens.clone() })
    }

    #[inline]
    pub fn length(&self, g: usize) -> usize {
        self.lengths[g]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn generating_set(&self) -> &GeneratingSet {
        &self.generating_set
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    /// One reduced word for `g`, as a list of generators.
    pub fn reduced_word(&self, g: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.lengths[g]);
        let mut x = g;
        while let Some((prev, v)) = self.witness[x] {
            word.push(v);
            x = prev;
        }
        word.reverse();
        word
    }

    pub fn is_length_additive(&self, group: &FiniteGroup, g: usize, h: usize) -> bool {
        self.lengths[group.mul(g, h)] == self.lengths[g] + self.lengths[h]
    }

    /// Coefficient of `t^k` counts the elements of length `k`.
    pub fn poincare_polynomial(&self) -> IntSeries {
        let mut counts = vec![0i64; self.max_length() + 1];
        for &l in &self.lengths {
            counts[l] += 1;
        }
        IntSeries::polynomial(counts.into_iter().map(int).collect())
    }

    /// Number of elements of each length, indexed by length.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_length() + 1];
        for &l in &self.lengths {
            counts[l] += 1;
        }
        counts
    }

    pub fn max_length_elements(&self) -> Vec<usize> {
        let top = self.max_length();
        (0..self.lengths.len()).filter(|&g| self.lengths[g] == top).collect()
    }

    /// The element of maximal length when there is exactly one.
    pub fn unique_max(&self) -> Option<usize> {
        match self.max_length_elements().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    pub fn elements_of_length(&self, k: usize) -> Vec<usize> {
        (0..self.lengths.len()).filter(|&g| self.lengths[g] == k).collect()
    }
}
