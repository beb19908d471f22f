//! Generating-set enumeration and the Poincaré-polynomial screen for
//! dual reflection group candidates.
//!
//! The screen applies necessary conditions only. A survivor is a candidate,
//! nothing more.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::length::{GeneratingSet, LengthTable};
use crate::scalar::int;
use crate::series::{cyclotomic_factor, CyclotomicCertificate, IntSeries};

/// Largest group order accepted for enumeration without a size cap.
pub const ENUMERATION_ORDER_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScreenError {
    #[error("group order {order} exceeds the enumeration cap {cap}; pass a maximum set size")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// Nonempty subsets of `{1, ..., n-1}` as sorted index tuples, in
/// lexicographic order (a tuple precedes its extensions).
#[derive(Clone, Debug)]
pub struct SubsetIter {
    n: usize,
    max_size: usize,
    stack: Vec<usize>,
    started: bool,
}

impl SubsetIter {
    pub fn new(order: usize, max_size: Option<usize>) -> Self {
        SubsetIter {
            n: order,
            max_size: max_size.unwrap_or(usize::MAX),
            stack: Vec::new(),
            started: false,
        }
    }
}

impl Iterator for SubsetIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.max_size == 0 || self.n < 2 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.stack.push(1);
            return Some(self.stack.clone());
        }
        let last = *self.stack.last()?;
        // Extend when possible, otherwise bump the deepest bumpable entry.
        if self.stack.len() < self.max_size && last + 1 < self.n {
            self.stack.push(last + 1);
            return Some(self.stack.clone());
        }
        while let Some(top) = self.stack.pop() {
            if top + 1 < self.n {
                self.stack.push(top + 1);
                return Some(self.stack.clone());
            }
        }
        None
    }
}

fn check_cap(group: &FiniteGroup, max_size: Option<usize>) -> Result<(), ScreenError> {
    if max_size.is_none() && group.order() > ENUMERATION_ORDER_CAP {
        return Err(ScreenError::OrderCapExceeded {
            order: group.order(),
            cap: ENUMERATION_ORDER_CAP,
        });
    }
    Ok(())
}

/// Every subset of `G \ {e}` (up to `max_size` elements) that generates `G`.
pub fn enumerate_generating_sets(
    group: &FiniteGroup,
    max_size: Option<usize>,
) -> Result<impl Iterator<Item = GeneratingSet> + '_, ScreenError> {
    check_cap(group, max_size)?;
    Ok(SubsetIter::new(group.order(), max_size)
        .filter(|s| group.generates(s))
        .map(GeneratingSet::from_sorted_unchecked))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    NotGenerating,
    NotPalindrome,
    NoUniqueTop,
    NotCyclotomic,
    WrongValueAtOne,
}

impl Rejection {
    pub const ALL: [Rejection; 5] = [
        Rejection::NotGenerating,
        Rejection::NotPalindrome,
        Rejection::NoUniqueTop,
        Rejection::NotCyclotomic,
        Rejection::WrongValueAtOne,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            Rejection::NotGenerating => "does not generate",
            Rejection::NotPalindrome => "Poincaré polynomial not a palindrome",
            Rejection::NoUniqueTop => "no unique element of maximal length",
            Rejection::NotCyclotomic => "not a product of cyclotomic polynomials",
            Rejection::WrongValueAtOne => "p(1) differs from the group order",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RejectionCounts {
    pub not_generating: usize,
    pub not_palindrome: usize,
    pub no_unique_top: usize,
    pub not_cyclotomic: usize,
    pub wrong_value_at_one: usize,
}

impl RejectionCounts {
    pub fn get(&self, r: Rejection) -> usize {
        match r {
            Rejection::NotGenerating => self.not_generating,
            Rejection::NotPalindrome => self.not_palindrome,
            Rejection::NoUniqueTop => self.no_unique_top,
            Rejection::NotCyclotomic => self.not_cyclotomic,
            Rejection::WrongValueAtOne => self.wrong_value_at_one,
        }
    }

    fn bump(&mut self, r: Rejection) {
        *match r {
            Rejection::NotGenerating => &mut self.not_generating,
            Rejection::NotPalindrome => &mut self.not_palindrome,
            Rejection::NoUniqueTop => &mut self.no_unique_top,
            Rejection::NotCyclotomic => &mut self.not_cyclotomic,
            Rejection::WrongValueAtOne => &mut self.wrong_value_at_one,
        } += 1;
    }

    pub fn total(&self) -> usize {
        Rejection::ALL.iter().map(|&r| self.get(r)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateSet {
    pub members: Vec<usize>,
    pub labels: Vec<String>,
    /// The unique element of maximal length.
    pub top: usize,
    pub top_label: String,
    pub top_length: usize,
}

/// Candidate generating sets sharing one Poincaré polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateBucket {
    pub polynomial: IntSeries,
    pub certificate: CyclotomicCertificate,
    pub sets: Vec<CandidateSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreenReport {
    pub group_order: usize,
    pub max_size: Option<usize>,
    pub scanned: usize,
    /// Buckets in order of first appearance during the scan.
    pub candidates: Vec<CandidateBucket>,
    pub rejected: RejectionCounts,
}

impl ScreenReport {
    pub fn candidate_count(&self) -> usize {
        self.candidates.iter().map(|b| b.sets.len()).sum()
    }

    pub fn polynomials(&self) -> Vec<&IntSeries> {
        self.candidates.iter().map(|b| &b.polynomial).collect()
    }

    /// Re-checks the report: bucket completeness, and for each candidate
    /// palindrome, certificate, `p(1) = |G|` and `deg p = ℓ(m)`.
    pub fn verify(&self) -> Result<(), String> {
        if self.candidate_count() + self.rejected.total() != self.scanned {
            return Err(format!(
                "{} candidates + {} rejections != {} scanned",
                self.candidate_count(),
                self.rejected.total(),
                self.scanned
            ));
        }
        for b in &self.candidates {
            let p = &b.polynomial;
            if p.is_palindrome() != Ok(true) {
                return Err(format!("{p} is not a palindrome"));
            }
            if &b.certificate.expand() != p || cyclotomic_factor(p).ok().flatten().is_none() {
                return Err(format!("certificate {} does not expand to {p}", b.certificate));
            }
            if p.eval_at_one() != int(self.group_order as i64) {
                return Err(format!("{p} at 1 differs from {}", self.group_order));
            }
            if let Some(s) = b.sets.iter().find(|s| p.degree() != Some(s.top_length)) {
                return Err(format!("deg {p} != ℓ({})", s.top_label));
            }
        }
        Ok(())
    }
}

enum Verdict {
    Rejected(Rejection),
    Candidate(IntSeries, CyclotomicCertificate, CandidateSet),
}

fn evaluate(group: &FiniteGroup, subset: Vec<usize>) -> Verdict {
    if !group.generates(&subset) {
        return Verdict::Rejected(Rejection::NotGenerating);
    }
    let gens = GeneratingSet::from_sorted_unchecked(subset);
    let table = LengthTable::new(group, &gens).expect("generation checked");
    let p = table.poincare_polynomial();
    if p.is_palindrome() != Ok(true) {
        return Verdict::Rejected(Rejection::NotPalindrome);
    }
    let Some(m) = table.unique_max() else {
        return Verdict::Rejected(Rejection::NoUniqueTop);
    };
    let Ok(Some(cert)) = cyclotomic_factor(&p) else {
        return Verdict::Rejected(Rejection::NotCyclotomic);
    };
    if p.eval_at_one() != int(group.order() as i64) {
        return Verdict::Rejected(Rejection::WrongValueAtOne);
    }
    let set = CandidateSet {
        labels: gens.labels(group).into_iter().map(str::to_string).collect(),
        members: gens.members().to_vec(),
        top: m,
        top_label: group.label(m).to_string(),
        top_length: table.length(m),
    };
    Verdict::Candidate(p, cert, set)
}

/// Screens every subset of `G \ {e}` (optionally capped in size).
pub fn dual_reflection_screen(
    group: &FiniteGroup,
    max_size: Option<usize>,
) -> Result<ScreenReport, ScreenError> {
    check_cap(group, max_size)?;
    let subsets: Vec<Vec<usize>> = SubsetIter::new(group.order(), max_size).collect();
    let scanned = subsets.len();
    let verdicts: Vec<Verdict> = subsets.into_par_iter().map(|s| evaluate(group, s)).collect();

    let mut rejected = RejectionCounts::default();
    let mut candidates: Vec<CandidateBucket> = Vec::new();
    for v in verdicts {
        match v {
            Verdict::Rejected(r) => rejected.bump(r),
            Verdict::Candidate(p, certificate, set) => {
                match candidates.iter_mut().find(|b| b.polynomial == p) {
                    Some(b) => b.sets.push(set),
                    None => candidates.push(CandidateBucket { polynomial: p, certificate, sets: vec![set] }),
                }
            }
        }
    }
    Ok(ScreenReport { group_order: group.order(), max_size, scanned, candidates, rejected })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_lexicographic_order() {
        let all: Vec<Vec<usize>> = SubsetIter::new(4, None).collect();
        let expected: Vec<Vec<usize>> = vec![
            vec![1],
            vec![1, 2],
            vec![1, 2, 3],
            vec![1, 3],
            vec![2],
            vec![2, 3],
            vec![3],
        ];
        assert_eq!(all, expected);
        let capped: Vec<Vec<usize>> = SubsetIter::new(4, Some(1)).collect();
        assert_eq!(capped, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn subset_counts_match_binomials() {
        assert_eq!(SubsetIter::new(8, None).count(), 127);
        // C(9,1) + C(9,2) + C(9,3)
        assert_eq!(SubsetIter::new(10, Some(3)).count(), 9 + 36 + 84);
        assert_eq!(SubsetIter::new(1, None).count(), 0);
    }

    #[test]
    fn quaternion_generating_sets() {
        let q = FiniteGroup::quaternion();
        let sets: Vec<GeneratingSet> = enumerate_generating_sets(&q, None).unwrap().collect();
        let f = |s| q.find(s).unwrap();
        assert!(!sets.iter().any(|s| s.members() == [f("i")]));
        let mut ij = vec![f("i"), f("j")];
        ij.sort();
        assert!(sets.iter().any(|s| s.members() == ij.as_slice()));
        // Oracle: closure by brute force over all words of length ≤ 8.
        for subset in SubsetIter::new(8, None) {
            let mut reach = [false; 8];
            reach[0] = true;
            for _ in 0..8 {
                for g in 0..8 {
                    if reach[g] {
                        for &s in &subset {
                            reach[q.mul(g, s)] = true;
                        }
                    }
                }
            }
            let generates = reach.iter().all(|&r| r);
            assert_eq!(generates, sets.iter().any(|s| s.members() == subset.as_slice()));
        }
    }

    #[test]
    fn trivial_and_two_element_groups() {
        let t = FiniteGroup::trivial();
        assert_eq!(enumerate_generating_sets(&t, None).unwrap().count(), 0);
        let c2 = FiniteGroup::cyclic(2);
        let sets: Vec<_> = enumerate_generating_sets(&c2, None).unwrap().collect();
        assert_eq!(sets.len(), 1);
        let r = dual_reflection_screen(&c2, None).unwrap();
        assert_eq!(r.polynomials(), vec![&IntSeries::from_ints(&[1, 1])]);
        assert_eq!(r.candidates[0].certificate.factors, vec![(2, 1)]);
    }

    #[test]
    fn quaternion_screen() {
        let q = FiniteGroup::quaternion();
        let r = dual_reflection_screen(&q, None).unwrap();
        assert_eq!(r.scanned, 127);
        assert_eq!(r.polynomials(), vec![&IntSeries::from_ints(&[1, 3, 3, 1])]);
        assert_eq!(r.candidates[0].certificate.factors, vec![(2, 3)]);
        assert!(r.candidates[0].sets.iter().all(|s| s.members.len() == 3));
        r.verify().unwrap();
    }

    #[test]
    fn dihedral_reflections_survive() {
        let d = FiniteGroup::dihedral(4);
        let r = dual_reflection_screen(&d, None).unwrap();
        let cube = IntSeries::from_ints(&[1, 3, 3, 1]);
        let bucket = r.candidates.iter().find(|b| b.polynomial == cube).unwrap();
        assert!(bucket.sets.iter().any(|s| s.labels == ["r", "r*rho", "r*rho^2"]));
        r.verify().unwrap();
    }

    #[test]
    fn cap_is_enforced() {
        let big = FiniteGroup::cyclic(65);
        assert!(matches!(
            dual_reflection_screen(&big, None),
            Err(ScreenError::OrderCapExceeded { order: 65, cap: 64 })
        ));
        assert_eq!(dual_reflection_screen(&big, Some(1)).unwrap().scanned, 64);
    }
}
