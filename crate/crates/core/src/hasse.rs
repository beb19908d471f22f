//! Hasse algebras and skew Hasse algebras of a generating set.
//!
//! The algebra has basis `G` graded by length. The product of basis
//! elements `g` and `h` is `α(g,h)·gh` when `ℓ(gh) = ℓ(g) + ℓ(h)` and zero
//! otherwise. The plain Hasse algebra has every `α = 1`; a skew Hasse algebra
//! allows arbitrary nonzero scalars on the length-additive pairs.
//!
//! Structure constants are stored sparsely: a missing `(g, h)` key means
//! the product is zero. The zero pattern carries most of the combinatorics.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::length::{GeneratingSet, LengthError, LengthTable};
use crate::linalg::Matrix;
use crate::scalar::{frac, int, Rational};
use crate::series::IntSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HasseError {
    #[error(transparent)]
    Length(#[from] LengthError),
    #[error("weight of element {0} is zero")]
    ZeroWeight(usize),
    #[error("the identity must have weight 1")]
    IdentityWeightNotOne,
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("structure constant for ({0}, {1}) is zero; omit the entry instead")]
    ZeroStructureConstant(usize, usize),
    #[error("element index {0} is not in the group")]
    UnknownElement(usize),
}

/// A finite-dimensional graded algebra with basis `G` and exact structure
/// constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraTable {
    group: FiniteGroup,
    lengths: LengthTable,
    structure: BTreeMap<(usize, usize), Rational>,
    top: Option<usize>,
}

/// The Hasse algebra: every length-additive product has coefficient 1.
pub fn hasse_algebra(
    group: &FiniteGroup,
    gens: &GeneratingSet,
) -> Result<GradedAlgebraTable, HasseError> {
    let lengths = LengthTable::new(group, gens)?;
    Ok(GradedAlgebraTable::from_lengths(group, lengths, |_, _| Rational::one()))
}

/// The skew Hasse algebra twisted by the coboundary of `weights`:
/// `α(g,h) = λ(g)λ(h)/λ(gh)`. Such scalars always satisfy the associativity
/// identity.
pub fn skew_hasse_from_weights(
    group: &FiniteGroup,
    gens: &GeneratingSet,
    weights: &[Rational],
) -> Result<GradedAlgebraTable, HasseError> {
    let lengths = LengthTable::new(group, gens)?;
    skew_hasse_with_lengths(group, lengths, weights)
}

pub(crate) fn skew_hasse_with_lengths(
    group: &FiniteGroup,
    lengths: LengthTable,
    weights: &[Rational],
) -> Result<GradedAlgebraTable, HasseError> {
    if weights.len() != group.order() {
        return Err(HasseError::WeightCount { expected: group.order(), got: weights.len() });
    }
    if let Some(g) = weights.iter().position(Zero::is_zero) {
        return Err(HasseError::ZeroWeight(g));
    }
    if !weights[0].is_one() {
        return Err(HasseError::IdentityWeightNotOne);
    }
    Ok(GradedAlgebraTable::from_lengths(group, lengths, |g, h| {
        &weights[g] * &weights[h] / &weights[group.mul(g, h)]
    }))
}

/// Random coboundary weights with `λ(e) = 1`, drawn from a small pool of
/// nonzero rationals.
pub fn random_coboundary_weights<R: Rng + ?Sized>(order: usize, rng: &mut R) -> Vec<Rational> {
    let pool = [
        int(1),
        int(-1),
        int(2),
        int(-2),
        int(3),
        frac(1, 2),
        frac(-1, 3),
        frac(5, 2),
        frac(2, 3),
        int(-5),
    ];
    (0..order)
        .map(|g| if g == 0 { Rational::one() } else { pool.choose(rng).expect("nonempty").clone() })
        .collect()
}

impl GradedAlgebraTable {
    fn from_lengths(
        group: &FiniteGroup,
        lengths: LengthTable,
        mut alpha: impl FnMut(usize, usize) -> Rational,
    ) -> Self {
        let mut structure = BTreeMap::new();
        for g in group.elements() {
            for h in group.elements() {
                if lengths.is_length_additive(group, g, h) {
                    structure.insert((g, h), alpha(g, h));
                }
            }
        }
        let top = lengths.unique_max();
        GradedAlgebraTable { group: group.clone(), lengths, structure, top }
    }

    /// Builds a table from explicit `(g, h, α)` entries. Nothing beyond index
    /// ranges and nonzero scalars is checked here; run
    /// [`check_associativity`] and [`GradedAlgebraTable::check_grading`]
    /// before trusting the result.
    pub fn from_entries(
        group: &FiniteGroup,
        gens: &GeneratingSet,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self, HasseError> {
        let lengths = LengthTable::new(group, gens)?;
        let mut structure = BTreeMap::new();
        for (g, h, a) in entries {
            if let Some(&bad) = [g, h].iter().find(|&&x| x >= group.order()) {
                return Err(HasseError::UnknownElement(bad));
            }
            if a.is_zero() {
                return Err(HasseError::ZeroStructureConstant(g, h));
            }
            structure.insert((g, h), a);
        }
        let top = lengths.unique_max();
        Ok(GradedAlgebraTable { group: group.clone(), lengths, structure, top })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lengths(&self) -> &LengthTable {
        &self.lengths
    }

    pub fn generating_set(&self) -> &GeneratingSet {
        self.lengths.generating_set()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn degree(&self, g: usize) -> usize {
        self.lengths.length(g)
    }

    /// The unique basis element of maximal degree, if there is one.
    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn alpha(&self, g: usize, h: usize) -> Option<&Rational> {
        self.structure.get(&(g, h))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.structure.iter().map(|(&(g, h), a)| (g, h, a))
    }

    /// Overwrites (or with `None`, removes) one structure constant.
    pub fn set_alpha(&mut self, g: usize, h: usize, value: Option<Rational>) {
        match value {
            Some(a) => self.structure.insert((g, h), a),
            None => self.structure.remove(&(g, h)),
        };
    }

    /// Product of two basis elements: `Some((gh, α))` or `None` for zero.
    pub fn mul_basis(&self, g: usize, h: usize) -> Option<(usize, &Rational)> {
        self.alpha(g, h).map(|a| (self.group.mul(g, h), a))
    }

    /// Product of two elements given as coefficient vectors over the basis.
    pub fn mul_vectors(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (g, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (h, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if let Some((gh, alpha)) = self.mul_basis(g, h) {
                    out[gh] += x * y * alpha;
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, g: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[g] = Rational::one();
        v
    }

    /// Dimensions of the graded pieces, i.e. the Poincaré polynomial.
    pub fn hilbert_series(&self) -> IntSeries {
        self.lengths.poincare_polynomial()
    }

    /// Unit and grading: `α(e,g) = α(g,e) = 1`, and entries exist exactly on
    /// the length-additive pairs. Returns the first offending pair.
    pub fn check_grading(&self) -> Result<(), (usize, usize)> {
        for g in self.group.elements() {
            for h in self.group.elements() {
                let additive = self.lengths.is_length_additive(&self.group, g, h);
                match self.alpha(g, h) {
                    None if additive => return Err((g, h)),
                    Some(_) if !additive => return Err((g, h)),
                    Some(a) if (g == 0 || h == 0) && !a.is_one() => return Err((g, h)),
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

/// Compares `(g·h)·k` with `g·(h·k)` over every basis triple, zero pattern
/// included. Returns the lexicographically first failing triple.
pub fn check_associativity(a: &GradedAlgebraTable) -> Result<(), (usize, usize, usize)> {
    let grp = a.group();
    for g in grp.elements() {
        for h in grp.elements() {
            let gh = a.mul_basis(g, h);
            for k in grp.elements() {
                let left = gh.and_then(|(x, s)| a.mul_basis(x, k).map(|(y, t)| (y, s * t)));
                let right = a.mul_basis(h, k).and_then(|(x, s)| a.mul_basis(g, x).map(|(y, t)| (y, s * t)));
                if left != right {
                    return Err((g, h, k));
                }
            }
        }
    }
    Ok(())
}

/// The scalar 2-cocycle identity `α(g,h)α(gh,k) = α(h,k)α(g,hk)` on every
/// triple with `ℓ(ghk) = ℓ(g) + ℓ(h) + ℓ(k)`.
pub fn cocycle_consistency(a: &GradedAlgebraTable) -> Result<(), (usize, usize, usize)> {
    let grp = a.group();
    let len = |x| a.degree(x);
    for g in grp.elements() {
        for h in grp.elements() {
            let gh = grp.mul(g, h);
            for k in grp.elements() {
                let ghk = grp.mul(gh, k);
                if len(ghk) != len(g) + len(h) + len(k) {
                    continue;
                }
                let hk = grp.mul(h, k);
                let left = a.alpha(g, h).zip(a.alpha(gh, k)).map(|(x, y)| x * y);
                let right = a.alpha(h, k).zip(a.alpha(g, hk)).map(|(x, y)| x * y);
                if left.is_none() || left != right {
                    return Err((g, h, k));
                }
            }
        }
    }
    Ok(())
}

/// Dimensions of `F_i / F_{i-1}` for the filtration `F_i = (k·e + k·ℜ)^i` of
/// the group algebra, computed by exact rank inside `kG`. This is the
/// associated-graded construction of the Hasse algebra and does not use the
/// length table.
pub fn filtration_dimensions(group: &FiniteGroup, gens: &GeneratingSet) -> Vec<usize> {
    let n = group.order();
    let unit = {
        let mut v = vec![Rational::zero(); n];
        v[0] = Rational::one();
        v
    };
    // Right multiplication of a group-algebra vector by a group element.
    let right_mul = |v: &[Rational], s: usize| {
        let mut out = vec![Rational::zero(); n];
        for (g, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out[group.mul(g, s)] = c.clone();
        }
        out
    };
    let mut basis = vec![unit];
    let mut dims = vec![1];
    let mut prev_rank = 1;
    loop {
        let mut spanning = basis.clone();
        for v in &basis {
            for &s in gens.members() {
                spanning.push(right_mul(v, s));
            }
        }
        let mut m = Matrix::from_rows(spanning);
        let rank = m.rref().len();
        if rank == prev_rank {
            return dims;
        }
        dims.push(rank - prev_rank);
        prev_rank = rank;
        basis = (0..rank).map(|i| m.row(i).to_vec()).collect();
    }
}

/// Rank of the span of all products of `i` degree-one basis elements, for
/// each `i` up to the top degree. Equals the graded dimensions exactly when
/// the algebra is generated in degree one.
pub fn degree_one_product_ranks(a: &GradedAlgebraTable) -> Vec<usize> {
    let degree_one = a.lengths().elements_of_length(1);
    let mut ranks = vec![1];
    let mut layer: Vec<Vec<Rational>> = vec![a.basis_vector(0)];
    for _ in 1..=a.lengths().max_length() {
        let products: Vec<Vec<Rational>> = layer
            .iter()
            .flat_map(|v| degree_one.iter().map(move |&x| a.mul_vectors(v, &a.basis_vector(x))))
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .collect();
        if products.is_empty() {
            ranks.push(0);
            break;
        }
        let mut m = Matrix::from_rows(products);
        let rank = m.rref().len();
        ranks.push(rank);
        layer = (0..rank).map(|i| m.row(i).to_vec()).collect();
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> (FiniteGroup, GeneratingSet) {
        let q = FiniteGroup::quaternion();
        let gens = GeneratingSet::from_labels(&q, &["i", "j", "-j"]).unwrap();
        (q, gens)
    }

    /// Product in the Hasse algebra as a label, or "0".
    fn prod(a: &GradedAlgebraTable, x: &str, y: &str) -> String {
        let g = a.group();
        match a.mul_basis(g.find(x).unwrap(), g.find(y).unwrap()) {
            Some((z, s)) => {
                assert!(s.is_one());
                g.label(z).to_string()
            }
            None => "0".to_string(),
        }
    }

    #[test]
    fn quaternion_table_samples() {
        let (q, gens) = q8();
        let a = hasse_algebra(&q, &gens).unwrap();
        // x1 = i, x2 = j, x3 = -j, y1 = k, y2 = -k, y3 = -1, z = -i.
        assert_eq!(prod(&a, "j", "i"), "-k");
        assert_eq!(prod(&a, "i", "-1"), "-i");
        assert_eq!(prod(&a, "k", "i"), "0");
        assert_eq!(a.top(), q.find("-i"));
    }

    #[test]
    fn symmetric_table_samples() {
        let s3 = FiniteGroup::symmetric(3, 10).unwrap();
        let gens = GeneratingSet::from_labels(&s3, &["(12)", "(23)"]).unwrap();
        let a = hasse_algebra(&s3, &gens).unwrap();
        assert_eq!(prod(&a, "(12)", "(12)"), "0");
        assert_eq!(prod(&a, "(12)", "(23)"), "(123)");
        assert_eq!(prod(&a, "(132)", "(23)"), "(13)");
    }

    #[test]
    fn trivial_algebra() {
        let g = FiniteGroup::trivial();
        let a = hasse_algebra(&g, &GeneratingSet::new(&g, []).unwrap()).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.mul_basis(0, 0), Some((0, &Rational::one())));
        assert_eq!(a.top(), Some(0));
    }

    #[test]
    fn hasse_tables_are_associative() {
        let (q, gens) = q8();
        let a = hasse_algebra(&q, &gens).unwrap();
        assert_eq!(check_associativity(&a), Ok(()));
        assert_eq!(cocycle_consistency(&a), Ok(()));
        assert_eq!(a.check_grading(), Ok(()));
        let s3 = FiniteGroup::symmetric(3, 10).unwrap();
        let gens = GeneratingSet::from_labels(&s3, &["(12)", "(23)"]).unwrap();
        assert_eq!(check_associativity(&hasse_algebra(&s3, &gens).unwrap()), Ok(()));
    }

    #[test]
    fn corruption_on_non_additive_pair_is_caught() {
        let (q, gens) = q8();
        let mut a = hasse_algebra(&q, &gens).unwrap();
        let (x1, y1) = (q.find("i").unwrap(), q.find("k").unwrap());
        // x1·y1 is zero in the Hasse algebra; force it nonzero.
        assert!(a.alpha(x1, y1).is_none());
        a.set_alpha(x1, y1, Some(int(1)));
        assert!(check_associativity(&a).is_err());
        assert_eq!(a.check_grading(), Err((x1, y1)));
    }

    #[test]
    fn corrupted_cocycle_is_caught_by_both_scans() {
        let (q, gens) = q8();
        let mut a = hasse_algebra(&q, &gens).unwrap();
        let (x1, x2) = (q.find("i").unwrap(), q.find("j").unwrap());
        a.set_alpha(x1, x2, Some(int(3)));
        let brute = {
            // Independent exhaustive scan over length-additive triples.
            let grp = a.group().clone();
            let mut first = None;
            'outer: for g in grp.elements() {
                for h in grp.elements() {
                    for k in grp.elements() {
                        let l = |x| a.degree(x);
                        if l(grp.mul(grp.mul(g, h), k)) != l(g) + l(h) + l(k) {
                            continue;
                        }
                        let lhs = a.alpha(g, h).unwrap() * a.alpha(grp.mul(g, h), k).unwrap();
                        let rhs = a.alpha(h, k).unwrap() * a.alpha(g, grp.mul(h, k)).unwrap();
                        if lhs != rhs {
                            first = Some((g, h, k));
                            break 'outer;
                        }
                    }
                }
            }
            first
        };
        assert!(brute.is_some());
        assert_eq!(cocycle_consistency(&a).err(), brute);
        assert!(check_associativity(&a).is_err());
    }

    #[test]
    fn trivial_weights_give_the_hasse_algebra() {
        let (q, gens) = q8();
        let ones = vec![Rational::one(); 8];
        assert_eq!(skew_hasse_from_weights(&q, &gens, &ones).unwrap(), hasse_algebra(&q, &gens).unwrap());
    }

    #[test]
    fn single_weight_twist() {
        let (q, gens) = q8();
        let mut w = vec![Rational::one(); 8];
        let (x1, x2, y1) = (q.find("i").unwrap(), q.find("j").unwrap(), q.find("k").unwrap());
        w[x1] = int(2);
        w[y1] = int(5);
        let a = skew_hasse_from_weights(&q, &gens, &w).unwrap();
        assert_eq!(a.alpha(x1, x2), Some(&frac(2, 5)));
        assert_eq!(check_associativity(&a), Ok(()));
        assert_eq!(cocycle_consistency(&a), Ok(()));
    }

    #[test]
    fn length_power_weights_cancel() {
        let d = FiniteGroup::dihedral(5);
        let gens = GeneratingSet::from_labels(&d, &["r", "r*rho"]).unwrap();
        let lengths = LengthTable::new(&d, &gens).unwrap();
        let c = frac(-3, 7);
        let w: Vec<Rational> = d.elements().map(|g| num::pow(c.clone(), lengths.length(g))).collect();
        let a = skew_hasse_from_weights(&d, &gens, &w).unwrap();
        assert!(a.entries().all(|(_, _, s)| s.is_one()));
    }

    #[test]
    fn weight_errors() {
        let (q, gens) = q8();
        let mut w = vec![Rational::one(); 8];
        w[3] = Rational::zero();
        assert_eq!(skew_hasse_from_weights(&q, &gens, &w), Err(HasseError::ZeroWeight(3)));
        let mut w = vec![Rational::one(); 8];
        w[0] = int(2);
        assert_eq!(skew_hasse_from_weights(&q, &gens, &w), Err(HasseError::IdentityWeightNotOne));
        assert!(matches!(
            hasse_algebra(&q, &GeneratingSet::from_labels(&q, &["i"]).unwrap()),
            Err(HasseError::Length(LengthError::DoesNotGenerate(_)))
        ));
    }

    #[test]
    fn filtration_matches_lengths() {
        let (q, gens) = q8();
        assert_eq!(filtration_dimensions(&q, &gens), vec![1, 3, 3, 1]);
        let s3 = FiniteGroup::symmetric(3, 10).unwrap();
        let gens = GeneratingSet::from_labels(&s3, &["(12)", "(23)"]).unwrap();
        assert_eq!(filtration_dimensions(&s3, &gens), vec![1, 2, 2, 1]);
    }

    #[test]
    fn generated_in_degree_one() {
        let (q, gens) = q8();
        let a = hasse_algebra(&q, &gens).unwrap();
        assert_eq!(degree_one_product_ranks(&a), a.lengths().level_sizes());
    }
}
