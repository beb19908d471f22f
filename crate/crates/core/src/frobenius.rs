//! Frobenius structure of (skew) Hasse algebras.
//!
//! The bilinear form is `⟨a, b⟩ = coefficient of m in ab`, where `m` is the
//! unique basis element of maximal degree. When it is nondegenerate the
//! algebra is Frobenius, and the graded Nakayama automorphism `μ` is the
//! linear map with `⟨a, b⟩ = ⟨μ(b), a⟩`. Writing `P` for the pairing matrix
//! and `N` for the matrix of `μ`, that identity reads `P = Pᵀ N`, which is
//! solved exactly. The solution is then checked to be monomial,
//! degree-preserving and multiplicative rather than assumed to be.

use std::fmt;

use num::{BigUint, Integer, One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::hasse::GradedAlgebraTable;
use crate::linalg::Matrix;
use crate::scalar::{self, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrobeniusError {
    #[error("no unique element of maximal length, so the Poincaré polynomial is not a palindrome")]
    NoUniqueTop,
    #[error("the top-degree pairing is degenerate")]
    NotFrobenius,
    #[error("Nakayama map is not monomial on basis element {0}")]
    NotMonomial(usize),
    #[error("Nakayama map changes the degree of basis element {0}")]
    NotLengthPreserving(usize),
    #[error("Nakayama map is not multiplicative on ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("β({g}) from the linear solve is {solved}, closed formula gives {formula}")]
    FormulaMismatch { g: usize, solved: String, formula: String },
    #[error("β(m) = {0}, expected 1")]
    BetaOfTopNotOne(String),
    #[error("β({gh}) != β({g})·β({h}) although m commutes with {g} and {h}")]
    BetaNotMultiplicative { g: usize, h: usize, gh: usize },
}

/// `entries[g][h]` is the coefficient of the top element in `g·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    top: usize,
    entries: Matrix,
}

impl PairingMatrix {
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn get(&self, g: usize, h: usize) -> &Rational {
        &self.entries[(g, h)]
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.entries.rank() == self.entries.rows()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.is_symmetric()
    }

    /// For each row `g`, the unique column with a nonzero entry, when every
    /// row and every column has exactly one nonzero entry.
    pub fn permutation_pattern(&self) -> Option<Vec<usize>> {
        let n = self.entries.rows();
        let mut partner = Vec::with_capacity(n);
        let mut col_hits = vec![0usize; n];
        for g in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&h| !self.entries[(g, h)].is_zero()).collect();
            let [h] = nz.as_slice() else {
                return None;
            };
            col_hits[*h] += 1;
            partner.push(*h);
        }
        col_hits.iter().all(|&c| c == 1).then_some(partner)
    }
}

/// A basis map `g ↦ scalars[g] · perm[g]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAutomorphism {
    perm: Vec<usize>,
    scalars: Vec<Rational>,
}

impl MonomialAutomorphism {
    pub fn identity(n: usize) -> Self {
        MonomialAutomorphism { perm: (0..n).collect(), scalars: vec![Rational::one(); n] }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[Rational] {
        &self.scalars
    }

    pub fn apply(&self, g: usize) -> (usize, &Rational) {
        (self.perm[g], &self.scalars[g])
    }

    /// Order of the underlying permutation restricted to `subset`, which must
    /// be invariant.
    pub fn permutation_order_on(&self, subset: &[usize]) -> usize {
        cycles_of(&self.perm, subset).iter().map(Vec::len).fold(1, |acc, l| acc.lcm(&l))
    }

    /// Cycle notation using group labels, fixed points omitted.
    pub fn cycle_notation(&self, group: &FiniteGroup) -> String {
        let all: Vec<usize> = (0..self.perm.len()).collect();
        let cycles: Vec<String> = cycles_of(&self.perm, &all)
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&g| group.label(g)).collect();
                format!("({})", names.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            "()".to_string()
        } else {
            cycles.join("")
        }
    }
}

fn cycles_of(perm: &[usize], subset: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for &start in subset {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = perm[x];
        }
        cycles.push(c);
    }
    cycles
}

pub fn top_pairing(a: &GradedAlgebraTable) -> Result<PairingMatrix, FrobeniusError> {
    let m = a.top().ok_or(FrobeniusError::NoUniqueTop)?;
    let n = a.dim();
    let mut entries = Matrix::zeros(n, n);
    for (g, h, alpha) in a.entries() {
        if a.group().mul(g, h) == m {
            entries[(g, h)] = alpha.clone();
        }
    }
    Ok(PairingMatrix { top: m, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrobeniusStatus {
    Frobenius,
    NoUniqueTop,
    DegeneratePairing,
}

pub fn frobenius_status(a: &GradedAlgebraTable) -> FrobeniusStatus {
    match top_pairing(a) {
        Err(_) => FrobeniusStatus::NoUniqueTop,
        Ok(p) if p.is_nondegenerate() => FrobeniusStatus::Frobenius,
        Ok(_) => FrobeniusStatus::DegeneratePairing,
    }
}

pub fn is_frobenius(a: &GradedAlgebraTable) -> bool {
    frobenius_status(a) == FrobeniusStatus::Frobenius
}

/// The graded Nakayama automorphism, verified monomial, degree-preserving
/// and multiplicative.
pub fn nakayama(a: &GradedAlgebraTable) -> Result<MonomialAutomorphism, FrobeniusError> {
    let p = top_pairing(a)?;
    let n = a.dim();
    if n == 1 {
        return Ok(MonomialAutomorphism::identity(1));
    }
    let nak = p.entries.transpose().solve(&p.entries).ok_or(FrobeniusError::NotFrobenius)?;
    let mut perm = Vec::with_capacity(n);
    let mut scalars = Vec::with_capacity(n);
    for b in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&c| !nak[(c, b)].is_zero()).collect();
        let [c] = nz.as_slice() else {
            return Err(FrobeniusError::NotMonomial(b));
        };
        perm.push(*c);
        scalars.push(nak[(*c, b)].clone());
    }
    let mu = MonomialAutomorphism { perm, scalars };
    check_automorphism(a, &mu)?;
    Ok(mu)
}

fn check_automorphism(a: &GradedAlgebraTable, mu: &MonomialAutomorphism) -> Result<(), FrobeniusError> {
    let grp = a.group();
    for g in grp.elements() {
        if a.degree(mu.perm[g]) != a.degree(g) {
            return Err(FrobeniusError::NotLengthPreserving(g));
        }
    }
    // μ(g)μ(h) = μ(g·h) on every pair of basis elements.
    for g in grp.elements() {
        for h in grp.elements() {
            let (pg, sg) = mu.apply(g);
            let (ph, sh) = mu.apply(h);
            let left = a.mul_basis(pg, ph).map(|(x, al)| (x, sg * sh * al));
            let right = a.mul_basis(g, h).map(|(gh, al)| {
                let (pgh, sgh) = mu.apply(gh);
                (pgh, al * sgh)
            });
            if left != right {
                return Err(FrobeniusError::NotMultiplicative(g, h));
            }
        }
    }
    Ok(())
}

/// The Nakayama permutation is `g ↦ m g m⁻¹`, and composing it with
/// `g ↦ m⁻¹ g m` gives the identity on basis labels.
pub fn check_nakayama_is_conjugation(a: &GradedAlgebraTable) -> Result<bool, FrobeniusError> {
    let mu = nakayama(a)?;
    Ok(permutation_is_conjugation(a, &mu))
}

fn permutation_is_conjugation(a: &GradedAlgebraTable, mu: &MonomialAutomorphism) -> bool {
    let grp = a.group();
    let m = a.top().expect("Frobenius algebras have a top element");
    let m_inv = grp.inv(m);
    grp.elements().all(|g| mu.perm[g] == grp.conjugate(m, g))
        && grp.elements().all(|g| mu.perm[grp.conjugate(m_inv, g)] == g)
}

/// Symmetric means the pairing matrix is symmetric.
pub fn is_symmetric_frobenius(a: &GradedAlgebraTable) -> Result<bool, FrobeniusError> {
    let p = top_pairing(a)?;
    if !p.is_nondegenerate() {
        return Err(FrobeniusError::NotFrobenius);
    }
    Ok(p.is_symmetric())
}

/// Order of the Nakayama permutation on the degree-one basis elements, and
/// `a` = the number of those elements.
pub fn degree_one_nakayama_order(a: &GradedAlgebraTable) -> Result<(usize, usize), FrobeniusError> {
    let mu = nakayama(a)?;
    let degree_one = a.lengths().elements_of_length(1);
    Ok((mu.permutation_order_on(&degree_one), degree_one.len()))
}

pub fn nakayama_order_divides_factorial(a: &GradedAlgebraTable) -> Result<bool, FrobeniusError> {
    let (order, count) = degree_one_nakayama_order(a)?;
    Ok(factorial(count).is_multiple_of(&BigUint::from(order)))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `β` with `μ(g) = β(g)·m g m⁻¹`, read off the linear solve and checked
/// against `β(g) = α(m g⁻¹, g) / α(m g m⁻¹, m g⁻¹)`. Also checks `β(m) = 1`
/// and `β(gh) = β(g)β(h)` whenever `m` commutes with `g` and `h` and the
/// lengths of `g` and `h` add.
pub fn beta_scalars(a: &GradedAlgebraTable) -> Result<Vec<Rational>, FrobeniusError> {
    let mu = nakayama(a)?;
    beta_from_nakayama(a, &mu)
}

fn beta_from_nakayama(
    a: &GradedAlgebraTable,
    mu: &MonomialAutomorphism,
) -> Result<Vec<Rational>, FrobeniusError> {
    let grp = a.group();
    let m = a.top().expect("Frobenius algebras have a top element");
    let beta = mu.scalars.clone();
    for g in grp.elements() {
        let formula = beta_closed_form(a, m, g);
        if formula.as_ref() != Some(&beta[g]) {
            return Err(FrobeniusError::FormulaMismatch {
                g,
                solved: scalar::format_rational(&beta[g]),
                formula: formula.map_or("undefined".into(), |f| scalar::format_rational(&f)),
            });
        }
    }
    if !beta[m].is_one() {
        return Err(FrobeniusError::BetaOfTopNotOne(scalar::format_rational(&beta[m])));
    }
    for g in grp.elements().filter(|&g| grp.commutes(m, g)) {
        for h in grp.elements().filter(|&h| grp.commutes(m, h)) {
            let gh = grp.mul(g, h);
            if a.lengths().is_length_additive(grp, g, h) && beta[gh] != &beta[g] * &beta[h] {
                return Err(FrobeniusError::BetaNotMultiplicative { g, h, gh });
            }
        }
    }
    Ok(beta)
}

/// `α(m g⁻¹, g) · α(m g m⁻¹, m g⁻¹)⁻¹`, or `None` if a factor is missing.
pub fn beta_closed_form(a: &GradedAlgebraTable, m: usize, g: usize) -> Option<Rational> {
    let grp = a.group();
    let mg_inv = grp.mul(m, grp.inv(g));
    let conj = grp.conjugate(m, g);
    let num = a.alpha(mg_inv, g)?;
    let den = a.alpha(conj, mg_inv)?;
    Some(num / den)
}

/// Everything the `frobenius` report needs about one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAnalysis {
    pub status: FrobeniusStatus,
    pub top: Option<usize>,
    pub symmetric: Option<bool>,
    pub nakayama: Option<MonomialAutomorphism>,
    pub beta: Option<Vec<Rational>>,
    /// For each basis element `g`, the unique `h` with `⟨g, h⟩ ≠ 0`.
    pub pairing_partner: Option<Vec<usize>>,
    pub is_conjugation: Option<bool>,
    pub degree_one_order: Option<(usize, usize)>,
}

pub fn analyze(a: &GradedAlgebraTable) -> Result<FrobeniusAnalysis, FrobeniusError> {
    let status = frobenius_status(a);
    let mut out = FrobeniusAnalysis {
        status,
        top: a.top(),
        symmetric: None,
        nakayama: None,
        beta: None,
        pairing_partner: None,
        is_conjugation: None,
        degree_one_order: None,
    };
    if status != FrobeniusStatus::Frobenius {
        return Ok(out);
    }
    let p = top_pairing(a)?;
    out.symmetric = Some(p.is_symmetric());
    out.pairing_partner = p.permutation_pattern();
    let mu = nakayama(a)?;
    out.beta = Some(beta_from_nakayama(a, &mu)?);
    out.is_conjugation = Some(permutation_is_conjugation(a, &mu));
    let degree_one = a.lengths().elements_of_length(1);
    out.degree_one_order = Some((mu.permutation_order_on(&degree_one), degree_one.len()));
    out.nakayama = Some(mu);
    Ok(out)
}

impl fmt::Display for FrobeniusStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrobeniusStatus::Frobenius => "frobenius",
            FrobeniusStatus::NoUniqueTop => "no unique top element",
            FrobeniusStatus::DegeneratePairing => "degenerate pairing",
        })
    }
}
