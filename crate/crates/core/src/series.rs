//! Exact polynomials and truncated power series with rational coefficients,
//! cyclotomic polynomials, and cyclotomic factorization certificates.

use std::fmt;

use num::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::scalar::{self, int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("operation needs a polynomial, got a series truncated at order {0}")]
    TruncatedInput(usize),
    #[error("the denominator has zero constant term")]
    ZeroConstantTerm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "order")]
pub enum SeriesKind {
    Polynomial,
    /// Known exactly through `t^N`; nothing is known beyond.
    Truncated(usize),
}

/// Coefficients indexed by degree, lowest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntSeries {
    #[serde(with = "scalar::vec")]
    coeffs: Vec<Rational>,
    kind: SeriesKind,
}

impl IntSeries {
    /// Trailing zeros are dropped, so the leading coefficient is nonzero
    /// unless the polynomial is zero (empty coefficient list).
    pub fn polynomial(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntSeries { coeffs, kind: SeriesKind::Polynomial }
    }

    /// Keeps coefficients of `t^0..=t^order`, zero-padding as needed.
    pub fn truncated(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        IntSeries { coeffs, kind: SeriesKind::Truncated(order) }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::polynomial(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::polynomial(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = int(-1);
        c[n] += int(1);
        Self::polynomial(c)
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn is_polynomial(&self) -> bool {
        self.kind == SeriesKind::Polynomial
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero past the end of a polynomial.
    ///
    /// Panics when asking a truncated series for a coefficient it does not
    /// know.
    pub fn coeff(&self, k: usize) -> Rational {
        if let SeriesKind::Truncated(n) = self.kind {
            assert!(k <= n, "coefficient t^{k} is beyond truncation order {n}");
        }
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Degree of a nonzero polynomial (highest nonzero coefficient for a
    /// truncated series).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.degree().map(|d| &self.coeffs[d])
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &IntSeries) -> IntSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|k| {
                self.coeffs.get(k).cloned().unwrap_or_default()
                    + other.coeffs.get(k).cloned().unwrap_or_default()
            })
            .collect();
        self.with_kind_of(other, c)
    }

    pub fn neg(&self) -> IntSeries {
        IntSeries { coeffs: self.coeffs.iter().map(|c| -c).collect(), kind: self.kind }
    }

    pub fn sub(&self, other: &IntSeries) -> IntSeries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return self.with_kind_of(other, Vec::new());
        }
        let cap = self.combined_order(other).map_or(usize::MAX, |n| n + 1);
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(cap);
        let mut c = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        self.with_kind_of(other, c)
    }

    pub fn scale(&self, s: &Rational) -> IntSeries {
        IntSeries { coeffs: self.coeffs.iter().map(|c| c * s).collect(), kind: self.kind }
            .normalized()
    }

    pub fn pow(&self, k: usize) -> IntSeries {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Re-reads the coefficients as a series truncated at `order`.
    pub fn truncate(&self, order: usize) -> IntSeries {
        let order = match self.kind {
            SeriesKind::Truncated(n) => order.min(n),
            SeriesKind::Polynomial => order,
        };
        let mut c = self.coeffs.clone();
        c.truncate(order + 1);
        Self::truncated(c, order)
    }

    /// Exact polynomial long division. Panics on division by zero.
    pub fn div_rem(&self, divisor: &IntSeries) -> Result<(IntSeries, IntSeries), SeriesError> {
        self.require_polynomial()?;
        divisor.require_polynomial()?;
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = &rem[k + d] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        Ok((Self::polynomial(quot), Self::polynomial(rem)))
    }

    /// Quotient when `divisor` divides exactly.
    pub fn exact_div(&self, divisor: &IntSeries) -> Result<Option<IntSeries>, SeriesError> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// A polynomial is a palindrome when `a_i = a_{n-i}` for `n = deg p`.
    pub fn is_palindrome(&self) -> Result<bool, SeriesError> {
        self.require_polynomial()?;
        let c = &self.coeffs;
        Ok((0..c.len() / 2).all(|i| c[i] == c[c.len() - 1 - i]))
    }

    fn require_polynomial(&self) -> Result<(), SeriesError> {
        match self.kind {
            SeriesKind::Polynomial => Ok(()),
            SeriesKind::Truncated(n) => Err(SeriesError::TruncatedInput(n)),
        }
    }

    fn combined_order(&self, other: &IntSeries) -> Option<usize> {
        match (self.kind, other.kind) {
            (SeriesKind::Polynomial, SeriesKind::Polynomial) => None,
            (SeriesKind::Truncated(n), SeriesKind::Polynomial)
            | (SeriesKind::Polynomial, SeriesKind::Truncated(n)) => Some(n),
            (SeriesKind::Truncated(a), SeriesKind::Truncated(b)) => Some(a.min(b)),
        }
    }

    fn with_kind_of(&self, other: &IntSeries, coeffs: Vec<Rational>) -> IntSeries {
        match self.combined_order(other) {
            None => Self::polynomial(coeffs),
            Some(n) => Self::truncated(coeffs, n),
        }
    }

    fn normalized(self) -> IntSeries {
        match self.kind {
            SeriesKind::Polynomial => Self::polynomial(self.coeffs),
            SeriesKind::Truncated(_) => self,
        }
    }
}

/// Quotient `numer / denom` as a power series truncated at `order`.
pub fn series_div(
    numer: &IntSeries,
    denom: &IntSeries,
    order: usize,
) -> Result<IntSeries, SeriesError> {
    let b0 = denom.coeffs.first().filter(|c| !c.is_zero()).ok_or(SeriesError::ZeroConstantTerm)?;
    let b0_inv = b0.recip();
    let known = |s: &IntSeries, k: usize| match s.kind {
        SeriesKind::Truncated(n) if k > n => None,
        _ => Some(s.coeffs.get(k).cloned().unwrap_or_default()),
    };
    // A truncated input limits how far the quotient is determined.
    let order = [numer, denom]
        .iter()
        .filter_map(|s| match s.kind {
            SeriesKind::Truncated(n) => Some(n),
            SeriesKind::Polynomial => None,
        })
        .fold(order, usize::min);
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = known(numer, k).expect("within truncation");
        for j in 1..=k {
            let b = known(denom, j).expect("within truncation");
            if !b.is_zero() {
                acc -= b * &out[k - j];
            }
        }
        out.push(acc * &b0_inv);
    }
    Ok(IntSeries::truncated(out, order))
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = scalar::format_rational(&mag);
            match (k, mag.is_one()) {
                (0, _) => f.write_str(&coeff)?,
                (_, true) => {}
                (_, false) => f.write_str(&coeff)?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        if let SeriesKind::Truncated(n) = self.kind {
            write!(f, " + O(t^{})", n + 1)?;
        }
        Ok(())
    }
}

/// The `n`-th cyclotomic polynomial, from
/// `Φ_n(t) = (t^n - 1) / Π_{d | n, d < n} Φ_d(t)`.
pub fn cyclotomic(n: usize) -> IntSeries {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let mut table: Vec<IntSeries> = vec![IntSeries::zero(); n + 1];
    for k in divisors(n) {
        let mut p = IntSeries::t_pow_minus_one(k);
        for d in divisors(k).into_iter().filter(|&d| d < k) {
            p = p.exact_div(&table[d]).expect("polynomials").expect("Φ_d divides t^k - 1");
        }
        table[k] = p;
    }
    table.swap_remove(n)
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `p = scalar · Π Φ_n^{multiplicity}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicCertificate {
    /// `(n, multiplicity)` pairs in increasing `n`.
    pub factors: Vec<(usize, usize)>,
    #[serde(with = "scalar")]
    pub scalar: Rational,
}

impl CyclotomicCertificate {
    pub fn expand(&self) -> IntSeries {
        let mut p = IntSeries::polynomial(vec![self.scalar.clone()]);
        for &(n, mult) in &self.factors {
            p = p.mul(&cyclotomic(n).pow(mult));
        }
        p
    }
}

impl fmt::Display for CyclotomicCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scalar.is_one() || self.factors.is_empty() {
            write!(f, "{}", scalar::format_rational(&self.scalar))?;
        }
        for (i, &(n, m)) in self.factors.iter().enumerate() {
            if i > 0 || !self.scalar.is_one() {
                f.write_str("·")?;
            }
            if m == 1 {
                write!(f, "Φ{n}")?;
            } else {
                write!(f, "Φ{n}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Writes `p` as a scalar times a product of cyclotomic polynomials, by
/// repeated exact trial division over every `n` with `φ(n) ≤ deg p`.
/// Returns `None` when no such factorization exists.
pub fn cyclotomic_factor(p: &IntSeries) -> Result<Option<CyclotomicCertificate>, SeriesError> {
    p.require_polynomial()?;
    let Some(deg) = p.degree() else {
        return Ok(None);
    };
    // φ(n) ≥ sqrt(n/2), so φ(n) ≤ deg forces n ≤ 2·deg².
    let candidates: Vec<usize> =
        (1..=2 * deg * deg + 1).filter(|&n| euler_phi(n) <= deg).collect();
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for n in candidates {
        let remaining = rest.degree().expect("nonzero");
        if remaining == 0 {
            break;
        }
        if euler_phi(n) > remaining {
            continue;
        }
        let phi = cyclotomic(n);
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&phi)? {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((n, mult));
        }
    }
    if rest.degree() != Some(0) {
        return Ok(None);
    }
    Ok(Some(CyclotomicCertificate { factors, scalar: rest.coeffs[0].clone() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntSeries {
        IntSeries::from_ints(c)
    }

    #[test]
    fn palindromes() {
        assert_eq!(poly(&[1, 3, 3, 1]).is_palindrome(), Ok(true));
        assert_eq!(poly(&[1]).is_palindrome(), Ok(true));
        assert_eq!(poly(&[1, 2]).is_palindrome(), Ok(false));
        let trunc = poly(&[1, 1]).truncate(4);
        assert_eq!(trunc.is_palindrome(), Err(SeriesError::TruncatedInput(4)));
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic(2), poly(&[1, 1]));
        assert_eq!(cyclotomic(4), poly(&[1, 0, 1]));
    }

    #[test]
    fn sixth_cyclotomic_by_hand_division() {
        // (t^6 - 1) / ((t - 1)(t + 1)(t^2 + t + 1)), divided out one factor
        // at a time.
        let mut p = IntSeries::t_pow_minus_one(6);
        for d in [poly(&[-1, 1]), poly(&[1, 1]), poly(&[1, 1, 1])] {
            p = p.exact_div(&d).unwrap().unwrap();
        }
        assert_eq!(p, poly(&[1, -1, 1]));
        assert_eq!(cyclotomic(6), p);
    }

    #[test]
    fn factor_examples() {
        let cube = cyclotomic_factor(&poly(&[1, 3, 3, 1])).unwrap().unwrap();
        assert_eq!(cube.factors, vec![(2, 3)]);
        assert_eq!(cube.scalar, int(1));

        assert_eq!(cyclotomic_factor(&poly(&[1, 2])).unwrap(), None);

        // (t + 1)(t^2 + t + 1) = 1 + 2t + 2t^2 + t^3.
        let candidate = poly(&[1, 1]).mul(&poly(&[1, 1, 1]));
        assert_eq!(candidate, poly(&[1, 2, 2, 1]));
        let cert = cyclotomic_factor(&candidate).unwrap().unwrap();
        assert_eq!(cert.factors, vec![(2, 1), (3, 1)]);
        assert_eq!(cert.expand(), candidate);

        let scaled = cyclotomic_factor(&poly(&[-3, 3])).unwrap().unwrap();
        assert_eq!(scaled.factors, vec![(1, 1)]);
        assert_eq!(scaled.scalar, int(3));

        assert_eq!(cyclotomic_factor(&IntSeries::zero()).unwrap(), None);
        let constant = cyclotomic_factor(&poly(&[5])).unwrap().unwrap();
        assert!(constant.factors.is_empty());
    }

    #[test]
    fn series_division_examples() {
        let one_minus_t_sq_cubed = poly(&[1, 0, -1]).pow(3);
        let one_minus_t_cubed = poly(&[1, -1]).pow(3);
        let q = series_div(&one_minus_t_sq_cubed, &one_minus_t_cubed, 5).unwrap();
        assert_eq!(q, IntSeries::truncated(poly(&[1, 3, 3, 1]).coeffs().to_vec(), 5));

        let p = poly(&[2, 0, 7]);
        assert_eq!(series_div(&p, &IntSeries::one(), 4).unwrap(), p.truncate(4));

        let geo = series_div(&IntSeries::one(), &poly(&[1, -1]), 3).unwrap();
        assert_eq!(geo, poly(&[1, 1, 1, 1]).truncate(3));

        assert_eq!(series_div(&p, &poly(&[0, 1]), 3), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 3, 3, 1]).to_string(), "1 + 3t + 3t^2 + t^3");
        assert_eq!(poly(&[0, -1, 0, 2]).to_string(), "-t + 2t^3");
        assert_eq!(IntSeries::zero().to_string(), "0");
        assert_eq!(poly(&[1, 1]).truncate(2).to_string(), "1 + t + O(t^3)");
        let cert = CyclotomicCertificate { factors: vec![(2, 3)], scalar: int(1) };
        assert_eq!(cert.to_string(), "Φ2^3");
        let half = IntSeries::polynomial(vec![frac(1, 2)]);
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn cyclotomic_values_at_one() {
        fn prime_power_base(n: usize) -> Option<usize> {
            let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
            let mut m = n;
            while m.is_multiple_of(p) {
                m /= p;
            }
            (m == 1).then_some(p)
        }
        for n in 2..=30 {
            let expected = prime_power_base(n).unwrap_or(1);
            assert_eq!(cyclotomic(n).eval_at_one(), int(expected as i64), "n = {n}");
        }
    }

    #[test]
    fn euler_phi_small() {
        let brute = |n: usize| (1..=n).filter(|&k| num::integer::gcd(n, k) == 1).count();
        for n in 1..50 {
            assert_eq!(euler_phi(n), brute(n));
        }
    }

    fn small_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-4i64..=4, 1..5)
    }

    proptest! {
        #[test]
        fn certificates_expand_back(factors in prop::collection::vec((1usize..13, 1usize..3), 0..4), c in 1i64..4) {
            let mut p = IntSeries::from_ints(&[c]);
            for &(n, m) in &factors {
                p = p.mul(&cyclotomic(n).pow(m));
            }
            let cert = cyclotomic_factor(&p).unwrap().expect("built from cyclotomics");
            prop_assert_eq!(cert.expand(), p.clone());
            // Products of cyclotomics other than Φ1 are palindromes.
            if factors.iter().all(|&(n, _)| n > 1) {
                prop_assert!(p.is_palindrome().unwrap());
            }
        }

        #[test]
        fn series_division_inverts_multiplication(a in small_poly(), mut b in small_poly(), n in 0usize..8) {
            if b[0] == 0 { b[0] = 1; }
            let (a, b) = (IntSeries::from_ints(&a), IntSeries::from_ints(&b));
            let q = series_div(&a.mul(&b), &b, n).unwrap();
            prop_assert_eq!(q, a.truncate(n));
        }
    }
}
