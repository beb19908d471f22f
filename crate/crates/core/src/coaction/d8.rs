//! The builtin model: generators `x < z < y` with
//!
//! ```text
//! zx = q·xz,   yx = a·zy,   yz = xy
//! ```
//!
//! graded by the dihedral group of order 8 with `x ↦ r`, `y ↦ rρ`,
//! `z ↦ rρ²`. Rewriting is confluent exactly when `q² = 1`: the overlap
//! `yzx` reduces to `a·xzy` one way and `a·q²·xzy` the other.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::group::FiniteGroup;
use crate::scalar::{format_rational, Rational};

use super::{CoactionError, CoactionModel, Generator, Rule};

pub const X: usize = 0;
pub const Z: usize = 1;
pub const Y: usize = 2;

pub fn d8_model(q: &Rational, a: &Rational) -> Result<CoactionModel, CoactionError> {
    if !(q * q).is_one() {
        return Err(CoactionError::BadParameter(format!("q = {} must satisfy q^2 = 1", format_rational(q))));
    }
    if a.is_zero() {
        return Err(CoactionError::BadParameter("a must be nonzero".into()));
    }
    d8_model_unchecked(q, a)
}

/// Same rules without the parameter checks, for exhibiting what goes wrong
/// when `q² ≠ 1`.
pub fn d8_model_unchecked(q: &Rational, a: &Rational) -> Result<CoactionModel, CoactionError> {
    let group = FiniteGroup::dihedral(4);
    let degree = |label: &str| group.find(label).expect("dihedral label");
    let generators = vec![
        Generator { label: "x".into(), g_degree: degree("r") },
        Generator { label: "z".into(), g_degree: degree("r*rho^2") },
        Generator { label: "y".into(), g_degree: degree("r*rho") },
    ];
    let rules = BTreeMap::from([
        ((Z, X), Rule { scalar: q.clone(), pair: (X, Z) }),
        ((Y, X), Rule { scalar: a.clone(), pair: (Z, Y) }),
        ((Y, Z), Rule { scalar: Rational::one(), pair: (X, Y) }),
    ]);
    let params = BTreeMap::from([("a".to_string(), a.clone()), ("q".to_string(), q.clone())]);
    CoactionModel::new(group, generators, rules, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coaction::rewrite::word_of;
    use crate::coaction::Strategy;
    use crate::scalar::{frac, int};
    use crate::series::{series_div, IntSeries};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn model(q: i64) -> CoactionModel {
        d8_model(&int(q), &int(2)).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(d8_model(&int(2), &int(1)), Err(CoactionError::BadParameter(_))));
        assert!(matches!(d8_model(&int(1), &int(0)), Err(CoactionError::BadParameter(_))));
    }

    #[test]
    fn basic_reductions() {
        let m = model(-1);
        assert_eq!(m.reduce(&[Y, X], Strategy::Leftmost).unwrap(), (int(2), vec![0, 1, 1]));
        assert_eq!(m.reduce(&[X, X], Strategy::Leftmost).unwrap(), (int(1), vec![2, 0, 0]));
        assert_eq!(m.reduce(&[Z, X], Strategy::Leftmost).unwrap(), (int(-1), vec![1, 1, 0]));
        assert_eq!(m.reduce(&[Y, Z], Strategy::Leftmost).unwrap(), (int(1), vec![1, 0, 1]));
        assert_eq!(m.g_degree(&[2, 2, 2]), m.group().identity());
    }

    #[test]
    fn overlap_needs_q_squared_one() {
        for q in [1, -1] {
            let m = model(q);
            let l = m.reduce(&[Y, Z, X], Strategy::Leftmost).unwrap();
            let r = m.reduce(&[Y, Z, X], Strategy::Rightmost).unwrap();
            assert_eq!(l, r);
            assert_eq!(l, (int(2), vec![1, 1, 1]));
        }
        let bad = d8_model_unchecked(&int(3), &int(2)).unwrap();
        let l = bad.reduce(&[Y, Z, X], Strategy::Leftmost).unwrap();
        let r = bad.reduce(&[Y, Z, X], Strategy::Rightmost).unwrap();
        assert_ne!(l, r);
    }

    #[test]
    fn random_words_reduce_confluently() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [1, -1] {
            let m = model(q);
            for _ in 0..1000 {
                let len = rng.gen_range(0..=8);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
                let l = m.reduce(&word, Strategy::Leftmost).unwrap();
                let r = m.reduce(&word, Strategy::Rightmost).unwrap();
                assert_eq!(l, r, "word {word:?}");
                assert!(!l.0.is_zero());
                // Group degree is invariant under rewriting.
                assert_eq!(m.g_degree(&l.1), m.g_degree_of_word(&word));
            }
        }
    }

    #[test]
    fn group_degree_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = model(-1);
        for _ in 0..300 {
            let a: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
            let b: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
            let (_, prod) = m.mul_monomials(&a, &b).unwrap();
            assert_eq!(m.g_degree(&prod), m.group().mul(m.g_degree(&a), m.g_degree(&b)));
        }
    }

    #[test]
    fn identity_degree_iff_all_exponents_even() {
        let m = model(1);
        for n in 0..=10 {
            for e in m.monomials_of_degree(n) {
                let even = e.iter().all(|x| x % 2 == 0);
                assert_eq!(m.g_degree(&e) == m.group().identity(), even, "{e:?}");
            }
        }
    }

    #[test]
    fn component_series_examples() {
        let m = model(-1);
        let e = m.component_series(0, 6);
        assert_eq!(e, IntSeries::truncated([1, 0, 3, 0, 6, 0, 10].map(int).to_vec(), 6));
        // Oracle: 1 / (1 - t^2)^3.
        let cube = IntSeries::from_ints(&[1, 0, -1]).pow(3);
        assert_eq!(series_div(&IntSeries::one(), &cube, 6).unwrap(), e);

        let r = m.group().find("r").unwrap();
        assert_eq!(m.component_series(r, 3), IntSeries::truncated([0, 1, 0, 3].map(int).to_vec(), 3));

        let mut total = IntSeries::truncated(vec![], 8);
        for g in m.group().elements() {
            total = total.add(&m.component_series(g, 8));
        }
        assert_eq!(total, m.hilbert_series(8));
        let full = series_div(&IntSeries::one(), &IntSeries::from_ints(&[1, -1]).pow(3), 8).unwrap();
        assert_eq!(total, full);
    }

    #[test]
    fn component_series_ignores_parameters() {
        let a = d8_model(&int(1), &int(5)).unwrap();
        let b = d8_model(&int(-1), &frac(-2, 3)).unwrap();
        for g in a.group().elements() {
            assert_eq!(a.component_series(g, 8), b.component_series(g, 8));
        }
    }

    #[test]
    fn lowest_generators_match_lengths() {
        let m = model(-1);
        let lows = m.lowest_generators(8).unwrap();
        let g = |s| m.group().find(s).unwrap();
        assert_eq!(lows[g("r")].witness, vec![1, 0, 0]);
        assert_eq!(lows[g("r*rho")].witness, vec![0, 0, 1]);
        assert_eq!(lows[g("r*rho^2")].witness, vec![0, 1, 0]);
        assert_eq!(lows[0].degree, 0);
        assert_eq!(lows[0].witness, vec![0, 0, 0]);
        assert_eq!(lows[g("r*rho^3")].degree, 3);
        let t = m.length_table().unwrap();
        for h in m.group().elements() {
            assert_eq!(lows[h].degree, t.length(h));
        }
        assert_eq!(t.length(g("r*rho^3")), 3);
        assert_eq!(word_of(&lows[g("r*rho^3")].witness), vec![X, Z, Y]);
        assert!(matches!(m.lowest_generators(2), Err(CoactionError::ComponentEmptyUpToN(_, 2))));
    }

    #[test]
    fn covariant_series_is_the_cube() {
        let m = model(-1);
        let c = m.covariant_series(6).unwrap();
        assert_eq!(c, IntSeries::truncated([1, 3, 3, 1].map(int).to_vec(), 6));
        assert_eq!(c.eval_at_one(), int(8));
    }
}
