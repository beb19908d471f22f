//! Degree-bounded checks of a [`CoactionModel`] against its grading group:
//! lowest components, normality of `f_m`, the product decomposition of
//! `f_m`, and the covariant algebra with its Nakayama automorphism.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use crate::frobenius::{self, beta_scalars, check_nakayama_is_conjugation};
use crate::hasse::{check_associativity, GradedAlgebraTable};
use crate::linalg::rank_of;
pub use crate::report::Check;
use crate::scalar::{format_rational, int, Rational};
use crate::series::{series_div, IntSeries};

use super::{d8_model, rewrite, CoactionError, CoactionModel, Exponents};

/// `f_m · v = scalar · v' · f_m` for a generator `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTwist {
    pub generator: usize,
    pub scalar: Rational,
    pub image: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FmNormalReport {
    pub m: usize,
    pub degree: usize,
    pub generator_twists: Vec<GeneratorTwist>,
    /// `f_m f_g = β(g) f_{m g m⁻¹} f_m`, indexed by `g`.
    pub beta: Vec<Rational>,
}

fn top_element(model: &CoactionModel) -> Result<usize, CoactionError> {
    model.length_table()?.unique_max().ok_or(CoactionError::NoUniqueTop)
}

/// Ratio `c1 / c2` when `f_m · left` and `right · f_m` reduce to the same
/// monomial.
fn commutation_scalar(
    model: &CoactionModel,
    fm: &[u32],
    left: &[u32],
    right: &[u32],
) -> Result<Option<Rational>, CoactionError> {
    let (c1, e1) = model.mul_monomials(fm, left)?;
    let (c2, e2) = model.mul_monomials(right, fm)?;
    Ok((e1 == e2 && !c2.is_zero()).then(|| c1 / c2))
}

/// Checks that `f_m` is normal through degree `order`: for every `k` with
/// `deg f_m + k ≤ order`, the spans of `f_m·A_k` and `A_k·f_m` agree (by
/// exact rank), each generator satisfies `f_m v = c·v' f_m`, and conjugation
/// by `f_m` sends each witness `f_g` to `β(g) f_{mgm⁻¹}`.
pub fn check_fm_normal(model: &CoactionModel, order: usize) -> Result<FmNormalReport, CoactionError> {
    let lows = model.lowest_generators(order)?;
    let group = model.group();
    let m = top_element(model)?;
    let fm = &lows[m].witness;
    let d = lows[m].degree;
    if d + 1 > order && model.letters() > 0 {
        return Err(CoactionError::BadParameter(format!("truncation {order} leaves no room above deg f_m = {d}")));
    }

    for k in 1..=order.saturating_sub(d) {
        let target: BTreeMap<Exponents, usize> =
            model.monomials_of_degree(d + k).into_iter().enumerate().map(|(i, e)| (e, i)).collect();
        let vector = |(c, e): (Rational, Exponents)| {
            let mut v = vec![Rational::zero(); target.len()];
            v[target[&e]] = c;
            v
        };
        let mut left = Vec::new();
        let mut right = Vec::new();
        for mono in model.monomials_of_degree(k) {
            left.push(vector(model.mul_monomials(fm, &mono)?));
            right.push(vector(model.mul_monomials(&mono, fm)?));
        }
        let (rl, rr) = (rank_of(&left), rank_of(&right));
        let both: Vec<Vec<Rational>> = left.into_iter().chain(right).collect();
        let rb = rank_of(&both);
        if rl != rb || rr != rb {
            return Err(CoactionError::NotNormalWithinN {
                degree: d + k,
                detail: format!("ranks f_m·A = {rl}, A·f_m = {rr}, joint = {rb}"),
            });
        }
    }

    let mut generator_twists = Vec::new();
    for v in 0..model.letters() {
        let mono = unit_exponents(model.letters(), v);
        let found = (0..model.letters()).find_map(|w| {
            commutation_scalar(model, fm, &mono, &unit_exponents(model.letters(), w))
                .transpose()
                .map(|s| s.map(|s| (w, s)))
        });
        match found.transpose()? {
            Some((image, scalar)) => generator_twists.push(GeneratorTwist { generator: v, scalar, image }),
            None => {
                return Err(CoactionError::NotNormalWithinN {
                    degree: d + 1,
                    detail: format!("no v' with f_m {} = c v' f_m", model.generators()[v].label),
                })
            }
        }
    }

    let mut beta = Vec::with_capacity(group.order());
    for g in group.elements() {
        let conj = group.conjugate(m, g);
        let s = commutation_scalar(model, fm, &lows[g].witness, &lows[conj].witness)?.ok_or_else(|| {
            CoactionError::PhiMismatch {
                g: group.label(g).to_string(),
                detail: format!("f_m f_g is not a multiple of f_{} f_m", group.label(conj)),
            }
        })?;
        beta.push(s);
    }
    Ok(FmNormalReport { m, degree: d, generator_twists, beta })
}

fn unit_exponents(letters: usize, v: usize) -> Exponents {
    let mut e = vec![0; letters];
    e[v] = 1;
    e
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDecomposition {
    /// Reduced word `m = g_1 ⋯ g_w` in the degree-one support.
    pub word: Vec<usize>,
    /// `f_{g_1} ⋯ f_{g_w} = scalar · f_m`.
    pub scalar: Rational,
}

pub fn check_product_decomposition(
    model: &CoactionModel,
    order: usize,
) -> Result<ProductDecomposition, CoactionError> {
    let lows = model.lowest_generators(order)?;
    let table = model.length_table()?;
    let m = table.unique_max().ok_or(CoactionError::NoUniqueTop)?;
    let word = table.reduced_word(m);
    let letters: Vec<usize> = word.iter().flat_map(|&g| rewrite::word_of(&lows[g].witness)).collect();
    let (scalar, e) = model.reduce(&letters, super::Strategy::Leftmost)?;
    if e != lows[m].witness {
        return Err(CoactionError::DecompositionFailed(format!(
            "product reduces to {}, not f_m = {}",
            model.format_monomial(&e),
            model.format_monomial(&lows[m].witness)
        )));
    }
    if scalar.is_zero() {
        return Err(CoactionError::DecompositionFailed("scalar is zero".into()));
    }
    Ok(ProductDecomposition { word, scalar })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(serialize_with = "serialize_params")]
    pub params: BTreeMap<String, Rational>,
    pub order: usize,
    pub checks: Vec<Check>,
}

fn serialize_params<S: serde::Serializer>(p: &BTreeMap<String, Rational>, s: S) -> Result<S::Ok, S::Error> {
    let strings: BTreeMap<&str, String> = p.iter().map(|(k, v)| (k.as_str(), format_rational(v))).collect();
    serde::Serialize::serialize(&strings, s)
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn record<T>(
    checks: &mut Vec<Check>,
    name: &str,
    result: Result<T, CoactionError>,
    detail: impl FnOnce(&T) -> (bool, String),
) -> Option<T> {
    match result {
        Ok(v) => {
            let (passed, d) = detail(&v);
            checks.push(Check { name: name.into(), passed, detail: d });
            Some(v)
        }
        Err(e) => {
            checks.push(Check { name: name.into(), passed: false, detail: e.to_string() });
            None
        }
    }
}

pub const CHECK_LOWEST: &str = "lowest components are one-dimensional with deg f_g = length(g)";
pub const CHECK_COVARIANT: &str = "covariant series equals the Poincaré polynomial";
pub const CHECK_VALUE_AT_ONE: &str = "p(1) equals the group order";
pub const CHECK_DEGREE: &str = "deg p equals length(m)";
pub const CHECK_NORMAL: &str = "f_m is normal within the truncation";
pub const CHECK_DECOMPOSITION: &str = "f_m is a nonzero multiple of a product of degree-one witnesses";
pub const CHECK_SKEW_HASSE: &str = "projected witness products form a skew Hasse algebra";
pub const CHECK_FROBENIUS: &str = "covariant algebra is Frobenius";
pub const CHECK_PHI: &str = "conjugation by f_m is the Nakayama automorphism, beta(m) = 1";
pub const CHECK_IDENTITY_SERIES: &str = "identity component series is 1/(1 - t^2)^3";

/// Runs every generic check on `model` through degree `order`.
pub fn verify_model(model: &CoactionModel, order: usize) -> VerificationReport {
    let group = model.group();
    let mut checks = Vec::new();

    let table = model.length_table();
    let lows = model.lowest_generators(order);
    match (&table, &lows) {
        (Ok(t), Ok(l)) => {
            let bad: Vec<&str> = group.elements().filter(|&g| l[g].degree != t.length(g)).map(|g| group.label(g)).collect();
            checks.push(Check {
                name: CHECK_LOWEST.into(),
                passed: bad.is_empty(),
                detail: if bad.is_empty() {
                    let witnesses: Vec<String> = group
                        .elements()
                        .map(|g| format!("f_{} = {}", group.label(g), model.format_monomial(&l[g].witness)))
                        .collect();
                    witnesses.join(", ")
                } else {
                    format!("degree differs from length at {}", bad.join(", "))
                },
            });
        }
        (Err(e), _) | (_, Err(e)) => {
            checks.push(Check { name: CHECK_LOWEST.into(), passed: false, detail: e.to_string() })
        }
    }

    let p = table.as_ref().ok().map(|t| t.poincare_polynomial());
    record(&mut checks, CHECK_COVARIANT, model.covariant_series(order), |s| (true, s.to_string()));
    if let (Some(p), Ok(t)) = (&p, &table) {
        let at_one = p.eval_at_one();
        checks.push(Check {
            name: CHECK_VALUE_AT_ONE.into(),
            passed: at_one == int(group.order() as i64),
            detail: format!("p = {p}, p(1) = {}", format_rational(&at_one)),
        });
        let top = t.unique_max();
        let passed = top.is_some_and(|m| p.degree() == Some(t.length(m)));
        checks.push(Check {
            name: CHECK_DEGREE.into(),
            passed,
            detail: match top {
                Some(m) => format!("m = {}, length {}", group.label(m), t.length(m)),
                None => "no unique element of maximal length".into(),
            },
        });
    }

    let normal = record(&mut checks, CHECK_NORMAL, check_fm_normal(model, order), |r| {
        let twists: Vec<String> = r
            .generator_twists
            .iter()
            .map(|t| {
                format!(
                    "f_m {} = {} {} f_m",
                    model.generators()[t.generator].label,
                    format_rational(&t.scalar),
                    model.generators()[t.image].label
                )
            })
            .collect();
        (true, format!("m = {}; {}", group.label(r.m), twists.join("; ")))
    });

    record(&mut checks, CHECK_DECOMPOSITION, check_product_decomposition(model, order), |d| {
        let factors: Vec<String> = d.word.iter().map(|&g| format!("f_{}", group.label(g))).collect();
        (true, format!("{} = {} f_m", factors.join(" "), format_rational(&d.scalar)))
    });

    let algebra = record(&mut checks, CHECK_SKEW_HASSE, model.covariant_algebra(order), |a| {
        skew_hasse_verdict(a)
    });

    if let Some(a) = &algebra {
        let status = frobenius::frobenius_status(a);
        checks.push(Check {
            name: CHECK_FROBENIUS.into(),
            passed: status == frobenius::FrobeniusStatus::Frobenius,
            detail: format!("dimension {}, {status}", a.dim()),
        });
        let phi = match (&normal, beta_scalars(a), check_nakayama_is_conjugation(a)) {
            (Some(r), Ok(beta), Ok(conj)) => {
                let m = r.m;
                let mismatch = group.elements().find(|&g| r.beta[g] != beta[g]);
                let passed = mismatch.is_none() && conj && r.beta[m].is_one();
                let listing: Vec<String> = group
                    .elements()
                    .map(|g| format!("{}: {}", group.label(g), format_rational(&r.beta[g])))
                    .collect();
                let detail = match mismatch {
                    Some(g) => format!(
                        "at {}: conjugation gives {}, Nakayama gives {}",
                        group.label(g),
                        format_rational(&r.beta[g]),
                        format_rational(&beta[g])
                    ),
                    None => format!("beta = {{{}}}", listing.join(", ")),
                };
                Check { name: CHECK_PHI.into(), passed, detail }
            }
            (None, _, _) => Check { name: CHECK_PHI.into(), passed: false, detail: "f_m is not normal".into() },
            (_, Err(e), _) | (_, _, Err(e)) => Check { name: CHECK_PHI.into(), passed: false, detail: e.to_string() },
        };
        checks.push(phi);
    }

    VerificationReport { params: model.params().clone(), order, checks }
}

/// Zero pattern equals length additivity, the grading holds and the
/// structure constants are associative.
fn skew_hasse_verdict(a: &GradedAlgebraTable) -> (bool, String) {
    let group = a.group();
    let lengths = a.lengths();
    for g in group.elements() {
        for h in group.elements() {
            if a.alpha(g, h).is_some() != lengths.is_length_additive(group, g, h) {
                return (false, format!("zero pattern wrong at ({}, {})", group.label(g), group.label(h)));
            }
        }
    }
    if let Err((g, h, k)) = check_associativity(a) {
        return (
            false,
            format!("not associative at ({}, {}, {})", group.label(g), group.label(h), group.label(k)),
        );
    }
    let constants: Vec<String> = a
        .entries()
        .filter(|(_, _, c)| !c.is_one())
        .map(|(g, h, c)| format!("alpha({}, {}) = {}", group.label(g), group.label(h), format_rational(c)))
        .collect();
    (true, format!("{} nonzero products; {}", a.entries().count(), constants.join(", ")))
}

/// The generic checklist for the builtin model, preceded by the identity
/// component check specific to it.
pub fn verify_d8(q: &Rational, a: &Rational, order: usize) -> Result<VerificationReport, CoactionError> {
    let model = d8_model(q, a)?;
    let mut report = verify_model(&model, order);
    let e = model.component_series(model.group().identity(), order);
    let expected = series_div(&IntSeries::one(), &IntSeries::from_ints(&[1, 0, -1]).pow(3), order)
        .expect("constant term 1");
    report.checks.insert(
        0,
        Check { name: CHECK_IDENTITY_SERIES.into(), passed: e == expected, detail: e.to_string() },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coaction::{Generator, Rule};
    use crate::group::FiniteGroup;
    use crate::scalar::frac;

    #[test]
    fn d8_checklist_passes_for_both_signs() {
        for q in [1, -1] {
            let r = verify_d8(&int(q), &int(2), 8).unwrap();
            for c in &r.checks {
                assert!(c.passed, "q = {q}: {} failed: {}", c.name, c.detail);
            }
            assert_eq!(r.checks.len(), 10);
        }
    }

    #[test]
    fn fm_normal_on_d8() {
        let m = d8_model(&int(-1), &int(2)).unwrap();
        let r = check_fm_normal(&m, 8).unwrap();
        assert_eq!(m.group().label(r.m), "r*rho^3");
        assert_eq!(r.degree, 3);
        assert!(r.beta[r.m].is_one());
        assert_eq!(m.lowest_generators(8).unwrap()[r.m].witness, vec![1, 1, 1]);
    }

    #[test]
    fn decomposition_scalar_depends_on_q() {
        let plus = check_product_decomposition(&d8_model(&int(1), &int(2)).unwrap(), 8).unwrap();
        let minus = check_product_decomposition(&d8_model(&int(-1), &int(2)).unwrap(), 8).unwrap();
        assert!(!plus.scalar.is_zero() && !minus.scalar.is_zero());
        assert_eq!(plus.word.len(), 3);
        let odd = check_product_decomposition(&d8_model(&int(-1), &frac(3, 7)).unwrap(), 8).unwrap();
        assert!(!odd.scalar.is_zero());
    }

    #[test]
    fn trivial_model() {
        let model = CoactionModel::new(FiniteGroup::trivial(), vec![], BTreeMap::new(), BTreeMap::new()).unwrap();
        let d = check_product_decomposition(&model, 0).unwrap();
        assert!(d.word.is_empty());
        assert!(d.scalar.is_one());
        let r = check_fm_normal(&model, 0).unwrap();
        assert_eq!(r.degree, 0);
    }

    #[test]
    fn commutative_model_passes() {
        // k[u, v] graded by C2 x C2; f_m = uv is central.
        let g = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        let gens = vec![
            Generator { label: "u".into(), g_degree: 1 },
            Generator { label: "v".into(), g_degree: 2 },
        ];
        let rules = BTreeMap::from([((1, 0), Rule { scalar: int(1), pair: (0, 1) })]);
        let model = CoactionModel::new(g, gens, rules, BTreeMap::new()).unwrap();
        let report = verify_model(&model, 6);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn inhomogeneous_rule_is_rejected() {
        let g = FiniteGroup::cyclic(4);
        let gens = vec![
            Generator { label: "u".into(), g_degree: 1 },
            Generator { label: "v".into(), g_degree: 2 },
        ];
        let rules = BTreeMap::from([((1, 0), Rule { scalar: int(1), pair: (0, 0) })]);
        assert_eq!(
            CoactionModel::new(g, gens, rules, BTreeMap::new()),
            Err(CoactionError::RuleNotHomogeneous(1, 0))
        );
    }
}
