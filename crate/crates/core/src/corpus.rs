//! The standard small-group corpus, the property sweep over it, and the
//! regression corpus of worked examples with their expected values.

use num::{BigUint, Integer, One};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coaction::verify_d8;
use crate::frobenius::{self, beta_scalars, nakayama, top_pairing, FrobeniusStatus};
use crate::group::FiniteGroup;
use crate::hasse::{hasse_algebra, random_coboundary_weights, skew_hasse_with_lengths, GradedAlgebraTable};
use crate::length::{GeneratingSet, LengthTable};
use crate::report::Check;
use crate::scalar::{format_rational, int};
use crate::screen::{dual_reflection_screen, SubsetIter};
use crate::series::{cyclotomic_factor, IntSeries};

pub const DEFAULT_SEED: u64 = 20_240_607;
pub const TWISTS_PER_INSTANCE: usize = 20;
pub const SWEEP_MAX_SIZE: usize = 4;

#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

fn named(name: &str, group: FiniteGroup) -> NamedGroup {
    NamedGroup { name: name.to_string(), group }
}

fn metacyclic(name: &str, n: usize, m: usize, t: usize, r: usize) -> NamedGroup {
    named(name, FiniteGroup::metacyclic(n, m, t, r).expect("corpus parameters define a group"))
}

/// Pauli matrices acting on the eight points `(basis vector, phase in Z/4)`.
fn pauli() -> FiniteGroup {
    let point = |v: usize, p: usize| v * 4 + p % 4;
    let perm = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        (0..8).map(|i| f(i / 4, i % 4)).collect()
    };
    let x = perm(&|v, p| point(1 - v, p));
    let z = perm(&|v, p| point(v, p + 2 * v));
    let i = perm(&|v, p| point(v, p + 1));
    FiniteGroup::from_permutations(&[x, z, i], 16).expect("Pauli group")
}

/// `(C2 x C2) : C4` with the generator of C4 swapping the two C2 factors.
fn klein_by_c4() -> FiniteGroup {
    let swap = |x: usize, s: usize| if s % 2 == 1 { (x & 1) << 1 | (x >> 1) } else { x };
    let table = (0..16)
        .map(|a| (0..16).map(|b| ((a % 4) ^ swap(b % 4, a / 4)) + 4 * ((a / 4 + b / 4) % 4)).collect())
        .collect();
    let labels = (0..16).map(|a| format!("({},{})", a % 4, a / 4)).collect();
    FiniteGroup::from_cayley_labeled(table, Some(labels)).expect("semidirect product")
}

/// Groups of order at most 16: one of each isomorphism type.
pub fn standard_groups() -> Vec<NamedGroup> {
    let c = FiniteGroup::cyclic;
    let x = |a: &FiniteGroup, b: &FiniteGroup| FiniteGroup::product(a, b);
    let mut out: Vec<NamedGroup> = (1..=16).map(|n| named(&format!("C{n}"), c(n))).collect();
    let a4 = FiniteGroup::from_permutations(&[vec![2, 3, 1, 4], vec![2, 1, 4, 3]], 12).expect("A4");
    out.extend([
        named("C2xC2", x(&c(2), &c(2))),
        named("S3", FiniteGroup::symmetric(3, 6).expect("S3")),
        named("C4xC2", x(&c(4), &c(2))),
        named("C2xC2xC2", x(&x(&c(2), &c(2)), &c(2))),
        named("D8", FiniteGroup::dihedral(4)),
        named("Q8", FiniteGroup::quaternion()),
        named("C3xC3", x(&c(3), &c(3))),
        named("D10", FiniteGroup::dihedral(5)),
        named("C6xC2", x(&c(6), &c(2))),
        named("D12", FiniteGroup::dihedral(6)),
        named("A4", a4),
        metacyclic("Dic12", 6, 2, 3, 5),
        named("D14", FiniteGroup::dihedral(7)),
        named("C8xC2", x(&c(8), &c(2))),
        named("C4xC4", x(&c(4), &c(4))),
        named("C4xC2xC2", x(&x(&c(4), &c(2)), &c(2))),
        named("C2^4", x(&x(&c(2), &c(2)), &x(&c(2), &c(2)))),
        named("D16", FiniteGroup::dihedral(8)),
        metacyclic("Q16", 8, 2, 4, 7),
        metacyclic("SD16", 8, 2, 0, 3),
        metacyclic("M16", 8, 2, 0, 5),
        metacyclic("C4:C4", 4, 4, 0, 3),
        named("D8xC2", x(&FiniteGroup::dihedral(4), &c(2))),
        named("Q8xC2", x(&FiniteGroup::quaternion(), &c(2))),
        named("Pauli", pauli()),
        named("C2^2:C4", klein_by_c4()),
    ]);
    out
}

/// Totals from the property sweep. `violations` lists every failed check
/// with the group, generating set and (for twists) the weights involved.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub groups: usize,
    pub generating_sets: usize,
    pub palindromic: usize,
    pub frobenius: usize,
    pub symmetric: usize,
    pub twists: usize,
    pub violations: Vec<String>,
}

#[derive(Default)]
struct InstanceOutcome {
    palindromic: bool,
    frobenius: bool,
    symmetric: bool,
    twists: usize,
    violations: Vec<String>,
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Every Frobenius-side property for one Hasse algebra and its twists.
fn check_instance(
    group: &FiniteGroup,
    name: &str,
    gens: &GeneratingSet,
    twists: usize,
    rng: &mut ChaCha8Rng,
) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    let where_ = || format!("{name} {{{}}}", gens.labels(group).join(", "));
    let a = hasse_algebra(group, gens).expect("generating set");
    let p = a.lengths().poincare_polynomial();
    out.palindromic = p.is_palindrome() == Ok(true);
    let status = frobenius::frobenius_status(&a);
    out.frobenius = status == FrobeniusStatus::Frobenius;
    if out.palindromic != out.frobenius {
        out.violations.push(format!("{}: palindrome {} but {status}", where_(), out.palindromic));
    }
    if !out.frobenius {
        return out;
    }
    let m = a.top().expect("Frobenius");
    if top_pairing(&a).expect("top").permutation_pattern().is_none() {
        out.violations.push(format!("{}: pairing is not a permutation pattern", where_()));
    }
    let mu = match nakayama(&a) {
        Ok(mu) => mu,
        Err(e) => {
            out.violations.push(format!("{}: {e}", where_()));
            return out;
        }
    };
    if group.elements().any(|g| mu.perm()[g] != group.conjugate(m, g)) {
        out.violations.push(format!("{}: Nakayama permutation is not conjugation by m", where_()));
    }
    if group.elements().any(|g| mu.perm()[group.conjugate(group.inv(m), g)] != g) {
        out.violations.push(format!("{}: Nakayama does not invert conjugation by m^-1", where_()));
    }
    out.symmetric = top_pairing(&a).expect("top").is_symmetric();
    if out.symmetric != group.is_central(m) {
        out.violations.push(format!("{}: symmetric {} but m central {}", where_(), out.symmetric, group.is_central(m)));
    }
    let degree_one = a.lengths().elements_of_length(1);
    let k = mu.permutation_order_on(&degree_one);
    if !factorial(degree_one.len()).is_multiple_of(&BigUint::from(k)) {
        out.violations.push(format!("{}: Nakayama order {k} does not divide {}!", where_(), degree_one.len()));
    }
    if !group.is_central(group.pow(m, k)) {
        out.violations.push(format!("{}: m^{k} is not central", where_()));
    }
    match beta_scalars(&a) {
        Ok(beta) if beta.iter().all(One::is_one) => {}
        Ok(_) => out.violations.push(format!("{}: Hasse algebra has a nontrivial beta", where_())),
        Err(e) => out.violations.push(format!("{}: {e}", where_())),
    }

    for _ in 0..twists {
        out.twists += 1;
        let weights = random_coboundary_weights(group.order(), rng);
        let describe = || {
            let w: Vec<String> = weights.iter().map(format_rational).collect();
            format!("{} twisted by [{}]", where_(), w.join(", "))
        };
        let t = skew_hasse_with_lengths(group, a.lengths().clone(), &weights).expect("valid weights");
        if !frobenius::is_frobenius(&t) {
            out.violations.push(format!("{}: not Frobenius", describe()));
            continue;
        }
        match beta_scalars(&t) {
            Ok(beta) => {
                if let Some(g) = group.elements().find(|&g| beta[g] != &weights[g] / &weights[group.conjugate(m, g)]) {
                    out.violations.push(format!("{}: beta({}) differs from the weight ratio", describe(), group.label(g)));
                }
            }
            Err(e) => out.violations.push(format!("{}: {e}", describe())),
        }
    }
    out
}

/// Runs every palindrome, Frobenius, Nakayama and beta property over all
/// generating sets of size at most `max_size` of each group, with `twists`
/// random coboundary twists per Frobenius instance. Instances run in
/// parallel; each has its own random stream, so the report depends only on
/// the inputs.
pub fn property_sweep(groups: &[NamedGroup], max_size: usize, twists: usize, seed: u64) -> SweepReport {
    let jobs: Vec<(usize, Vec<usize>)> = groups
        .iter()
        .enumerate()
        .flat_map(|(i, ng)| {
            SubsetIter::new(ng.group.order(), Some(max_size))
                .filter(|s| ng.group.generates(s))
                .map(move |s| (i, s))
        })
        .collect();
    let outcomes: Vec<InstanceOutcome> = jobs
        .par_iter()
        .enumerate()
        .map(|(stream, (i, subset))| {
            let ng = &groups[*i];
            let gens = GeneratingSet::new(&ng.group, subset.iter().copied()).expect("nonidentity");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream as u64);
            check_instance(&ng.group, &ng.name, &gens, twists, &mut rng)
        })
        .collect();
    let mut report = SweepReport { seed, groups: groups.len(), generating_sets: jobs.len(), ..Default::default() };
    for o in outcomes {
        report.palindromic += usize::from(o.palindromic);
        report.frobenius += usize::from(o.frobenius);
        report.symmetric += usize::from(o.symmetric);
        report.twists += o.twists;
        report.violations.extend(o.violations);
    }
    report
}

/// One worked example with its checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusCase {
    pub name: String,
    pub checks: Vec<Check>,
}

impl CorpusCase {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub cases: Vec<CorpusCase>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(CorpusCase::passed)
    }
}

/// Expected nonzero products among the positive-degree basis elements, as
/// `(g, h, gh)` labels. Every other pair must multiply to zero.
const QUATERNION_PRODUCTS: [(&str, &str, &str); 13] = [
    ("i", "i", "-1"),
    ("i", "j", "k"),
    ("i", "-j", "-k"),
    ("i", "-1", "-i"),
    ("j", "i", "-k"),
    ("j", "j", "-1"),
    ("j", "-k", "-i"),
    ("-j", "i", "k"),
    ("-j", "-j", "-1"),
    ("-j", "k", "-i"),
    ("k", "j", "-i"),
    ("-k", "-j", "-i"),
    ("-1", "i", "-i"),
];

const SYMMETRIC_PRODUCTS: [(&str, &str, &str); 6] = [
    ("(12)", "(23)", "(123)"),
    ("(12)", "(132)", "(13)"),
    ("(23)", "(12)", "(132)"),
    ("(23)", "(123)", "(13)"),
    ("(123)", "(12)", "(13)"),
    ("(132)", "(23)", "(13)"),
];

/// Compares the positive-degree part of the multiplication table with an
/// expected list of nonzero products, all coefficients 1.
pub fn table_matches(a: &GradedAlgebraTable, expected: &[(&str, &str, &str)]) -> Result<(), String> {
    let group = a.group();
    let id = |s: &str| group.find(s).ok_or_else(|| format!("unknown label {s}"));
    let mut want = std::collections::BTreeMap::new();
    for &(g, h, gh) in expected {
        want.insert((id(g)?, id(h)?), id(gh)?);
    }
    for g in group.elements().skip(1) {
        for h in group.elements().skip(1) {
            let got = a.mul_basis(g, h);
            match (want.get(&(g, h)), got) {
                (None, None) => {}
                (Some(&gh), Some((x, c))) if x == gh && c.is_one() => {}
                (w, got) => {
                    return Err(format!(
                        "{} * {}: expected {}, got {}",
                        group.label(g),
                        group.label(h),
                        w.map_or("0".to_string(), |&x| group.label(x).to_string()),
                        got.map_or("0".to_string(), |(x, c)| format!("{}·{}", format_rational(c), group.label(x)))
                    ))
                }
            }
        }
    }
    Ok(())
}

fn hasse_case(
    name: &str,
    group: &FiniteGroup,
    gens: &[&str],
    products: &[(&str, &str, &str)],
    polynomial: &[i64],
    nakayama_cycles: &str,
) -> CorpusCase {
    let gens = GeneratingSet::from_labels(group, gens).expect("corpus labels");
    let a = hasse_algebra(group, &gens).expect("corpus generating set");
    let mut checks = Vec::new();
    let table = table_matches(&a, products);
    checks.push(Check::new("multiplication table", table.is_ok(), table.err().unwrap_or_else(|| "matches".into())));
    let p = a.lengths().poincare_polynomial();
    checks.push(Check::equal("Poincaré polynomial", p.clone(), IntSeries::from_ints(polynomial)));
    checks.push(Check::equal("Frobenius", frobenius::is_frobenius(&a), true));
    let analysis = frobenius::analyze(&a);
    match analysis {
        Ok(an) => {
            checks.push(Check::equal("symmetric", an.symmetric.unwrap_or(true), false));
            let mu = an.nakayama.expect("Frobenius");
            checks.push(Check::equal("Nakayama permutation", mu.cycle_notation(group), nakayama_cycles.to_string()));
            let (order, _) = an.degree_one_order.expect("Frobenius");
            checks.push(Check::equal("Nakayama order", order, 2));
            checks.push(Check::equal("permutation is conjugation by m", an.is_conjugation.unwrap_or(false), true));
        }
        Err(e) => checks.push(Check::new("Nakayama automorphism", false, e.to_string())),
    }
    CorpusCase { name: name.to_string(), checks }
}

fn dihedral_case(n: usize) -> CorpusCase {
    let d = FiniteGroup::dihedral(n);
    let gens = GeneratingSet::from_labels(&d, &["r", "r*rho"]).expect("Coxeter generators");
    let t = LengthTable::new(&d, &gens).expect("generates");
    let a = hasse_algebra(&d, &gens).expect("generates");
    let p = t.poincare_polynomial();
    let mut checks = vec![Check::equal("p(1)", p.eval_at_one(), int(2 * n as i64))];
    let cert = cyclotomic_factor(&p).ok().flatten();
    checks.push(Check::new(
        "cyclotomic certificate",
        cert.as_ref().is_some_and(|c| c.expand() == p),
        cert.map_or_else(|| format!("{p} has none"), |c| format!("{p} = {c}")),
    ));
    // rho^{n/2} for even n, r*rho^{(n+1)/2} for odd n; always a power >= 2.
    let expected_top = if n.is_multiple_of(2) {
        format!("rho^{}", n / 2)
    } else {
        format!("r*rho^{}", n.div_ceil(2))
    };
    let top = t.unique_max().map_or("none".to_string(), |m| d.label(m).to_string());
    checks.push(Check::equal("unique top element", top, expected_top));
    let symmetric = frobenius::is_symmetric_frobenius(&a);
    checks.push(Check::new(
        "symmetric Frobenius iff n even",
        symmetric == Ok(n.is_multiple_of(2)),
        format!("{symmetric:?}"),
    ));
    CorpusCase { name: format!("dihedral order {} Coxeter", 2 * n), checks }
}

fn d8_case(q: i64) -> CorpusCase {
    let checks = match verify_d8(&int(q), &int(2), 8) {
        Ok(r) => r.checks,
        Err(e) => vec![Check::new("model", false, e.to_string())],
    };
    CorpusCase { name: format!("D8 coaction q={q} a=2 N=8"), checks }
}

fn quaternion_screen_case() -> CorpusCase {
    let q = FiniteGroup::quaternion();
    let mut checks = Vec::new();
    match dual_reflection_screen(&q, None) {
        Ok(r) => {
            checks.push(Check::equal("subsets scanned", r.scanned, 127));
            let polys: Vec<String> = r.polynomials().iter().map(|p| p.to_string()).collect();
            checks.push(Check::equal("surviving polynomials", polys.join("; "), "1 + 3t + 3t^2 + t^3".to_string()));
            let cert = r.candidates.first().map(|b| b.certificate.factors.clone());
            checks.push(Check::new("certificate Φ2^3", cert == Some(vec![(2, 3)]), format!("{cert:?}")));
            let v = r.verify();
            checks.push(Check::new("report consistency", v.is_ok(), v.err().unwrap_or_else(|| "ok".into())));
        }
        Err(e) => checks.push(Check::new("screen", false, e.to_string())),
    }
    CorpusCase { name: "quaternion screen".into(), checks }
}

fn twist_case(name: &str, group: &FiniteGroup, gens: &[&str], seed: u64, stream: u64) -> CorpusCase {
    let gens = GeneratingSet::from_labels(group, gens).expect("corpus labels");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let out = check_instance(group, name, &gens, TWISTS_PER_INSTANCE, &mut rng);
    let checks = vec![
        Check::equal("twists checked", out.twists, TWISTS_PER_INSTANCE),
        Check::new(
            "Frobenius, beta(m) = 1, beta matches the closed formula",
            out.violations.is_empty(),
            out.violations.first().cloned().unwrap_or_else(|| "no violations".into()),
        ),
    ];
    CorpusCase { name: format!("{name} coboundary twists"), checks }
}

/// Every worked example with its expected values.
pub fn run_corpus(seed: u64) -> CorpusReport {
    let q8 = FiniteGroup::quaternion();
    let s3 = FiniteGroup::symmetric(3, 6).expect("S3");
    let d8 = FiniteGroup::dihedral(4);
    let mut cases = vec![
        hasse_case("quaternion Hasse", &q8, &["i", "j", "-j"], &QUATERNION_PRODUCTS, &[1, 3, 3, 1], "(j -j)(k -k)"),
        hasse_case("S3 Hasse", &s3, &["(12)", "(23)"], &SYMMETRIC_PRODUCTS, &[1, 2, 2, 1], "((23) (12))((123) (132))"),
    ];
    cases.extend((3..=8).map(dihedral_case));
    cases.push(d8_case(-1));
    cases.push(d8_case(1));
    cases.push(quaternion_screen_case());
    cases.push(twist_case("quaternion", &q8, &["i", "j", "-j"], seed, 0));
    cases.push(twist_case("S3", &s3, &["(12)", "(23)"], seed, 1));
    cases.push(twist_case("D8", &d8, &["r", "r*rho", "r*rho^2"], seed, 2));
    CorpusReport { seed, cases }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_groups_have_expected_orders() {
        let groups = standard_groups();
        assert!(groups.iter().all(|g| g.group.order() <= 16));
        let mut names: Vec<&str> = groups.iter().map(|g| g.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), groups.len());
        let by_order = |n| groups.iter().filter(|g| g.group.order() == n).count();
        // Known counts of isomorphism classes for n < 16.
        for (n, count) in [(1, 1), (2, 1), (4, 2), (6, 2), (8, 5), (9, 2), (10, 2), (12, 5), (14, 2), (15, 1)] {
            assert_eq!(by_order(n), count, "order {n}");
        }
        assert_eq!(by_order(16), 14);
    }

    #[test]
    fn metacyclic_groups_have_distinct_order_profiles() {
        let profile = |g: &FiniteGroup| {
            let mut p: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
            p.sort();
            p
        };
        let groups = standard_groups();
        let get = |n: &str| &groups.iter().find(|g| g.name == n).unwrap().group;
        // Q16 has a unique involution, SD16 has five, M16 three.
        let involutions = |g: &FiniteGroup| profile(g).iter().filter(|&&o| o == 2).count();
        assert_eq!(involutions(get("Q16")), 1);
        assert_eq!(involutions(get("SD16")), 5);
        assert_eq!(involutions(get("M16")), 3);
        assert_eq!(involutions(get("C4:C4")), 3);
        assert_eq!(involutions(get("Dic12")), 1);
        assert!(!get("M16").is_abelian() && !get("C4:C4").is_abelian());
        // Both have seven involutions; the centers tell them apart.
        let (pauli, k4c4) = (get("Pauli"), get("C2^2:C4"));
        assert_eq!((involutions(pauli), involutions(k4c4)), (7, 7));
        assert_eq!(pauli.order(), 16);
        let center_exponent = |g: &FiniteGroup| g.center().iter().map(|&z| g.element_order(z)).max().unwrap();
        assert_eq!((pauli.center().len(), center_exponent(pauli)), (4, 4));
        assert_eq!((k4c4.center().len(), center_exponent(k4c4)), (4, 2));
        assert_eq!(profile(pauli).iter().max(), Some(&4));
        assert_eq!(profile(k4c4).iter().max(), Some(&4));
        assert_eq!(profile(&FiniteGroup::metacyclic(4, 2, 2, 3).unwrap()), profile(&FiniteGroup::quaternion()));
    }

    #[test]
    fn corpus_passes() {
        let r = run_corpus(DEFAULT_SEED);
        for case in &r.cases {
            for c in &case.checks {
                assert!(c.passed, "{}: {}: {}", case.name, c.name, c.detail);
            }
        }
    }

    #[test]
    fn table_mismatch_is_reported() {
        let q = FiniteGroup::quaternion();
        let gens = GeneratingSet::from_labels(&q, &["i", "j", "-j"]).unwrap();
        let a = hasse_algebra(&q, &gens).unwrap();
        assert!(table_matches(&a, &QUATERNION_PRODUCTS).is_ok());
        assert!(table_matches(&a, &QUATERNION_PRODUCTS[1..]).is_err());
    }

    #[test]
    fn small_sweep_is_clean() {
        let groups: Vec<NamedGroup> =
            standard_groups().into_iter().filter(|g| g.group.order() <= 6).collect();
        let r = property_sweep(&groups, SWEEP_MAX_SIZE, 3, 1);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert!(r.frobenius > 0 && r.twists == 3 * r.frobenius);
    }
}
