//! Finite groups given by validated Cayley tables.
//!
//! Elements are opaque indices `0..n`; index 0 is always the identity.
//! Labels are carried along for display and for resolving user input, but no
//! computation ever looks at them.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Builders refuse to produce groups larger than this unless told otherwise.
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// Above this order associativity is checked with Light's test over a
/// generating set instead of the plain scan over all triples.
const FULL_SCAN_LIMIT: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square: cell ({row}, {col}) repeats element {value}")]
    NotLatinSquare { row: usize, col: usize, value: usize },
    #[error("no two-sided identity element in the table")]
    NoIdentity,
    #[error("not associative: (ab)c != a(bc) for (a, b, c) = ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid permutation generator: {0}")]
    BadPermutation(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table (row `g`, column `h` holds `gh`) and returns
    /// the group with its identity moved to index 0.
    pub fn from_cayley(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_cayley_labeled(table, None)
    }

    pub fn from_cayley_labeled(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare { row, len: entries.len(), expected: n });
            }
            if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::EntryOutOfRange { row, col, value });
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        check_latin(n, &flat)?;
        let e = (0..n)
            .find(|&e| (0..n).all(|h| flat[e * n + h] == h && flat[h * n + e] == h))
            .ok_or(GroupError::NoIdentity)?;
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(GroupError::LabelCount { expected: n, got: l.len() })
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        check_unique_labels(&labels)?;

        // Swap the identity into slot 0.
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut cayley = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cayley[relabel(a) * n + relabel(b)] = relabel(flat[a * n + b]);
            }
        }
        let mut labels = labels;
        labels.swap(0, e);

        check_associative(n, &cayley)?;
        let inverses = (0..n)
            .map(|g| (0..n).find(|&h| cayley[g * n + h] == 0).expect("Latin square"))
            .collect();
        Ok(FiniteGroup { order: n, cayley, inverses, labels })
    }

    /// Table already known to be a group with identity at 0; still validated.
    fn from_trusted(n: usize, cayley: Vec<usize>, labels: Vec<String>) -> Self {
        let rows = cayley.chunks(n).map(<[usize]>::to_vec).collect();
        Self::from_cayley_labeled(rows, Some(labels)).expect("builtin table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group `C_n` with generator labeled `g`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let cayley = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let labels = (0..n).map(|k| power_label("g", k)).collect();
        Self::from_trusted(n, cayley, labels)
    }

    /// The dihedral group of order `2n` generated by `r`, `rho` with
    /// `r^2 = rho^n = e` and `rho r = r rho^-1`. Element `r^a rho^b` has
    /// index `a*n + b`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 2, "dihedral group needs n >= 2");
        let order = 2 * n;
        let mut cayley = vec![0; order * order];
        for x in 0..order {
            let (a, b) = (x / n, x % n);
            for y in 0..order {
                let (c, d) = (y / n, y % n);
                // rho^b r^c = r^c rho^{(-1)^c b}
                let b = if c == 1 { (n - b) % n } else { b };
                cayley[x * order + y] = ((a + c) % 2) * n + (b + d) % n;
            }
        }
        let labels = (0..order)
            .map(|x| {
                let (a, b) = (x / n, x % n);
                match (a, b) {
                    (0, 0) => "e".to_string(),
                    (0, b) => power_label("rho", b),
                    (_, 0) => "r".to_string(),
                    (_, b) => format!("r*{}", power_label("rho", b)),
                }
            })
            .collect();
        Self::from_trusted(order, cayley, labels)
    }

    /// The group of order `n*m` on `a^i b^j` (`0 ≤ i < n`, `0 ≤ j < m`) with
    /// `a^n = e`, `b^m = a^t` and `b a b^-1 = a^r`. Fails with the first
    /// violated group axiom when the parameters are inconsistent.
    pub fn metacyclic(n: usize, m: usize, t: usize, r: usize) -> Result<Self, GroupError> {
        assert!(n >= 1 && m >= 1, "metacyclic group needs n, m >= 1");
        let order = n * m;
        // r^j mod n for j < m.
        let mut twist = vec![1 % n; m];
        for j in 1..m {
            twist[j] = twist[j - 1] * r % n;
        }
        let mut rows = vec![vec![0; order]; order];
        for x in 0..order {
            let (i, j) = (x / m, x % m);
            for y in 0..order {
                let (k, l) = (y / m, y % m);
                // a^i b^j a^k b^l = a^{i + r^j k} b^{j + l}
                let mut e = i + twist[j] * k;
                let mut f = j + l;
                if f >= m {
                    f -= m;
                    e += t;
                }
                rows[x][y] = (e % n) * m + f;
            }
        }
        let labels = (0..order)
            .map(|x| match (x / m, x % m) {
                (0, 0) => "e".to_string(),
                (i, 0) => power_label("a", i),
                (0, j) => power_label("b", j),
                (i, j) => format!("{}*{}", power_label("a", i), power_label("b", j)),
            })
            .collect();
        Self::from_cayley_labeled(rows, Some(labels))
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}` with `ij = k = -ji` and
    /// `i^2 = j^2 = k^2 = -1`. Indices follow the label order
    /// `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Self {
        // Unit products among 1, i, j, k as (sign, unit).
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let mut cayley = vec![0; 64];
        for x in 0..8 {
            for y in 0..8 {
                let (neg, unit) = UNIT[x / 2][y / 2];
                let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                cayley[x * 8 + y] = 2 * unit + usize::from(sign);
            }
        }
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .map(String::from)
            .to_vec();
        Self::from_trusted(8, cayley, labels)
    }

    /// The symmetric group on `{1..n}`. Elements are indexed by the
    /// lexicographic rank of their one-line images and labeled in cycle
    /// notation. Products compose right to left: `(gh)(x) = g(h(x))`.
    pub fn symmetric(n: usize, cap: usize) -> Result<Self, GroupError> {
        assert!(n >= 1, "symmetric group needs n >= 1");
        let order = factorial_capped(n, cap)
            .ok_or(GroupError::OrderCapExceeded { order: factorial_saturating(n), cap })?;
        let perms = lexicographic_permutations(n);
        debug_assert_eq!(perms.len(), order);
        Ok(Self::from_permutation_list(perms))
    }

    /// Closure of the given permutations under composition. Each generator
    /// is a list of one-line images over `0..d` or `1..=d`.
    pub fn from_permutations(gens: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        let degree = gens.first().map_or(0, Vec::len);
        let mut normalized = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != degree {
                return Err(GroupError::BadPermutation(format!(
                    "generators have different degrees ({} and {degree})",
                    g.len()
                )));
            }
            let one_based = !g.contains(&0);
            let p: Vec<usize> = if one_based {
                g.iter().map(|&x| x.wrapping_sub(1)).collect()
            } else {
                g.clone()
            };
            let mut seen = vec![false; degree];
            for &x in &p {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::BadPermutation(format!("{g:?} is not a permutation")));
                }
            }
            normalized.push(p);
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut next = 0;
        while next < elements.len() {
            for s in &normalized {
                let h = compose(&elements[next], s);
                if !index.contains_key(&h) {
                    if elements.len() == cap {
                        return Err(GroupError::OrderCapExceeded { order: cap + 1, cap });
                    }
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            next += 1;
        }
        Ok(Self::from_permutation_list(elements))
    }

    fn from_permutation_list(perms: Vec<Vec<usize>>) -> Self {
        let n = perms.len();
        let index: HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut cayley = vec![0; n * n];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                cayley[a * n + b] = index[compose(p, q).as_slice()];
            }
        }
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Self::from_trusted(n, cayley, labels)
    }

    /// Direct product; `(a, b)` has index `a * |H| + b` and label `(a;b)`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (n1, n2) = (g.order, h.order);
        let n = n1 * n2;
        let mut cayley = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cayley[x * n + y] = g.mul(x / n2, y / n2) * n2 + h.mul(x % n2, y % n2);
            }
        }
        let labels = (0..n)
            .map(|x| format!("({};{})", g.label(x / n2), h.label(x % n2)))
            .collect();
        Self::from_trusted(n, cayley, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Resolves a label, or a raw index written as `#k`.
    pub fn find(&self, label: &str) -> Option<usize> {
        let label = label.trim();
        if let Some(idx) = label.strip_prefix('#') {
            return idx.parse().ok().filter(|&i| i < self.order);
        }
        self.labels.iter().position(|l| l == label)
    }

    /// `h g h^-1`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, g: usize) -> bool {
        self.elements().all(|h| self.commutes(g, h))
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements().filter(|&g| self.is_central(g)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// Product of a word, left to right.
    pub fn word_product(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &v| self.mul(acc, v))
    }

    /// Elements reachable from the identity by right multiplication by
    /// `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure(gens).into_iter().all(|b| b)
    }
}

fn check_latin(n: usize, t: &[usize]) -> Result<(), GroupError> {
    let mut row_seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = t[r * n + c];
            if row_seen[v] == r {
                return Err(GroupError::NotLatinSquare { row: r, col: c, value: v });
            }
            row_seen[v] = r;
        }
    }
    let mut col_seen = vec![usize::MAX; n];
    for c in 0..n {
        for r in 0..n {
            let v = t[r * n + c];
            if col_seen[v] == c {
                return Err(GroupError::NotLatinSquare { row: r, col: c, value: v });
            }
            col_seen[v] = c;
        }
    }
    Ok(())
}

fn check_associative(n: usize, t: &[usize]) -> Result<(), GroupError> {
    let m = |a: usize, b: usize| t[a * n + b];
    let middles: Vec<usize> = if n <= FULL_SCAN_LIMIT {
        (0..n).collect()
    } else {
        // Light's test: the set of middle elements b with (ab)c = a(bc) for
        // all a, c is closed under products, so checking a generating set
        // of the loop suffices.
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[0] = true;
        for g in 0..n {
            if reached[g] {
                continue;
            }
            gens.push(g);
            let mut span: Vec<usize> = (0..n).filter(|&x| reached[x]).collect();
            let mut i = 0;
            while i < span.len() {
                for &s in &gens {
                    for y in [m(span[i], s), m(s, span[i])] {
                        if !reached[y] {
                            reached[y] = true;
                            span.push(y);
                        }
                    }
                }
                i += 1;
            }
        }
        gens
    };
    for a in 0..n {
        for &b in &middles {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

fn check_unique_labels(labels: &[String]) -> Result<(), GroupError> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(GroupError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// `(p ∘ q)(x) = p(q(x))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn cycle_label(p: &[usize]) -> String {
    let sep = if p.len() > 9 { " " } else { "" };
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut all = vec![current.clone()];
    // Standard next-permutation step.
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return all;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).expect("pivot exists");
        current.swap(i, j);
        current[i + 1..].reverse();
        all.push(current.clone());
    }
}

fn factorial_capped(n: usize, cap: usize) -> Option<usize> {
    let mut f: usize = 1;
    for k in 2..=n {
        f = f.checked_mul(k).filter(|&f| f <= cap)?;
    }
    (f <= cap).then_some(f)
}

fn factorial_saturating(n: usize) -> usize {
    (2..=n).fold(1usize, |f, k| f.saturating_mul(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_from_one_by_one_table() {
        let g = FiniteGroup::from_cayley(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.center(), vec![0]);
    }

    #[test]
    fn cyclic_two_from_table() {
        let g = FiniteGroup::from_cayley(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // C3 written with identity at index 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let labels = Some(vec!["a".into(), "b".into(), "id".into()]);
        let g = FiniteGroup::from_cayley_labeled(t, labels).unwrap();
        assert_eq!(g.label(0), "id");
        for h in g.elements() {
            assert_eq!(g.mul(0, h), h);
            assert_eq!(g.mul(h, 0), h);
        }
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(FiniteGroup::from_cayley(vec![]), Err(GroupError::Empty));
        assert_eq!(
            FiniteGroup::from_cayley(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NotLatinSquare { row: 1, col: 1, value: 1 })
        );
        assert_eq!(
            FiniteGroup::from_cayley(vec![vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { row: 0, col: 1, value: 2 })
        );
        // A Latin square without identity.
        assert_eq!(
            FiniteGroup::from_cayley(vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]]),
            Err(GroupError::NoIdentity)
        );
        // A loop of order 5 that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley(loop5),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion();
        let f = |s| q.find(s).unwrap();
        assert_eq!(q.mul(f("i"), f("j")), f("k"));
        assert_eq!(q.mul(f("j"), f("i")), f("-k"));
        assert_eq!(q.mul(f("i"), f("i")), f("-1"));
        assert_eq!(q.mul(f("j"), f("j")), f("-1"));
        assert_eq!(q.mul(f("k"), f("k")), f("-1"));
        assert_eq!(q.mul(f("-1"), f("-1")), f("1"));
        assert_eq!(q.element_order(f("i")), 4);
    }

    #[test]
    fn quaternion_center_by_scan() {
        let q = FiniteGroup::quaternion();
        let brute: Vec<usize> = q
            .elements()
            .filter(|&g| q.elements().all(|h| q.mul(g, h) == q.mul(h, g)))
            .collect();
        assert_eq!(brute, vec![q.find("1").unwrap(), q.find("-1").unwrap()]);
        assert_eq!(q.center(), brute);
    }

    #[test]
    fn quaternion_has_six_elements_of_order_four() {
        let q = FiniteGroup::quaternion();
        let table = q.cayley_rows();
        let brute_order = |g: usize| {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = table[x][g];
                k += 1;
            }
            k
        };
        let again = FiniteGroup::from_cayley(table.clone()).unwrap();
        assert_eq!(again.order(), 8);
        assert_eq!(again.elements().filter(|&g| brute_order(g) == 4).count(), 6);
    }

    #[test]
    fn dihedral_relations() {
        let d = FiniteGroup::dihedral(4);
        let f = |s| d.find(s).unwrap();
        assert_eq!(d.mul(f("rho"), f("r")), f("r*rho^3"));
        assert_eq!(d.center(), vec![f("e"), f("rho^2")]);
        assert!(FiniteGroup::dihedral(2).is_abelian());
        assert_eq!(FiniteGroup::dihedral(2).order(), 4);
    }

    #[test]
    fn symmetric_group_composition() {
        let s3 = FiniteGroup::symmetric(3, DEFAULT_ORDER_CAP).unwrap();
        let f = |s| s3.find(s).unwrap();
        assert_eq!(s3.label(0), "()");
        assert_eq!(s3.mul(f("(12)"), f("(23)")), f("(123)"));
        assert_eq!(s3.conjugate(f("(13)"), f("(12)")), f("(23)"));
        assert_eq!(
            FiniteGroup::symmetric(8, DEFAULT_ORDER_CAP),
            Err(GroupError::OrderCapExceeded { order: 40320, cap: DEFAULT_ORDER_CAP })
        );
    }

    #[test]
    fn symmetric_indices_are_lexicographic_ranks() {
        let s3 = FiniteGroup::symmetric(3, DEFAULT_ORDER_CAP).unwrap();
        // One-line images in lexicographic order: 123 132 213 231 312 321.
        let expected = ["()", "(23)", "(12)", "(123)", "(132)", "(13)"];
        assert_eq!(s3.labels(), expected.map(String::from));
    }

    #[test]
    fn products_and_small_cyclics() {
        assert_eq!(FiniteGroup::cyclic(1).order(), 1);
        let c2 = FiniteGroup::cyclic(2);
        let v4 = FiniteGroup::product(&c2, &c2);
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().all(|g| v4.mul(g, g) == 0));
        assert_eq!(v4.label(3), "(g;g)");
    }

    #[test]
    fn permutation_closure() {
        let a4 = FiniteGroup::from_permutations(&[vec![2, 3, 1, 4], vec![2, 1, 4, 3]], 100).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.center().len(), 1);
        let err = FiniteGroup::from_permutations(&[vec![2, 3, 4, 5, 1], vec![2, 1, 3, 4, 5]], 100);
        assert_eq!(err, Err(GroupError::OrderCapExceeded { order: 101, cap: 100 }));
        assert!(FiniteGroup::from_permutations(&[vec![1, 1]], 10).is_err());
    }

    #[test]
    fn large_table_uses_generator_test() {
        let s7 = FiniteGroup::symmetric(7, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(s7.order(), 5040);
        assert_eq!(s7.center(), vec![0]);
    }
}
