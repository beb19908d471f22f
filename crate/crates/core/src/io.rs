//! Reading groups and algebra tables from JSON documents and builtin names.
//!
//! Group documents take one of two shapes:
//!
//! ```json
//! { "cayley": [[0, 1], [1, 0]], "labels": ["e", "s"] }
//! { "permutation_generators": [[2, 1, 3], [1, 3, 2]] }
//! ```
//!
//! An algebra document names a group (inline document or `builtin:NAME`), a
//! generating set by labels, and optionally explicit structure constants
//! or coboundary weights. Without either it describes the Hasse algebra.

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
use crate::hasse::{hasse_algebra, skew_hasse_from_weights, GradedAlgebraTable, HasseError};
use crate::length::GeneratingSet;
use crate::scalar::{parse_rational, Rational};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{context}: {source}")]
    Group { context: String, source: GroupError },
    #[error("unknown builtin group {0:?}; expected trivial, cyclic:n, dihedral:n, symmetric:n, quaternion or product:A,B")]
    UnknownBuiltin(String),
    #[error("{context}: declared order {declared} but the table has {actual} rows")]
    OrderMismatch { context: String, declared: usize, actual: usize },
    #[error("{context}: give exactly one of \"cayley\" or \"permutation_generators\"")]
    AmbiguousGroup { context: String },
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
    #[error(transparent)]
    Hasse(#[from] HasseError),
}

impl InputError {
    fn invalid(context: &str, message: impl Into<String>) -> Self {
        InputError::Invalid { context: context.to_string(), message: message.into() }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDocument {
    order: Option<usize>,
    cayley: Option<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
    permutation_generators: Option<Vec<Vec<usize>>>,
    order_cap: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GroupRef {
    Named(String),
    Inline(GroupDocument),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDocument {
    group: GroupRef,
    generating_set: Vec<String>,
    /// `[g, h, "p/q"]` triples by label.
    entries: Option<Vec<(String, String, String)>>,
    /// `[g, "p/q"]` pairs; unlisted elements get weight 1.
    weights: Option<Vec<(String, String)>>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, path: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Parse {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path)
        .map_err(|source| InputError::Read { path: path.display().to_string(), source })
}

fn group_from_document(doc: GroupDocument, context: &str) -> Result<FiniteGroup, InputError> {
    let group_err = |source| InputError::Group { context: context.to_string(), source };
    let group = match (doc.cayley, doc.permutation_generators) {
        (Some(rows), None) => {
            if let Some(declared) = doc.order.filter(|&d| d != rows.len()) {
                return Err(InputError::OrderMismatch {
                    context: context.to_string(),
                    declared,
                    actual: rows.len(),
                });
            }
            FiniteGroup::from_cayley_labeled(rows, doc.labels).map_err(group_err)?
        }
        (None, Some(gens)) => {
            if doc.labels.is_some() {
                return Err(InputError::invalid(context, "labels are generated for permutation groups"));
            }
            let cap = doc.order_cap.unwrap_or(DEFAULT_ORDER_CAP);
            let g = FiniteGroup::from_permutations(&gens, cap).map_err(group_err)?;
            if let Some(declared) = doc.order.filter(|&d| d != g.order()) {
                return Err(InputError::OrderMismatch {
                    context: context.to_string(),
                    declared,
                    actual: g.order(),
                });
            }
            g
        }
        _ => return Err(InputError::AmbiguousGroup { context: context.to_string() }),
    };
    Ok(group)
}

pub fn parse_group_document(text: &str, context: &str) -> Result<FiniteGroup, InputError> {
    group_from_document(parse_json(text, context)?, context)
}

/// `builtin:NAME` or a path to a group document.
pub fn load_group(arg: &str) -> Result<FiniteGroup, InputError> {
    match arg.strip_prefix("builtin:") {
        Some(name) => parse_builtin(name),
        None => {
            let path = Path::new(arg);
            parse_group_document(&read(path)?, &path.display().to_string())
        }
    }
}

/// Parses `trivial`, `cyclic:n`, `dihedral:n` (order `2n`), `symmetric:n`,
/// `quaternion` and `product:A,B` with `A`, `B` builtin names themselves.
pub fn parse_builtin(name: &str) -> Result<FiniteGroup, InputError> {
    let mut parser = BuiltinParser { text: name, pos: 0 };
    let g = parser.group()?;
    if parser.pos != name.len() {
        return Err(InputError::UnknownBuiltin(name.to_string()));
    }
    Ok(g)
}

struct BuiltinParser<'a> {
    text: &'a str,
    pos: usize,
}

impl BuiltinParser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize, InputError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        let n = self.rest()[..digits].parse().map_err(|_| self.unknown())?;
        self.pos += digits;
        Ok(n)
    }

    fn unknown(&self) -> InputError {
        InputError::UnknownBuiltin(self.text.to_string())
    }

    fn group(&mut self) -> Result<FiniteGroup, InputError> {
        let context = self.text.to_string();
        let group_err = |source| InputError::Group { context: context.clone(), source };
        if self.eat("trivial") {
            Ok(FiniteGroup::trivial())
        } else if self.eat("quaternion") {
            Ok(FiniteGroup::quaternion())
        } else if self.eat("cyclic:") {
            match self.number()? {
                0 => Err(InputError::invalid(&context, "cyclic:n needs n >= 1")),
                n if n > DEFAULT_ORDER_CAP => {
                    Err(group_err(GroupError::OrderCapExceeded { order: n, cap: DEFAULT_ORDER_CAP }))
                }
                n => Ok(FiniteGroup::cyclic(n)),
            }
        } else if self.eat("dihedral:") {
            match self.number()? {
                n if n < 2 => Err(InputError::invalid(&context, "dihedral:n needs n >= 2")),
                n if 2 * n > DEFAULT_ORDER_CAP => Err(group_err(GroupError::OrderCapExceeded {
                    order: 2 * n,
                    cap: DEFAULT_ORDER_CAP,
                })),
                n => Ok(FiniteGroup::dihedral(n)),
            }
        } else if self.eat("symmetric:") {
            match self.number()? {
                0 => Err(InputError::invalid(&context, "symmetric:n needs n >= 1")),
                n => FiniteGroup::symmetric(n, DEFAULT_ORDER_CAP).map_err(group_err),
            }
        } else if self.eat("product:") {
            let a = self.group()?;
            if !self.eat(",") {
                return Err(self.unknown());
            }
            let b = self.group()?;
            if a.order() * b.order() > DEFAULT_ORDER_CAP {
                return Err(group_err(GroupError::OrderCapExceeded {
                    order: a.order() * b.order(),
                    cap: DEFAULT_ORDER_CAP,
                }));
            }
            Ok(FiniteGroup::product(&a, &b))
        } else {
            Err(self.unknown())
        }
    }
}

/// Comma-separated labels, resolved against the group.
pub fn parse_generating_set(group: &FiniteGroup, list: &str) -> Result<GeneratingSet, InputError> {
    let labels: Vec<&str> = if list.trim().is_empty() {
        Vec::new()
    } else {
        list.split(',').map(str::trim).collect()
    };
    GeneratingSet::from_labels(group, &labels).map_err(|m| InputError::invalid("--gens", m))
}

pub fn parse_algebra_document(text: &str, context: &str) -> Result<GradedAlgebraTable, InputError> {
    let doc: AlgebraDocument = parse_json(text, context)?;
    let group = match doc.group {
        GroupRef::Named(name) => match name.strip_prefix("builtin:") {
            Some(b) => parse_builtin(b)?,
            None => return Err(InputError::invalid(context, "group must be \"builtin:NAME\" or a document")),
        },
        GroupRef::Inline(g) => group_from_document(g, context)?,
    };
    let labels: Vec<&str> = doc.generating_set.iter().map(String::as_str).collect();
    let gens = GeneratingSet::from_labels(&group, &labels).map_err(|m| InputError::invalid(context, m))?;
    let element = |label: &str| {
        group.find(label).ok_or_else(|| InputError::invalid(context, format!("unknown element label {label:?}")))
    };
    let rational = |text: &str| {
        parse_rational(text).ok_or_else(|| InputError::invalid(context, format!("bad rational {text:?}")))
    };
    match (doc.entries, doc.weights) {
        (Some(_), Some(_)) => Err(InputError::invalid(context, "give entries or weights, not both")),
        (Some(entries), None) => {
            let parsed = entries
                .iter()
                .map(|(g, h, c)| Ok((element(g)?, element(h)?, rational(c)?)))
                .collect::<Result<Vec<_>, InputError>>()?;
            Ok(GradedAlgebraTable::from_entries(&group, &gens, parsed)?)
        }
        (None, Some(weights)) => {
            let mut w: Vec<Rational> = vec![num::One::one(); group.order()];
            for (g, c) in &weights {
                w[element(g)?] = rational(c)?;
            }
            Ok(skew_hasse_from_weights(&group, &gens, &w)?)
        }
        (None, None) => Ok(hasse_algebra(&group, &gens)?),
    }
}

pub fn load_algebra(path: &Path) -> Result<GradedAlgebraTable, InputError> {
    parse_algebra_document(&read(path)?, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn builtins() {
        assert_eq!(parse_builtin("trivial").unwrap().order(), 1);
        assert_eq!(parse_builtin("cyclic:7").unwrap().order(), 7);
        assert_eq!(parse_builtin("dihedral:4").unwrap().order(), 8);
        assert_eq!(parse_builtin("symmetric:4").unwrap().order(), 24);
        assert_eq!(parse_builtin("quaternion").unwrap().order(), 8);
        let p = parse_builtin("product:cyclic:2,dihedral:3").unwrap();
        assert_eq!(p.order(), 12);
        let nested = parse_builtin("product:product:cyclic:2,cyclic:2,cyclic:2").unwrap();
        assert_eq!(nested.order(), 8);
        assert!(nested.is_abelian());
        assert!(nested.elements().all(|g| nested.element_order(g) <= 2));
        for bad in ["cyclic", "cyclic:x", "cyclic:0", "dihedral:1", "product:cyclic:2", "quaternions", "klein"] {
            assert!(parse_builtin(bad).is_err(), "{bad}");
        }
        assert!(matches!(
            parse_builtin("symmetric:8"),
            Err(InputError::Group { source: GroupError::OrderCapExceeded { .. }, .. })
        ));
    }

    #[test]
    fn cayley_document() {
        let g = parse_group_document(r#"{"order": 1, "cayley": [[0]]}"#, "t").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.center(), vec![0]);
        let c2 = parse_group_document(r#"{"cayley": [[1, 0], [0, 1]], "labels": ["s", "e"]}"#, "t").unwrap();
        assert_eq!(c2.label(0), "e");
        assert!(matches!(
            parse_group_document(r#"{"order": 3, "cayley": [[0]]}"#, "t"),
            Err(InputError::OrderMismatch { declared: 3, actual: 1, .. })
        ));
        assert!(matches!(
            parse_group_document(r#"{"cayley": [[0, 1], [1, 1]]}"#, "t"),
            Err(InputError::Group { source: GroupError::NotLatinSquare { .. }, .. })
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_group_document("{\n  \"cayley\": [[0,]]\n}", "bad.json") {
            Err(InputError::Parse { path, line, .. }) => {
                assert_eq!(path, "bad.json");
                assert_eq!(line, 2);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_group_document("{}", "t"), Err(InputError::AmbiguousGroup { .. })));
    }

    #[test]
    fn permutation_document() {
        let s3 = parse_group_document(r#"{"permutation_generators": [[2, 1, 3], [1, 3, 2]], "order": 6}"#, "t").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn generating_set_lists() {
        let q = FiniteGroup::quaternion();
        let s = parse_generating_set(&q, "i, j,-j").unwrap();
        assert_eq!(s.labels(&q), vec!["i", "j", "-j"]);
        assert!(parse_generating_set(&q, "i,w").is_err());
        assert!(parse_generating_set(&FiniteGroup::trivial(), "").unwrap().is_empty());
    }

    #[test]
    fn algebra_documents() {
        let a = parse_algebra_document(r#"{"group": "builtin:quaternion", "generating_set": ["i", "j", "-j"]}"#, "t").unwrap();
        assert_eq!(a.dim(), 8);
        let w = parse_algebra_document(
            r#"{"group": "builtin:cyclic:3", "generating_set": ["g"], "weights": [["g", "2"], ["g^2", "-1/3"]]}"#,
            "t",
        )
        .unwrap();
        // λ(g)λ(g)/λ(g²) = 4 / (-1/3)
        assert_eq!(w.alpha(1, 1), Some(&int(-12)));
        let e = parse_algebra_document(
            r#"{"group": {"cayley": [[0, 1], [1, 0]]}, "generating_set": ["1"], "entries": [["0", "0", "1"], ["0", "1", "1"], ["1", "0", "3/4"]]}"#,
            "t",
        )
        .unwrap();
        assert_eq!(e.alpha(1, 0), Some(&frac(3, 4)));
        assert!(parse_algebra_document(
            r#"{"group": "builtin:cyclic:2", "generating_set": ["g"], "entries": [["g", "g", "x"]]}"#,
            "t"
        )
        .is_err());
    }
}
