//! Word length on finite groups, the graded algebras built from it, and
//! exact checks of their Frobenius structure.
//!
//! Start from a [`FiniteGroup`] and a [`GeneratingSet`], build a
//! [`LengthTable`] for the Poincaré polynomial, then a
//! [`GradedAlgebraTable`] with [`hasse_algebra`] and hand it to
//! [`frobenius::analyze`]. The guide in `book/` walks through each step.
//!
//! ```
//! use hasse::{hasse_algebra, FiniteGroup, GeneratingSet, LengthTable};
//!
//! let s3 = FiniteGroup::symmetric(3, 5040).unwrap();
//! let gens = GeneratingSet::from_labels(&s3, &["(12)", "(23)"]).unwrap();
//! let p = LengthTable::new(&s3, &gens).unwrap().poincare_polynomial();
//! assert_eq!(p.to_string(), "1 + 2t + 2t^2 + t^3");
//! let a = hasse_algebra(&s3, &gens).unwrap();
//! assert!(hasse::is_frobenius(&a));
//! ```

pub mod coaction;
pub mod corpus;
pub mod frobenius;
pub mod group;
pub mod hasse;
pub mod io;
pub mod length;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod screen;
pub mod series;

pub use frobenius::{analyze, is_frobenius, nakayama, FrobeniusAnalysis, FrobeniusStatus};
pub use group::FiniteGroup;
pub use hasse::{hasse_algebra, skew_hasse_from_weights, GradedAlgebraTable};
pub use length::{GeneratingSet, LengthTable};
pub use scalar::Rational;
pub use screen::dual_reflection_screen;
pub use series::{cyclotomic_factor, IntSeries};

// The guide's code blocks run as doctests so they cannot drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/lengths.md")]
    mod lengths {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/hasse.md")]
    mod hasse {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/screening.md")]
    mod screening {}
    #[doc = include_str!("../../../book/src/coaction.md")]
    mod coaction {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
