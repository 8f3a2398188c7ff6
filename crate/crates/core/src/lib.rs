//! Interval Garside structures for the affine Artin group of type `Ã_{n-1}`.
//!
//! Exact arithmetic in the monomial reflection group `G(∞,∞,n)`
//! ([`monomial`]), geodesic normal forms and lengths ([`geodesic`]), the
//! lattices `[1, λ^k]` ([`interval`]), greedy normal forms and the word
//! problem ([`garside`]), presentations and morphisms ([`relations`],
//! [`artin`]), and the `atilde` command line ([`cli`], [`dot`]).

pub mod artin;
pub mod cli;
pub mod dot;
pub mod error;
pub mod garside;
pub mod geodesic;
pub mod interval;
pub mod monomial;
pub mod relations;
pub mod word;

pub use error::{Error, Result};
pub use garside::{from_group_word, word_problem, GroupElement};
pub use geodesic::{length, reduced_expression};
pub use interval::{IntervalCtx, Simple};
pub use monomial::MonomialMatrix;
pub use word::{Generator, GroupWord, Letter};
