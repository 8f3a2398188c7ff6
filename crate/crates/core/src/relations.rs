//! Defining relations of the presentations in play, and pass/fail reports
//! for relation checks.

use std::fmt;

use serde::Serialize;

use crate::word::{Generator, GroupWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationFamily {
    /// `s_i s_j s_i = s_j s_i s_j`, `|i - j| = 1`.
    BraidA,
    /// `s_3 t_i s_3 = t_i s_3 t_i`.
    StBraid,
    /// `s_i s_j = s_j s_i` for `|i - j| > 1`, and `s_j t_i = t_i s_j` for `j >= 4`.
    Commuting,
    /// `t_i t_{i-k} = t_j t_{j-k}`.
    DualFree,
    /// `s_3 t_1 t_0 s_3 t_1 t_0 = t_1 t_0 s_3 t_1 t_0 s_3`.
    ShiLong,
    /// `x x = 1`; only holds in the reflection group.
    Quadratic,
    /// Relations of the type `B` Artin group, pushed through a map.
    BType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationRelation {
    #[serde(serialize_with = "ser_word")]
    pub lhs: GroupWord,
    #[serde(serialize_with = "ser_word")]
    pub rhs: GroupWord,
    pub family: RelationFamily,
}

fn ser_word<S: serde::Serializer>(w: &GroupWord, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

impl PresentationRelation {
    pub fn new(lhs: GroupWord, rhs: GroupWord, family: RelationFamily) -> PresentationRelation {
        PresentationRelation { lhs, rhs, family }
    }

    fn pos(lhs: &[Generator], rhs: &[Generator], family: RelationFamily) -> PresentationRelation {
        PresentationRelation::new(
            GroupWord::positive(lhs.iter().copied()),
            GroupWord::positive(rhs.iter().copied()),
            family,
        )
    }

    /// `lhs · rhs^{-1}`.
    pub fn relator(&self) -> GroupWord {
        self.lhs.concat(&self.rhs.inverse())
    }

    pub fn map<F: Fn(Generator) -> GroupWord>(&self, image: F) -> PresentationRelation {
        PresentationRelation::new(
            self.lhs.substitute(&image),
            self.rhs.substitute(&image),
            self.family,
        )
    }
}

impl fmt::Display for PresentationRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &GroupWord| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            }
        };
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

fn s_relations(n: usize, out: &mut Vec<PresentationRelation>) {
    use Generator::S;
    for i in 3..=n {
        for j in (i + 1)..=n {
            if j - i == 1 {
                out.push(PresentationRelation::pos(
                    &[S(i), S(j), S(i)],
                    &[S(j), S(i), S(j)],
                    RelationFamily::BraidA,
                ));
            } else {
                out.push(PresentationRelation::pos(
                    &[S(i), S(j)],
                    &[S(j), S(i)],
                    RelationFamily::Commuting,
                ));
            }
        }
    }
}

fn st_relations<I: IntoIterator<Item = i64> + Clone>(
    n: usize,
    indices: I,
    out: &mut Vec<PresentationRelation>,
) {
    use Generator::{S, T};
    if n < 3 {
        return;
    }
    for i in indices.clone() {
        out.push(PresentationRelation::pos(
            &[S(3), T(i), S(3)],
            &[T(i), S(3), T(i)],
            RelationFamily::StBraid,
        ));
    }
    for j in 4..=n {
        for i in indices.clone() {
            out.push(PresentationRelation::pos(
                &[S(j), T(i)],
                &[T(i), S(j)],
                RelationFamily::Commuting,
            ));
        }
    }
}

/// Defining relations of the monoid attached to `[1, λ^k]`, with every
/// `t` index in `[-bound, bound]`.
pub fn monoid_relations(n: usize, k: i64, bound: i64) -> Vec<PresentationRelation> {
    use Generator::T;
    let mut out = Vec::new();
    s_relations(n, &mut out);
    st_relations(n, -bound..=bound, &mut out);
    let in_range = |i: i64| (-bound..=bound).contains(&i);
    let heads: Vec<i64> = (-bound..=bound).filter(|&i| in_range(i - k)).collect();
    for (a, &i) in heads.iter().enumerate() {
        for &j in &heads[a + 1..] {
            out.push(PresentationRelation::pos(
                &[T(i), T(i - k)],
                &[T(j), T(j - k)],
                RelationFamily::DualFree,
            ));
        }
    }
    out
}

/// The dual presentation with generators `t_i` (`i ∈ ℤ`), `s_3, …, s_n`;
/// the `k = 1` case of [`monoid_relations`].
pub fn cll_relations(n: usize, bound: i64) -> Vec<PresentationRelation> {
    monoid_relations(n, 1, bound)
}

/// The presentation on `t_0, t_1, s_3, …, s_n`.
pub fn shi_relations(n: usize) -> Vec<PresentationRelation> {
    use Generator::{S, T};
    let mut out = Vec::new();
    s_relations(n, &mut out);
    st_relations(n, 0..=1, &mut out);
    if n >= 3 {
        out.push(PresentationRelation::pos(
            &[S(3), T(1), T(0), S(3), T(1), T(0)],
            &[T(1), T(0), S(3), T(1), T(0), S(3)],
            RelationFamily::ShiLong,
        ));
    }
    out
}

/// `x x = 1` for `t_i` (`|i| <= bound`) and every `s_j`.
pub fn quadratic_relations(n: usize, bound: i64) -> Vec<PresentationRelation> {
    (-bound..=bound)
        .map(Generator::T)
        .chain((3..=n).map(Generator::S))
        .map(|g| PresentationRelation::pos(&[g, g], &[], RelationFamily::Quadratic))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed: false,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> VerificationReport {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "[{tag}] {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failed
        )
    }
}
