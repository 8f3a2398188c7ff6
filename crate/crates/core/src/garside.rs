//! The interval Garside monoid on `[1, λ^k]` and its group of fractions:
//! left-greedy normal forms, the `Δ`-conjugation automorphism, and the
//! word problem.

use std::fmt;

use crate::error::Result;
use crate::interval::{complement_right, meet_left, IntervalCtx, Simple};
use crate::monomial::MonomialMatrix;
use crate::relations::{monoid_relations, CheckResult, PresentationRelation, VerificationReport};
use crate::word::GroupWord;

/// `Δ^{-p} w Δ^p`. `Δ` is balanced, so this maps simples to simples.
pub fn tau_pow(w: &Simple, p: i64, ctx: &IntervalCtx) -> Simple {
    if p == 0 {
        return w.clone();
    }
    let d = crate::geodesic::lambda_power(ctx.n(), ctx.k() * p).expect("nonzero power");
    let out = w.matrix().conjugate_by_diagonal(d.exps());
    assert!(ctx.contains(&out), "conjugation left the interval: {out:?}");
    ctx.simple_unchecked(out)
}

/// `Δ^{-1} w Δ`.
pub fn tau(w: &Simple, ctx: &IntervalCtx) -> Simple {
    tau_pow(w, 1, ctx)
}

/// `(u, v) ↦ (u w, w^{-1} v)` with `w = meet_left(∂u, v)`; the product is
/// unchanged and the new pair is left-weighted.
pub fn left_weighted_pair(u: &Simple, v: &Simple, ctx: &IntervalCtx) -> (Simple, Simple) {
    let w = meet_left(&complement_right(u, ctx), v, ctx);
    if w.is_identity() {
        return (u.clone(), v.clone());
    }
    let wm = w.matrix();
    (
        ctx.simple_unchecked(u.matrix() * wm),
        ctx.simple_unchecked(&wm.inv() * v.matrix()),
    )
}

pub fn is_left_weighted(u: &Simple, v: &Simple, ctx: &IntervalCtx) -> bool {
    meet_left(&complement_right(u, ctx), v, ctx).is_identity()
}

/// A left-weighted sequence of non-identity simples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CanonicalPositive {
    factors: Vec<Simple>,
}

impl CanonicalPositive {
    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of the factor lengths.
    pub fn length(&self) -> usize {
        self.factors.iter().map(Simple::length).sum()
    }

    /// Product of the factors in `G(∞,∞,n)`.
    pub fn to_matrix(&self, n: usize) -> MonomialMatrix {
        self.factors
            .iter()
            .fold(MonomialMatrix::identity(n), |acc, s| &acc * s.matrix())
    }

    /// Concatenated reduced expressions of the factors.
    pub fn word(&self) -> GroupWord {
        self.factors
            .iter()
            .fold(GroupWord::new(), |acc, s| acc.concat(&s.word()))
    }
}

/// Left-greedy normal form of a product of simples, by repeated passes of
/// adjacent rebalancing until every pair is left-weighted.
pub fn normal_form(factors: &[Simple], ctx: &IntervalCtx) -> CanonicalPositive {
    let mut f: Vec<Simple> = factors
        .iter()
        .filter(|s| !s.is_identity())
        .cloned()
        .collect();
    loop {
        let mut changed = false;
        for i in 1..f.len() {
            let (u, v) = left_weighted_pair(&f[i - 1], &f[i], ctx);
            if u != f[i - 1] {
                f[i - 1] = u;
                f[i] = v;
                changed = true;
            }
        }
        f.retain(|s| !s.is_identity());
        if !changed {
            break;
        }
    }
    CanonicalPositive { factors: f }
}

/// `Δ^m x_1 ⋯ x_r` with `x_1 ≠ Δ` and `(x_1, …, x_r)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    delta_exp: i64,
    positive: CanonicalPositive,
}

impl GroupElement {
    pub fn identity() -> GroupElement {
        GroupElement {
            delta_exp: 0,
            positive: CanonicalPositive::default(),
        }
    }

    pub fn delta_power(m: i64) -> GroupElement {
        GroupElement {
            delta_exp: m,
            positive: CanonicalPositive::default(),
        }
    }

    /// Normalizes `Δ^m · factors`.
    pub fn from_parts(m: i64, factors: &[Simple], ctx: &IntervalCtx) -> GroupElement {
        let nf = normal_form(factors, ctx);
        let delta = ctx.delta();
        let lead = nf
            .factors
            .iter()
            .take_while(|s| s.matrix() == delta)
            .count();
        GroupElement {
            delta_exp: m + lead as i64,
            positive: CanonicalPositive {
                factors: nf.factors[lead..].to_vec(),
            },
        }
    }

    pub fn from_simple(s: &Simple, ctx: &IntervalCtx) -> GroupElement {
        GroupElement::from_parts(0, std::slice::from_ref(s), ctx)
    }

    pub fn delta_exp(&self) -> i64 {
        self.delta_exp
    }

    pub fn positive(&self) -> &CanonicalPositive {
        &self.positive
    }

    pub fn factors(&self) -> &[Simple] {
        &self.positive.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.positive.is_empty()
    }

    /// `Δ^a X · Δ^b Y = Δ^{a+b} τ^b(X) Y`.
    pub fn mul(&self, other: &GroupElement, ctx: &IntervalCtx) -> GroupElement {
        let b = other.delta_exp;
        let mut f: Vec<Simple> = self.factors().iter().map(|x| tau_pow(x, b, ctx)).collect();
        f.extend(other.factors().iter().cloned());
        GroupElement::from_parts(self.delta_exp + b, &f, ctx)
    }

    pub fn inverse(&self, ctx: &IntervalCtx) -> GroupElement {
        let mut b = Builder::new(ctx);
        for x in self.factors().iter().rev() {
            b.push_inverse(x);
        }
        b.right_delta(-self.delta_exp);
        b.finish()
    }

    /// Image in `G(∞,∞,n)`.
    pub fn to_matrix(&self, ctx: &IntervalCtx) -> MonomialMatrix {
        let pos = self.positive.to_matrix(ctx.n());
        if self.delta_exp == 0 {
            return pos;
        }
        let d = crate::geodesic::lambda_power(ctx.n(), ctx.k() * self.delta_exp)
            .expect("nonzero delta power");
        &d * &pos
    }
}

/// `Δ^m | w_1 | w_2 | …` with each simple printed as its reduced expression.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_exp)?;
        for s in self.factors() {
            write!(f, " | {}", s.word())?;
        }
        Ok(())
    }
}

/// Accumulates `Δ^m · s_1 ⋯ s_r` while reading a word left to right.
struct Builder<'a> {
    ctx: &'a IntervalCtx,
    m: i64,
    factors: Vec<Simple>,
}

impl<'a> Builder<'a> {
    fn new(ctx: &'a IntervalCtx) -> Builder<'a> {
        Builder {
            ctx,
            m: 0,
            factors: Vec::new(),
        }
    }

    fn push(&mut self, s: &Simple) {
        if !s.is_identity() {
            self.factors.push(s.clone());
        }
    }

    /// Right multiplication by `Δ^p`: `Z Δ^p = Δ^p τ^p(Z)`.
    fn right_delta(&mut self, p: i64) {
        if p == 0 {
            return;
        }
        for f in self.factors.iter_mut() {
            *f = tau_pow(f, p, self.ctx);
        }
        self.m += p;
    }

    /// `s^{-1} = ∂s · Δ^{-1}`.
    fn push_inverse(&mut self, s: &Simple) {
        let c = complement_right(s, self.ctx);
        self.push(&c);
        self.right_delta(-1);
    }

    fn finish(self) -> GroupElement {
        GroupElement::from_parts(self.m, &self.factors, self.ctx)
    }
}

/// Normal form of the element represented by a word in the generators and
/// their inverses.
pub fn from_group_word(w: &GroupWord, ctx: &IntervalCtx) -> Result<GroupElement> {
    w.validate(ctx.n())?;
    let mut b = Builder::new(ctx);
    for l in w.letters() {
        let a = ctx.atom(l.gen)?;
        if l.inverse {
            b.push_inverse(&a);
        } else {
            b.push(&a);
        }
    }
    Ok(b.finish())
}

pub fn equals(g1: &GroupElement, g2: &GroupElement) -> bool {
    g1 == g2
}

/// Decides whether two words represent the same element of the group of
/// fractions.
pub fn word_problem(w1: &GroupWord, w2: &GroupWord, ctx: &IntervalCtx) -> Result<bool> {
    Ok(equals(
        &from_group_word(w1, ctx)?,
        &from_group_word(w2, ctx)?,
    ))
}

/// Checks each relation by comparing normal forms of both sides.
pub fn check_relations(
    suite: &str,
    relations: &[PresentationRelation],
    ctx: &IntervalCtx,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(suite);
    for r in relations {
        let (a, b) = (from_group_word(&r.lhs, ctx)?, from_group_word(&r.rhs, ctx)?);
        report.push(if a == b {
            CheckResult::pass(r.to_string())
        } else {
            CheckResult::fail(r.to_string(), format!("{a}  vs  {b}"))
        });
    }
    Ok(report)
}

/// Every defining relation of the monoid with `t` indices in `[-bound, bound]`.
pub fn verify_monoid_relations(ctx: &IntervalCtx, index_bound: i64) -> Result<VerificationReport> {
    let rels = monoid_relations(ctx.n(), ctx.k(), index_bound);
    check_relations("monoid", &rels, ctx)
}
