//! Presentation-level bridges: rewriting the dual `t_i` in terms of `t_0`,
//! `t_1`; the embedding of the type `B_{n-1}` Artin monoid; and relation
//! suites for the `k = ±1` identification.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::garside::{check_relations, from_group_word, GroupElement};
use crate::interval::{join_left, IntervalCtx};
use crate::monomial::{eval_word, generator_matrix};
use crate::relations::{
    cll_relations, monoid_relations, quadratic_relations, shi_relations, CheckResult,
    PresentationRelation, VerificationReport,
};
use crate::word::{Generator, GroupWord};

/// `t_i` as a word in `t_0`, `t_1` and their inverses, from
/// `t_{i+1} = t_1 t_0 t_i^{-1}` and `t_{i-1} = t_i^{-1} t_1 t_0`.
pub fn cll_t_as_shi_word(i: i64) -> GroupWord {
    let t1t0 = GroupWord::positive([Generator::T(1), Generator::T(0)]);
    match i {
        0 | 1 => GroupWord::positive([Generator::T(i)]),
        i if i > 1 => t1t0
            .concat(&cll_t_as_shi_word(i - 1).inverse())
            .freely_reduced(),
        _ => cll_t_as_shi_word(i + 1)
            .inverse()
            .concat(&t1t0)
            .freely_reduced(),
    }
}

/// A letter `q_m` or `q_m^{-1}` of the type `B` Artin group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BLetter {
    pub index: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BWord(pub Vec<BLetter>);

impl BWord {
    pub fn positive<I: IntoIterator<Item = usize>>(idx: I) -> BWord {
        BWord(
            idx.into_iter()
                .map(|index| BLetter {
                    index,
                    inverse: false,
                })
                .collect(),
        )
    }

    /// `q_1 (q_2 q_1 q_2) ⋯ (q_r ⋯ q_2 q_1 q_2 ⋯ q_r)`, the positive word of
    /// the longest element of `B_r`.
    pub fn garside_element(rank: usize) -> BWord {
        let mut v = vec![];
        for m in 1..=rank {
            v.extend((2..=m).rev());
            v.push(1);
            v.extend(2..=m);
        }
        BWord::positive(v)
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|l| format!("q{}{}", l.index, if l.inverse { "^-1" } else { "" }))
            .collect();
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for BWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<BWord> {
        let mut out = Vec::new();
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let b = offset + s[offset..].find(tok).expect("token of s");
            offset = b + tok.len();
            let col = s[..b].chars().count() + 1;
            let (body, inverse) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let index = body
                .strip_prefix('q')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&m| m >= 1)
                .ok_or_else(|| Error::Parse {
                    pos: col,
                    token: tok.to_string(),
                    msg: "expected `qm` with m >= 1".into(),
                })?;
            out.push(BLetter { index, inverse });
        }
        Ok(BWord(out))
    }
}

/// Defining relations of the type `B_r` Artin group on `q_1, …, q_r`
/// (`q_1 q_2` of order 4, the rest of type `A`).
pub fn b_type_relations(rank: usize) -> Vec<(BWord, BWord)> {
    let mut out = Vec::new();
    for i in 1..=rank {
        for j in (i + 1)..=rank {
            let (l, r) = match (i, j - i) {
                (1, 1) => (vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
                (_, 1) => (vec![i, j, i], vec![j, i, j]),
                _ => (vec![i, j], vec![j, i]),
            };
            out.push((BWord::positive(l), BWord::positive(r)));
        }
    }
    out
}

/// Positive word of the longest element of the parabolic subgroup `<q_x, q_y>`
/// of the finite Coxeter group `B_rank`, found by breadth-first search over
/// signed permutations.
pub fn b_coxeter_lcm(x: usize, y: usize, rank: usize) -> BWord {
    if x == y {
        return BWord::positive([x]);
    }
    // q_1 negates the first coordinate, q_m swaps coordinates m-1 and m
    let act = |v: &Vec<i32>, m: usize| -> Vec<i32> {
        let mut v = v.clone();
        if m == 1 {
            v[0] = -v[0];
        } else {
            v.swap(m - 2, m - 1);
        }
        v
    };
    let start: Vec<i32> = (1..=rank as i32).collect();
    let mut parent: BTreeMap<Vec<i32>, Option<(Vec<i32>, usize)>> = BTreeMap::new();
    let mut order = vec![start.clone()];
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for g in [x, y] {
            let u = act(&v, g);
            if !parent.contains_key(&u) {
                parent.insert(u.clone(), Some((v.clone(), g)));
                order.push(u.clone());
                queue.push_back(u);
            }
        }
    }
    let mut cur = order.last().expect("nonempty").clone();
    let mut letters = Vec::new();
    while let Some(Some((prev, g))) = parent.get(&cur).cloned() {
        letters.push(g);
        cur = prev;
    }
    letters.reverse();
    BWord::positive(letters)
}

/// Image of `q_m`: `q_1 ↦ t_k t_0`, `q_m ↦ s_{m+1}` for `m >= 2`.
pub fn phi_image(m: usize, k: i64) -> GroupWord {
    match m {
        1 => GroupWord::positive([Generator::T(k), Generator::T(0)]),
        _ => GroupWord::positive([Generator::S(m + 1)]),
    }
}

fn b_word_image<F: Fn(usize) -> GroupWord>(w: &BWord, image: &F) -> GroupWord {
    let mut out = GroupWord::new();
    for l in &w.0 {
        let img = image(l.index);
        out = out.concat(&if l.inverse { img.inverse() } else { img });
    }
    out
}

fn check_b_word(w: &BWord, n: usize) -> Result<()> {
    match w.0.iter().find(|l| l.index > n - 1) {
        Some(l) => Err(Error::BadGenerator { j: l.index + 1, n }),
        None => Ok(()),
    }
}

/// Normal form of the image of a type `B_{n-1}` word.
pub fn phi(w: &BWord, ctx: &IntervalCtx) -> Result<GroupElement> {
    check_b_word(w, ctx.n())?;
    from_group_word(&b_word_image(w, &|m| phi_image(m, ctx.k())), ctx)
}

/// [`verify_phi_with`] for the canonical map.
pub fn verify_phi(ctx: &IntervalCtx) -> Result<VerificationReport> {
    let k = ctx.k();
    verify_phi_with(ctx, |m| phi_image(m, k))
}

/// Checks that a candidate image of the generators `q_m` respects every
/// defining relation, sends lcms of generators to joins, and sends the type
/// `B` Garside element to `Δ`.
pub fn verify_phi_with<F: Fn(usize) -> GroupWord>(
    ctx: &IntervalCtx,
    image: F,
) -> Result<VerificationReport> {
    let rank = ctx.n() - 1;
    let mut report = VerificationReport::new("phi");
    let img =
        |w: &BWord| -> Result<GroupElement> { from_group_word(&b_word_image(w, &image), ctx) };

    for (l, r) in b_type_relations(rank) {
        let name = format!("phi({l}) = phi({r})");
        let (a, b) = (img(&l)?, img(&r)?);
        report.push(if a == b {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, format!("{a}  vs  {b}"))
        });
    }

    for x in 1..=rank {
        for y in (x + 1)..=rank {
            let name = format!("phi(q{x}) v phi(q{y}) = phi(lcm)");
            let simple_of = |m: usize| -> Result<_> {
                let mat = eval_word(&image(m), ctx.n())?;
                ctx.simple(mat)
            };
            let (a, b) = match (simple_of(x), simple_of(y)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => {
                    report.push(CheckResult::fail(
                        name,
                        "image of a generator is not simple",
                    ));
                    continue;
                }
            };
            let join = GroupElement::from_simple(&join_left(&a, &b, ctx), ctx);
            let lcm = b_coxeter_lcm(x, y, rank);
            let target = img(&lcm)?;
            report.push(if join == target {
                CheckResult::pass(name)
            } else {
                CheckResult::fail(name, format!("join {join}  vs  phi({lcm}) {target}"))
            });
        }
    }

    let g = img(&BWord::garside_element(rank))?;
    let name = "phi(B-type Garside element) = Delta".to_string();
    report.push(if g == GroupElement::delta_power(1) {
        CheckResult::pass(name)
    } else {
        CheckResult::fail(name, g.to_string())
    });
    Ok(report)
}

/// Pushes relations through a letter substitution and checks them in `ctx`.
pub fn verify_relation_images<F: Fn(Generator) -> GroupWord>(
    suite: &str,
    relations: &[PresentationRelation],
    image: F,
    ctx: &IntervalCtx,
) -> Result<VerificationReport> {
    let mapped: Vec<PresentationRelation> = relations.iter().map(|r| r.map(&image)).collect();
    check_relations(suite, &mapped, ctx)
}

/// `t_i ↦ t_{-i}`, `s_j ↦ s_j`.
pub fn negate_t(g: Generator) -> GroupWord {
    match g {
        Generator::T(i) => GroupWord::positive([Generator::T(-i)]),
        s => GroupWord::positive([s]),
    }
}

/// Checks that `t_i ↦ t_{-i}` carries the relations for `k = -1` to those for
/// `k = 1` and back.
pub fn verify_k_iso(n: usize, bound: i64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("k-iso");
    for (from, to) in [(-1, 1), (1, -1)] {
        let ctx = IntervalCtx::new(n, to)?;
        let rels = monoid_relations(n, from, bound);
        let mut r = verify_relation_images("k-iso", &rels, negate_t, &ctx)?;
        for c in r.checks.iter_mut() {
            c.name = format!("k={from} -> k={to}: {}", c.name);
        }
        report.extend(r);
    }
    Ok(report)
}

fn check_projection(
    report: &mut VerificationReport,
    rels: &[PresentationRelation],
    n: usize,
) -> Result<()> {
    for r in rels {
        let name = format!("projection: {r}");
        let (a, b) = (eval_word(&r.lhs, n)?, eval_word(&r.rhs, n)?);
        report.push(if a == b {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, format!("{a:?} vs {b:?}"))
        });
    }
    Ok(())
}

/// Relations of the dual presentation: normal forms agree for `k = 1`, and
/// they (with the quadratic relations) hold in `G(∞,∞,n)`.
pub fn verify_cll(n: usize, bound: i64) -> Result<VerificationReport> {
    let ctx = IntervalCtx::new(n, 1)?;
    let rels = cll_relations(n, bound);
    let mut report = check_relations("cll", &rels, &ctx)?;
    check_projection(&mut report, &rels, n)?;
    check_projection(&mut report, &quadratic_relations(n, bound), n)?;
    Ok(report)
}

/// Relations on `t_0, t_1, s_j`, plus `t_i = cll_t_as_shi_word(i)` both as
/// matrices and in the braid group, for `|i| <= bound`.
pub fn verify_shi(n: usize, bound: i64) -> Result<VerificationReport> {
    let ctx = IntervalCtx::new(n, 1)?;
    let rels = shi_relations(n);
    let mut report = check_relations("shi", &rels, &ctx)?;
    check_projection(&mut report, &rels, n)?;
    check_projection(&mut report, &quadratic_relations(n, 1), n)?;
    for i in -bound..=bound {
        let w = cll_t_as_shi_word(i);
        let name = format!("t[{i}] = {w}");
        let t = GroupWord::positive([Generator::T(i)]);
        let same_matrix = eval_word(&w, n)? == generator_matrix(Generator::T(i), n)?;
        let same_element = from_group_word(&w, &ctx)? == from_group_word(&t, &ctx)?;
        report.push(match (same_matrix, same_element) {
            (true, true) => CheckResult::pass(name),
            (m, e) => CheckResult::fail(name, format!("matrix {m}, braid {e}")),
        });
    }
    Ok(report)
}
