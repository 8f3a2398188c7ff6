mod common;

use std::collections::BTreeSet;

use atilde_garside::garside::normal_form;
use atilde_garside::geodesic::length;
use atilde_garside::interval::{in_interval, IntervalCtx};
use atilde_garside::monomial::{eval_word, MonomialMatrix};
use atilde_garside::relations::{monoid_relations, PresentationRelation};
use atilde_garside::word::{GroupWord, Letter};
use common::{random_positive_word, rng};
use rand::Rng;

/// Every word equal to `w` in the monoid, moving only through words whose
/// `t` indices stay in `[-bound, bound]`.
fn relation_class(w: &GroupWord, rels: &[PresentationRelation]) -> BTreeSet<Vec<Letter>> {
    let mut seen = BTreeSet::from([w.letters().to_vec()]);
    let mut queue = vec![w.letters().to_vec()];
    while let Some(cur) = queue.pop() {
        for rel in rels {
            for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                let f = from.letters();
                for p in 0..(cur.len() + 1).saturating_sub(f.len()) {
                    if &cur[p..p + f.len()] == f {
                        let mut next = cur[..p].to_vec();
                        next.extend_from_slice(to.letters());
                        next.extend_from_slice(&cur[p + f.len()..]);
                        if seen.insert(next.clone()) {
                            queue.push(next);
                        }
                    }
                }
            }
        }
    }
    seen
}

/// Left-greedy factors by exhaustion: the first factor is the longest prefix,
/// over all words of the class, whose product is a simple of additive length.
fn greedy_oracle(
    w: &GroupWord,
    ctx: &IntervalCtx,
    rels: &[PresentationRelation],
) -> Vec<MonomialMatrix> {
    let n = ctx.n();
    if w.is_empty() {
        return vec![];
    }
    let mut best: Option<(usize, MonomialMatrix, Vec<Letter>)> = None;
    for word in relation_class(w, rels) {
        for l in 1..=word.len() {
            let p = eval_word(&GroupWord(word[..l].to_vec()), n).unwrap();
            if length(&p) != l || !in_interval(&p, ctx) {
                continue;
            }
            match &best {
                Some((bl, bm, _)) if *bl == l => assert_eq!(bm, &p, "two longest simple prefixes"),
                Some((bl, _, _)) if *bl > l => {}
                _ => best = Some((l, p, word[l..].to_vec())),
            }
        }
    }
    let (_, s, rest) = best.expect("an atom is a simple prefix");
    let mut out = vec![s];
    out.extend(greedy_oracle(&GroupWord(rest), ctx, rels));
    out
}

fn check(word: &GroupWord, ctx: &IntervalCtx) {
    let rels = monoid_relations(ctx.n(), ctx.k(), 5);
    let atoms: Vec<_> = word
        .letters()
        .iter()
        .map(|l| ctx.atom(l.gen).unwrap())
        .collect();
    let nf: Vec<MonomialMatrix> = normal_form(&atoms, ctx)
        .factors()
        .iter()
        .map(|s| s.matrix().clone())
        .collect();
    assert_eq!(nf, greedy_oracle(word, ctx, &rels), "{word}");
}

#[test]
fn worked_example_matches_exhaustive_factoring() {
    let ctx = IntervalCtx::new(3, 1).unwrap();
    let word: GroupWord = "s3 t[2] t[0]".parse().unwrap();
    check(&word, &ctx);
    let nf = normal_form(
        &word
            .letters()
            .iter()
            .map(|l| ctx.atom(l.gen).unwrap())
            .collect::<Vec<_>>(),
        &ctx,
    );
    let words: Vec<String> = nf.factors().iter().map(|s| s.word().to_string()).collect();
    assert_eq!(words, ["s3 t[2]", "t[0]"]);
}

#[test]
fn random_words_match_exhaustive_factoring() {
    let mut r = rng(11);
    for _ in 0..200 {
        let k = r.gen_range(1..=2);
        let ctx = IntervalCtx::new(3, k).unwrap();
        let len = r.gen_range(1..=6);
        let word = random_positive_word(&mut r, 3, len, 2);
        check(&word, &ctx);
    }
}
