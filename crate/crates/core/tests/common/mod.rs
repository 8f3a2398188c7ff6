#![allow(dead_code)]

use atilde_garside::geodesic::{length, TPart};
use atilde_garside::interval::{
    in_interval, join_left, join_right, meet_left, meet_right, simple_walk, IntervalCtx, Simple,
};
use atilde_garside::monomial::MonomialMatrix;
use atilde_garside::word::{Generator, GroupWord, Letter};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform permutation, exponents uniform in `[-e, e]` conditioned on
/// summing to zero.
pub fn random_element<R: Rng>(rng: &mut R, n: usize, e: i64) -> MonomialMatrix {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    loop {
        let mut exps: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-e..=e)).collect();
        let last = -exps.iter().sum::<i64>();
        if last.abs() <= e {
            exps.push(last);
            return MonomialMatrix::new(perm, exps).unwrap();
        }
    }
}

/// A walk of random atoms below `Δ`, of random length at most `max_steps`,
/// with `t` indices from `[-t_bound, t_bound]` when all of them are available.
pub fn random_simple<R: Rng>(
    rng: &mut R,
    ctx: &IntervalCtx,
    max_steps: usize,
    t_bound: i64,
) -> Simple {
    let steps = rng.gen_range(0..=max_steps);
    let mut taken = 0;
    simple_walk(ctx, |avail| {
        if taken == steps {
            return None;
        }
        taken += 1;
        let mut opts: Vec<Generator> = avail.s_part.iter().map(|&j| Generator::S(j)).collect();
        match avail.t_part {
            TPart::None => {}
            TPart::One(i) => opts.push(Generator::T(i)),
            TPart::All => opts.extend((-t_bound..=t_bound).map(Generator::T)),
        }
        opts.choose(rng).copied()
    })
}

pub fn random_generator<R: Rng>(rng: &mut R, n: usize, t_bound: i64) -> Generator {
    let s_count = n.saturating_sub(2) as i64;
    let r = rng.gen_range(-t_bound..=t_bound + s_count);
    if r <= t_bound {
        Generator::T(r)
    } else {
        Generator::S((r - t_bound) as usize + 2)
    }
}

pub fn random_positive_word<R: Rng>(rng: &mut R, n: usize, len: usize, t_bound: i64) -> GroupWord {
    GroupWord::positive((0..len).map(|_| random_generator(rng, n, t_bound)))
}

pub fn random_group_word<R: Rng>(rng: &mut R, n: usize, len: usize, t_bound: i64) -> GroupWord {
    (0..len)
        .map(|_| {
            let g = random_generator(rng, n, t_bound);
            if rng.gen_bool(0.5) {
                Letter::neg(g)
            } else {
                Letter::pos(g)
            }
        })
        .collect()
}

/// Every element of `G(∞,∞,n)` with exponents in `[-w, w]`, each with its
/// length.
fn perms(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for c in 1..=n {
        if !prefix.contains(&c) {
            prefix.push(c);
            perms(n, prefix, out);
            prefix.pop();
        }
    }
}

fn exps(n: usize, w: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if prefix.len() == n - 1 {
        let last = -prefix.iter().sum::<i64>();
        if last.abs() <= w {
            let mut e = prefix.clone();
            e.push(last);
            out.push(e);
        }
        return;
    }
    for x in -w..=w {
        prefix.push(x);
        exps(n, w, prefix, out);
        prefix.pop();
    }
}

/// Every element of `G(∞,∞,n)` with exponents in `[-w, w]`, each with its
/// length.
pub fn window(n: usize, w: i64) -> Vec<(MonomialMatrix, usize)> {
    let (mut ps, mut es) = (vec![], vec![]);
    perms(n, &mut vec![], &mut ps);
    exps(n, w, &mut vec![], &mut es);
    let mut out = Vec::new();
    for p in &ps {
        for e in &es {
            let m = MonomialMatrix::new(p.clone(), e.clone()).unwrap();
            let l = length(&m);
            out.push((m, l));
        }
    }
    out
}

/// Every diagonal matrix with exponents in `[-w, w]`.
pub fn diagonals(n: usize, w: i64) -> Vec<MonomialMatrix> {
    let mut es = vec![];
    exps(n, w, &mut vec![], &mut es);
    es.into_iter()
        .map(|e| MonomialMatrix::diagonal(e).unwrap())
        .collect()
}

fn ldiv(c: &MonomialMatrix, lc: usize, a: &MonomialMatrix, la: usize) -> bool {
    lc <= la && lc + length(&(&c.inv() * a)) == la
}

fn rdiv(c: &MonomialMatrix, lc: usize, a: &MonomialMatrix, la: usize) -> bool {
    lc <= la && lc + length(&(a * &c.inv())) == la
}

/// Universal properties of the four lattice operations on `a`, `b`, checked
/// against every candidate of the window. The `t` atoms form an infinite
/// class; the window sees the representatives with small index.
pub fn check_lattice(
    a: &Simple,
    b: &Simple,
    ctx: &IntervalCtx,
    cands: &[(MonomialMatrix, usize)],
) -> Result<(), String> {
    let (am, bm) = (a.matrix(), b.matrix());
    let (la, lb) = (a.length(), b.length());
    let ml = meet_left(a, b, ctx);
    let mr = meet_right(a, b, ctx);
    let jl = join_left(a, b, ctx);
    let jr = join_right(a, b, ctx);
    let (lml, lmr, ljl, ljr) = (ml.length(), mr.length(), jl.length(), jr.length());
    let ml = ml.matrix();
    let mr = mr.matrix();
    let jl = jl.matrix();
    let jr = jr.matrix();
    if !(ldiv(ml, lml, am, la) && ldiv(ml, lml, bm, lb)) {
        return Err(format!("meet_left {ml:?} does not divide {am:?}, {bm:?}"));
    }
    if !(rdiv(mr, lmr, am, la) && rdiv(mr, lmr, bm, lb)) {
        return Err(format!("meet_right {mr:?} does not divide"));
    }
    if !(ldiv(am, la, jl, ljl) && ldiv(bm, lb, jl, ljl)) {
        return Err(format!("join_left {jl:?} is not a multiple"));
    }
    if !(rdiv(am, la, jr, ljr) && rdiv(bm, lb, jr, ljr)) {
        return Err(format!("join_right {jr:?} is not a multiple"));
    }
    for (c, lc) in cands {
        let lc = *lc;
        if lc <= la.min(lb) {
            if ldiv(c, lc, am, la) && ldiv(c, lc, bm, lb) && !ldiv(c, lc, ml, lml) {
                return Err(format!(
                    "common left divisor {c:?} does not divide meet {ml:?}"
                ));
            }
            if rdiv(c, lc, am, la) && rdiv(c, lc, bm, lb) && !rdiv(c, lc, mr, lmr) {
                return Err(format!(
                    "common right divisor {c:?} does not divide meet {mr:?}"
                ));
            }
        }
        if lc >= la.max(lb) && in_interval(c, ctx) {
            if ldiv(am, la, c, lc) && ldiv(bm, lb, c, lc) && !ldiv(jl, ljl, c, lc) {
                return Err(format!("common left multiple {c:?} not above join {jl:?}"));
            }
            if rdiv(am, la, c, lc) && rdiv(bm, lb, c, lc) && !rdiv(jr, ljr, c, lc) {
                return Err(format!("common right multiple {c:?} not above join {jr:?}"));
            }
        }
    }
    Ok(())
}
