//! The intervals `[1, λ^k]`: bubbles and the `Z`/`Z'` partition, membership,
//! complements, atoms and the lattice operations.
//!
//! Divisor sets of simples can be infinite (every `t_i` divides `λ^k`), so
//! the `t` atoms are tracked symbolically through [`TPart`](crate::geodesic::TPart); the greedy
//! algorithms only ever need one representative of the `All` class.

use std::fmt;

use crate::error::{Error, Result};
use crate::geodesic::{is_max_length, lambda_power, left_descents, length, max_length, DescentSet};
use crate::monomial::{generator_matrix, MonomialMatrix};
use crate::word::{Generator, GroupWord};

pub type AtomSet = DescentSet;

/// The pair `(n, k)` with Garside element `Δ = λ^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalCtx {
    n: usize,
    k: i64,
    delta: MonomialMatrix,
}

impl IntervalCtx {
    pub fn new(n: usize, k: i64) -> Result<IntervalCtx> {
        let delta = lambda_power(n, k)?;
        Ok(IntervalCtx { n, k, delta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn delta(&self) -> &MonomialMatrix {
        &self.delta
    }

    /// The context for `λ^{-k}`, whose simples are the inverses of ours.
    pub fn opposite(&self) -> IntervalCtx {
        IntervalCtx::new(self.n, -self.k).expect("k is nonzero")
    }

    pub fn contains(&self, w: &MonomialMatrix) -> bool {
        w.n() == self.n && in_interval(w, self)
    }

    pub fn simple(&self, w: MonomialMatrix) -> Result<Simple> {
        if w.n() != self.n {
            return Err(Error::DimensionMismatch(w.n(), self.n));
        }
        if !in_interval(&w, self) {
            return Err(Error::NotSimple { k: self.k });
        }
        Ok(Simple {
            matrix: w,
            k: self.k,
        })
    }

    pub fn atom(&self, g: Generator) -> Result<Simple> {
        self.simple(generator_matrix(g, self.n)?)
    }

    pub fn identity(&self) -> Simple {
        Simple {
            matrix: MonomialMatrix::identity(self.n),
            k: self.k,
        }
    }

    pub fn delta_simple(&self) -> Simple {
        Simple {
            matrix: self.delta.clone(),
            k: self.k,
        }
    }

    pub(crate) fn simple_unchecked(&self, w: MonomialMatrix) -> Simple {
        debug_assert!(
            in_interval_by_length(&w, self),
            "{w:?} not in [1, λ^{}]",
            self.k
        );
        Simple {
            matrix: w,
            k: self.k,
        }
    }

    fn check(&self, a: &Simple) {
        assert_eq!(a.k, self.k, "simple from a different interval");
        assert_eq!(a.matrix.n(), self.n, "simple of a different dimension");
    }
}

/// An element of `[1, λ^k]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple {
    matrix: MonomialMatrix,
    k: i64,
}

impl Simple {
    pub fn matrix(&self) -> &MonomialMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> MonomialMatrix {
        self.matrix
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn length(&self) -> usize {
        length(&self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn word(&self) -> GroupWord {
        crate::geodesic::reduced_expression(&self.matrix)
    }
}

impl fmt::Debug for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple({:?})", self.matrix)
    }
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// Bubbles of `w` and the upper-left region `Z(w)` they cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPartition {
    n: usize,
    /// 1-based `[i, c]`, sorted by row.
    pub bubbles: Vec<(usize, usize)>,
    in_z: Vec<bool>,
}

impl ZPartition {
    pub fn in_z(&self, i: usize, c: usize) -> bool {
        self.in_z[(i - 1) * self.n + (c - 1)]
    }

    pub fn in_z_prime(&self, i: usize, c: usize) -> bool {
        !self.in_z(i, c)
    }

    pub fn z_prime(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| (1..=self.n).map(move |c| (i, c)))
            .filter(|&(i, c)| self.in_z_prime(i, c))
            .collect()
    }

    pub fn is_bubble(&self, i: usize, c: usize) -> bool {
        self.bubbles.contains(&(i, c))
    }
}

/// A nonzero entry `[i, c]` is a bubble when every other entry `[j, d]` with
/// `j <= i` and `d <= c` vanishes, i.e. its column is smaller than the
/// columns of all rows above it.
pub fn z_partition(w: &MonomialMatrix) -> ZPartition {
    let n = w.n();
    let mut bubbles = Vec::new();
    let mut min_col = usize::MAX;
    for i in 1..=n {
        let c = w.column_of(i);
        if c < min_col {
            bubbles.push((i, c));
            min_col = c;
        }
    }
    let mut in_z = vec![false; n * n];
    for &(bi, bc) in &bubbles {
        for j in 0..bi {
            for d in 0..bc {
                in_z[j * n + d] = true;
            }
        }
    }
    ZPartition { n, bubbles, in_z }
}

/// Membership in `[1, λ^k]`: every nonzero entry of `Z'(w)` is `1` or `x^k`.
/// The nonzero entries of `Z(w)` are exactly the bubbles, so only the
/// non-bubble rows need checking.
pub fn in_interval(w: &MonomialMatrix, ctx: &IntervalCtx) -> bool {
    assert_eq!(w.n(), ctx.n, "dimension mismatch");
    let k = ctx.k;
    let mut min_col = usize::MAX;
    let mut ok = true;
    for i in 1..=w.n() {
        let c = w.column_of(i);
        if c < min_col {
            min_col = c;
        } else {
            let e = w.row_exponent(i);
            if e != 0 && e != k {
                ok = false;
                break;
            }
        }
    }
    debug_assert_eq!(
        ok,
        in_interval_by_length(w, ctx),
        "membership criteria disagree on {w:?}"
    );
    ok
}

/// Membership in `[1, λ^k]` from length additivity alone.
pub fn in_interval_by_length(w: &MonomialMatrix, ctx: &IntervalCtx) -> bool {
    let rest = &w.inv() * &ctx.delta;
    length(w) + length(&rest) == max_length(ctx.n)
}

/// Membership in `[1, λ^k]_r`: `ℓ(λ^k w^{-1}) + ℓ(w) = n(n-1)`.
pub fn in_right_interval(w: &MonomialMatrix, ctx: &IntervalCtx) -> bool {
    let rest = &ctx.delta * &w.inv();
    length(&rest) + length(w) == max_length(ctx.n)
}

/// `Some(k)` if the maximal-length element `w` is `λ^k`, `None` otherwise.
pub fn classify_balanced_maxlen(w: &MonomialMatrix) -> Result<Option<i64>> {
    if !is_max_length(w) {
        return Err(Error::NotMaxLength);
    }
    let k = w.exps()[1];
    let lam = lambda_power(w.n(), k)?;
    Ok((&lam == w).then_some(k))
}

/// `∂a = a^{-1} Δ`, the simple with `a · ∂a = Δ`.
pub fn complement_right(a: &Simple, ctx: &IntervalCtx) -> Simple {
    ctx.check(a);
    ctx.simple_unchecked(&a.matrix.inv() * &ctx.delta)
}

/// `Δ a^{-1}`, the simple with `(Δ a^{-1}) · a = Δ`.
pub fn complement_left(a: &Simple, ctx: &IntervalCtx) -> Simple {
    ctx.check(a);
    ctx.simple_unchecked(&ctx.delta * &a.matrix.inv())
}

pub fn common_atoms(a: &Simple, b: &Simple, ctx: &IntervalCtx) -> AtomSet {
    ctx.check(a);
    ctx.check(b);
    left_descents(&a.matrix).intersect(&left_descents(&b.matrix))
}

/// Greedy left gcd: strip common left atoms one at a time. When both sides
/// are divisible by every `t_i`, `t_pref` is the one stripped.
pub(crate) fn gcd_left_raw(a: &MonomialMatrix, b: &MonomialMatrix, t_pref: i64) -> MonomialMatrix {
    let n = a.n();
    let mut d = MonomialMatrix::identity(n);
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        let common = left_descents(&a).intersect(&left_descents(&b));
        let Some(g) = common.pick(t_pref) else {
            return d;
        };
        let x = generator_matrix(g, n).expect("descent generator is valid");
        d = &d * &x;
        a = &x * &a;
        b = &x * &b;
    }
}

/// Greatest common left divisor in `([1, λ^k], ≼)`.
pub fn meet_left(a: &Simple, b: &Simple, ctx: &IntervalCtx) -> Simple {
    ctx.check(a);
    ctx.check(b);
    ctx.simple_unchecked(gcd_left_raw(&a.matrix, &b.matrix, ctx.k))
}

/// Greatest common right divisor in `([1, λ^k], ≼_r)`, computed as the
/// inverse of the left gcd of the inverses.
pub fn meet_right(a: &Simple, b: &Simple, ctx: &IntervalCtx) -> Simple {
    ctx.check(a);
    ctx.check(b);
    let g = gcd_left_raw(&a.matrix.inv(), &b.matrix.inv(), -ctx.k);
    ctx.simple_unchecked(g.inv())
}

/// Least common multiple in `([1, λ^k], ≼)`: `Δ · (meet_right(∂a, ∂b))^{-1}`.
pub fn join_left(a: &Simple, b: &Simple, ctx: &IntervalCtx) -> Simple {
    let m = meet_right(&complement_right(a, ctx), &complement_right(b, ctx), ctx);
    ctx.simple_unchecked(&ctx.delta * &m.matrix.inv())
}

/// Least common multiple in `([1, λ^k], ≼_r)`: `(meet_left(Δa^{-1}, Δb^{-1}))^{-1} · Δ`.
pub fn join_right(a: &Simple, b: &Simple, ctx: &IntervalCtx) -> Simple {
    let m = meet_left(&complement_left(a, ctx), &complement_left(b, ctx), ctx);
    ctx.simple_unchecked(&m.matrix.inv() * &ctx.delta)
}

/// Builds a simple by right-multiplying atoms while staying below `Δ`.
/// `pick` sees the atoms `x` with `a x ≼ Δ` (the left descents of `∂a`) and
/// must return one of them, or `None` to stop. The walk also stops at `Δ`.
pub fn simple_walk<F>(ctx: &IntervalCtx, mut pick: F) -> Simple
where
    F: FnMut(&AtomSet) -> Option<Generator>,
{
    let mut a = ctx.identity();
    loop {
        let avail = left_descents(&complement_right(&a, ctx).matrix);
        if avail.is_empty() {
            return a;
        }
        let Some(g) = pick(&avail) else {
            return a;
        };
        assert!(avail.contains(g), "{g} is not an available atom");
        let x = generator_matrix(g, ctx.n).expect("atom");
        a = ctx.simple_unchecked(&a.matrix * &x);
    }
}

/// Left divisibility between simples.
pub fn simple_left_divides(a: &Simple, b: &Simple) -> bool {
    crate::geodesic::left_divides(&a.matrix, &b.matrix).expect("same dimension")
}

/// Right divisibility between simples.
pub fn simple_right_divides(a: &Simple, b: &Simple) -> bool {
    crate::geodesic::right_divides(&a.matrix, &b.matrix).expect("same dimension")
}

/// Expected value of `x ∨ y` for two atoms, from the closed-form table of
/// generator lcms in `[1, λ^k]` (also the right lcm).
pub fn atom_lcm_table(x: Generator, y: Generator, ctx: &IntervalCtx) -> Result<MonomialMatrix> {
    use Generator::{S, T};
    let n = ctx.n;
    let g = |g: Generator| generator_matrix(g, n);
    let word = |gs: &[Generator]| -> Result<MonomialMatrix> {
        let mut m = MonomialMatrix::identity(n);
        for &h in gs {
            m = &m * &g(h)?;
        }
        Ok(m)
    };
    x.validate(n)?;
    y.validate(n)?;
    match (x, y) {
        _ if x == y => g(x),
        (T(_), T(_)) => word(&[T(ctx.k), T(0)]),
        (T(i), S(3)) | (S(3), T(i)) => word(&[T(i), S(3), T(i)]),
        (T(i), S(j)) | (S(j), T(i)) => word(&[T(i), S(j)]),
        (S(i), S(j)) if i.abs_diff(j) == 1 => word(&[S(i), S(j), S(i)]),
        (S(i), S(j)) => word(&[S(i), S(j)]),
    }
}
