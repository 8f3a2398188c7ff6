//! Geodesic normal forms in `G(∞,∞,n)` over the generators `t_i`, `s_j`,
//! the length function, descent sets, divisibility and maximal-length
//! elements.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{generator_matrix, MonomialMatrix};
use crate::word::{Generator, GroupWord};

/// Which `t_i` belong to a descent (or atom) set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TPart {
    None,
    One(i64),
    /// Every `t_i`, `i ∈ ℤ`.
    All,
}

impl TPart {
    pub fn contains(self, i: i64) -> bool {
        match self {
            TPart::None => false,
            TPart::One(k) => k == i,
            TPart::All => true,
        }
    }

    pub fn intersect(self, other: TPart) -> TPart {
        match (self, other) {
            (TPart::All, x) | (x, TPart::All) => x,
            (TPart::One(a), TPart::One(b)) if a == b => TPart::One(a),
            _ => TPart::None,
        }
    }
}

/// Generators `x` with `ℓ(x w) = ℓ(w) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentSet {
    pub s_part: BTreeSet<usize>,
    pub t_part: TPart,
}

impl DescentSet {
    pub fn empty() -> DescentSet {
        DescentSet {
            s_part: BTreeSet::new(),
            t_part: TPart::None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.s_part.is_empty() && self.t_part == TPart::None
    }

    pub fn contains(&self, g: Generator) -> bool {
        match g {
            Generator::T(i) => self.t_part.contains(i),
            Generator::S(j) => self.s_part.contains(&j),
        }
    }

    pub fn intersect(&self, other: &DescentSet) -> DescentSet {
        DescentSet {
            s_part: self.s_part.intersection(&other.s_part).copied().collect(),
            t_part: self.t_part.intersect(other.t_part),
        }
    }

    /// One member, with `t_preferred` standing in for the `All` class.
    /// `s` generators are tried first, smallest index first.
    pub fn pick(&self, t_preferred: i64) -> Option<Generator> {
        if let Some(&j) = self.s_part.iter().next() {
            return Some(Generator::S(j));
        }
        match self.t_part {
            TPart::None => None,
            TPart::One(i) => Some(Generator::T(i)),
            TPart::All => Some(Generator::T(t_preferred)),
        }
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.t_part {
            TPart::None => {}
            TPart::One(i) => parts.push(format!("t[{i}]")),
            TPart::All => parts.push("t[*]".to_string()),
        }
        parts.extend(self.s_part.iter().map(|j| format!("s{j}")));
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `s_j` for `j >= 2`, with `s_2 = t_0`.
fn s_letter(j: usize) -> Generator {
    Generator::s(j)
}

/// Reduced expression of `w`, produced by right-multiplying `w` down to the
/// identity one row at a time (rows `n` down to `2`).
pub fn reduced_expression(w: &MonomialMatrix) -> GroupWord {
    let n = w.n();
    let mut cur = w.clone();
    // one segment per row, prepended in order, so collected back to front
    let mut segments: Vec<Vec<Generator>> = Vec::with_capacity(n);
    for i in (2..=n).rev() {
        let mut c = cur.column_of(i);
        let k = cur.row_exponent(i);
        let mut seg: Vec<Generator> = Vec::new();
        if k != 0 {
            // w' := w' s_c s_{c-1} ... s_2 t_k
            for j in (2..=c).rev() {
                cur.swap_columns_right(j);
            }
            cur.mul_t_right(k);
            debug_assert_eq!(cur.entry(i, 2), Some(0));
            seg.push(Generator::T(k));
            seg.extend((2..=c).map(s_letter));
            c = 2;
        }
        // w' := w' s_{c+1} ... s_i
        for j in (c + 1)..=i {
            cur.swap_columns_right(j);
        }
        debug_assert_eq!(cur.entry(i, i), Some(0));
        let mut head: Vec<Generator> = ((c + 1)..=i).rev().map(s_letter).collect();
        head.extend(seg);
        segments.push(head);
    }
    debug_assert!(cur.is_identity());
    GroupWord::positive(segments.into_iter().rev().flatten())
}

/// One step of the block recursion: the row index `i` (1-based) of the last
/// row of the block, the column `c` of its nonzero entry, and its exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockStep {
    pub i: usize,
    pub c: usize,
    pub exp: i64,
}

/// The blocks `w_n, w_{n-1}, …, w_2`, obtained by deleting the last row and
/// its column and multiplying the new first column by the deleted entry.
/// Returned in order `i = 2, …, n`.
pub fn block_steps(w: &MonomialMatrix) -> Vec<BlockStep> {
    let n = w.n();
    // rows of the current block: (0-based column, exponent)
    let mut rows: Vec<(usize, i64)> = (1..=n)
        .map(|i| (w.column_of(i) - 1, w.row_exponent(i)))
        .collect();
    let mut steps = Vec::with_capacity(n.saturating_sub(1));
    for i in (2..=n).rev() {
        let (c, e) = rows.pop().expect("nonempty block");
        steps.push(BlockStep {
            i,
            c: c + 1,
            exp: e,
        });
        for r in rows.iter_mut() {
            if r.0 > c {
                r.0 -= 1;
            }
            if r.0 == 0 {
                r.1 += e;
            }
        }
    }
    steps.reverse();
    steps
}

/// `RE_i(w)` for one block step.
pub fn block_word(step: BlockStep) -> GroupWord {
    let BlockStep { i, c, exp } = step;
    let mut v: Vec<Generator> = Vec::new();
    if exp == 0 {
        v.extend(((c + 1)..=i).rev().map(s_letter));
    } else {
        v.extend((3..=i).rev().map(s_letter));
        v.push(Generator::T(exp));
        if c >= 2 {
            v.push(Generator::T(0));
        }
        v.extend((3..=c).map(s_letter));
    }
    GroupWord::positive(v)
}

/// `RE_2(w), …, RE_n(w)` via the block recursion.
pub fn block_decomposition(w: &MonomialMatrix) -> Vec<GroupWord> {
    block_steps(w).into_iter().map(block_word).collect()
}

fn block_len(step: BlockStep) -> usize {
    let BlockStep { i, c, exp } = step;
    match (exp, c) {
        (0, _) => i - c,
        (_, 1) => i - 1,
        _ => i + c - 2,
    }
}

/// Length of `w` over `{t_i, s_j}`.
pub fn length(w: &MonomialMatrix) -> usize {
    block_steps(w).into_iter().map(block_len).sum()
}

/// `n(n-1)`, the largest length in `G(∞,∞,n)`.
pub fn max_length(n: usize) -> usize {
    n * (n - 1)
}

/// Generators that shorten `w` when multiplied on the left, read off the
/// matrix directly.
pub fn left_descents(w: &MonomialMatrix) -> DescentSet {
    let n = w.n();
    let c = |i: usize| w.column_of(i);
    let a = |i: usize| w.row_exponent(i);
    let mut s_part = BTreeSet::new();
    for i in 3..=n {
        let hit = match c(i - 1).cmp(&c(i)) {
            std::cmp::Ordering::Less => a(i) != 0,
            std::cmp::Ordering::Greater => a(i - 1) == 0,
            std::cmp::Ordering::Equal => {
                unreachable!("rows of a monomial matrix use distinct columns")
            }
        };
        if hit {
            s_part.insert(i);
        }
    }
    let t_part = if c(1) < c(2) {
        if a(2) != 0 {
            TPart::All
        } else {
            TPart::None
        }
    } else {
        TPart::One(-a(1))
    };
    DescentSet { s_part, t_part }
}

/// Generators `x` with `ℓ(w x) = ℓ(w) - 1`.
pub fn right_descents(w: &MonomialMatrix) -> DescentSet {
    left_descents(&w.inv())
}

/// `v ≼ w`: `w = v u` with `ℓ(w) = ℓ(v) + ℓ(u)`.
pub fn left_divides(v: &MonomialMatrix, w: &MonomialMatrix) -> Result<bool> {
    let u = v.inv().try_mul(w)?;
    Ok(length(v) + length(&u) == length(w))
}

/// `v ≼_r w`: `ℓ(w v^{-1}) + ℓ(v) = ℓ(w)`.
pub fn right_divides(v: &MonomialMatrix, w: &MonomialMatrix) -> Result<bool> {
    let u = w.try_mul(&v.inv())?;
    Ok(length(&u) + length(v) == length(w))
}

/// `ℓ(w) = n(n-1)`: `w` is diagonal and `w[i,i] ≠ 1` for `2 <= i <= n`.
/// The entry `w[1,1]` is unconstrained (`diag(1, x^-1, x)` has length 6).
pub fn is_max_length(w: &MonomialMatrix) -> bool {
    w.is_diagonal() && w.exps()[1..].iter().all(|&e| e != 0)
}

/// `λ^k = diag(x^{-k(n-1)}, x^k, …, x^k)`.
pub fn lambda_power(n: usize, k: i64) -> Result<MonomialMatrix> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let mut exps = vec![k; n];
    exps[0] = (n as i64 - 1)
        .checked_mul(k)
        .and_then(i64::checked_neg)
        .ok_or(Error::Overflow)?;
    MonomialMatrix::diagonal(exps)
}

/// Breadth-first distances from the identity over the finite alphabet
/// `{t_i : |i| <= index_bound} ∪ {s_3, …, s_n}`, truncated at `radius`.
pub fn bfs_length_oracle(
    n: usize,
    index_bound: i64,
    radius: usize,
) -> BTreeMap<MonomialMatrix, usize> {
    let gens: Vec<MonomialMatrix> = (-index_bound..=index_bound)
        .map(Generator::T)
        .chain((3..=n).map(Generator::S))
        .map(|g| generator_matrix(g, n).expect("valid generator"))
        .collect();
    let mut dist = BTreeMap::new();
    let id = MonomialMatrix::identity(n);
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        let d = dist[&m];
        if d == radius {
            continue;
        }
        for g in &gens {
            let next = &m * g;
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}
