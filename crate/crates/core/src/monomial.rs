//! Exact arithmetic in `G(∞,∞,n)`: `n × n` monomial matrices whose nonzero
//! entries are powers `x^e` of a formal parameter, with product of all
//! nonzero entries equal to 1.
//!
//! A matrix is stored as a permutation (row `i` has its nonzero entry in
//! column `perm[i]`) plus one exponent per row. The public API uses 1-based
//! rows and columns.
//!
//! Exponents are `i64`. Products check for overflow and panic through the
//! `*` operator (`try_mul` reports it instead); exponents grow at most
//! linearly in word length, so this bound is never reached by words shorter
//! than about 2^62 letters.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Generator, GroupWord};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialMatrix {
    // 0-based: row r has x^exps[r] at column perm[r]
    perm: Vec<usize>,
    exps: Vec<i64>,
}

/// JSON encoding `{"n": int, "perm": [...], "exps": [...]}` with a 1-based `perm`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub perm: Vec<usize>,
    pub exps: Vec<i64>,
}

impl MonomialMatrix {
    pub fn identity(n: usize) -> MonomialMatrix {
        MonomialMatrix {
            perm: (0..n).collect(),
            exps: vec![0; n],
        }
    }

    /// Builds a matrix from a 1-based permutation and row exponents.
    pub fn new(perm: Vec<usize>, exps: Vec<i64>) -> Result<MonomialMatrix> {
        let n = perm.len();
        if n < 2 {
            return Err(Error::BadDimension(n));
        }
        if exps.len() != n {
            return Err(Error::InvalidMatrix(format!(
                "perm has length {n} but exps has length {}",
                exps.len()
            )));
        }
        let mut seen = vec![false; n];
        let mut p0 = Vec::with_capacity(n);
        for &c in &perm {
            if c == 0 || c > n || seen[c - 1] {
                return Err(Error::InvalidMatrix(format!(
                    "perm {perm:?} is not a permutation of 1..={n}"
                )));
            }
            seen[c - 1] = true;
            p0.push(c - 1);
        }
        let mut sum: i64 = 0;
        for &e in &exps {
            sum = sum.checked_add(e).ok_or(Error::Overflow)?;
        }
        if sum != 0 {
            return Err(Error::InvalidMatrix(format!(
                "exponents sum to {sum}, expected 0"
            )));
        }
        Ok(MonomialMatrix { perm: p0, exps })
    }

    /// Diagonal matrix `diag(x^e_1, …, x^e_n)`.
    pub fn diagonal(exps: Vec<i64>) -> Result<MonomialMatrix> {
        let perm = (1..=exps.len()).collect();
        MonomialMatrix::new(perm, exps)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Column (1-based) of the nonzero entry in row `i` (1-based).
    pub fn column_of(&self, i: usize) -> usize {
        self.perm[i - 1] + 1
    }

    /// Exponent of the nonzero entry in row `i` (1-based).
    pub fn row_exponent(&self, i: usize) -> i64 {
        self.exps[i - 1]
    }

    /// `Some(e)` if `w[i,c] = x^e`, `None` if the entry is 0. 1-based.
    pub fn entry(&self, i: usize, c: usize) -> Option<i64> {
        (self.perm[i - 1] == c - 1).then(|| self.exps[i - 1])
    }

    /// The 1-based permutation.
    pub fn perm(&self) -> Vec<usize> {
        self.perm.iter().map(|c| c + 1).collect()
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(r, &c)| r == c) && self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(r, &c)| r == c)
    }

    pub fn try_mul(&self, rhs: &MonomialMatrix) -> Result<MonomialMatrix> {
        if self.n() != rhs.n() {
            return Err(Error::DimensionMismatch(self.n(), rhs.n()));
        }
        let mut perm = Vec::with_capacity(self.n());
        let mut exps = Vec::with_capacity(self.n());
        for (&c, &e) in self.perm.iter().zip(&self.exps) {
            perm.push(rhs.perm[c]);
            exps.push(e.checked_add(rhs.exps[c]).ok_or(Error::Overflow)?);
        }
        Ok(MonomialMatrix { perm, exps })
    }

    pub fn inv(&self) -> MonomialMatrix {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for (r, (&c, &e)) in self.perm.iter().zip(&self.exps).enumerate() {
            perm[c] = r;
            exps[c] = -e;
        }
        MonomialMatrix { perm, exps }
    }

    /// `D^{-1} · self · D` for the diagonal matrix `D = diag(x^d_1, …, x^d_n)`.
    pub fn conjugate_by_diagonal(&self, d: &[i64]) -> MonomialMatrix {
        debug_assert_eq!(d.len(), self.n());
        let exps = self
            .perm
            .iter()
            .zip(&self.exps)
            .enumerate()
            .map(|(r, (&c, &e))| e - d[r] + d[c])
            .collect();
        MonomialMatrix {
            perm: self.perm.clone(),
            exps,
        }
    }

    /// Right multiplication by `s_j` (`j >= 2`, with `s_2 = t_0`): swaps columns `j-1` and `j`.
    pub(crate) fn swap_columns_right(&mut self, j: usize) {
        let (a, b) = (j - 2, j - 1);
        for c in self.perm.iter_mut() {
            if *c == a {
                *c = b;
            } else if *c == b {
                *c = a;
            }
        }
    }

    /// Right multiplication by `t_k`.
    pub(crate) fn mul_t_right(&mut self, k: i64) {
        for (c, e) in self.perm.iter_mut().zip(self.exps.iter_mut()) {
            if *c == 0 {
                *c = 1;
                *e -= k;
            } else if *c == 1 {
                *c = 0;
                *e += k;
            }
        }
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            n: self.n(),
            perm: self.perm(),
            exps: self.exps.clone(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<MonomialMatrix> {
        let j: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        MonomialMatrix::try_from(j)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("matrix json")
    }
}

impl TryFrom<MatrixJson> for MonomialMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<MonomialMatrix> {
        if j.perm.len() != j.n {
            return Err(Error::InvalidMatrix(format!(
                "n = {} but perm has length {}",
                j.n,
                j.perm.len()
            )));
        }
        MonomialMatrix::new(j.perm, j.exps)
    }
}

impl Serialize for MonomialMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        MonomialMatrix::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Mul for &MonomialMatrix {
    type Output = MonomialMatrix;

    fn mul(self, rhs: &MonomialMatrix) -> MonomialMatrix {
        match self.try_mul(rhs) {
            Ok(m) => m,
            Err(e) => panic!("monomial product failed: {e}"),
        }
    }
}

impl Mul for MonomialMatrix {
    type Output = MonomialMatrix;

    fn mul(self, rhs: MonomialMatrix) -> MonomialMatrix {
        &self * &rhs
    }
}

impl fmt::Debug for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{:?}{:?}", self.perm(), self.exps)
    }
}

/// Row-by-row rendering, `0` for zero entries and `x^e` otherwise.
impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let cells: Vec<Vec<String>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|c| match self.entry(i, c) {
                        None => "0".to_string(),
                        Some(0) => "1".to_string(),
                        Some(1) => "x".to_string(),
                        Some(e) => format!("x^{e}"),
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn generator_matrix(g: Generator, n: usize) -> Result<MonomialMatrix> {
    g.validate(n)?;
    let mut m = MonomialMatrix::identity(n);
    match g {
        Generator::T(i) => {
            m.perm.swap(0, 1);
            m.exps[0] = -i;
            m.exps[1] = i;
        }
        Generator::S(j) => m.perm.swap(j - 2, j - 1),
    }
    Ok(m)
}

/// Image of a word in `G(∞,∞,n)`. Signs are ignored: every generator is an involution.
pub fn eval_word(w: &GroupWord, n: usize) -> Result<MonomialMatrix> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let mut acc = MonomialMatrix::identity(n);
    for l in w.letters() {
        l.gen.validate(n)?;
        match l.gen {
            Generator::T(i) => acc.mul_t_right(i),
            Generator::S(j) => acc.swap_columns_right(j),
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Generator::{S, T};
    use proptest::prelude::*;

    fn gm(g: Generator, n: usize) -> MonomialMatrix {
        generator_matrix(g, n).unwrap()
    }

    #[test]
    fn generator_matrices() {
        let t0 = gm(T(0), 2);
        assert_eq!(t0.perm(), vec![2, 1]);
        assert_eq!(t0.exps(), &[0, 0]);

        let s3 = gm(S(3), 3);
        assert_eq!(s3.perm(), vec![1, 3, 2]);
        assert_eq!(s3.exps(), &[0, 0, 0]);

        let t2 = gm(T(2), 3);
        assert_eq!(t2.perm(), vec![2, 1, 3]);
        assert_eq!(t2.exps(), &[-2, 2, 0]);
        assert_eq!(t2.entry(1, 2), Some(-2));
        assert_eq!(t2.entry(2, 1), Some(2));
        assert_eq!(t2.entry(1, 1), None);

        assert!(matches!(
            generator_matrix(S(4), 3),
            Err(Error::BadGenerator { j: 4, n: 3 })
        ));
    }

    #[test]
    fn products() {
        let n = 2;
        let t0 = gm(T(0), n);
        let t1 = gm(T(1), n);
        let id = MonomialMatrix::identity(n);
        assert_eq!(&t1 * &id, t1);
        assert!((&t0 * &t0).is_identity());
        assert_eq!(&t1 * &t0, MonomialMatrix::diagonal(vec![-1, 1]).unwrap());
        assert!(matches!(
            t0.try_mul(&MonomialMatrix::identity(3)),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }

    #[test]
    fn inverses() {
        assert!(MonomialMatrix::identity(4).inv().is_identity());
        let t3 = gm(T(3), 3);
        assert_eq!(t3.inv(), t3);
        let d = MonomialMatrix::diagonal(vec![-1, 1]).unwrap();
        assert_eq!(d.inv(), MonomialMatrix::diagonal(vec![1, -1]).unwrap());
    }

    #[test]
    fn eval_words() {
        assert!(eval_word(&GroupWord::new(), 3).unwrap().is_identity());
        let w: GroupWord = "t[1] t[1]".parse().unwrap();
        assert!(eval_word(&w, 2).unwrap().is_identity());

        let w: GroupWord = "t[0] s3 t[2] t[0] s4 s3 t[-1]".parse().unwrap();
        let m = eval_word(&w, 4).unwrap();
        assert_eq!(m.perm(), vec![4, 2, 3, 1]);
        assert_eq!(m.exps(), &[0, -1, 2, -1]);

        let bad: GroupWord = "s5".parse().unwrap();
        assert!(eval_word(&bad, 4).is_err());
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert!(MonomialMatrix::new(vec![1, 1], vec![0, 0]).is_err());
        assert!(MonomialMatrix::new(vec![1, 2], vec![1, 0]).is_err());
        assert!(MonomialMatrix::new(vec![1, 3], vec![0, 0]).is_err());
        assert!(MonomialMatrix::new(vec![1], vec![0]).is_err());
        assert!(MonomialMatrix::new(vec![2, 1], vec![0]).is_err());
    }

    #[test]
    fn json_encoding() {
        let m = MonomialMatrix::new(vec![4, 2, 3, 1], vec![0, -1, 2, -1]).unwrap();
        let s = m.to_json_string();
        assert_eq!(s, r#"{"n":4,"perm":[4,2,3,1],"exps":[0,-1,2,-1]}"#);
        assert_eq!(MonomialMatrix::from_json_str(&s).unwrap(), m);
        assert!(MonomialMatrix::from_json_str(r#"{"n":3,"perm":[2,1],"exps":[0,0]}"#).is_err());
        assert!(MonomialMatrix::from_json_str(r#"{"n":2,"perm":[2,1],"exps":[1,0]}"#).is_err());
    }

    #[test]
    fn display_rows() {
        let t = gm(T(2), 2);
        assert_eq!(t.to_string(), "[    0 x^-2 ]\n[  x^2    0 ]\n");
    }

    fn gen_strategy(n: usize) -> BoxedStrategy<Generator> {
        if n >= 3 {
            prop_oneof![(-6i64..=6).prop_map(T), (3..=n).prop_map(S)].boxed()
        } else {
            (-6i64..=6).prop_map(T).boxed()
        }
    }

    fn word_strategy(n: usize) -> impl Strategy<Value = GroupWord> {
        prop::collection::vec(gen_strategy(n), 0..14).prop_map(GroupWord::positive)
    }

    proptest! {
        #[test]
        fn eval_is_a_homomorphism(
            (n, u, v) in (2usize..6).prop_flat_map(|n| (Just(n), word_strategy(n), word_strategy(n)))
        ) {
            let uv = eval_word(&u.concat(&v), n).unwrap();
            let prod = &eval_word(&u, n).unwrap() * &eval_word(&v, n).unwrap();
            prop_assert_eq!(&uv, &prod);
            prop_assert_eq!(uv.exps().iter().sum::<i64>(), 0);
            let mut p = uv.perm();
            p.sort();
            prop_assert_eq!(p, (1..=n).collect::<Vec<_>>());
            prop_assert!((&uv * &uv.inv()).is_identity());
        }

        #[test]
        fn generators_are_involutions(i in -50i64..50, n in 2usize..7) {
            let t = gm(T(i), n);
            prop_assert!((&t * &t).is_identity());
            for j in 3..=n {
                let s = gm(S(j), n);
                prop_assert!((&s * &s).is_identity());
            }
        }
    }
}
