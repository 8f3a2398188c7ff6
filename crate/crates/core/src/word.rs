//! Generators and words over the generating set `{t_i : i ∈ ℤ} ∪ {s_3, …, s_n}`.
//!
//! Text grammar: whitespace-separated tokens `t[i]` (any signed integer `i`)
//! and `s3`, `s4`, …, each optionally followed by `^-1`. For example
//! `t[-1]^-1 s3 t[2]`. The empty string is the empty word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator of the Corran–Lee–Lee presentation.
///
/// `S(2)` is never stored: `Generator::s(2)` normalizes to `T(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    T(i64),
    S(usize),
}

impl Generator {
    /// `s_j`, with the alias `s_2 = t_0`.
    pub fn s(j: usize) -> Generator {
        if j == 2 {
            Generator::T(0)
        } else {
            Generator::S(j)
        }
    }

    pub fn t(i: i64) -> Generator {
        Generator::T(i)
    }

    /// Checks `3 <= j <= n` for `s_j`; every `t_i` is valid for `n >= 2`.
    pub fn validate(self, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::BadDimension(n));
        }
        match self {
            Generator::T(_) => Ok(()),
            Generator::S(j) if (3..=n).contains(&j) => Ok(()),
            Generator::S(j) => Err(Error::BadGenerator { j, n }),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T(i) => write!(f, "t[{i}]"),
            Generator::S(j) => write!(f, "s{j}"),
        }
    }
}

/// A generator with a sign. In the reflection group every generator is an
/// involution, so the sign only matters in the braid group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: Generator) -> Letter {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: Generator) -> Letter {
        Letter { gen, inverse: true }
    }

    pub fn inverted(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators and their inverses. A word with no inverse
/// letters is a positive word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(pub Vec<Letter>);

pub type PositiveWord = GroupWord;

impl GroupWord {
    pub fn new() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn positive<I: IntoIterator<Item = Generator>>(gens: I) -> GroupWord {
        GroupWord(gens.into_iter().map(Letter::pos).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inverse)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Formal inverse: reversed, every sign flipped.
    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GroupWord(v)
    }

    /// Cancels adjacent `x x^-1` pairs.
    pub fn freely_reduced(&self) -> GroupWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last().is_some_and(|&p| p == l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|l| l.gen.validate(n))
    }

    /// Applies a letter substitution; inverse letters map to the inverse image.
    pub fn substitute<F: Fn(Generator) -> GroupWord>(&self, image: F) -> GroupWord {
        let mut out = GroupWord::new();
        for l in &self.0 {
            let w = image(l.gen);
            if l.inverse {
                out.0.extend(w.inverse().0);
            } else {
                out.0.extend(w.0);
            }
        }
        out
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for GroupWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        GroupWord(iter.into_iter().collect())
    }
}

fn parse_err(pos: usize, token: &str, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        token: token.to_string(),
        msg: msg.into(),
    }
}

fn parse_letter(tok: &str, pos: usize) -> Result<Letter> {
    let (body, inverse) = match tok.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (tok, false),
    };
    let gen = if let Some(rest) = body.strip_prefix("t[") {
        let idx = rest
            .strip_suffix(']')
            .ok_or_else(|| parse_err(pos, tok, "expected closing `]`"))?;
        let i: i64 = idx
            .parse()
            .map_err(|_| parse_err(pos, tok, "t index must be a signed integer"))?;
        Generator::T(i)
    } else if let Some(idx) = body.strip_prefix('s') {
        let j: usize = idx
            .parse()
            .map_err(|_| parse_err(pos, tok, "s index must be a positive integer"))?;
        if j < 3 {
            return Err(parse_err(pos, tok, "s index must be at least 3"));
        }
        Generator::S(j)
    } else {
        return Err(parse_err(pos, tok, "expected `t[i]` or `sj`"));
    };
    Ok(Letter { gen, inverse })
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Positions in parse errors are 1-based character columns.
    fn from_str(s: &str) -> Result<GroupWord> {
        let mut letters = Vec::new();
        let mut chars = s.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let mut end = start;
            while let Some(&(b, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                end = b + c.len_utf8();
                chars.next();
            }
            let col = s[..start].chars().count() + 1;
            letters.push(parse_letter(&s[start..end], col)?);
        }
        Ok(GroupWord(letters))
    }
}
