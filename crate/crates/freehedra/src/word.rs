//! Faces of cubes as words over `{a, b, c}`: `a` is the endpoint {0}, `b` the
//! whole interval `[0,1]`, `c` the endpoint {1}. A face of the n-cube is a
//! word of length n; its dimension is the number of `b` letters. The empty
//! word is the point and prints as `e`.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CubeWord(Vec<Letter>);

impl CubeWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        CubeWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension: the number of `b` letters.
    pub fn dim(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::B).count()
    }

    /// The boundary replaces each `b` by `a` and by `c`.
    pub fn boundary(&self) -> Vec<CubeWord> {
        let mut out = Vec::new();
        for (i, &l) in self.0.iter().enumerate() {
            if l == Letter::B {
                for sub in [Letter::A, Letter::C] {
                    let mut w = self.0.clone();
                    w[i] = sub;
                    out.push(CubeWord(w));
                }
            }
        }
        out
    }

    /// True when `self` lies in the closure of `other` (letterwise: a `b` in
    /// `other` admits anything, other letters must agree).
    pub fn contained_in(&self, other: &CubeWord) -> bool {
        self.0.len() == other.0.len()
            && self
                .0
                .iter()
                .zip(other.0.iter())
                .all(|(&x, &y)| y == Letter::B || x == y)
    }

    /// Minimum vertex in doubled coordinates (a ↦ 0, b ↦ 0, c ↦ 2).
    pub fn min_corner(&self) -> Vec<u8> {
        self.0.iter().map(|l| if *l == Letter::C { 2 } else { 0 }).collect()
    }

    /// Maximum vertex in doubled coordinates (a ↦ 0, b ↦ 2, c ↦ 2).
    pub fn max_corner(&self) -> Vec<u8> {
        self.0.iter().map(|l| if *l == Letter::A { 0 } else { 2 }).collect()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(CubeWord::new(Vec::new()));
        }
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                'c' => Ok(Letter::C),
                _ => Err(Error::Parse(format!("bad cube letter `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(CubeWord)
    }
}

impl fmt::Display for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// All faces of the n-cube.
pub fn all_words(n: usize) -> Vec<CubeWord> {
    let mut out = vec![CubeWord::new(Vec::new())];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * 3);
        for w in &out {
            for l in [Letter::A, Letter::B, Letter::C] {
                let mut v = w.0.clone();
                v.push(l);
                next.push(CubeWord(v));
            }
        }
        out = next;
    }
    out
}
