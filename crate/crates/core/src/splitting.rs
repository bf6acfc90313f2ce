//! The first-level splitting `w ↦ (w₀, w₁)` on even words.
//!
//! An even reduced word factors as `u₀ · (a u₁ a) · u₂ · (a u₃ a) ⋯`, and the
//! two sections are read off factor by factor:
//!
//! | factor | `φ₀` | `φ₁` |
//! |--------|------|------|
//! | `b`    | `a`  | `c`  |
//! | `c`    | `a`  | `d`  |
//! | `d`    | `1`  | `b`  |
//! | `aba`  | `c`  | `a`  |
//! | `aca`  | `d`  | `a`  |
//! | `ada`  | `b`  | `1`  |

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::words::{a_parity, reduce, Letter, Parity, Word};

/// A factor of an even reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// A bare `b`, `c` or `d`.
    Plain(Letter),
    /// `a x a` for `x` in `{b, c, d}`.
    Conjugated(Letter),
}

impl Factor {
    fn sections(self) -> (Option<Letter>, Option<Letter>) {
        use Letter::*;
        match self {
            Factor::Plain(B) => (Some(A), Some(C)),
            Factor::Plain(C) => (Some(A), Some(D)),
            Factor::Plain(D) => (None, Some(B)),
            Factor::Conjugated(B) => (Some(C), Some(A)),
            Factor::Conjugated(C) => (Some(D), Some(A)),
            Factor::Conjugated(D) => (Some(B), None),
            Factor::Plain(A) | Factor::Conjugated(A) => unreachable!("factors never hold a"),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Plain(x) => write!(f, "{x}"),
            Factor::Conjugated(x) => write!(f, "(a{x}a)"),
        }
    }
}

/// Factor decomposition of an even reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorDecomposition(Vec<Factor>);

impl FactorDecomposition {
    pub fn of(w: &Word) -> Result<FactorDecomposition, Error> {
        if a_parity(w) == Parity::Odd {
            return Err(Error::OddParity(w.clone()));
        }
        let letters = w.letters();
        let mut factors = Vec::with_capacity(letters.len());
        let mut i = 0;
        while i < letters.len() {
            if letters[i].is_a() {
                // reduced and even: a x a
                factors.push(Factor::Conjugated(letters[i + 1]));
                i += 3;
            } else {
                factors.push(Factor::Plain(letters[i]));
                i += 1;
            }
        }
        Ok(FactorDecomposition(factors))
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    /// Concatenation of the factors, re-reduced.
    pub fn to_word(&self) -> Word {
        reduce(self.0.iter().flat_map(|f| match *f {
            Factor::Plain(x) => vec![x],
            Factor::Conjugated(x) => vec![Letter::A, x, Letter::A],
        }))
    }
}

impl fmt::Display for FactorDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("·"))
    }
}

/// Sections `(w₀, w₁)` of an element of the first-level stabilizer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SplitPair {
    pub left: Word,
    pub right: Word,
}

impl SplitPair {
    pub fn swapped(&self) -> SplitPair {
        SplitPair { left: self.right.clone(), right: self.left.clone() }
    }
}

impl fmt::Display for SplitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// `(red φ₀(w), red φ₁(w))` for an even reduced word.
pub fn split(w: &Word) -> Result<SplitPair, Error> {
    let decomposition = FactorDecomposition::of(w)?;
    let (left, right): (Vec<_>, Vec<_>) =
        decomposition.factors().iter().map(|f| f.sections()).unzip();
    Ok(SplitPair {
        left: reduce(left.into_iter().flatten()),
        right: reduce(right.into_iter().flatten()),
    })
}

/// Split of `red(w·a)` for an odd word.
pub fn split_shifted(w: &Word) -> Result<SplitPair, Error> {
    if a_parity(w) == Parity::Even {
        return Err(Error::EvenParity(w.clone()));
    }
    split(&w.mul(&Word::letter(Letter::A)))
}

/// `split` for even words and `split_shifted` for odd ones.
pub fn sections(w: &Word) -> SplitPair {
    match a_parity(w) {
        Parity::Even => split(w),
        Parity::Odd => split_shifted(w),
    }
    .expect("parity checked")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> (String, String) {
        let p = sections(&w(s));
        (p.left.to_string(), p.right.to_string())
    }

    fn strs(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn generator_sections() {
        assert_eq!(pair("b"), strs("a", "c"));
        assert_eq!(pair("c"), strs("a", "d"));
        assert_eq!(pair("d"), strs("1", "b"));
        assert_eq!(pair("aba"), strs("c", "a"));
        assert_eq!(pair("aca"), strs("d", "a"));
        assert_eq!(pair("ada"), strs("b", "1"));
        assert_eq!(pair("abab"), strs("ca", "ac"));
        assert_eq!(pair(""), strs("1", "1"));
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(split_shifted(&w("a")).unwrap().to_string(), "(1, 1)");
        assert_eq!(split_shifted(&w("ab")).unwrap().to_string(), "(c, a)");
        assert_eq!(split_shifted(&w("ad")).unwrap().to_string(), "(b, 1)");
    }

    #[test]
    fn parity_errors() {
        assert!(matches!(split(&w("ab")), Err(Error::OddParity(_))));
        assert!(matches!(split_shifted(&w("aba")), Err(Error::EvenParity(_))));
    }

    #[test]
    fn factors_rebuild_the_word() {
        for s in ["", "b", "abab", "babacada", "acabada", "dabacabad"] {
            let x = w(s);
            let f = FactorDecomposition::of(&x).unwrap();
            assert_eq!(f.to_word(), x, "{s} -> {f}");
        }
        assert_eq!(FactorDecomposition::of(&w("babacada")).unwrap().to_string(), "b·(aba)·c·(ada)");
    }

    #[test]
    fn conjugation_by_a_swaps() {
        let x = w("babacada");
        let swapped = split(&x.conjugate_by(&w("a"))).unwrap();
        assert_eq!(swapped, split(&x).unwrap().swapped());
    }
}
