//! Letters, reduced words and the rewriting system on `{a, b, c, d}`.
//!
//! Every generator is an involution and `{1, b, c, d}` is a Klein four-group,
//! so a reduced word alternates between `a` and a single letter of `{b, c, d}`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// One of the four generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    /// The letters of the Klein four-group part, in the order `b, c, d`.
    pub const STARS: [Letter; 3] = [Letter::B, Letter::C, Letter::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_a(self) -> bool {
        self == Letter::A
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }

    /// Product of two distinct letters of `{b, c, d}`; `None` when they are equal.
    /// Panics if either argument is `a`.
    pub(crate) fn star_product(self, other: Letter) -> Option<Letter> {
        debug_assert!(!self.is_a() && !other.is_a());
        if self == other {
            return None;
        }
        // b, c, d are 1, 2, 3; the third one is their xor.
        let third = (self as u8) ^ (other as u8);
        Some(match third {
            1 => Letter::B,
            2 => Letter::C,
            3 => Letter::D,
            _ => unreachable!("b, c, d are closed under xor"),
        })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A word in canonical reduced form.
///
/// The only way to obtain a `Word` is through [`reduce`] (or the parsers,
/// which call it), so the reduced-form invariant always holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
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

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Reduced form of `self · other`.
    pub fn mul(&self, other: &Word) -> Word {
        reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Reduced form of `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        reduce(
            g.0.iter()
                .rev()
                .chain(self.0.iter())
                .chain(g.0.iter())
                .copied(),
        )
    }

    pub fn inverse(&self) -> Word {
        inverse(self)
    }

    pub fn a_parity(&self) -> Parity {
        a_parity(self)
    }

    pub fn counts(&self) -> LetterCounts {
        LetterCounts::of(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        parse_letters(s).map(reduce)
    }
}

/// Parses the text format into raw (unreduced) letters. `"1"` and `""` are the identity.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>, Error> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    s.chars()
        .enumerate()
        .map(|(position, ch)| {
            Letter::from_char(ch).ok_or_else(|| Error::Parse {
                input: s.to_string(),
                position,
                found: ch,
            })
        })
        .collect()
}

/// Parses and reduces a word.
pub fn parse_word(s: &str) -> Result<Word, Error> {
    s.parse()
}

/// Normal form under `x² → 1`, `rs → t` for distinct `r, s, t ∈ {b, c, d}`.
///
/// Single left-to-right pass with a stack; the stack is reduced after every step.
pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut stack: Vec<Letter> = Vec::new();
    for l in letters {
        match stack.last().copied() {
            Some(top) if top.is_a() && l.is_a() => {
                stack.pop();
            }
            Some(top) if !top.is_a() && !l.is_a() => match top.star_product(l) {
                Some(t) => *stack.last_mut().unwrap() = t,
                None => {
                    stack.pop();
                }
            },
            _ => stack.push(l),
        }
    }
    Word(stack)
}

/// Inverse of a reduced word: every generator is an involution, so this is the reversal.
pub fn inverse(w: &Word) -> Word {
    Word(w.0.iter().rev().copied().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parity of the number of `a`'s; even exactly when `w` fixes the first level.
pub fn a_parity(w: &Word) -> Parity {
    if w.counts().a % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Occurrence counts of each letter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LetterCounts {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl LetterCounts {
    pub fn of(w: &Word) -> LetterCounts {
        Self::of_letters(w.letters())
    }

    pub fn of_letters(letters: &[Letter]) -> LetterCounts {
        let mut counts = LetterCounts::default();
        for l in letters {
            match l {
                Letter::A => counts.a += 1,
                Letter::B => counts.b += 1,
                Letter::C => counts.c += 1,
                Letter::D => counts.d += 1,
            }
        }
        counts
    }

    pub fn total(&self) -> usize {
        self.a + self.b + self.c + self.d
    }
}

/// Conjugates an even, nonempty word until it begins with `a` and does not end with `a`.
///
/// Returns `(w', g)` with `w' = red(g⁻¹ w g)`. Each round conjugates by the
/// first letter of the current word, so `g` is a product of such letters.
/// Words conjugate to a single letter of `{b, c, d}` cannot satisfy the
/// begins-with-`a` shape; for those the loop stops at that letter.
pub fn cyclic_normalize(w: &Word) -> Result<(Word, Word), Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if a_parity(w) == Parity::Odd {
        return Err(Error::OddParity(w.clone()));
    }
    let mut current = w.clone();
    let mut conjugator: Vec<Letter> = Vec::new();
    loop {
        let first = current.first().expect("even nonempty words stay nonempty");
        let last = current.last().expect("nonempty");
        if current.len() == 1 || (first.is_a() && !last.is_a()) {
            break;
        }
        conjugator.push(first);
        current = current.conjugate_by(&Word::letter(first));
    }
    Ok((current, reduce(conjugator)))
}

/// All reduced words of length exactly `n`, in lexicographic order (`a < b < c < d`).
pub fn reduced_words_of_length(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    extend_reduced(n, &mut buf, &mut out);
    out
}

/// All reduced words of length at most `n`, shortest first.
pub fn reduced_words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(reduced_words_of_length).collect()
}

fn extend_reduced(n: usize, buf: &mut Vec<Letter>, out: &mut Vec<Word>) {
    if buf.len() == n {
        out.push(Word(buf.clone()));
        return;
    }
    for l in Letter::ALL {
        if buf.last().map_or(true, |p| p.is_a() != l.is_a()) {
            buf.push(l);
            extend_reduced(n, buf, out);
            buf.pop();
        }
    }
}
