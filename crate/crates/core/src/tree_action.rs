//! Action of words on vertices of the rooted binary tree.
//!
//! This module evaluates generators directly from their recursive
//! definitions and never calls into the splitting code, so it serves as an
//! independent oracle for equality in the group.
//!
//! Composition is a left action: `apply(uv, x) = apply(u, apply(v, x))`,
//! so the rightmost letter acts first.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::words::{Letter, Word};

pub const MAX_DEPTH: usize = 64;

/// A vertex `b₁b₂…bₙ`; bit `i` of `bits` holds `b_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    bits: u64,
    depth: u8,
}

impl Vertex {
    pub fn root() -> Vertex {
        Vertex { bits: 0, depth: 0 }
    }

    pub fn new(bits: u64, depth: usize) -> Result<Vertex, Error> {
        if depth > MAX_DEPTH {
            return Err(Error::DepthTooLarge(depth));
        }
        let mask = if depth == MAX_DEPTH { u64::MAX } else { (1u64 << depth) - 1 };
        Ok(Vertex { bits: bits & mask, depth: depth as u8 })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Vertex, Error> {
        let packed = bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i));
        Vertex::new(packed, bits.len())
    }

    pub fn depth(&self) -> usize {
        self.depth as usize
    }

    pub fn bit(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn packed(&self) -> u64 {
        self.bits
    }

    /// `b·self`: prepend a bit.
    pub fn child_of(first: bool, rest: Vertex) -> Result<Vertex, Error> {
        Vertex::new((rest.bits << 1) | u64::from(first), rest.depth() + 1)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.depth() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Vertex, Error> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse { input: s.to_string(), position, found: ch }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Vertex::from_bits(&bits)
    }
}

/// Action of one generator on packed bits.
fn apply_letter(l: Letter, bits: u64, depth: usize) -> u64 {
    if depth == 0 {
        return bits;
    }
    if l == Letter::A {
        return bits ^ 1;
    }
    // Walk down the rightmost spine: on a 1 the generator passes to its
    // section (b → c → d → b); on the first 0, b and c flip the next bit and
    // d acts trivially.
    let mut state = l;
    for i in 0..depth {
        if (bits >> i) & 1 == 1 {
            state = match state {
                Letter::B => Letter::C,
                Letter::C => Letter::D,
                Letter::D => Letter::B,
                Letter::A => unreachable!(),
            };
            continue;
        }
        return match state {
            Letter::B | Letter::C if i + 1 < depth => bits ^ (1 << (i + 1)),
            _ => bits,
        };
    }
    bits
}

/// Image of `v` under the automorphism represented by `w`.
pub fn apply(w: &Word, v: Vertex) -> Vertex {
    apply_letters(w.letters(), v)
}

/// Same as [`apply`], for unreduced letter sequences.
pub fn apply_letters(letters: &[Letter], v: Vertex) -> Vertex {
    let depth = v.depth();
    let bits = letters
        .iter()
        .rev()
        .fold(v.bits, |acc, &l| apply_letter(l, acc, depth));
    Vertex { bits, depth: v.depth }
}

/// Whether `w` fixes every vertex at the given depth.
pub fn is_trivial_at_depth(w: &Word, depth: usize) -> Result<bool, Error> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    if depth > MAX_DEPTH {
        return Err(Error::DepthTooLarge(depth));
    }
    if depth > 40 {
        // 2^depth vertices is not enumerable; nobody should ask for this.
        return Err(Error::DepthTooLarge(depth));
    }
    let letters = w.letters();
    Ok((0..(1u64 << depth)).all(|bits| {
        let v = Vertex { bits, depth: depth as u8 };
        apply_letters(letters, v) == v
    }))
}

/// Depth at which the oracle decides triviality of a word of length `n`:
/// `⌈log₂ max(n, 2)⌉ + 4`.
pub fn oracle_depth(n: usize) -> usize {
    let n = n.max(2);
    let ceil_log2 = usize::BITS as usize - (n - 1).leading_zeros() as usize;
    ceil_log2 + 4
}

/// Oracle decision of triviality at [`oracle_depth`].
pub fn oracle_is_trivial(w: &Word) -> bool {
    is_trivial_at_depth(w, oracle_depth(w.len())).expect("oracle depth is small")
}
