//! Seeded random reduced words in alternating form.

use rand::Rng;

use crate::words::{reduce, Letter, Word};

/// A reduced word of exactly `len` letters: `a` alternates with uniformly
/// chosen letters from `{b, c, d}`, starting with `a` with probability 1/2.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Word {
    let starts_with_a = rng.gen_bool(0.5);
    alternating(rng, len, starts_with_a)
}

fn alternating<R: Rng + ?Sized>(rng: &mut R, len: usize, starts_with_a: bool) -> Word {
    let letters = (0..len).map(|i| {
        if (i % 2 == 0) == starts_with_a {
            Letter::A
        } else {
            Letter::STARS[rng.gen_range(0..3)]
        }
    });
    reduce(letters.collect::<Vec<_>>())
}

/// Two random words of length `len` with the same number of `a`'s mod 2.
pub fn random_pair<R: Rng + ?Sized>(rng: &mut R, len: usize) -> (Word, Word) {
    let starts_with_a = rng.gen_bool(0.5);
    (alternating(rng, len, starts_with_a), alternating(rng, len, starts_with_a))
}

/// A random letter sequence, not reduced.
pub fn random_letters<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Letter> {
    (0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect()
}

/// Relators of the group used to build trivial words: the generator
/// squares, `bcd`, and `(ad)⁴`, `(ac)⁸`, `(ab)¹⁶`.
pub const RELATORS: [&str; 8] = [
    "aa",
    "bb",
    "cc",
    "dd",
    "bcd",
    "adadadad",
    "acacacacacacacac",
    "abababababababababababababababab",
];

/// A product of random conjugates `g⁻¹rg` of relators, at most `max_len` letters, unreduced.
pub fn random_trivial_letters<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    loop {
        let relator: Vec<Letter> = RELATORS[rng.gen_range(0..RELATORS.len())]
            .chars()
            .filter_map(Letter::from_char)
            .collect();
        let g_len = rng.gen_range(0..=8);
        let g = random_letters(rng, g_len);
        let piece_len = relator.len() + 2 * g.len();
        if out.len() + piece_len > max_len {
            return out;
        }
        out.extend(g.iter().rev());
        out.extend(relator);
        out.extend(g);
    }
}
