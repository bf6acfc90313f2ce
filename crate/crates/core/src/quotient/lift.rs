//! The lift table `(coset(w₀), coset(w₁)) ↦ coset(w)` for even `w`.
//!
//! Filled by enumerating even reduced words; every entry is checked for
//! consistency, so a wrong `K` would show up as a conflict.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CosetId, QuotientGroup, ORDER};
use crate::error::Error;
use crate::splitting::split;
use crate::words::{a_parity, reduced_words_up_to, Parity, Word};

/// Word length up to which even words are enumerated.
pub const ENUMERATION_LENGTH: usize = 12;
/// Number of defined entries.
pub const EXPECTED_PAIRS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftTable {
    entries: [[Option<CosetId>; ORDER]; ORDER],
    witnesses: [[Option<Word>; ORDER]; ORDER],
}

impl LiftTable {
    pub fn get(&self, i: CosetId, j: CosetId) -> Option<CosetId> {
        self.entries[i.index()][j.index()]
    }

    /// The shortest word found realizing the entry.
    pub fn witness(&self, i: CosetId, j: CosetId) -> Option<&Word> {
        self.witnesses[i.index()][j.index()].as_ref()
    }

    /// Defined entries in row-major order.
    pub fn pairs(&self) -> Vec<(CosetId, CosetId, CosetId)> {
        let mut out = Vec::with_capacity(EXPECTED_PAIRS);
        for i in CosetId::all() {
            for j in CosetId::all() {
                if let Some(k) = self.get(i, j) {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.pairs().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `i,j,lifted` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,lifted\n");
        for (i, j, k) in self.pairs() {
            let _ = writeln!(out, "{i},{j},{k}");
        }
        out
    }

    /// Every value is even and every even coset is hit the same number of times.
    pub fn check_invariants(&self, q: &QuotientGroup) -> Result<(), Error> {
        let pairs = self.pairs();
        if pairs.len() != EXPECTED_PAIRS {
            return Err(Error::LiftShortfall(pairs.len()));
        }
        let mut hits = [0usize; ORDER];
        for &(_, _, k) in &pairs {
            if q.parity(k) != Parity::Even {
                return Err(Error::LiftInvariant(format!("lifted coset {k} is odd")));
            }
            hits[k.index()] += 1;
        }
        let per_value = EXPECTED_PAIRS / (ORDER / 2);
        for k in q.even_cosets() {
            if hits[k.index()] != per_value {
                return Err(Error::LiftInvariant(format!(
                    "even coset {k} is hit {} times, expected {per_value}",
                    hits[k.index()]
                )));
            }
        }
        Ok(())
    }
}

fn build_from(q: &QuotientGroup, words: &[Word]) -> Result<LiftTable, Error> {
    const NONE_C: Option<CosetId> = None;
    const NONE_W: Option<Word> = None;
    let mut table = LiftTable {
        entries: [[NONE_C; ORDER]; ORDER],
        witnesses: std::array::from_fn(|_| [NONE_W; ORDER]),
    };
    for w in words {
        let pair = split(w)?;
        let (i, j) = (q.coset_of(&pair.left), q.coset_of(&pair.right));
        let found = q.coset_of(w);
        let cell = &mut table.entries[i.index()][j.index()];
        match *cell {
            None => {
                *cell = Some(found);
                table.witnesses[i.index()][j.index()] = Some(w.clone());
            }
            Some(existing) if existing == found => {
                let slot = &mut table.witnesses[i.index()][j.index()];
                if slot.as_ref().is_some_and(|old| w.len() < old.len()) {
                    *slot = Some(w.clone());
                }
            }
            Some(existing) => {
                return Err(Error::LiftConflict {
                    i: i.0,
                    j: j.0,
                    existing: existing.0,
                    existing_word: table.witnesses[i.index()][j.index()].clone().expect("witness"),
                    found: found.0,
                    found_word: w.clone(),
                })
            }
        }
    }
    let table_len = table.len();
    if table_len != EXPECTED_PAIRS {
        return Err(Error::LiftShortfall(table_len));
    }
    table.check_invariants(q)?;
    Ok(table)
}

fn even_words() -> Vec<Word> {
    reduced_words_up_to(ENUMERATION_LENGTH)
        .into_iter()
        .filter(|w| a_parity(w) == Parity::Even)
        .collect()
}

/// Builds the table from even reduced words of length at most 12, in length-lexicographic order.
pub fn build_lift_table(q: &QuotientGroup) -> Result<LiftTable, Error> {
    build_from(q, &even_words())
}

/// Same table from the same words visited in a seeded random order.
pub fn build_lift_table_shuffled(q: &QuotientGroup, seed: u64) -> Result<LiftTable, Error> {
    let mut words = even_words();
    words.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut table = build_from(q, &words)?;
    // witnesses depend on visiting order only through ties in length
    table.witnesses = build_lift_table(q)?.witnesses;
    Ok(table)
}
