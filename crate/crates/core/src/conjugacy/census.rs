//! Per-coordinate subtree sizes for words of norm below 9.
//!
//! In `T_{u,v}` the left words of a node's children depend only on `u` and
//! the right words only on `v`. So each coordinate can be followed on its
//! own: an even word `w` has children `split(w)`, an odd word has children
//! `w₀w₁` and `w₁w₀` where `(w₀, w₁) = split(wa)`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::Error;
use crate::norm::norm;
use crate::splitting::{split, split_shifted};
use crate::words::{reduced_words_up_to, Parity, Word};
use crate::Norm;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub word: Word,
    pub child0: Word,
    pub child1: Word,
    pub size: usize,
}

/// Words of norm below this bound have trees of bounded size.
pub const NORM_BOUND: i64 = 9;

/// Longest reduced word that can have norm below 9: the lightest letters are
/// `a` and `d` and a reduced word alternates, so at most 8 letters qualify.
const MAX_LENGTH: usize = 13;

pub fn census_children(w: &Word) -> (Word, Word) {
    match w.a_parity() {
        Parity::Even => {
            let p = split(w).expect("even");
            (p.left, p.right)
        }
        Parity::Odd => {
            let p = split_shifted(w).expect("odd");
            (p.left.mul(&p.right), p.right.mul(&p.left))
        }
    }
}

/// Size of the per-coordinate tree of `w`, expanded until words have length at most 1.
pub fn coordinate_tree_size(w: &Word) -> Result<usize, Error> {
    fn go(w: &Word, memo: &mut HashMap<Word, usize>, active: &mut HashSet<Word>) -> Result<usize, Error> {
        if w.len() <= 1 {
            return Ok(1);
        }
        if let Some(&n) = memo.get(w) {
            return Ok(n);
        }
        if !active.insert(w.clone()) {
            return Err(Error::Cycle(w.clone(), w.clone()));
        }
        let (c0, c1) = census_children(w);
        let n = 1 + go(&c0, memo, active)? + go(&c1, memo, active)?;
        active.remove(w);
        memo.insert(w.clone(), n);
        Ok(n)
    }
    go(w, &mut HashMap::new(), &mut HashSet::new())
}

/// Reduced words with norm strictly below 9 (including those of length 0 and 1),
/// in lexicographic order.
pub fn words_below_norm_bound() -> Vec<Word> {
    let bound = Norm::from_ints(NORM_BOUND, 0, 0);
    let mut words: Vec<Word> = reduced_words_up_to(MAX_LENGTH)
        .into_iter()
        .filter(|w| norm::<num_rational::BigRational>(w) < bound)
        .collect();
    words.sort_by_key(|w| w.to_string());
    words
}

/// One row per reduced word `w` with `|w| ≥ 2` and `‖w‖ < 9`, sorted lexicographically.
pub fn subtree_size_census() -> Result<Vec<CensusRow>, Error> {
    words_below_norm_bound()
        .into_iter()
        .filter(|w| w.len() >= 2)
        .map(|w| {
            let (child0, child1) = census_children(&w);
            let size = coordinate_tree_size(&w)?;
            Ok(CensusRow { word: w, child0, child1, size })
        })
        .collect()
}

/// The published table: word, two children, subtree size.
pub const REFERENCE_CENSUS: &[(&str, &str, &str, usize)] = &[
    ("ab", "ca", "ac", 15),
    ("aba", "c", "a", 3),
    ("abab", "ca", "ac", 15),
    ("abac", "ca", "ad", 11),
    ("abaca", "b", "aba", 5),
    ("abad", "c", "ab", 17),
    ("abada", "cab", "ad", 9),
    ("abadad", "dab", "ac", 17),
    ("ac", "da", "ad", 7),
    ("aca", "d", "a", 3),
    ("acab", "da", "ac", 11),
    ("acaba", "b", "aba", 5),
    ("acac", "da", "ad", 7),
    ("acaca", "1", "1", 3),
    ("acacad", "dabad", "b", 7),
    ("acad", "d", "ab", 17),
    ("acada", "dab", "ac", 17),
    ("acadac", "aba", "aba", 7),
    ("acadad", "cab", "ad", 9),
    ("ad", "b", "b", 3),
    ("ada", "b", "1", 3),
    ("adab", "ba", "c", 17),
    ("adaba", "bac", "da", 9),
    ("adabad", "bad", "dab", 19),
    ("adac", "ba", "d", 17),
    ("adaca", "bad", "ca", 17),
    ("adacac", "b", "dabad", 7),
    ("adacad", "bac", "cab", 11),
    ("adad", "b", "b", 3),
    ("adada", "1", "1", 3),
    ("adadab", "ca", "bad", 17),
    ("adadac", "da", "bac", 9),
    ("adadad", "b", "b", 3),
    ("ba", "ac", "ca", 15),
    ("bab", "1", "1", 3),
    ("baba", "ac", "ca", 15),
    ("babac", "aca", "cad", 21),
    ("babad", "ac", "cab", 13),
    ("bac", "aba", "b", 5),
    ("baca", "ad", "ca", 11),
    ("bacab", "ada", "cac", 7),
    ("bacac", "ada", "cad", 21),
    ("bacad", "ad", "cab", 9),
    ("bad", "ad", "cab", 9),
    ("bada", "ab", "c", 17),
    ("badab", "aba", "1", 5),
    ("badac", "aba", "b", 5),
    ("badad", "ab", "d", 17),
    ("badada", "ac", "dab", 17),
    ("ca", "ad", "da", 7),
    ("cab", "aba", "b", 5),
    ("caba", "ac", "da", 11),
    ("cabab", "aca", "dac", 21),
    ("cabac", "aca", "dad", 7),
    ("cabad", "ac", "dab", 17),
    ("cac", "1", "1", 3),
    ("caca", "ad", "da", 7),
    ("cacab", "ada", "dac", 21),
    ("cacac", "ada", "dad", 7),
    ("cacad", "ad", "dab", 13),
    ("cacada", "b", "dabad", 7),
    ("cad", "ac", "dab", 17),
    ("cada", "ab", "d", 17),
    ("cadab", "aba", "b", 5),
    ("cadac", "aba", "1", 5),
    ("cadaca", "aba", "aba", 7),
    ("cadad", "ab", "c", 17),
    ("cadada", "ad", "cab", 9),
    ("cadadad", "ac", "ca", 15),
    ("da", "b", "b", 3),
    ("dab", "da", "bac", 9),
    ("daba", "c", "ba", 17),
    ("dabab", "ca", "bac", 13),
    ("dabac", "ca", "bad", 17),
    ("dabad", "c", "bab", 5),
    ("dabada", "dab", "bad", 19),
    ("dac", "ca", "bad", 17),
    ("daca", "d", "ba", 17),
    ("dacab", "da", "bac", 9),
    ("dacac", "da", "bad", 13),
    ("dacaca", "dabad", "b", 7),
    ("dacad", "d", "bab", 5),
    ("dacada", "cab", "bac", 11),
    ("dacadad", "dab", "bad", 19),
    ("dad", "1", "1", 3),
    ("dada", "b", "b", 3),
    ("dadab", "ba", "d", 17),
    ("dadaba", "bad", "ca", 17),
    ("dadac", "ba", "c", 17),
    ("dadaca", "bac", "da", 9),
    ("dadacad", "bad", "dab", 19),
    ("dadad", "b", "1", 3),
    ("dadada", "b", "b", 3),
    ("dadadac", "ca", "ac", 15),
    ("dadadad", "1", "1", 3),
];

/// Rows of `census` that disagree with [`REFERENCE_CENSUS`], plus reference words missing from it.
pub fn census_mismatches(census: &[CensusRow]) -> Vec<String> {
    let mut out = Vec::new();
    let ours: HashMap<String, &CensusRow> =
        census.iter().map(|r| (r.word.to_string(), r)).collect();
    for &(word, c0, c1, size) in REFERENCE_CENSUS {
        match ours.get(word) {
            None => out.push(format!("{word}: missing")),
            Some(r) => {
                let got = (r.child0.to_string(), r.child1.to_string(), r.size);
                if got != (c0.to_string(), c1.to_string(), size) {
                    out.push(format!(
                        "{word}: expected {c0} {c1} {size}, got {} {} {}",
                        got.0, got.1, got.2
                    ));
                }
            }
        }
    }
    let reference: HashSet<&str> = REFERENCE_CENSUS.iter().map(|r| r.0).collect();
    for r in census {
        if !reference.contains(r.word.to_string().as_str()) {
            out.push(format!("{}: not in the reference table", r.word));
        }
    }
    out
}
