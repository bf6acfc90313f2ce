//! `Q`-sets for the 25 pairs of words of length at most 1.

use std::collections::HashSet;

use super::node::{expand, mixed, Rules};
use super::QSet;
use crate::error::Error;
use crate::quotient::{LiftTable, QuotientGroup};
use crate::words::{Letter, Word};

/// Base words in table order: `1, a, b, c, d`.
pub fn base_words() -> [Word; 5] {
    [
        Word::identity(),
        Word::letter(Letter::A),
        Word::letter(Letter::B),
        Word::letter(Letter::C),
        Word::letter(Letter::D),
    ]
}

fn base_index(w: &Word) -> Option<usize> {
    match w.letters() {
        [] => Some(0),
        [l] => Some(1 + l.index()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseQTable {
    sets: [[QSet; 5]; 5],
}

impl BaseQTable {
    /// `Q(u, v)` for `|u|, |v| ≤ 1`.
    pub fn get(&self, u: &Word, v: &Word) -> Option<QSet> {
        Some(self.sets[base_index(u)?][base_index(v)?])
    }

    /// All 25 entries in table order.
    pub fn entries(&self) -> Vec<(Word, Word, QSet)> {
        let words = base_words();
        let mut out = Vec::with_capacity(25);
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                out.push((u.clone(), v.clone(), self.sets[i][j]));
            }
        }
        out
    }
}

const B: usize = 2;
const C: usize = 3;
const D: usize = 4;

struct Builder<'a> {
    rules: Rules<'a>,
    sets: [[Option<QSet>; 5]; 5],
    active: HashSet<(usize, usize)>,
}

impl Builder<'_> {
    fn lookup(&mut self, u: &Word, v: &Word) -> Result<QSet, Error> {
        let (i, j) = (base_index(u).expect("base word"), base_index(v).expect("base word"));
        if let Some(s) = self.sets[i][j] {
            return Ok(s);
        }
        if i == j {
            return Err(Error::BaseTable(format!("off-diagonal pair depends on Q({u},{v})")));
        }
        if !self.active.insert((i, j)) {
            return Err(Error::Cycle(u.clone(), v.clone()));
        }
        let e = expand(u, v);
        let rules = self.rules;
        let s = rules.evaluate(&e, |x, y| self.lookup(x, y))?;
        self.active.remove(&(i, j));
        self.sets[i][j] = Some(s);
        Ok(s)
    }
}

/// Builds and checks the base table.
///
/// `Q(1,1)` is everything, mixed-parity pairs are empty, `Q(a,a)` comes from
/// the `N` rule over `(1,1)`, off-diagonal pairs from the (acyclic)
/// recursion, and the coupled `b, c, d` diagonal is the greatest fixed point
/// of its equations, which must coincide with the sets of explicit
/// centralizer cosets.
pub fn build_base_q(q: &QuotientGroup, lift: &LiftTable) -> Result<BaseQTable, Error> {
    let rules = Rules { q, lift };
    let words = base_words();
    let mut b = Builder { rules, sets: [[None; 5]; 5], active: HashSet::new() };

    b.sets[0][0] = Some(QSet::FULL);
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if mixed(u, v) {
                b.sets[i][j] = Some(QSet::EMPTY);
            }
        }
    }
    let aa = rules.combine(&expand(&words[1], &words[1]), &[QSet::FULL, QSet::FULL]);
    b.sets[1][1] = Some(aa);

    for i in 0..5 {
        for j in 0..5 {
            if i != j {
                b.lookup(&words[i], &words[j])?;
            }
        }
    }

    // greatest fixed point on the b, c, d diagonal
    let mut diag = [QSet::FULL; 5];
    loop {
        let mut next = diag;
        for k in [B, C, D] {
            let e = expand(&words[k], &words[k]);
            let sets = &b.sets;
            next[k] = rules
                .evaluate(&e, |x, y| -> Result<QSet, Error> {
                    let (i, j) = (base_index(x).unwrap(), base_index(y).unwrap());
                    Ok(if i == j && i >= B { diag[i] } else { sets[i][j].expect("filled") })
                })?
                .intersection(diag[k]);
        }
        if next == diag {
            break;
        }
        diag = next;
    }

    let coset_set = |ws: &[&str]| -> QSet {
        ws.iter().map(|s| q.coset_of(&s.parse().expect("literal"))).collect()
    };
    let stars = ["", "b", "c", "d"];
    let lower_d = coset_set(&stars).union(coset_set(&["ada", "adab", "adac", "adad"]));
    for (k, lower) in [(B, coset_set(&stars)), (C, coset_set(&stars)), (D, lower_d)] {
        if diag[k] != lower {
            return Err(Error::BaseTable(format!(
                "Q({0},{0}) fixed point {1} differs from centralizer cosets {2}",
                words[k], diag[k], lower
            )));
        }
        b.sets[k][k] = Some(diag[k]);
    }

    let sets = b.sets.map(|row| row.map(|s| s.expect("all entries filled")));
    let table = BaseQTable { sets };
    check_cardinalities(&table)?;
    Ok(table)
}

fn check_cardinalities(t: &BaseQTable) -> Result<(), Error> {
    let expected_diagonal = [16, 4, 4, 4, 8];
    for i in 0..5 {
        for j in 0..5 {
            let n = t.sets[i][j].len();
            let expected = if i == j { expected_diagonal[i] } else { 0 };
            if n != expected {
                let words = base_words();
                return Err(Error::BaseTable(format!(
                    "|Q({},{})| = {n}, expected {expected}",
                    words[i], words[j]
                )));
            }
        }
    }
    Ok(())
}
