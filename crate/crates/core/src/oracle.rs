//! Checks that do not rely on the `Q`-set machinery: bounded conjugator
//! search and the abelianization.
//!
//! The search walks conjugates `x⁻¹vx` breadth-first in `|x|`. Every
//! conjugate carries its permutation of the 256 vertices at depth 8, updated
//! in constant time per step, so candidates are compared by permutation
//! first and confirmed with the word problem.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::Engine;
use crate::error::Error;
use crate::tree_action::{apply_letters, Vertex};
use crate::word_problem::equal;
use crate::words::{reduced_words_up_to, Letter, Word};

/// Exponent sums mod 2 of `a`, `b`, `c`, with `d` counted as `b + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianImage {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", u8::from(self.a), u8::from(self.b), u8::from(self.c))
    }
}

pub fn abelian_image(w: &Word) -> AbelianImage {
    let n = w.counts();
    AbelianImage { a: n.a % 2 == 1, b: (n.b + n.d) % 2 == 1, c: (n.c + n.d) % 2 == 1 }
}

const FINGERPRINT_DEPTH: usize = 8;
const LEVEL: usize = 1 << FINGERPRINT_DEPTH;

type Permutation = [u8; LEVEL];

fn permutation(letters: &[Letter]) -> Permutation {
    let mut p = [0u8; LEVEL];
    for (x, slot) in p.iter_mut().enumerate() {
        let v = Vertex::new(x as u64, FINGERPRINT_DEPTH).expect("small depth");
        *slot = apply_letters(letters, v).packed() as u8;
    }
    p
}

/// `l·g·l` for an involution `l`.
fn conjugate_permutation(l: &Permutation, g: &Permutation) -> Permutation {
    let mut p = [0u8; LEVEL];
    for (x, slot) in p.iter_mut().enumerate() {
        *slot = l[g[l[x] as usize] as usize];
    }
    p
}

struct Conjugate {
    word: Word,
    by: Word,
    perm: Permutation,
}

/// All distinct conjugate words `red(x⁻¹vx)` with `|x| ≤ max_len`, in order of `|x|`.
fn conjugates(v: &Word, max_len: usize) -> Vec<Conjugate> {
    let letter_perms: Vec<Permutation> = Letter::ALL.iter().map(|&l| permutation(&[l])).collect();
    let mut seen: HashSet<Word> = HashSet::from([v.clone()]);
    let mut all = vec![Conjugate { word: v.clone(), by: Word::identity(), perm: permutation(v.letters()) }];
    let mut frontier = vec![0usize];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for &i in &frontier {
            for l in Letter::ALL {
                let lw = Word::letter(l);
                let by = all[i].by.mul(&lw);
                if by.len() != len {
                    continue;
                }
                let word = lw.mul(&all[i].word).mul(&lw);
                if !seen.insert(word.clone()) {
                    continue;
                }
                let perm = conjugate_permutation(&letter_perms[l.index()], &all[i].perm);
                next.push(all.len());
                all.push(Conjugate { word, by, perm });
            }
        }
        frontier = next;
    }
    all
}

/// Index of the conjugates of one word by permutation.
struct ConjugateIndex {
    conjugates: Vec<Conjugate>,
    by_perm: HashMap<Permutation, Vec<usize>>,
}

impl ConjugateIndex {
    fn new(v: &Word, max_len: usize) -> ConjugateIndex {
        let conjugates = conjugates(v, max_len);
        let mut by_perm: HashMap<Permutation, Vec<usize>> = HashMap::new();
        for (i, c) in conjugates.iter().enumerate() {
            by_perm.entry(c.perm).or_default().push(i);
        }
        ConjugateIndex { conjugates, by_perm }
    }

    /// Shortest `x` with `x⁻¹vx = u`.
    fn witness(&self, u: &Word) -> Option<Word> {
        let candidates = self.by_perm.get(&permutation(u.letters()))?;
        candidates
            .iter()
            .map(|&i| &self.conjugates[i])
            .filter(|c| equal(&c.word, u))
            .min_by_key(|c| c.by.len())
            .map(|c| c.by.clone())
    }
}

/// Shortest reduced `x` with `|x| ≤ max_len` and `x⁻¹vx = u` in the group.
pub fn find_conjugator(u: &Word, v: &Word, max_len: usize) -> Option<Word> {
    ConjugateIndex::new(v, max_len).witness(u)
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub u: Word,
    pub v: Word,
    pub solver: bool,
    pub witness: Option<Word>,
    pub reason: String,
}

/// Outcome of [`validate_small_instances`]. Negative answers without an
/// abelian obstruction are only "budget-consistent": no conjugator was found
/// within the search budget, which is evidence rather than proof.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_word_len: usize,
    pub witness_budget: usize,
    pub words: usize,
    pub pairs: usize,
    pub conjugate_with_witness: usize,
    pub not_conjugate_abelian: usize,
    pub not_conjugate_budget_consistent: usize,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "small-instance sweep: {} words (length <= {}), {} pairs, witness budget {}",
            self.words, self.max_word_len, self.pairs, self.witness_budget
        )?;
        writeln!(f, "  conjugate, witness found:          {}", self.conjugate_with_witness)?;
        writeln!(f, "  not conjugate, abelian images:     {}", self.not_conjugate_abelian)?;
        writeln!(f, "  not conjugate, budget-consistent:  {}", self.not_conjugate_budget_consistent)?;
        writeln!(f, "  violations:                        {}", self.violations.len())?;
        for v in &self.violations {
            let witness = v.witness.as_ref().map_or("none".to_string(), Word::to_string);
            writeln!(
                f,
                "    ({}, {}): solver {}, witness {}: {}",
                v.u,
                v.v,
                if v.solver { "YES" } else { "NO" },
                witness,
                v.reason
            )?;
        }
        Ok(())
    }
}

enum Outcome {
    Witnessed,
    Abelian,
    BudgetConsistent,
    Violation(Violation),
}

fn check_pair(engine: &Engine, index: &ConjugateIndex, u: &Word, v: &Word) -> Result<Outcome, Error> {
    let q = engine.q_set(u, v)?;
    let solver = !q.is_empty();
    let abelian_differs = abelian_image(u) != abelian_image(v);
    let witness = if abelian_differs { None } else { index.witness(u) };
    let violation = |reason: &str| {
        Outcome::Violation(Violation {
            u: u.clone(),
            v: v.clone(),
            solver,
            witness: witness.clone(),
            reason: reason.to_string(),
        })
    };
    Ok(match (solver, &witness) {
        (true, _) if abelian_differs => violation("conjugate by the solver but abelian images differ"),
        (true, None) => violation("conjugate by the solver but no witness within budget"),
        (true, Some(x)) if !q.contains(engine.quotient().coset_of(x)) => {
            violation("witness coset is missing from Q")
        }
        (true, Some(_)) => Outcome::Witnessed,
        (false, Some(_)) => violation("not conjugate by the solver but a witness exists"),
        (false, None) if abelian_differs => Outcome::Abelian,
        (false, None) => Outcome::BudgetConsistent,
    })
}

/// Compares the solver with bounded search on all pairs of reduced words of length at most `max_word_len`.
pub fn validate_small_instances(
    engine: &Engine,
    max_word_len: usize,
    witness_budget: usize,
) -> Result<SweepReport, Error> {
    let words = reduced_words_up_to(max_word_len);
    let per_v: Vec<Vec<Outcome>> = words
        .par_iter()
        .map(|v| {
            let index = ConjugateIndex::new(v, witness_budget);
            words.iter().map(|u| check_pair(engine, &index, u, v)).collect()
        })
        .collect::<Result<_, Error>>()?;
    let mut report = SweepReport {
        max_word_len,
        witness_budget,
        words: words.len(),
        pairs: words.len() * words.len(),
        conjugate_with_witness: 0,
        not_conjugate_abelian: 0,
        not_conjugate_budget_consistent: 0,
        violations: Vec::new(),
    };
    for outcome in per_v.into_iter().flatten() {
        match outcome {
            Outcome::Witnessed => report.conjugate_with_witness += 1,
            Outcome::Abelian => report.not_conjugate_abelian += 1,
            Outcome::BudgetConsistent => report.not_conjugate_budget_consistent += 1,
            Outcome::Violation(v) => report.violations.push(v),
        }
    }
    Ok(report)
}
