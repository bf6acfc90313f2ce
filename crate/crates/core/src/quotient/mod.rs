//! The order-16 quotient by the normal closure `K` of `abab`, and the table
//! describing which pairs of `K`-cosets are sections of a first-level
//! stabilizer element.
//!
//! Coset ids are our own: breadth-first discovery from the identity with
//! generator order `a, b, c, d`.

mod lift;
mod todd_coxeter;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

pub use lift::{build_lift_table, build_lift_table_shuffled, LiftTable};
pub use todd_coxeter::{enumerate_cosets, CosetTable};

use crate::error::Error;
use crate::tree_action;
use crate::word_problem;
use crate::words::{parse_word, reduce, Letter, Parity, Word};

pub const ORDER: usize = 16;

/// Words generating `K` as a subgroup.
pub const K_GENERATORS: [&str; 3] = ["abab", "badabada", "abadabad"];

/// Elements of `K` whose sections are `(k, 1)` for each generator `k` of `K`.
pub const K_SPLIT_WITNESSES: [(&str, &str); 3] = [
    ("badabada", "abab"),
    ("badabacabadabaca", "abadabad"),
    ("cbadabacabadabacac", "badabada"),
];

const ENUMERATION_LIMIT: usize = 4096;

/// A `K`-coset, `0..16`; 0 is `K` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CosetId(pub u8);

impl CosetId {
    pub const IDENTITY: CosetId = CosetId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = CosetId> {
        (0..ORDER as u8).map(CosetId)
    }
}

impl fmt::Display for CosetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Γ/K` with its multiplication table.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    /// `action[x][g]` = `x · img(g)`
    action: [[CosetId; 4]; ORDER],
    mul: [[CosetId; ORDER]; ORDER],
    inv: [CosetId; ORDER],
    representatives: Vec<Word>,
    relators: Vec<Word>,
}

fn letters_to_indices(w: &str) -> Vec<usize> {
    w.chars()
        .map(|ch| Letter::from_char(ch).expect("relator letter").index())
        .collect()
}

/// Relators of the finite presentation, beyond the squares of the generators.
pub const BASE_RELATORS: [&str; 3] = ["bcd", "abab", "adadadad"];
pub const FALLBACK_RELATOR: &str = "acacacacacacacac";

/// Checks that a relator holds in Γ with both the splitting decision and the tree oracle.
fn relator_holds_in_group(relator: &str) -> bool {
    let letters: Vec<Letter> = relator.chars().filter_map(Letter::from_char).collect();
    let w = reduce(letters.iter().copied());
    word_problem::is_trivial(&w) && tree_action::oracle_is_trivial(&w)
}

/// Runs coset enumeration and checks the result is the expected group of order 16.
pub fn build_quotient() -> Result<QuotientGroup, Error> {
    for relator in ["adadadad", FALLBACK_RELATOR] {
        if !relator_holds_in_group(relator) {
            return Err(Error::QuotientCheck(format!("{relator} is not trivial in the group")));
        }
    }
    let mut relators: Vec<&str> = BASE_RELATORS.to_vec();
    let table = match enumerate(&relators) {
        Ok(t) if t.len() == ORDER => t,
        Ok(t) if t.len() < ORDER => return Err(Error::QuotientOrder(t.len())),
        _ => {
            relators.push(FALLBACK_RELATOR);
            let t = enumerate(&relators)?;
            if t.len() != ORDER {
                return Err(Error::QuotientOrder(t.len()));
            }
            t
        }
    };
    let q = QuotientGroup::from_table(&table, &relators);
    q.verify()?;
    Ok(q)
}

fn enumerate(relators: &[&str]) -> Result<CosetTable, Error> {
    let encoded: Vec<Vec<usize>> = relators.iter().map(|r| letters_to_indices(r)).collect();
    enumerate_cosets(4, &encoded, ENUMERATION_LIMIT)
}

impl QuotientGroup {
    fn from_table(table: &CosetTable, relators: &[&str]) -> QuotientGroup {
        // breadth-first renumbering from the identity coset
        let mut id = vec![usize::MAX; table.len()];
        let mut order = Vec::with_capacity(table.len());
        let mut representatives: Vec<Vec<Letter>> = Vec::with_capacity(table.len());
        let mut queue = VecDeque::from([0usize]);
        id[0] = 0;
        order.push(0);
        representatives.push(Vec::new());
        while let Some(x) = queue.pop_front() {
            for l in Letter::ALL {
                let y = table.table[x][l.index()];
                if id[y] == usize::MAX {
                    id[y] = order.len();
                    order.push(y);
                    let mut rep = representatives[id[x]].clone();
                    rep.push(l);
                    representatives.push(rep);
                    queue.push_back(y);
                }
            }
        }
        let mut action = [[CosetId(0); 4]; ORDER];
        for (new, &old) in order.iter().enumerate() {
            for l in Letter::ALL {
                action[new][l.index()] = CosetId(id[table.table[old][l.index()]] as u8);
            }
        }
        let representatives: Vec<Word> =
            representatives.into_iter().map(reduce).collect();
        let mut mul = [[CosetId(0); ORDER]; ORDER];
        for i in 0..ORDER {
            for j in 0..ORDER {
                let mut x = CosetId(i as u8);
                for l in representatives[j].letters() {
                    x = action[x.index()][l.index()];
                }
                mul[i][j] = x;
            }
        }
        let mut inv = [CosetId(0); ORDER];
        for i in 0..ORDER {
            let j = (0..ORDER).find(|&j| mul[i][j] == CosetId::IDENTITY).expect("group");
            inv[i] = CosetId(j as u8);
        }
        QuotientGroup {
            action,
            mul,
            inv,
            representatives,
            relators: relators.iter().map(|r| parse_word(r).expect("relator")).collect(),
        }
    }

    pub fn order(&self) -> usize {
        ORDER
    }

    pub fn mul(&self, x: CosetId, y: CosetId) -> CosetId {
        self.mul[x.index()][y.index()]
    }

    pub fn inverse(&self, x: CosetId) -> CosetId {
        self.inv[x.index()]
    }

    pub fn image(&self, l: Letter) -> CosetId {
        self.action[0][l.index()]
    }

    /// A shortest word in the coset.
    pub fn representative(&self, x: CosetId) -> &Word {
        &self.representatives[x.index()]
    }

    /// Relators used in the presentation (besides the generator squares).
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// `K`-coset of a word.
    pub fn coset_of(&self, w: &Word) -> CosetId {
        w.letters()
            .iter()
            .fold(CosetId::IDENTITY, |x, l| self.action[x.index()][l.index()])
    }

    /// Parity of the number of `a`'s, well defined because `K` lies in the first-level stabilizer.
    pub fn parity(&self, x: CosetId) -> Parity {
        self.representatives[x.index()].a_parity()
    }

    pub fn even_cosets(&self) -> Vec<CosetId> {
        CosetId::all().filter(|&x| self.parity(x) == Parity::Even).collect()
    }

    pub fn element_order(&self, x: CosetId) -> usize {
        let mut y = x;
        let mut n = 1;
        while y != CosetId::IDENTITY {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    pub fn are_conjugate(&self, x: CosetId, y: CosetId) -> bool {
        CosetId::all().any(|g| self.mul(self.mul(self.inverse(g), y), g) == x)
    }

    /// Group axioms and the structural facts the rest of the crate relies on.
    pub fn verify(&self) -> Result<(), Error> {
        let fail = |msg: String| Err(Error::QuotientCheck(msg));
        for x in CosetId::all() {
            if self.mul(CosetId::IDENTITY, x) != x || self.mul(x, CosetId::IDENTITY) != x {
                return fail(format!("0 is not an identity for {x}"));
            }
            if self.mul(x, self.inverse(x)) != CosetId::IDENTITY {
                return fail(format!("bad inverse for {x}"));
            }
            for y in CosetId::all() {
                for z in CosetId::all() {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return fail(format!("associativity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        for l in Letter::ALL {
            if self.element_order(self.image(l)) != 2 {
                return fail(format!("image of {l} is not an involution"));
            }
        }
        if self.mul(self.image(Letter::B), self.image(Letter::C)) != self.image(Letter::D) {
            return fail("img(b)·img(c) != img(d)".into());
        }
        if self.element_order(self.mul(self.image(Letter::A), self.image(Letter::B))) != 2 {
            return fail("img(a)·img(b) does not have order 2".into());
        }
        for k in K_GENERATORS {
            if self.coset_of(&parse_word(k).expect("literal")) != CosetId::IDENTITY {
                return fail(format!("{k} does not lie in K"));
            }
        }
        let even = self.even_cosets();
        if even.len() != ORDER / 2 {
            return fail(format!("{} even cosets, expected 8", even.len()));
        }
        for &x in &even {
            for &y in &even {
                if self.parity(self.mul(x, y)) != Parity::Even {
                    return fail("even cosets are not closed under multiplication".into());
                }
            }
        }
        for x in CosetId::all() {
            for l in Letter::ALL {
                let expected = self.representative(x).mul(&Word::letter(l)).a_parity();
                if self.parity(self.action[x.index()][l.index()]) != expected {
                    return fail("parity is not well defined on cosets".into());
                }
            }
        }
        Ok(())
    }
}
