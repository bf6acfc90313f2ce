//! Memoized evaluation of `Q(u, v)`.

use std::collections::{HashMap, HashSet};

use super::node::{classify, expand, NodeKind};
use super::QSet;
use crate::engine::Engine;
use crate::error::Error;
use crate::words::Word;

/// A memo table for one engine. Reusable across queries.
pub struct Solver<'e> {
    engine: &'e Engine,
    memo: HashMap<(Word, Word), QSet>,
    active: HashSet<(Word, Word)>,
}

impl<'e> Solver<'e> {
    pub fn new(engine: &'e Engine) -> Solver<'e> {
        Solver { engine, memo: HashMap::new(), active: HashSet::new() }
    }

    /// Number of distinct non-leaf pairs evaluated so far.
    pub fn visited(&self) -> usize {
        self.memo.len()
    }

    pub fn q_set(&mut self, u: &Word, v: &Word) -> Result<QSet, Error> {
        match classify(u, v) {
            NodeKind::LeafEmpty => return Ok(QSet::EMPTY),
            NodeKind::LeafBase => return Ok(self.engine.base().get(u, v).expect("base pair")),
            NodeKind::S | NodeKind::N => {}
        }
        let key = (u.clone(), v.clone());
        if let Some(&s) = self.memo.get(&key) {
            return Ok(s);
        }
        if !self.active.insert(key.clone()) {
            return Err(Error::Cycle(u.clone(), v.clone()));
        }
        let e = expand(u, v);
        let rules = self.engine.rules();
        let s = rules.evaluate(&e, |x, y| self.q_set(x, y))?;
        self.active.remove(&key);
        self.memo.insert(key, s);
        Ok(s)
    }
}
