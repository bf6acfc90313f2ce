//! Coset enumeration (HLT strategy) for presentations whose generators are
//! all involutions. With involutive generators the table needs one column per
//! generator: `table[x][g] = y` always comes with `table[y][g] = x`.

use std::collections::VecDeque;

use crate::error::Error;

/// A completed coset table: `table[x][g]` is the coset `x·g`. Coset 0 is the subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub table: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

struct Enumerator {
    generators: usize,
    rows: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    limit: usize,
}

impl Enumerator {
    fn new(generators: usize, limit: usize) -> Self {
        Enumerator {
            generators,
            rows: vec![vec![None; generators]],
            parent: vec![0],
            limit,
        }
    }

    fn alive(&self, x: usize) -> bool {
        self.parent[x] == x
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    fn define(&mut self, x: usize, g: usize) -> Result<(), Error> {
        if self.rows.len() >= self.limit {
            return Err(Error::EnumerationOverflow { limit: self.limit });
        }
        let fresh = self.rows.len();
        self.rows.push(vec![None; self.generators]);
        self.parent.push(fresh);
        self.rows[x][g] = Some(fresh);
        self.rows[fresh][g] = Some(x);
        Ok(())
    }

    fn merge(&mut self, queue: &mut VecDeque<usize>, x: usize, y: usize) {
        let (x, y) = (self.find(x), self.find(y));
        if x != y {
            let (keep, drop) = (x.min(y), x.max(y));
            self.parent[drop] = keep;
            queue.push_back(drop);
        }
    }

    fn coincidence(&mut self, x: usize, y: usize) {
        let mut queue = VecDeque::new();
        self.merge(&mut queue, x, y);
        while let Some(e) = queue.pop_front() {
            for g in 0..self.generators {
                let Some(f) = self.rows[e][g] else { continue };
                if self.rows[f][g] == Some(e) {
                    self.rows[f][g] = None;
                }
                let (e1, f1) = (self.find(e), self.find(f));
                if let Some(t) = self.rows[e1][g] {
                    self.merge(&mut queue, f1, t);
                } else if let Some(t) = self.rows[f1][g] {
                    self.merge(&mut queue, e1, t);
                } else {
                    self.rows[e1][g] = Some(f1);
                    self.rows[f1][g] = Some(e1);
                }
            }
        }
    }

    fn step(&mut self, x: usize, g: usize) -> Option<usize> {
        self.rows[x][g].map(|y| self.find(y))
    }

    /// Traces `relator` from `x` in both directions, defining cosets as needed.
    fn scan_and_fill(&mut self, x: usize, relator: &[usize]) -> Result<(), Error> {
        let mut forward = x;
        let mut backward = x;
        let mut i = 0usize;
        let mut j = relator.len();
        loop {
            while i < j {
                match self.step(forward, relator[i]) {
                    Some(next) => {
                        forward = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if forward != backward {
                    self.coincidence(forward, backward);
                }
                return Ok(());
            }
            while j > i {
                match self.step(backward, relator[j - 1]) {
                    Some(next) => {
                        backward = next;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if i == j {
                self.coincidence(forward, backward);
                return Ok(());
            }
            if j == i + 1 {
                let g = relator[i];
                self.rows[forward][g] = Some(backward);
                self.rows[backward][g] = Some(forward);
                return Ok(());
            }
            self.define(forward, relator[i])?;
        }
    }

    fn run(mut self, relators: &[Vec<usize>]) -> Result<CosetTable, Error> {
        let mut x = 0;
        while x < self.rows.len() {
            for r in relators {
                if !self.alive(x) {
                    break;
                }
                self.scan_and_fill(x, r)?;
            }
            if self.alive(x) {
                for g in 0..self.generators {
                    if self.rows[x][g].is_none() {
                        self.define(x, g)?;
                    }
                }
            }
            x += 1;
        }
        Ok(self.compact())
    }

    fn compact(mut self) -> CosetTable {
        let live: Vec<usize> = (0..self.rows.len()).filter(|&x| self.alive(x)).collect();
        let mut index = vec![usize::MAX; self.rows.len()];
        for (k, &x) in live.iter().enumerate() {
            index[x] = k;
        }
        let table = live
            .iter()
            .map(|&x| {
                (0..self.generators)
                    .map(|g| {
                        let y = self.rows[x][g].expect("complete table");
                        index[self.find(y)]
                    })
                    .collect()
            })
            .collect();
        CosetTable { table }
    }
}

/// Enumerates the cosets of the trivial subgroup in `⟨x₀ … x_{n−1} | xᵢ², relators⟩`.
/// Relators are words over generator indices.
pub fn enumerate_cosets(
    generators: usize,
    relators: &[Vec<usize>],
    limit: usize,
) -> Result<CosetTable, Error> {
    Enumerator::new(generators, limit).run(relators)
}
