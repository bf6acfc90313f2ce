//! Deciding `w = 1` by recursive splitting.
//!
//! A node with an odd number of `a`'s is a "No" leaf, the empty word is a
//! "Yes" leaf, and a single generator is a "No" leaf (each generator moves
//! some vertex). Otherwise the node is cyclically normalized (conjugation does
//! not change triviality) and split. After normalization a word of length
//! `n ≥ 2` starts with `a`, so both sections have length at most `n/2`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::splitting::split;
use crate::words::{a_parity, cyclic_normalize, reduce, Letter, Parity, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mark {
    Yes,
    No,
}

/// One node of the decision tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WpTree {
    pub word: Word,
    pub mark: Option<Mark>,
    pub children: Vec<WpTree>,
}

fn leaf_mark(w: &Word) -> Option<Mark> {
    if w.is_empty() {
        Some(Mark::Yes)
    } else if a_parity(w) == Parity::Odd || w.len() == 1 {
        Some(Mark::No)
    } else {
        None
    }
}

fn normalized_sections(w: &Word) -> (Word, Word) {
    let (normalized, _) = cyclic_normalize(w).expect("even nonempty word");
    let pair = split(&normalized).expect("normalization keeps parity");
    (pair.left, pair.right)
}

/// Builds the full decision tree (every leaf is expanded, not just up to the first "No").
pub fn build_wp_tree(w: &Word) -> WpTree {
    let mark = leaf_mark(w);
    let children = match mark {
        Some(_) => Vec::new(),
        None => {
            let (left, right) = normalized_sections(w);
            vec![build_wp_tree(&left), build_wp_tree(&right)]
        }
    };
    WpTree { word: w.clone(), mark, children }
}

/// Fast path: same decision as [`build_wp_tree`] without materializing the tree.
pub fn is_trivial(w: &Word) -> bool {
    match leaf_mark(w) {
        Some(mark) => mark == Mark::Yes,
        None => {
            let (left, right) = normalized_sections(w);
            is_trivial(&left) && is_trivial(&right)
        }
    }
}

/// Triviality of an arbitrary letter sequence.
pub fn is_trivial_letters(letters: &[Letter]) -> bool {
    is_trivial(&reduce(letters.iter().copied()))
}

/// `u = v` in the group.
pub fn equal(u: &Word, v: &Word) -> bool {
    is_trivial(&u.mul(&v.inverse()))
}

impl WpTree {
    /// Longest root-to-leaf path, counted in edges.
    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(WpTree::size).sum::<usize>()
    }

    pub fn is_trivial(&self) -> bool {
        match self.mark {
            Some(mark) => mark == Mark::Yes,
            None => self.children.iter().all(WpTree::is_trivial),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph wp {\n  node [shape=box];\n");
        let mut next = 0usize;
        self.write_dot(&mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn write_dot(&self, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        let label = match self.mark {
            Some(Mark::Yes) => format!("{}\\nYes", self.word),
            Some(Mark::No) => format!("{}\\nNo", self.word),
            None => self.word.to_string(),
        };
        let _ = writeln!(out, "  n{id} [label=\"{label}\"];");
        for child in &self.children {
            let child_id = child.write_dot(out, next);
            let _ = writeln!(out, "  n{id} -> n{child_id};");
        }
        id
    }
}
