//! The explicit decision tree `T_{u,v}` (no sharing between subtrees).

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::node::{classify, expand, NodeKind};
use super::QSet;
use crate::engine::Engine;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjNode {
    pub u: Word,
    pub v: Word,
    pub kind: NodeKind,
    pub q: QSet,
    pub children: Vec<ConjNode>,
}

/// Builds `T_{u,v}` with every node's `Q`-set filled in bottom-up.
pub fn build_conj_tree(engine: &Engine, u: &Word, v: &Word) -> ConjNode {
    let kind = classify(u, v);
    let (q, children) = match kind {
        NodeKind::LeafEmpty => (QSet::EMPTY, Vec::new()),
        NodeKind::LeafBase => (engine.base().get(u, v).expect("base pair"), Vec::new()),
        NodeKind::S | NodeKind::N => {
            let e = expand(u, v);
            let children: Vec<ConjNode> = e
                .children()
                .iter()
                .map(|(x, y)| build_conj_tree(engine, x, y))
                .collect();
            let child_q: Vec<QSet> = children.iter().map(|c| c.q).collect();
            (engine.rules().combine(&e, &child_q), children)
        }
    };
    ConjNode { u: u.clone(), v: v.clone(), kind, q, children }
}

/// Number of nodes of `T_{u,v}`, counted with a memo instead of building the tree.
pub fn tree_size(u: &Word, v: &Word) -> u128 {
    fn go(u: &Word, v: &Word, memo: &mut HashMap<(Word, Word), u128>) -> u128 {
        match classify(u, v) {
            NodeKind::LeafEmpty | NodeKind::LeafBase => return 1,
            NodeKind::S | NodeKind::N => {}
        }
        if let Some(&n) = memo.get(&(u.clone(), v.clone())) {
            return n;
        }
        let n = expand(u, v)
            .children()
            .iter()
            .fold(1u128, |acc, (x, y)| acc.saturating_add(go(x, y, memo)));
        memo.insert((u.clone(), v.clone()), n);
        n
    }
    go(u, v, &mut HashMap::new())
}

impl ConjNode {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(ConjNode::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph conj {\n  node [shape=box];\n");
        let mut next = 0usize;
        self.write_dot(&mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn write_dot(&self, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        let _ = writeln!(
            out,
            "  n{id} [label=\"({}, {})\\n{}\\nQ = {}\"];",
            self.u, self.v, self.kind, self.q
        );
        for child in &self.children {
            let child_id = child.write_dot(out, next);
            let _ = writeln!(out, "  n{id} -> n{child_id};");
        }
        id
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn small_trees() {
        let engine = Engine::shared().unwrap();
        let t = build_conj_tree(engine, &w("d"), &w(""));
        assert_eq!(t.kind, NodeKind::LeafBase);

        let t = build_conj_tree(engine, &w("ab"), &w("b"));
        assert_eq!((t.kind, t.size()), (NodeKind::LeafEmpty, 1));

        let t = build_conj_tree(engine, &w("dad"), &w("bab"));
        assert_eq!(t.kind, NodeKind::N);
        assert_eq!(t.children.len(), 2);
        assert_eq!(t.q, engine.q_set(&w("dad"), &w("bab")).unwrap());
        assert_eq!(tree_size(&w("dad"), &w("bab")), t.size() as u128);
    }

    #[test]
    fn s_node_children_follow_splits() {
        let engine = Engine::shared().unwrap();
        let t = build_conj_tree(engine, &w("abab"), &w("baba"));
        assert_eq!(t.kind, NodeKind::S);
        let pairs: Vec<String> = t.children.iter().map(|c| format!("{},{}", c.u, c.v)).collect();
        // abab = (ca, ac), baba = (ac, ca)
        assert_eq!(pairs, ["ca,ac", "ac,ca", "ca,ca", "ac,ac"]);
    }

    #[test]
    fn exports() {
        let engine = Engine::shared().unwrap();
        let t = build_conj_tree(engine, &w("abab"), &w("baba"));
        let json: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(json["u"], "abab");
        assert_eq!(json["kind"], "S");
        assert!(json["q"].is_array());
        assert_eq!(json["children"].as_array().unwrap().len(), 4);
        assert_eq!(t.to_dot().matches("->").count(), t.size() - 1);
    }
}
