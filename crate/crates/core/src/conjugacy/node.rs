//! Node classification and the rules combining children's `Q`-sets.

use std::fmt;

use serde::Serialize;

use super::QSet;
use crate::quotient::{CosetId, LiftTable, QuotientGroup};
use crate::splitting::{split, split_shifted};
use crate::words::{Letter, Parity, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NodeKind {
    /// Both words fix the first level; four children.
    #[serde(rename = "S")]
    S,
    /// Neither word fixes the first level; two children.
    #[serde(rename = "N")]
    N,
    /// Parities differ, so `Q = ∅`.
    #[serde(rename = "leaf-empty")]
    LeafEmpty,
    /// Both words have length at most 1; `Q` comes from the base table.
    #[serde(rename = "leaf-base")]
    LeafBase,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeKind::S => "S",
            NodeKind::N => "N",
            NodeKind::LeafEmpty => "leaf-empty",
            NodeKind::LeafBase => "leaf-base",
        })
    }
}

pub fn classify(u: &Word, v: &Word) -> NodeKind {
    match (u.a_parity(), v.a_parity()) {
        (p, q) if p != q => NodeKind::LeafEmpty,
        _ if u.len() <= 1 && v.len() <= 1 => NodeKind::LeafBase,
        (Parity::Even, _) => NodeKind::S,
        (Parity::Odd, _) => NodeKind::N,
    }
}

pub(crate) fn mixed(u: &Word, v: &Word) -> bool {
    u.a_parity() != v.a_parity()
}

/// Children of an `S`- or `N`-node together with the data the combining rule needs.
#[derive(Debug, Clone)]
pub(crate) enum Expansion {
    /// `[(u₀,v₀), (u₁,v₁), (u₀,v₁), (u₁,v₀)]`
    S([(Word, Word); 4]),
    /// `[(u₀u₁, v₀v₁), (u₁u₀, v₀v₁)]` with `(u₀,u₁) = split(ua)`, `(v₀,v₁) = split(va)`.
    N {
        children: [(Word, Word); 2],
        u0: Word,
        u1: Word,
        v1: Word,
    },
}

/// Expands a same-parity pair, ignoring the base-table cutoff.
pub(crate) fn expand(u: &Word, v: &Word) -> Expansion {
    debug_assert!(!mixed(u, v));
    if u.a_parity() == Parity::Even {
        let su = split(u).expect("even");
        let sv = split(v).expect("even");
        Expansion::S([
            (su.left.clone(), sv.left.clone()),
            (su.right.clone(), sv.right.clone()),
            (su.left, sv.right),
            (su.right, sv.left),
        ])
    } else {
        let su = split_shifted(u).expect("odd");
        let sv = split_shifted(v).expect("odd");
        let v01 = sv.left.mul(&sv.right);
        Expansion::N {
            children: [
                (su.left.mul(&su.right), v01.clone()),
                (su.right.mul(&su.left), v01),
            ],
            u0: su.left,
            u1: su.right,
            v1: sv.right,
        }
    }
}

impl Expansion {
    pub(crate) fn children(&self) -> Vec<(Word, Word)> {
        match self {
            Expansion::S(pairs) => pairs.to_vec(),
            Expansion::N { children, .. } => children.to_vec(),
        }
    }
}

/// Shared read-only data for the combining rules.
#[derive(Clone, Copy)]
pub(crate) struct Rules<'a> {
    pub q: &'a QuotientGroup,
    pub lift: &'a LiftTable,
}

impl Rules<'_> {
    /// `L[q00 × q11] ∪ L[q10 × q01]·a`.
    pub(crate) fn combine_s(&self, q00: QSet, q11: QSet, q01: QSet, q10: QSet) -> QSet {
        let a = self.q.image(Letter::A);
        QSet::lift_product(self.lift, q00, q11)
            .union(QSet::lift_product(self.lift, q10, q01).translate(self.q, a))
    }

    fn lift_along(&self, first: QSet, left: CosetId, right: CosetId) -> QSet {
        let right_inv = self.q.inverse(right);
        first
            .iter()
            .filter_map(|i| self.lift.get(i, self.q.mul(self.q.mul(left, i), right_inv)))
            .collect()
    }

    /// `{lift(i, v₁·i·u₁⁻¹) : i ∈ first} ∪ {lift(i, v₁·i·u₀⁻¹)·a : i ∈ second}`.
    pub(crate) fn combine_n(&self, first: QSet, second: QSet, u0: &Word, u1: &Word, v1: &Word) -> QSet {
        let (cu0, cu1, cv1) = (self.q.coset_of(u0), self.q.coset_of(u1), self.q.coset_of(v1));
        let a = self.q.image(Letter::A);
        self.lift_along(first, cv1, cu1)
            .union(self.lift_along(second, cv1, cu0).translate(self.q, a))
    }

    /// Combines children's sets in [`Expansion::children`] order.
    pub(crate) fn combine(&self, e: &Expansion, child_q: &[QSet]) -> QSet {
        match e {
            Expansion::S(_) => self.combine_s(child_q[0], child_q[1], child_q[2], child_q[3]),
            Expansion::N { u0, u1, v1, .. } => self.combine_n(child_q[0], child_q[1], u0, u1, v1),
        }
    }

    /// Evaluates an expansion lazily: a term is skipped when one of its
    /// factors has mixed parity or the first factor is empty.
    pub(crate) fn evaluate<E>(
        &self,
        e: &Expansion,
        mut child: impl FnMut(&Word, &Word) -> Result<QSet, E>,
    ) -> Result<QSet, E> {
        let mut product = |x: &(Word, Word), y: &(Word, Word)| -> Result<(QSet, QSet), E> {
            if mixed(&x.0, &x.1) || mixed(&y.0, &y.1) {
                return Ok((QSet::EMPTY, QSet::EMPTY));
            }
            let first = child(&x.0, &x.1)?;
            if first.is_empty() {
                return Ok((QSet::EMPTY, QSet::EMPTY));
            }
            Ok((first, child(&y.0, &y.1)?))
        };
        match e {
            Expansion::S(p) => {
                let (q00, q11) = product(&p[0], &p[1])?;
                let (q10, q01) = product(&p[3], &p[2])?;
                Ok(self.combine_s(q00, q11, q01, q10))
            }
            Expansion::N { children, u0, u1, v1 } => {
                let first = if mixed(&children[0].0, &children[0].1) {
                    QSet::EMPTY
                } else {
                    child(&children[0].0, &children[0].1)?
                };
                let second = if mixed(&children[1].0, &children[1].1) {
                    QSet::EMPTY
                } else {
                    child(&children[1].0, &children[1].1)?
                };
                Ok(self.combine_n(first, second, u0, u1, v1))
            }
        }
    }
}
