use std::fmt;

use serde::{Serialize, Serializer};

use crate::quotient::{CosetId, LiftTable, QuotientGroup, ORDER};

/// A set of `K`-cosets, stored as a 16-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QSet(u16);

impl QSet {
    pub const EMPTY: QSet = QSet(0);
    pub const FULL: QSet = QSet(u16::MAX);

    pub fn from_bits(bits: u16) -> QSet {
        QSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn singleton(x: CosetId) -> QSet {
        QSet(1 << x.0)
    }

    pub fn insert(&mut self, x: CosetId) {
        self.0 |= 1 << x.0;
    }

    pub fn contains(self, x: CosetId) -> bool {
        self.0 >> x.0 & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: QSet) -> QSet {
        QSet(self.0 | other.0)
    }

    pub fn intersection(self, other: QSet) -> QSet {
        QSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: QSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = CosetId> {
        (0..ORDER as u8).filter(move |i| self.0 >> i & 1 == 1).map(CosetId)
    }

    /// `{x·g : x ∈ self}`.
    pub fn translate(self, q: &QuotientGroup, g: CosetId) -> QSet {
        self.iter().map(|x| q.mul(x, g)).collect()
    }

    /// `{lift(i, j) : i ∈ left, j ∈ right}`, skipping undefined lifts.
    pub fn lift_product(t: &LiftTable, left: QSet, right: QSet) -> QSet {
        let mut out = QSet::EMPTY;
        for i in left.iter() {
            for j in right.iter() {
                if let Some(k) = t.get(i, j) {
                    out.insert(k);
                }
            }
        }
        out
    }
}

impl FromIterator<CosetId> for QSet {
    fn from_iter<I: IntoIterator<Item = CosetId>>(iter: I) -> QSet {
        let mut s = QSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Display for QSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", ids.join(", "))
    }
}

impl Serialize for QSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|x| x.0))
    }
}
