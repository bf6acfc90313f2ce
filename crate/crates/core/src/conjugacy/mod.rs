//! Conjugacy via sets of conjugator cosets.
//!
//! `Q(u, v)` is the set of `K`-cosets `Kx` with `x⁻¹vx = u`; `u` and `v` are
//! conjugate exactly when it is nonempty. It is computed from the `Q`-sets
//! of the sections, bottoming out in a table for words of length at most 1.

mod base;
mod census;
pub(crate) mod node;
mod qset;
mod solver;
mod tree;

pub use base::{base_words, build_base_q, BaseQTable};
pub use census::{
    census_children, census_mismatches, coordinate_tree_size, subtree_size_census,
    words_below_norm_bound, CensusRow, NORM_BOUND, REFERENCE_CENSUS,
};
pub use node::{classify, NodeKind};
pub use qset::QSet;
pub use solver::Solver;
pub use tree::{build_conj_tree, tree_size, ConjNode};
